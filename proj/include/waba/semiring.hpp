/*
 *   Copyright 2026 the waba authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef WABA_SEMIRING_HPP
#define WABA_SEMIRING_HPP

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

namespace waba {

/// Exact nonnegative decimal with a distinguished top element.
///
/// A finite value is stored as units * 10^-scale with the scale normalized
/// (no trailing zeros, at most nine fractional digits), so equality and
/// ordering are exact. The top element compares strictly greater than every
/// finite value and absorbs addition.
class WeightValue {
 public:
  constexpr WeightValue() = default;  // zero

  static WeightValue infinity() {
    WeightValue w;
    w.infinite_ = true;
    return w;
  }

  static WeightValue integer(std::uint64_t units) {
    WeightValue w;
    w.units_ = units;
    return w;
  }

  // value = units * 10^-scale
  static WeightValue decimal(std::uint64_t units, unsigned scale) {
    if (scale > kMaxScale) throw std::invalid_argument("weight scale too large");
    WeightValue w;
    w.units_ = units;
    w.scale_ = static_cast<std::uint8_t>(scale);
    w.normalize();
    return w;
  }

  /// Parses "7", "0.7", "12.50" or "inf". Returns nullopt on malformed input.
  static std::optional<WeightValue> parse(std::string_view text) {
    if (text == "inf") return infinity();
    if (text.empty()) return std::nullopt;
    std::uint64_t units = 0;
    unsigned scale = 0;
    bool seen_dot = false;
    bool any_digit = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
      char c = text[i];
      if (c == '.') {
        if (seen_dot || !any_digit || i + 1 == text.size()) return std::nullopt;
        seen_dot = true;
        continue;
      }
      if (c < '0' || c > '9') return std::nullopt;
      if (units > (UINT64_MAX - 9) / 10) return std::nullopt;  // overflow
      units = units * 10 + static_cast<std::uint64_t>(c - '0');
      any_digit = true;
      if (seen_dot && ++scale > kMaxScale) return std::nullopt;
    }
    if (!any_digit) return std::nullopt;
    return decimal(units, scale);
  }

  bool is_infinite() const { return infinite_; }
  bool is_zero() const { return !infinite_ && units_ == 0; }

  /// Finite magnitude in units of 10^-scale (only meaningful when finite).
  std::uint64_t units() const { return units_; }
  unsigned scale() const { return scale_; }

  /// "7", "0.7" or "inf".
  std::string str() const {
    if (infinite_) return "inf";
    if (scale_ == 0) return std::to_string(units_);
    std::string digits = std::to_string(units_);
    if (digits.size() <= scale_) digits.insert(0, scale_ + 1 - digits.size(), '0');
    digits.insert(digits.size() - scale_, 1, '.');
    return digits;
  }

  friend bool operator==(const WeightValue& a, const WeightValue& b) {
    if (a.infinite_ != b.infinite_) return false;
    if (a.infinite_) return true;
    return a.units_ == b.units_ && a.scale_ == b.scale_;
  }
  friend bool operator!=(const WeightValue& a, const WeightValue& b) { return !(a == b); }
  friend bool operator<(const WeightValue& a, const WeightValue& b) {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    unsigned s = a.scale_ > b.scale_ ? a.scale_ : b.scale_;
    return a.lifted(s) < b.lifted(s);
  }
  friend bool operator>(const WeightValue& a, const WeightValue& b) { return b < a; }
  friend bool operator<=(const WeightValue& a, const WeightValue& b) { return !(b < a); }
  friend bool operator>=(const WeightValue& a, const WeightValue& b) { return !(a < b); }

  /// Exact sum; saturates to the top element on overflow.
  WeightValue plus(const WeightValue& other) const {
    if (infinite_ || other.infinite_) return infinity();
    unsigned s = scale_ > other.scale_ ? scale_ : other.scale_;
    unsigned __int128 sum = lifted(s) + other.lifted(s);
    while (s > 0 && sum % 10 == 0) {
      sum /= 10;
      --s;
    }
    if (sum > UINT64_MAX) return infinity();
    WeightValue w;
    w.units_ = static_cast<std::uint64_t>(sum);
    w.scale_ = static_cast<std::uint8_t>(s);
    return w;
  }

  static WeightValue min(const WeightValue& a, const WeightValue& b) { return a < b ? a : b; }
  static WeightValue max(const WeightValue& a, const WeightValue& b) { return a < b ? b : a; }

 private:
  static constexpr unsigned kMaxScale = 9;

  unsigned __int128 lifted(unsigned target_scale) const {
    unsigned __int128 v = units_;
    for (unsigned i = scale_; i < target_scale; ++i) v *= 10;
    return v;
  }

  void normalize() {
    while (scale_ > 0 && units_ % 10 == 0) {
      units_ /= 10;
      --scale_;
    }
    if (units_ == 0) scale_ = 0;
  }

  std::uint64_t units_ = 0;
  std::uint8_t scale_ = 0;
  bool infinite_ = false;
};

enum class SemiringKind { MinMax, Additive };

/// Weight algebra (S, combine, aggregate, e_combine, e_aggregate) over
/// WeightValue. `aggregate` folds weights within one derivation, `combine`
/// accumulates the cost of discarded attacks; the natural order of the
/// carrier is used for budget comparison.
struct SemiringSpec {
  SemiringKind kind = SemiringKind::MinMax;

  std::string_view name() const {
    return kind == SemiringKind::MinMax ? "minmax" : "additive";
  }

  WeightValue combine(const WeightValue& a, const WeightValue& b) const {
    return kind == SemiringKind::MinMax ? WeightValue::max(a, b) : a.plus(b);
  }

  WeightValue aggregate(const WeightValue& a, const WeightValue& b) const {
    return WeightValue::min(a, b);  // both built-ins aggregate by min
  }

  WeightValue identity_combine() const { return WeightValue(); }
  WeightValue identity_aggregate() const { return WeightValue::infinity(); }

  friend bool operator==(const SemiringSpec& a, const SemiringSpec& b) {
    return a.kind == b.kind;
  }
};

/// (N u {inf}, max, min, 0, inf) -- the default weight algebra.
inline SemiringSpec minmax_semiring() { return SemiringSpec{SemiringKind::MinMax}; }

/// (R0+ u {inf}, +, min, 0, inf) -- budgets accumulate by summation.
inline SemiringSpec additive_semiring() { return SemiringSpec{SemiringKind::Additive}; }

inline std::optional<SemiringSpec> parse_semiring(std::string_view name) {
  if (name == "minmax") return minmax_semiring();
  if (name == "additive") return additive_semiring();
  return std::nullopt;
}

/// Fold of `aggregate` over the values, starting from e_aggregate.
inline WeightValue fold_aggregate(const SemiringSpec& spec, std::span<const WeightValue> values) {
  WeightValue acc = spec.identity_aggregate();
  for (const WeightValue& v : values) acc = spec.aggregate(acc, v);
  return acc;
}

inline WeightValue fold_aggregate(const SemiringSpec& spec, std::initializer_list<WeightValue> values) {
  return fold_aggregate(spec, std::span<const WeightValue>(values.begin(), values.size()));
}

/// Fold of `combine` over the values, starting from e_combine.
inline WeightValue fold_combine(const SemiringSpec& spec, std::span<const WeightValue> values) {
  WeightValue acc = spec.identity_combine();
  for (const WeightValue& v : values) acc = spec.combine(acc, v);
  return acc;
}

inline WeightValue fold_combine(const SemiringSpec& spec, std::initializer_list<WeightValue> values) {
  return fold_combine(spec, std::span<const WeightValue>(values.begin(), values.size()));
}

}  // namespace waba

#endif  // WABA_SEMIRING_HPP
