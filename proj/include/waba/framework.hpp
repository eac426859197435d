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

#ifndef WABA_FRAMEWORK_HPP
#define WABA_FRAMEWORK_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "waba/semiring.hpp"

namespace waba {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LookupError : Error {
  using Error::Error;
};

struct ResourceLimitError : Error {
  using Error::Error;
};

using AtomId = std::uint32_t;
using RuleIndex = std::uint32_t;

/// Inference rule head <- body. The body is a set, stored sorted by atom id;
/// an empty body plays the role of a fact.
struct Rule {
  AtomId head = 0;
  std::vector<AtomId> body;

  friend bool operator==(const Rule& a, const Rule& b) {
    return a.head == b.head && a.body == b.body;
  }
};

/// The weighted framework tuple: language, rules, assumptions, contrary
/// mapping, weight table and the weight algebra. Atom names are interned;
/// term-like spellings such as `action(give_meds)` are opaque. Instances are
/// immutable once built (see FrameworkBuilder).
class Framework {
 public:
  std::size_t atom_count() const { return names_.size(); }
  const std::string& atom_name(AtomId id) const { return names_.at(id); }

  std::optional<AtomId> find_atom(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  AtomId atom(std::string_view name) const {
    auto id = find_atom(name);
    if (!id) throw LookupError("unknown atom: " + std::string(name));
    return *id;
  }

  const std::vector<Rule>& rules() const { return rules_; }
  const std::vector<AtomId>& assumptions() const { return assumptions_; }

  bool is_assumption(AtomId id) const { return assumption_flag_[id]; }

  /// Position of `id` in the assumption list, if it is an assumption.
  std::optional<std::uint32_t> assumption_index(AtomId id) const {
    if (!assumption_flag_[id]) return std::nullopt;
    return assumption_pos_[id];
  }

  std::optional<AtomId> contrary_of(AtomId assumption) const { return contrary_[assumption]; }

  /// Assumptions whose contrary is `atom` (derive `atom` to attack them).
  const std::vector<AtomId>& attacked_by_contrary(AtomId atom) const {
    return contrary_targets_[atom];
  }

  std::optional<WeightValue> declared_weight(AtomId id) const { return declared_weight_[id]; }

  const SemiringSpec& semiring() const { return semiring_; }

  /// Declared weight if present, e_aggregate for assumptions and for atoms
  /// with no declaration (an empty aggregation contributes nothing).
  WeightValue effective_weight(AtomId id) const {
    if (id >= names_.size()) throw LookupError("unknown atom id");
    if (assumption_flag_[id]) return semiring_.identity_aggregate();
    if (declared_weight_[id]) return *declared_weight_[id];
    return semiring_.identity_aggregate();
  }

  WeightValue effective_weight(std::string_view name) const { return effective_weight(atom(name)); }

  /// Rules indexed by head atom.
  const std::vector<RuleIndex>& rules_with_head(AtomId head) const { return rules_by_head_[head]; }

  /// Structural equality by names (interning order may differ).
  friend bool operator==(const Framework& a, const Framework& b) {
    if (a.semiring_.kind != b.semiring_.kind) return false;
    auto name_set = [](const Framework& f, const std::vector<AtomId>& ids) {
      std::vector<std::string> out;
      for (AtomId id : ids) out.push_back(f.atom_name(id));
      std::sort(out.begin(), out.end());
      return out;
    };
    std::vector<AtomId> all_a(a.names_.size()), all_b(b.names_.size());
    for (AtomId i = 0; i < all_a.size(); ++i) all_a[i] = i;
    for (AtomId i = 0; i < all_b.size(); ++i) all_b[i] = i;
    if (name_set(a, all_a) != name_set(b, all_b)) return false;
    if (name_set(a, a.assumptions_) != name_set(b, b.assumptions_)) return false;
    auto contrary_pairs = [](const Framework& f) {
      std::vector<std::pair<std::string, std::string>> out;
      for (AtomId as : f.assumptions_)
        if (f.contrary_[as]) out.emplace_back(f.atom_name(as), f.atom_name(*f.contrary_[as]));
      std::sort(out.begin(), out.end());
      return out;
    };
    if (contrary_pairs(a) != contrary_pairs(b)) return false;
    auto rule_set = [](const Framework& f) {
      std::vector<std::pair<std::string, std::vector<std::string>>> out;
      for (const Rule& r : f.rules_) {
        std::vector<std::string> body;
        for (AtomId id : r.body) body.push_back(f.atom_name(id));
        std::sort(body.begin(), body.end());
        out.emplace_back(f.atom_name(r.head), std::move(body));
      }
      std::sort(out.begin(), out.end());
      return out;
    };
    if (rule_set(a) != rule_set(b)) return false;
    auto weight_map = [](const Framework& f) {
      std::vector<std::pair<std::string, std::string>> out;
      for (AtomId i = 0; i < f.names_.size(); ++i)
        if (f.declared_weight_[i]) out.emplace_back(f.atom_name(i), f.declared_weight_[i]->str());
      std::sort(out.begin(), out.end());
      return out;
    };
    return weight_map(a) == weight_map(b);
  }

 private:
  friend class FrameworkBuilder;

  std::vector<std::string> names_;
  std::unordered_map<std::string, AtomId> index_;
  std::vector<bool> assumption_flag_;
  std::vector<std::uint32_t> assumption_pos_;
  std::vector<AtomId> assumptions_;                    // declaration order
  std::vector<std::optional<AtomId>> contrary_;        // per atom, set for assumptions
  std::vector<std::vector<AtomId>> contrary_targets_;  // inverse of contrary_
  std::vector<std::optional<WeightValue>> declared_weight_;
  std::vector<Rule> rules_;
  std::vector<std::vector<RuleIndex>> rules_by_head_;
  SemiringSpec semiring_ = minmax_semiring();
};

class FrameworkBuilder {
 public:
  AtomId intern(std::string_view name) {
    auto it = index_.find(std::string(name));
    if (it != index_.end()) return it->second;
    AtomId id = static_cast<AtomId>(names_.size());
    names_.emplace_back(name);
    index_.emplace(std::string(name), id);
    return id;
  }

  AtomId add_assumption(std::string_view name) {
    AtomId id = intern(name);
    if (std::find(assumptions_.begin(), assumptions_.end(), id) == assumptions_.end())
      assumptions_.push_back(id);
    return id;
  }

  /// Fails (returns false) if the assumption already has a different contrary.
  bool set_contrary(std::string_view assumption, std::string_view contrary) {
    AtomId a = intern(assumption);
    AtomId c = intern(contrary);
    auto it = contrary_.find(a);
    if (it != contrary_.end()) return it->second == c;
    contrary_.emplace(a, c);
    return true;
  }

  void add_rule(std::string_view head, const std::vector<std::string>& body) {
    Rule r;
    r.head = intern(head);
    for (const std::string& b : body) r.body.push_back(intern(b));
    std::sort(r.body.begin(), r.body.end());
    r.body.erase(std::unique(r.body.begin(), r.body.end()), r.body.end());
    rules_.push_back(std::move(r));
  }

  void set_weight(std::string_view atom, WeightValue w) { weights_[intern(atom)] = w; }

  void set_semiring(SemiringSpec spec) { semiring_ = spec; }

  /// Assembles the framework. Duplicate rules (same head, same body set)
  /// collapse to their first declaration.
  Framework build() const {
    Framework f;
    f.names_ = names_;
    f.index_ = index_;
    f.semiring_ = semiring_;
    std::size_t n = names_.size();
    f.assumption_flag_.assign(n, false);
    f.assumption_pos_.assign(n, 0);
    f.assumptions_ = assumptions_;
    for (std::uint32_t i = 0; i < assumptions_.size(); ++i) {
      f.assumption_flag_[assumptions_[i]] = true;
      f.assumption_pos_[assumptions_[i]] = i;
    }
    f.contrary_.assign(n, std::nullopt);
    f.contrary_targets_.assign(n, {});
    for (const auto& [a, c] : contrary_) f.contrary_[a] = c;
    for (AtomId a : assumptions_)
      if (f.contrary_[a]) f.contrary_targets_[*f.contrary_[a]].push_back(a);
    for (auto& targets : f.contrary_targets_) std::sort(targets.begin(), targets.end());
    f.declared_weight_.assign(n, std::nullopt);
    for (const auto& [id, w] : weights_) f.declared_weight_[id] = w;
    for (const Rule& r : rules_) {
      if (std::find(f.rules_.begin(), f.rules_.end(), r) == f.rules_.end()) f.rules_.push_back(r);
    }
    f.rules_by_head_.assign(n, {});
    for (RuleIndex i = 0; i < f.rules_.size(); ++i) f.rules_by_head_[f.rules_[i].head].push_back(i);
    return f;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, AtomId> index_;
  std::vector<AtomId> assumptions_;
  std::unordered_map<AtomId, AtomId> contrary_;
  std::unordered_map<AtomId, WeightValue> weights_;
  std::vector<Rule> rules_;
  SemiringSpec semiring_ = minmax_semiring();
};

struct ValidationIssue {
  enum class Kind {
    NoAssumptions,
    MissingContrary,
    NotFlat,
    AssumptionWeight,
  };
  Kind kind;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
};

/// Checks the framework invariants: a nonempty assumption set, a total
/// contrary mapping, flatness (no rule head is an assumption) and the
/// e_aggregate weight constraint on assumptions. Violations are data, not
/// faults; validation is pure and idempotent.
inline ValidationReport validate(const Framework& f) {
  ValidationReport report;
  if (f.assumptions().empty())
    report.issues.push_back({ValidationIssue::Kind::NoAssumptions, "assumption set must be nonempty"});
  for (AtomId a : f.assumptions()) {
    if (!f.contrary_of(a))
      report.issues.push_back(
          {ValidationIssue::Kind::MissingContrary, "assumption without contrary: " + f.atom_name(a)});
    auto declared = f.declared_weight(a);
    if (declared && *declared != f.semiring().identity_aggregate())
      report.issues.push_back({ValidationIssue::Kind::AssumptionWeight,
                               "assumption " + f.atom_name(a) + " declares weight " + declared->str() +
                                   " but assumptions carry the aggregation identity"});
  }
  for (const Rule& r : f.rules()) {
    if (f.is_assumption(r.head))
      report.issues.push_back(
          {ValidationIssue::Kind::NotFlat, "rule head is an assumption: " + f.atom_name(r.head)});
  }
  return report;
}

/// Display labels used by the fact export and result emitters: empty-body
/// rules whose head carries a declared weight are context facts ctx1, ctx2,
/// ...; every other rule is r1, r2, ... in declaration order.
inline std::vector<std::string> rule_labels(const Framework& f) {
  std::vector<std::string> labels;
  labels.reserve(f.rules().size());
  unsigned next_rule = 1, next_ctx = 1;
  for (const Rule& r : f.rules()) {
    if (r.body.empty() && f.declared_weight(r.head))
      labels.push_back("ctx" + std::to_string(next_ctx++));
    else
      labels.push_back("r" + std::to_string(next_rule++));
  }
  return labels;
}

}  // namespace waba

#endif  // WABA_FRAMEWORK_HPP
