#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace tncb {

/// Case-sensitive symbolic constant (categories, atomic feature values).
struct Atom {
  std::string name;
  auto operator<=>(const Atom&) const = default;
};

/// Semantic dependency marker carried over from analysis/transfer.
using Index = std::int64_t;

/// Ground feature value: atomic constant or dependency index.
using FeatureValue = std::variant<Atom, Index>;

/// Named slot in a rule or lexicon template. Never appears in ground signs.
struct Variable {
  std::string name;
  auto operator<=>(const Variable&) const = default;
};

/// Value position in a template: constant, index, or variable.
using PatternValue = std::variant<Atom, Index, Variable>;

std::string to_string(const FeatureValue& v);
std::string to_string(const PatternValue& v);

/// A ground sign: category, surface text, and a flat feature map.
struct Sign {
  Atom cat;
  std::string orth;
  std::map<std::string, FeatureValue> feats;

  auto operator<=>(const Sign&) const = default;

  /// "orth[CAT f=v,...]" -- diagnostics and reports.
  std::string describe() const;
};

/// Daughter/mother template of a rule: constrains category and features.
struct SignPattern {
  Atom cat;
  std::map<std::string, PatternValue> feats;
};

enum class OrthMode {
  Concat,  // mother orth = left ++ " " ++ right
  Fuse,    // mother orth looked up in the morph table
};

struct Rule {
  Atom name;
  SignPattern mother;
  SignPattern left;
  SignPattern right;
  OrthMode orth_mode = OrthMode::Concat;
};

/// Fused surface forms, keyed on (left orth, right orth).
class MorphTable {
 public:
  void add(std::string left, std::string right, std::string fused);
  std::optional<std::string> lookup(const std::string& left,
                                    const std::string& right) const;
  std::size_t size() const { return fused_.size(); }

 private:
  std::map<std::pair<std::string, std::string>, std::string> fused_;
};

struct Grammar {
  std::vector<Rule> rules;  // file order; tried in order
  MorphTable morph;
  std::set<std::string> features;  // declared feature names
};

using Bindings = std::map<std::string, FeatureValue>;

/// Matches a ground sign against a template under existing bindings.
/// Every constrained feature must be present and compatible. Returns the
/// extended bindings, or nullopt; the input bindings are never mutated.
std::optional<Bindings> unify(const SignPattern& pattern, const Sign& candidate,
                              Bindings bindings);

enum class CombinePolicy {
  Strict,         // two distinct mothers = precedence violation
  FirstRuleWins,  // earliest rule/orientation wins; violation is counted
};

struct CombineStats {
  std::uint64_t calls = 0;            // combine() invocations
  std::uint64_t downgraded_violations = 0;  // first-rule-wins picks
};

/// FUSE rule matched but the morph table has no entry for the pair.
struct MissingMorph {
  std::string rule;
  std::string left;
  std::string right;
};

struct CombineOutcome {
  enum class Status { Success, NoRule, Violation };
  Status status = Status::NoRule;
  std::optional<Sign> sign;      // set on Success
  std::vector<Sign> candidates;  // all distinct mothers seen (diagnostics)
  std::vector<MissingMorph> missing_morph;
};

/// Commutative combination: tries every rule with both argument orders and
/// returns the unique mother. The result is independent of argument order.
CombineOutcome combine(const Sign& a, const Sign& b, const Grammar& grammar,
                       CombinePolicy policy = CombinePolicy::Strict,
                       CombineStats* stats = nullptr);

/// combine() that throws PrecedenceViolationError on Status::Violation.
/// Returns nullopt for NoRule.
std::optional<Sign> combine_checked(const Sign& a, const Sign& b,
                                    const Grammar& grammar,
                                    CombinePolicy policy,
                                    CombineStats* stats = nullptr);

}  // namespace tncb
