#include "tncb/signs.hpp"

#include <algorithm>
#include <sstream>

#include "tncb/errors.hpp"

namespace tncb {

std::string to_string(const FeatureValue& v) {
  if (const auto* a = std::get_if<Atom>(&v)) return a->name;
  return std::to_string(std::get<Index>(v));
}

std::string to_string(const PatternValue& v) {
  if (const auto* a = std::get_if<Atom>(&v)) return a->name;
  if (const auto* i = std::get_if<Index>(&v)) return std::to_string(*i);
  return std::get<Variable>(v).name;
}

std::string Sign::describe() const {
  std::ostringstream os;
  os << orth << "[" << cat.name;
  for (const auto& [f, v] : feats) os << " " << f << "=" << to_string(v);
  os << "]";
  return os.str();
}

void MorphTable::add(std::string left, std::string right, std::string fused) {
  fused_[{std::move(left), std::move(right)}] = std::move(fused);
}

std::optional<std::string> MorphTable::lookup(const std::string& left,
                                              const std::string& right) const {
  auto it = fused_.find({left, right});
  if (it == fused_.end()) return std::nullopt;
  return it->second;
}

std::optional<Bindings> unify(const SignPattern& pattern, const Sign& candidate,
                              Bindings bindings) {
  if (pattern.cat != candidate.cat) return std::nullopt;
  for (const auto& [feat, pv] : pattern.feats) {
    auto it = candidate.feats.find(feat);
    if (it == candidate.feats.end()) return std::nullopt;
    const FeatureValue& cv = it->second;
    if (const auto* a = std::get_if<Atom>(&pv)) {
      if (!(cv == FeatureValue{*a})) return std::nullopt;
    } else if (const auto* i = std::get_if<Index>(&pv)) {
      if (!(cv == FeatureValue{*i})) return std::nullopt;
    } else {
      const auto& var = std::get<Variable>(pv).name;
      auto bound = bindings.find(var);
      if (bound == bindings.end()) {
        bindings.emplace(var, cv);
      } else if (!(bound->second == cv)) {
        return std::nullopt;
      }
    }
  }
  return bindings;
}

namespace {

Sign instantiate_mother(const Rule& rule, const Bindings& bindings,
                        std::string orth) {
  Sign mother;
  mother.cat = rule.mother.cat;
  mother.orth = std::move(orth);
  for (const auto& [feat, pv] : rule.mother.feats) {
    if (const auto* a = std::get_if<Atom>(&pv)) {
      mother.feats.emplace(feat, *a);
    } else if (const auto* i = std::get_if<Index>(&pv)) {
      mother.feats.emplace(feat, *i);
    } else {
      // Grammar validation guarantees mother variables are bound.
      mother.feats.emplace(feat, bindings.at(std::get<Variable>(pv).name));
    }
  }
  return mother;
}

}  // namespace

CombineOutcome combine(const Sign& a, const Sign& b, const Grammar& grammar,
                       CombinePolicy policy, CombineStats* stats) {
  if (stats) ++stats->calls;

  // Canonical argument order keeps the attempt sequence, and therefore the
  // first-rule-wins pick, identical for combine(a,b) and combine(b,a).
  const Sign* lo = &a;
  const Sign* hi = &b;
  if (*hi < *lo) std::swap(lo, hi);

  CombineOutcome out;
  for (const Rule& rule : grammar.rules) {
    const std::pair<const Sign*, const Sign*> orientations[2] = {{lo, hi},
                                                                 {hi, lo}};
    for (const auto& [left, right] : orientations) {
      auto lb = unify(rule.left, *left, {});
      if (!lb) continue;
      auto rb = unify(rule.right, *right, *lb);
      if (!rb) continue;
      std::string orth;
      if (rule.orth_mode == OrthMode::Concat) {
        orth = left->orth + " " + right->orth;
      } else {
        auto fused = grammar.morph.lookup(left->orth, right->orth);
        if (!fused) {
          out.missing_morph.push_back({rule.name.name, left->orth, right->orth});
          continue;
        }
        orth = *fused;
      }
      Sign mother = instantiate_mother(rule, *rb, std::move(orth));
      if (std::find(out.candidates.begin(), out.candidates.end(), mother) ==
          out.candidates.end()) {
        out.candidates.push_back(std::move(mother));
      }
    }
  }

  if (out.candidates.empty()) {
    out.status = CombineOutcome::Status::NoRule;
    return out;
  }
  if (out.candidates.size() == 1) {
    out.status = CombineOutcome::Status::Success;
    out.sign = out.candidates.front();
    return out;
  }
  if (policy == CombinePolicy::FirstRuleWins) {
    if (stats) ++stats->downgraded_violations;
    out.status = CombineOutcome::Status::Success;
    out.sign = out.candidates.front();
    return out;
  }
  out.status = CombineOutcome::Status::Violation;
  return out;
}

std::optional<Sign> combine_checked(const Sign& a, const Sign& b,
                                    const Grammar& grammar,
                                    CombinePolicy policy, CombineStats* stats) {
  CombineOutcome out = combine(a, b, grammar, policy, stats);
  switch (out.status) {
    case CombineOutcome::Status::Success:
      return out.sign;
    case CombineOutcome::Status::NoRule:
      return std::nullopt;
    case CombineOutcome::Status::Violation:
      break;
  }
  std::string msg = "precedence violation: " + a.describe() + " + " +
                    b.describe() + " has " +
                    std::to_string(out.candidates.size()) +
                    " distinct results:";
  for (const Sign& s : out.candidates) msg += " {" + s.describe() + "}";
  throw PrecedenceViolationError(msg);
}

}  // namespace tncb
