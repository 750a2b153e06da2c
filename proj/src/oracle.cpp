#include "tncb/oracle.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "tncb/errors.hpp"
#include "tncb/generator.hpp"
#include "tncb/init.hpp"
#include "tncb/tree.hpp"

namespace tncb {

BagChart::BagChart(const Bag& bag, const Grammar& grammar, std::size_t limit) {
  if (bag.size() > limit || bag.size() > 31)
    throw LimitError("bag of " + std::to_string(bag.size()) +
                     " signs exceeds the oracle limit of " +
                     std::to_string(std::min<std::size_t>(limit, 31)));
  const std::size_t n = bag.size();
  full_ = n == 0 ? 0 : (std::uint32_t(1) << n) - 1;
  chart_.assign(std::size_t(full_) + 1, {});
  for (std::size_t i = 0; i < n; ++i)
    chart_[std::uint32_t(1) << i].push_back(bag.sign(i));

  // Masks in increasing popcount so every split is already filled.
  std::vector<std::uint32_t> order;
  for (std::uint32_t m = 1; m <= full_ && full_ != 0; ++m) order.push_back(m);
  std::stable_sort(order.begin(), order.end(),
                   [](std::uint32_t a, std::uint32_t b) {
                     return std::popcount(a) < std::popcount(b);
                   });

  for (std::uint32_t mask : order) {
    if (std::popcount(mask) < 2) continue;
    // Each unordered split visited once: keep the lowest bit on side a.
    const std::uint32_t low = mask & (~mask + 1);
    for (std::uint32_t a = (mask - 1) & mask; a > 0; a = (a - 1) & mask) {
      if (!(a & low)) continue;
      const std::uint32_t b = mask & ~a;
      if (chart_[a].empty() || chart_[b].empty()) continue;
      splits_.push_back({a, b});
      for (const Sign& sa : chart_[a]) {
        for (const Sign& sb : chart_[b]) {
          ++calls_;
          CombineOutcome out = combine(sa, sb, grammar, CombinePolicy::Strict);
          for (const MissingMorph& mm : out.missing_morph)
            missing_.push_back(mm);
          // Record every candidate: the checker wants multi-valued results.
          for (const Sign& mother : out.candidates) {
            if (std::find(chart_[mask].begin(), chart_[mask].end(), mother) ==
                chart_[mask].end())
              chart_[mask].push_back(mother);
            productive_.insert({std::min(a, b), std::max(a, b)});
          }
        }
      }
    }
  }
}

bool BagChart::derives_via(std::uint32_t a, std::uint32_t b) const {
  return productive_.count({std::min(a, b), std::max(a, b)}) > 0;
}

std::set<std::string> BagChart::realizations() const {
  std::set<std::string> out;
  for (const Sign& s : chart_[full_]) out.insert(s.orth);
  return out;
}

std::set<std::string> all_realizations(const Bag& bag, const Grammar& grammar,
                                       std::size_t limit) {
  if (bag.size() == 0) return {};
  return BagChart(bag, grammar, limit).realizations();
}

namespace {

// Every binary tree over perm[lo..hi); returns the derivable signs.
void enumerate_span(const std::vector<const Sign*>& perm, std::size_t lo,
                    std::size_t hi, const Grammar& grammar,
                    std::uint64_t& calls, std::vector<Sign>& out) {
  out.clear();
  if (hi - lo == 1) {
    out.push_back(*perm[lo]);
    return;
  }
  std::vector<Sign> left, right;
  for (std::size_t mid = lo + 1; mid < hi; ++mid) {
    enumerate_span(perm, lo, mid, grammar, calls, left);
    enumerate_span(perm, mid, hi, grammar, calls, right);
    for (const Sign& a : left) {
      for (const Sign& b : right) {
        ++calls;
        CombineOutcome res = combine(a, b, grammar, CombinePolicy::Strict);
        if (res.status == CombineOutcome::Status::Success &&
            std::find(out.begin(), out.end(), *res.sign) == out.end())
          out.push_back(*res.sign);
      }
    }
  }
}

}  // namespace

std::set<std::string> enumerate_realizations(const Bag& bag,
                                             const Grammar& grammar,
                                             std::uint64_t* calls_out) {
  std::set<std::string> result;
  std::uint64_t calls = 0;
  std::vector<const Sign*> perm;
  for (const BagItem& item : bag.items) perm.push_back(&item.sign);
  std::sort(perm.begin(), perm.end(),
            [](const Sign* a, const Sign* b) { return *a < *b; });
  std::vector<Sign> derived;
  do {
    enumerate_span(perm, 0, perm.size(), grammar, calls, derived);
    for (const Sign& s : derived) result.insert(s.orth);
  } while (std::next_permutation(perm.begin(), perm.end(),
                                 [](const Sign* a, const Sign* b) {
                                   return *a < *b;
                                 }));
  if (calls_out) *calls_out = calls;
  return result;
}

std::string Report::text() const {
  std::ostringstream os;
  if (violations.empty()) {
    os << "no violations\n";
    return os.str();
  }
  for (const Violation& v : violations) {
    switch (v.kind) {
      case Violation::Kind::MultiValuedCombine:
        os << "precedence violation (multi-valued combine): ";
        break;
      case Violation::Kind::SplitInconsistency:
        os << "precedence violation (split inconsistency): ";
        break;
      case Violation::Kind::PhantomDerivation:
        os << "precedence violation (phantom derivation): ";
        break;
      case Violation::Kind::MissingMorph:
        os << "morph table gap: ";
        break;
      case Violation::Kind::DisruptedIllFormed:
        os << "dominance violation: ";
        break;
    }
    os << v.detail << "\n";
  }
  os << violations.size() << " violation(s)\n";
  return os.str();
}

Report check_precedence_monotonicity(const Grammar& grammar,
                                     const std::vector<Bag>& bags,
                                     std::size_t oracle_limit) {
  Report report;
  for (const Bag& bag : bags) {
    BagChart chart(bag, grammar, oracle_limit);

    for (const MissingMorph& mm : chart.missing_morph()) {
      report.violations.push_back(
          {Violation::Kind::MissingMorph,
           "rule '" + mm.rule + "' accepts \"" + mm.left + "\" + \"" +
               mm.right + "\" but the morph table has no entry"});
    }

    for (const auto& split : chart.attempted_splits()) {
      bool some_combined = false;
      bool some_failed = false;
      std::string fail_witness, ok_witness;
      for (const Sign& sa : chart.entries(split.a)) {
        for (const Sign& sb : chart.entries(split.b)) {
          CombineOutcome out = combine(sa, sb, grammar, CombinePolicy::Strict);
          if (out.candidates.size() > 1) {
            std::string detail =
                sa.describe() + " + " + sb.describe() + " yields";
            for (const Sign& m : out.candidates)
              detail += " {" + m.describe() + "}";
            report.violations.push_back(
                {Violation::Kind::MultiValuedCombine, detail});
          }
          if (out.status == CombineOutcome::Status::NoRule) {
            some_failed = true;
            fail_witness = sa.describe() + " + " + sb.describe();
          } else {
            some_combined = true;
            ok_witness = sa.describe() + " + " + sb.describe();
          }
        }
      }
      // Failure must persist under rearrangement of either constituent.
      if (some_combined && some_failed) {
        report.violations.push_back(
            {Violation::Kind::SplitInconsistency,
             "over the same subset split, " + ok_witness + " combines but " +
                 fail_witness + " does not"});
      }
      if (some_failed && !some_combined &&
          chart.derives_via(split.a, split.b)) {
        report.violations.push_back(
            {Violation::Kind::PhantomDerivation,
             "no arrangement combines for the split of " + fail_witness +
                 " yet the chart derives their union via it"});
      }
    }
  }
  return report;
}

Report check_dominance_monotonicity(const Grammar& grammar,
                                    const std::vector<Bag>& bags,
                                    std::size_t trials, std::uint64_t seed) {
  Report report;
  for (std::size_t bi = 0; bi < bags.size(); ++bi) {
    auto bag = std::make_shared<Bag>(bags[bi]);
    for (std::size_t trial = 0; trial < trials; ++trial) {
      const std::uint64_t trial_seed = seed + trial;
      // Trial 0 additionally probes the deterministic worst case.
      Tncb initial = trial == 0 ? right_branching(bag)
                                : random_tncb(bag, trial_seed);
      GenConfig config;
      config.violation_policy = CombinePolicy::FirstRuleWins;
      config.max_rewrites_policy = GenConfig::Bound::Unbounded;
      auto observer = [&](const Tncb& t, const TraceStep& ts,
                          const std::vector<int>& disrupted) {
        if (ts.step.kind != MoveStep::Kind::Adjoin) return;
        for (int id : disrupted) {
          if (!t.value(id).well_formed()) {
            std::ostringstream os;
            os << "bag " << bi << " seed " << trial_seed << ": adjoining \""
               << ts.mover_orth << "\" next to \"" << ts.dest_orth
               << "\" left a disrupted node ill-formed"
               << "; tree: " << format_bracketing(bracketing_of(t));
            report.violations.push_back(
                {Violation::Kind::DisruptedIllFormed, os.str()});
          }
        }
      };
      try {
        generate(std::move(initial), grammar, config, observer);
      } catch (const MonotonicityViolationError&) {
        // The observer has already recorded the offending adjunction when
        // one exists; a stalled conjunction-only run is not a dominance
        // witness.
      }
    }
  }
  return report;
}

}  // namespace tncb
