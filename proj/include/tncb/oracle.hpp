#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "tncb/bag.hpp"
#include "tncb/signs.hpp"

namespace tncb {

/// Exhaustive table from bag subsets (bitmask over item positions) to the
/// signs derivable from them. Exact for small bags; the reference the
/// greedy generator is judged against.
class BagChart {
 public:
  /// Builds the full chart. `limit` guards against exponential blowup.
  BagChart(const Bag& bag, const Grammar& grammar, std::size_t limit = 10);

  const std::vector<Sign>& entries(std::uint32_t mask) const {
    return chart_[mask];
  }
  std::uint32_t full_mask() const { return full_; }
  std::size_t size() const { return chart_.size(); }

  /// Orthographies of signs derivable from the whole bag.
  std::set<std::string> realizations() const;

  /// Subset pairs (a < b, disjoint) whose entries were combined while
  /// building; each pairing was attempted exactly once.
  struct SplitRecord {
    std::uint32_t a, b;
  };
  const std::vector<SplitRecord>& attempted_splits() const { return splits_; }

  /// Mask pairs recorded as deriving an entry of their union.
  bool derives_via(std::uint32_t a, std::uint32_t b) const;

  std::uint64_t combine_calls() const { return calls_; }
  const std::vector<MissingMorph>& missing_morph() const { return missing_; }

 private:
  std::vector<std::vector<Sign>> chart_;
  std::vector<SplitRecord> splits_;
  std::set<std::pair<std::uint32_t, std::uint32_t>> productive_;
  std::vector<MissingMorph> missing_;
  std::uint32_t full_ = 0;
  std::uint64_t calls_ = 0;
};

/// Exact set of orthographies realizable from the bag (empty iff no
/// grammatical ordering exists). Throws LimitError above `limit` items.
std::set<std::string> all_realizations(const Bag& bag, const Grammar& grammar,
                                       std::size_t limit = 10);

/// The even dumber reference: literally evaluates every permutation under
/// every binary tree shape. Used once to validate the chart at n <= 6, and
/// as the exhaustive contrast in the benchmark. `calls_out`, when given,
/// receives the number of combine calls spent.
std::set<std::string> enumerate_realizations(const Bag& bag,
                                             const Grammar& grammar,
                                             std::uint64_t* calls_out = nullptr);

struct Violation {
  enum class Kind {
    MultiValuedCombine,   // one pair, two distinct mothers
    SplitInconsistency,   // same subset pair: one arrangement combines,
                          // another does not
    PhantomDerivation,    // chart entry recorded via a split that fails
    MissingMorph,         // FUSE rule accepted a pair absent from the table
    DisruptedIllFormed,   // adjunction left a disrupted node ill-formed
  };
  Kind kind;
  std::string detail;
};

struct Report {
  std::vector<Violation> violations;
  bool clean() const { return violations.empty(); }
  std::string text() const;
};

/// Audits the grammar over each bag's chart: combine must be single-valued
/// on every derivable constituent pair, failure must persist across
/// rearrangements of either side, and FUSE rules must find their morph
/// entries. All violations are reported with witnesses.
Report check_precedence_monotonicity(const Grammar& grammar,
                                     const std::vector<Bag>& bags,
                                     std::size_t oracle_limit = 10);

/// Runs `trials` seeded generation attempts per bag and asserts that every
/// node disrupted by an adjunction re-evaluates to well-formed. Uses
/// first-rule-wins combination so precedence-broken grammars can still be
/// probed.
Report check_dominance_monotonicity(const Grammar& grammar,
                                    const std::vector<Bag>& bags,
                                    std::size_t trials, std::uint64_t seed);

}  // namespace tncb
