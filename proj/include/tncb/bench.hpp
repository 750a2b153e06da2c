#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "tncb/bag.hpp"
#include "tncb/signs.hpp"

namespace tncb {

enum class BenchTemplate {
  NpAdjuncts,   // det + noun + verb + tense + k ranked adjectives (n = k+4)
  ClauseChain,  // det + noun + finite verb + k ranked adverbs (n = k+3)
};

struct BenchRow {
  enum class Method { Greedy, Oracle };
  std::size_t n = 0;
  std::size_t rewrites = 0;
  std::uint64_t combine_calls = 0;
  std::uint64_t wall_ns = 0;
  Method method = Method::Greedy;
};

struct SynthInstance {
  std::shared_ptr<const Bag> bag;
  Grammar grammar;
  std::string expected;  // the unique realization
};

/// Deterministic scaling family with k ranked adjuncts; the realization is
/// unique (ranks chain) and oracle-verified in the tests.
SynthInstance synth_bag(BenchTemplate templ, std::size_t k);

struct BenchResult {
  std::vector<BenchRow> rows;
  double fitted_exponent = 0.0;      // log-log slope over greedy rows
  std::vector<double> oracle_ratios; // successive oracle work ratios
};

/// Greedy runs from worst-case right-branching initializations over the
/// requested sizes, plus exhaustive-search rows up to `oracle_limit` for
/// contrast. Combine-call counts are deterministic; wall time is the
/// minimum over `reps` repetitions.
BenchResult run_bench(BenchTemplate templ, const std::vector<std::size_t>& sizes,
                      std::size_t reps, std::uint64_t seed,
                      std::size_t oracle_limit = 7);

/// Least-squares slope of log(y) against log(x).
double loglog_slope(const std::vector<std::pair<double, double>>& points);

}  // namespace tncb
