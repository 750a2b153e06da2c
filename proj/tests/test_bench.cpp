#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "tncb/bench.hpp"
#include "tncb/oracle.hpp"

using namespace tncb;

TEST_CASE("np_adjuncts with two adjuncts is the committed dog bag") {
  SynthInstance inst = synth_bag(BenchTemplate::NpAdjuncts, 2);
  Bag committed = load_bag_file(tncb_test::fixture("dog.bag.json"));
  REQUIRE(inst.bag->size() == committed.size());
  for (std::size_t i = 0; i < committed.size(); ++i)
    CHECK(inst.bag->items[i].sign == committed.items[i].sign);
  CHECK(inst.expected == "the big brown dog barked");
}

TEST_CASE("np_adjuncts with no adjuncts realizes 'the dog barked'") {
  SynthInstance inst = synth_bag(BenchTemplate::NpAdjuncts, 0);
  CHECK(inst.bag->size() == 4);
  CHECK(all_realizations(*inst.bag, inst.grammar) ==
        std::set<std::string>{"the dog barked"});
  CHECK(inst.expected == "the dog barked");
}

TEST_CASE("synth bags are deterministic per template and k") {
  for (auto templ : {BenchTemplate::NpAdjuncts, BenchTemplate::ClauseChain}) {
    SynthInstance a = synth_bag(templ, 3);
    SynthInstance b = synth_bag(templ, 3);
    REQUIRE(a.bag->size() == b.bag->size());
    for (std::size_t i = 0; i < a.bag->size(); ++i)
      CHECK(a.bag->items[i].sign == b.bag->items[i].sign);
    CHECK(a.expected == b.expected);
  }
}

TEST_CASE("synth realizations are the oracle's singleton, both templates") {
  for (auto templ : {BenchTemplate::NpAdjuncts, BenchTemplate::ClauseChain}) {
    for (std::size_t k = 0; k <= 3; ++k) {
      SynthInstance inst = synth_bag(templ, k);
      CHECK(all_realizations(*inst.bag, inst.grammar) ==
            std::set<std::string>{inst.expected});
    }
  }
}

TEST_CASE("clause_chain sizes run n = k+3 with a pre-tensed verb") {
  SynthInstance inst = synth_bag(BenchTemplate::ClauseChain, 2);
  CHECK(inst.bag->size() == 5);
  CHECK(inst.expected == "the dog barked adv1 adv2");
}

TEST_CASE("greedy combine-call counts are frozen per size") {
  BenchResult res =
      run_bench(BenchTemplate::NpAdjuncts, {4, 5, 6, 7}, 1, 1, 0);
  // Golden values; any drift in scan order or evaluation shows up here.
  std::vector<std::uint64_t> calls;
  std::vector<std::size_t> rewrites;
  for (const BenchRow& row : res.rows) {
    if (row.method != BenchRow::Method::Greedy) continue;
    calls.push_back(row.combine_calls);
    rewrites.push_back(row.rewrites);
  }
  CHECK(calls == std::vector<std::uint64_t>{7, 17, 29, 43});
  CHECK(rewrites == std::vector<std::size_t>{2, 3, 4, 5});
}

TEST_CASE("rewrites stay below n-1 on every benchmarked row") {
  BenchResult res =
      run_bench(BenchTemplate::NpAdjuncts, {4, 6, 8, 10}, 1, 1, 0);
  for (const BenchRow& row : res.rows)
    if (row.method == BenchRow::Method::Greedy)
      CHECK(row.rewrites <= row.n - 1);
}

TEST_CASE("oracle rows grow with strictly increasing ratios") {
  BenchResult res = run_bench(BenchTemplate::NpAdjuncts, {4, 5, 6, 7}, 1, 1, 7);
  REQUIRE(res.oracle_ratios.size() == 3);
  CHECK(res.oracle_ratios[0] > 1.0);
  for (std::size_t i = 1; i < res.oracle_ratios.size(); ++i)
    CHECK(res.oracle_ratios[i] > res.oracle_ratios[i - 1]);
}

TEST_CASE("the log-log fit recovers a known power law") {
  std::vector<std::pair<double, double>> points;
  for (double x : {4.0, 8.0, 16.0, 32.0}) points.emplace_back(x, 3.0 * x * x);
  CHECK(loglog_slope(points) == doctest::Approx(2.0));
}

TEST_CASE("the fitted exponent over desk sizes stays comfortably polynomial") {
  BenchResult res =
      run_bench(BenchTemplate::NpAdjuncts, {4, 6, 8, 10, 12}, 1, 1, 0);
  CHECK(res.fitted_exponent > 0.5);
  CHECK(res.fitted_exponent <= 4.5);
}
