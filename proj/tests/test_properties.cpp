// Randomized structural properties of the five TNCB operations. The
// acceptance suite runs the same walk at >= 10^4 operations; this keeps a
// faster version in the regular test run.

#include <random>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "tncb/bench.hpp"
#include "tncb/errors.hpp"
#include "tncb/generator.hpp"
#include "tncb/grammar_io.hpp"
#include "tncb/init.hpp"
#include "tncb/oracle.hpp"

using namespace tncb;
using tncb_test::fixture;
using tncb_test::load_bag;

namespace {

struct AnyMove {
  int mover;
  int dest;
  MoveStep::Kind kind;
  Sign combined;
};

void subtree_leaves(const Tncb& t, int id, std::multiset<std::string>& out) {
  if (t.is_leaf(id)) {
    out.insert(t.bag().sign(t.leaf_bag_index(id)).orth);
    return;
  }
  auto [a, b] = t.children(id);
  subtree_leaves(t, a, out);
  subtree_leaves(t, b, out);
}

std::multiset<std::string> bag_orths(const Bag& bag) {
  std::multiset<std::string> out;
  for (const auto& item : bag.items) out.insert(item.sign.orth);
  return out;
}

// Every legal move in the current (evaluated) tree, not just the first.
std::vector<AnyMove> all_legal_moves(const Tncb& t, const Grammar& g) {
  std::vector<AnyMove> out;
  auto maximals = t.maximal_ids();
  for (int mover : maximals) {
    for (int partner : maximals) {
      if (partner == mover) continue;
      auto c = combine_checked(t.sign(mover), t.sign(partner), g,
                               CombinePolicy::Strict);
      if (c) out.push_back({mover, partner, MoveStep::Kind::Conjoin, *c});
    }
    for (int host : maximals) {
      if (host == mover || t.is_leaf(host)) continue;
      std::vector<int> stack;
      auto [a, b] = t.children(host);
      stack.push_back(a);
      stack.push_back(b);
      while (!stack.empty()) {
        int site = stack.back();
        stack.pop_back();
        auto c = combine_checked(t.sign(mover), t.sign(site), g,
                                 CombinePolicy::Strict);
        if (c) out.push_back({mover, site, MoveStep::Kind::Adjoin, *c});
        if (!t.is_leaf(site)) {
          auto [x, y] = t.children(site);
          stack.push_back(x);
          stack.push_back(y);
        }
      }
    }
  }
  return out;
}

void check_tag_soundness(const Tncb& t) {
  for (int id : t.preorder()) {
    CHECK(t.value(id).tag != Value::Tag::Undetermined);
    if (t.is_leaf(id) || !t.value(id).well_formed()) continue;
    auto [a, b] = t.children(id);
    CHECK(t.value(a).well_formed());
    CHECK(t.value(b).well_formed());
  }
}

struct Config {
  Grammar grammar;
  std::shared_ptr<const Bag> bag;
};

std::vector<Config> configs() {
  std::vector<Config> out;
  for (std::size_t k = 0; k <= 4; ++k) {
    SynthInstance np = synth_bag(BenchTemplate::NpAdjuncts, k);
    out.push_back({np.grammar, np.bag});
    SynthInstance chain = synth_bag(BenchTemplate::ClauseChain, k);
    out.push_back({chain.grammar, chain.bag});
  }
  out.push_back({tncb_test::english(), load_bag("book.bag.json")});
  out.push_back({load_grammar_file(fixture("english_sat.gram")),
                 load_bag("french_dog.bag.json")});
  return out;
}

// One seeded walk; returns the number of operations exercised.
std::size_t random_walk(const Config& cfg, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::size_t ops = 0;
  Tncb t = random_tncb(cfg.bag, rng());
  t.evaluate(cfg.grammar);
  ++ops;
  check_tag_soundness(t);
  const std::size_t nodes = t.node_count();
  const auto expected_leaves = bag_orths(*cfg.bag);

  while (!t.value(t.root()).well_formed()) {
    auto moves = all_legal_moves(t, cfg.grammar);
    if (moves.empty()) break;
    const AnyMove& mv = moves[rng() % moves.size()];
    MoveStep step = t.apply(
        Tncb::PlannedMove{mv.mover, mv.dest, mv.kind, mv.combined});
    CHECK((step.disrupted == 0) == (mv.kind == MoveStep::Kind::Conjoin));
    t.evaluate(cfg.grammar);
    ops += 2;
    CHECK(t.node_count() == nodes);  // movement preserves the node count
    std::multiset<std::string> leaves;
    subtree_leaves(t, t.root(), leaves);
    CHECK(leaves == expected_leaves);
    check_tag_soundness(t);
    t.check_structure();
  }

  // Commutativity: swapping children anywhere never changes any value.
  Tncb swapped = t;
  for (int id : swapped.preorder())
    if (!swapped.is_leaf(id) && rng() % 2) swapped.swap_children(id);
  swapped.reset_interior_values();
  swapped.evaluate(cfg.grammar);
  ops += 2;
  for (int id : t.preorder()) {
    CHECK(t.value(id).tag == swapped.value(id).tag);
    if (t.value(id).well_formed()) CHECK(t.sign(id) == swapped.sign(id));
  }

  // Deletion keeps the leaf multiset across tree + detached part.
  auto maximals = t.maximal_ids();
  std::vector<int> deletable;
  for (int id : maximals)
    if (id != t.root()) deletable.push_back(id);
  if (!deletable.empty()) {
    int target = deletable[rng() % deletable.size()];
    auto detached = t.remove(target);
    ++ops;
    std::multiset<std::string> leaves;
    subtree_leaves(t, t.root(), leaves);
    subtree_leaves(t, detached.subtree, leaves);
    CHECK(leaves == expected_leaves);
    t.evaluate(cfg.grammar);
    ++ops;
    t.check_structure(false);
  }
  return ops;
}

}  // namespace

TEST_CASE("random move walks preserve every structural invariant") {
  std::size_t ops = 0;
  for (const Config& cfg : configs())
    for (std::uint64_t seed = 1; seed <= 20; ++seed)
      ops += random_walk(cfg, seed);
  CHECK(ops >= 2000);
}

TEST_CASE("legal moves always exist for the solvable worst case") {
  SynthInstance np = synth_bag(BenchTemplate::NpAdjuncts, 3);
  Tncb t = right_branching(np.bag);
  t.evaluate(np.grammar);
  while (!t.value(t.root()).well_formed()) {
    auto moves = all_legal_moves(t, np.grammar);
    REQUIRE_FALSE(moves.empty());
    auto chosen = find_move(t, np.grammar, CombinePolicy::Strict);
    REQUIRE(chosen.has_value());
    // The scan's pick is one of the enumerated legal moves.
    bool found = false;
    for (const AnyMove& mv : moves)
      if (mv.mover == chosen->mover && mv.dest == chosen->destination &&
          mv.kind == chosen->kind)
        found = true;
    CHECK(found);
    t.apply(Tncb::PlannedMove{chosen->mover, chosen->destination, chosen->kind,
                              chosen->combined});
    t.evaluate(np.grammar);
  }
  CHECK(t.sign(t.root()).orth == np.expected);
}
