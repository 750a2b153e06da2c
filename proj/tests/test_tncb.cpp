#include <algorithm>
#include <map>

#include "doctest.h"
#include "helpers.hpp"
#include "tncb/errors.hpp"
#include "tncb/init.hpp"
#include "tncb/tree.hpp"

using namespace tncb;
using tncb_test::english;
using tncb_test::load_bag;
using tncb_test::sign;

namespace {

Tncb tree_of(std::shared_ptr<const Bag> bag, const std::string& bracketing) {
  return from_bracketing(bag, parse_bracketing(bracketing));
}

// Node whose evaluated sign has the given orth.
int node_with_orth(const Tncb& t, const std::string& orth) {
  for (int id : t.preorder())
    if (t.value(id).well_formed() && t.sign(id).orth == orth) return id;
  REQUIRE(false);
  return -1;
}

std::vector<std::string> maximal_orths(const Tncb& t) {
  std::vector<std::string> out;
  for (int id : t.maximal_ids()) out.push_back(t.sign(id).orth);
  return out;
}

}  // namespace

TEST_CASE("a single leaf is well-formed with its own sign") {
  Tncb t = Tncb::leaf(sign("N", "dog", {{"idx", 1}}));
  CHECK(t.value(t.root()).well_formed());
  CHECK(t.sign(t.root()).orth == "dog");
  CHECK(t.interior_count() == 0);
  Grammar g = english();
  CHECK(t.evaluate(g) == 0);  // already determined
  CHECK(t.sign(t.root()).orth == "dog");
}

TEST_CASE("worst-case comb evaluates every interior node ill-formed") {
  Grammar g = english();
  Tncb t = right_branching(load_bag("dog.bag.json"));
  t.evaluate(g);
  CHECK(t.value(t.root()).tag == Value::Tag::Inconsistent);
  for (int id : t.preorder()) {
    if (t.is_leaf(id))
      CHECK(t.value(id).well_formed());
    else
      CHECK(t.value(id).tag == Value::Tag::Inconsistent);
  }
  // All six maximal TNCBs are the leaves, in scan order.
  CHECK(maximal_orths(t) == std::vector<std::string>{"PAST", "dog", "bark",
                                                     "the", "brown", "big"});
}

TEST_CASE("the mirrored book tree evaluates to the full sentence") {
  Grammar g = english();
  Tncb t = tree_of(load_bag("book.bag.json"), "((book the) (red is))");
  t.evaluate(g);
  REQUIRE(t.value(t.root()).well_formed());
  CHECK(t.sign(t.root()).orth == "the book is red");
  CHECK(t.maximal_ids() == std::vector<int>{t.root()});
}

TEST_CASE("evaluation is incremental: settled trees cost nothing") {
  Grammar g = english();
  Tncb t = right_branching(load_bag("dog.bag.json"));
  CHECK(t.evaluate(g) > 0);
  CHECK(t.evaluate(g) == 0);
}

TEST_CASE("maximal TNCBs of a part-built tree, in scan order") {
  Grammar g = english();
  Tncb t = tree_of(load_bag("dog.bag.json"),
                   "((PAST bark) ((dog the) (brown big)))");
  t.evaluate(g);
  CHECK(maximal_orths(t) ==
        std::vector<std::string>{"barked", "the dog", "brown", "big"});
  // They are disjoint and cover all leaves.
  std::size_t covered = 0;
  for (int id : t.maximal_ids()) {
    std::size_t leaves = 0;
    std::vector<int> stack{id};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      if (t.is_leaf(x)) {
        ++leaves;
      } else {
        auto [a, b] = t.children(x);
        stack.push_back(a);
        stack.push_back(b);
      }
    }
    covered += leaves;
  }
  CHECK(covered == t.bag().size());
}

TEST_CASE("deletion raises the sibling and marks the spine undetermined") {
  // Tree 1=(2,3), 3=(4,5) under a rule-less grammar: deleting leaf 4
  // removes node 3 and re-marks node 1 over {2,5}.
  Grammar empty = parse_grammar("");
  auto bag = std::make_shared<Bag>();
  bag->items = {BagItem{2, sign("A", "two")}, BagItem{4, sign("A", "four")},
                BagItem{5, sign("A", "five")}};
  Tncb t = tree_of(bag, "(2 (4 5))");
  t.evaluate(empty);
  CHECK(t.node_count() == 5);

  int four = -1;
  for (int id : t.leaves_preorder())
    if (t.sign(id).orth == "four") four = id;
  auto detached = t.remove(four);
  CHECK(detached.subtree == four);
  CHECK(t.node_count() == 3);
  CHECK(t.value(t.root()).tag == Value::Tag::Undetermined);
  auto [a, b] = t.children(t.root());
  CHECK(t.sign(a).orth == "two");
  CHECK(t.sign(b).orth == "five");
  t.check_structure(false);
}

TEST_CASE("deleting a child of the root pair leaves a single-leaf tree") {
  Grammar g = english();
  Tncb t = right_branching(load_bag("the_the.bag.json"));
  t.evaluate(g);
  auto [first, second] = t.children(t.root());
  t.remove(first);
  CHECK(t.root() == second);
  CHECK(t.node_count() == 1);
  CHECK(t.value(t.root()).well_formed());
}

TEST_CASE("deletion preconditions: root and non-maximal nodes are rejected") {
  Grammar g = english();
  Tncb t = tree_of(load_bag("book.bag.json"), "((book the) (red is))");
  t.evaluate(g);
  CHECK_THROWS_AS(t.remove(t.root()), PreconditionError);
  Tncb comb = right_branching(load_bag("dog.bag.json"));
  comb.evaluate(g);
  auto [spine, big] = comb.children(comb.root());
  CHECK_THROWS_AS(comb.remove(spine), PreconditionError);  // ill-formed
}

TEST_CASE("conjunction builds a well-formed node over two maximal TNCBs") {
  Grammar g = english();
  Tncb t = tree_of(load_bag("dog.bag.json"),
                   "((PAST bark) ((dog the) (brown big)))");
  t.evaluate(g);
  const std::size_t nodes_before = t.node_count();
  int barked = node_with_orth(t, "barked");
  int the_dog = node_with_orth(t, "the dog");
  MoveStep step = t.conjoin(barked, the_dog, g);
  CHECK(step.kind == MoveStep::Kind::Conjoin);
  CHECK(step.disrupted == 0);
  t.evaluate(g);
  int clause = node_with_orth(t, "the dog barked");
  auto [a, b] = t.children(clause);
  CHECK(((a == barked && b == the_dog) || (a == the_dog && b == barked)));
  CHECK(t.node_count() == nodes_before);
  t.check_structure();
}

TEST_CASE("conjoining PAST with bark in the worst-case comb yields barked") {
  Grammar g = english();
  Tncb t = right_branching(load_bag("dog.bag.json"));
  t.evaluate(g);
  auto leaves = t.leaves_preorder();
  CHECK(t.sign(leaves[0]).orth == "PAST");
  CHECK(t.sign(leaves[2]).orth == "bark");
  t.conjoin(leaves[0], leaves[2], g);
  t.evaluate(g);
  node_with_orth(t, "barked");
  // The spliced tree mirrors the worked configuration.
  CHECK(format_bracketing(bracketing_of(t)) == "((((2 (1 3)) 4) 5) 6)");
}

TEST_CASE("conjunction of non-combining signs is a precondition error") {
  Grammar g = english();
  Tncb t = right_branching(load_bag("dog.bag.json"));
  t.evaluate(g);
  auto leaves = t.leaves_preorder();
  CHECK_THROWS_AS(t.conjoin(leaves[3], leaves[4], g), PreconditionError);
}

TEST_CASE("adjunction disrupts exactly the dominating host nodes") {
  Grammar g = english();
  auto bag = load_bag("dog.bag.json");
  Tncb t = tree_of(bag, "((dog the) ((PAST bark) (brown big)))");
  t.evaluate(g);
  int brown = -1;
  for (int id : t.leaves_preorder())
    if (t.sign(id).orth == "brown") brown = id;
  int dog = -1;
  for (int id : t.leaves_preorder())
    if (t.sign(id).orth == "dog") dog = id;

  const std::size_t nodes_before = t.node_count();
  MoveStep step = t.adjoin(brown, dog, g);
  CHECK(step.kind == MoveStep::Kind::Adjoin);
  CHECK(step.disrupted == 1);  // only the NP node dominated the new pair
  t.evaluate(g);
  node_with_orth(t, "the brown dog");
  CHECK(t.node_count() == nodes_before);
  t.check_structure();
}

TEST_CASE("adjoining brown inside the clause re-derives the whole sentence") {
  Grammar g = english();
  auto bag = std::make_shared<Bag>();
  bag->items = {BagItem{1, sign("TNS", "PAST", {{"ev", 2}})},
                BagItem{2, sign("V", "bark", {{"ev", 2}, {"subj", 1}})},
                BagItem{3, sign("N", "dog", {{"idx", 1}, {"next", 0}})},
                BagItem{4, sign("DET", "the", {{"spec", 1}})},
                BagItem{5, sign("ADJ", "brown",
                                {{"mod", 1}, {"rank", 1}, {"prev", 0}})}};
  Tncb t = tree_of(bag, "(((PAST bark) (dog the)) brown)");
  t.evaluate(g);
  CHECK(maximal_orths(t) ==
        std::vector<std::string>{"the dog barked", "brown"});

  int brown = -1, dog = -1;
  for (int id : t.leaves_preorder()) {
    if (t.sign(id).orth == "brown") brown = id;
    if (t.sign(id).orth == "dog") dog = id;
  }
  MoveStep step = t.adjoin(brown, dog, g);
  CHECK(step.disrupted == 2);  // the NP and the clause above it
  t.evaluate(g);
  REQUIRE(t.value(t.root()).well_formed());
  CHECK(t.sign(t.root()).orth == "the brown dog barked");
}

TEST_CASE("adjunction preconditions: site must combine and sit inside a host") {
  Grammar g = english();
  Tncb t = tree_of(load_bag("dog.bag.json"),
                   "((PAST bark) ((dog the) (brown big)))");
  t.evaluate(g);
  int brown = -1, the = -1;
  for (int id : t.leaves_preorder()) {
    if (t.sign(id).orth == "brown") brown = id;
    if (t.sign(id).orth == "the") the = id;
  }
  CHECK_THROWS_AS(t.adjoin(brown, the, g), PreconditionError);  // no rule
  int barked = node_with_orth(t, "barked");
  CHECK_THROWS_AS(t.adjoin(brown, barked, g),
                  PreconditionError);  // maximal, not strictly inside one
}

TEST_CASE("a move recomputes exactly the nodes it marked") {
  Grammar g = english();
  Tncb t = right_branching(load_bag("dog.bag.json"));
  t.evaluate(g);
  auto leaves = t.leaves_preorder();
  t.conjoin(leaves[0], leaves[2], g);  // PAST -> bark

  std::map<int, Value::Tag> before;
  std::vector<int> marked;
  for (int id : t.preorder()) {
    before[id] = t.value(id).tag;
    if (t.value(id).tag == Value::Tag::Undetermined) marked.push_back(id);
  }
  CHECK_FALSE(marked.empty());
  std::size_t calls = t.evaluate(g);
  CHECK(calls <= marked.size());
  for (int id : t.preorder()) {
    CHECK(t.value(id).tag != Value::Tag::Undetermined);
    if (std::find(marked.begin(), marked.end(), id) == marked.end())
      CHECK(t.value(id).tag == before[id]);  // settled nodes untouched
  }
}

TEST_CASE("after evaluation no well-formed node has a non-well-formed child") {
  Grammar g = english();
  for (const char* br : {"((PAST bark) ((dog the) (brown big)))",
                         "(PAST (dog (bark (the (brown big)))))",
                         "((PAST dog) ((bark the) (brown big)))"}) {
    Tncb t = tree_of(load_bag("dog.bag.json"), br);
    t.evaluate(g);
    for (int id : t.preorder()) {
      if (t.is_leaf(id) || !t.value(id).well_formed()) continue;
      auto [a, b] = t.children(id);
      CHECK(t.value(a).well_formed());
      CHECK(t.value(b).well_formed());
    }
  }
}

TEST_CASE("child order never changes evaluated values") {
  Grammar g = english();
  Tncb t = tree_of(load_bag("dog.bag.json"),
                   "((PAST bark) ((dog the) (brown big)))");
  t.evaluate(g);
  Tncb swapped = t;
  for (int id : swapped.preorder())
    if (!swapped.is_leaf(id)) swapped.swap_children(id);
  swapped.reset_interior_values();
  swapped.evaluate(g);
  for (int id : t.preorder()) {
    CHECK(t.value(id).tag == swapped.value(id).tag);
    if (t.value(id).well_formed()) CHECK(t.sign(id) == swapped.sign(id));
  }
}
