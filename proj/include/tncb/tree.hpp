#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "tncb/bag.hpp"
#include "tncb/signs.hpp"

namespace tncb {

/// Node value: a sign, or one of the two non-sign verdicts.
struct Value {
  enum class Tag { WellFormed, Inconsistent, Undetermined };
  Tag tag = Tag::Undetermined;
  std::optional<Sign> sign;  // set iff WellFormed

  static Value well_formed(Sign s) {
    return Value{Tag::WellFormed, std::move(s)};
  }
  static Value inconsistent() { return Value{Tag::Inconsistent, std::nullopt}; }
  static Value undetermined() { return Value{Tag::Undetermined, std::nullopt}; }

  bool well_formed() const { return tag == Tag::WellFormed; }
};

/// One rewrite applied to a TNCB. `disrupted` counts the host-internal
/// nodes invalidated at the destination; 0 exactly when kind == Conjoin.
struct MoveStep {
  enum class Kind { Conjoin, Adjoin };
  int mover = -1;
  int destination = -1;
  Kind kind = Kind::Conjoin;
  int disrupted = 0;
};

/// Binary derivation tree with unordered children over a fixed Bag.
///
/// Nodes live in an arena with stable ids. Child slots keep creation order,
/// which fixes the deterministic top-down left-to-right scan that traversal,
/// movers and traces rely on; the order never affects evaluation results
/// (combination is commutative).
///
/// A Tncb is owned by one generation run; instances are independent.
class Tncb {
 public:
  explicit Tncb(std::shared_ptr<const Bag> bag) : bag_(std::move(bag)) {}

  /// Single well-formed leaf over a synthesized one-sign bag.
  static Tncb leaf(Sign sign);

  // -- construction (used by the initializers) --
  int add_leaf(int bag_index);
  int add_pair(int first, int second);
  void set_root(int id);
  /// Builder helper: puts `new_child` into the slot `old_child` occupies
  /// under `parent_id`, updating the parent link.
  void rehook(int parent_id, int old_child, int new_child);

  // -- introspection --
  int root() const { return root_; }
  bool is_leaf(int id) const { return nodes_[id].leaf >= 0; }
  int parent(int id) const { return nodes_[id].parent; }
  std::pair<int, int> children(int id) const {
    return {nodes_[id].first, nodes_[id].second};
  }
  const Value& value(int id) const { return nodes_[id].value; }
  const Sign& sign(int id) const { return *nodes_[id].value.sign; }
  int leaf_bag_index(int id) const { return nodes_[id].leaf; }
  std::int64_t leaf_id(int id) const {
    return bag_->items[nodes_[id].leaf].id;
  }
  const Bag& bag() const { return *bag_; }
  std::shared_ptr<const Bag> bag_ptr() const { return bag_; }

  std::size_t node_count() const;
  std::size_t leaf_count() const;
  std::size_t interior_count() const;
  std::size_t well_formed_count() const;  // the improvement metric

  /// Scan order: top-down, child slots in creation order.
  std::vector<int> preorder() const;
  std::vector<int> leaves_preorder() const;

  /// Well-formed nodes whose parent is not well-formed, in scan order.
  /// Requires a fully evaluated tree.
  std::vector<int> maximal_ids() const;
  bool is_maximal(int id) const;

  /// Maximal TNCB strictly containing `site`, or -1.
  int host_of(int site) const;
  /// Well-formed ancestors of `site` up to and including its host root.
  std::vector<int> dominators_within_host(int site) const;

  // -- the five operations --

  /// Fills every undetermined node bottom-up; settled nodes are not
  /// recomputed. Returns the number of combine calls performed.
  std::size_t evaluate(const Grammar& grammar,
                       CombinePolicy policy = CombinePolicy::Strict,
                       CombineStats* stats = nullptr);

  struct Detached {
    int subtree;  // the removed maximal, reattachable
    int freed;    // its former parent, reusable as the next pair node
  };

  /// Deletion: detaches a maximal from its position; the sibling replaces
  /// the parent and every remaining ancestor of the splice point becomes
  /// undetermined. The detached pair is returned for reuse.
  Detached remove(int m);

  /// Conjunction: moves maximal `a` beside maximal `b` under a new
  /// well-formed node. Throws PreconditionError when they do not combine.
  MoveStep conjoin(int a, int b, const Grammar& grammar,
                   CombinePolicy policy = CombinePolicy::Strict,
                   CombineStats* stats = nullptr);

  /// Adjunction: moves maximal `a` inside another maximal, next to `site`.
  /// Host nodes dominating the new combination are disrupted (marked
  /// undetermined); their count is recorded on the returned step.
  MoveStep adjoin(int a, int site, const Grammar& grammar,
                  CombinePolicy policy = CombinePolicy::Strict,
                  CombineStats* stats = nullptr);

  /// Movement fast path for a combination already validated by the search:
  /// splices without re-running combine. Total node count is unchanged.
  struct PlannedMove {
    int mover = -1;
    int destination = -1;
    MoveStep::Kind kind = MoveStep::Kind::Conjoin;
    Sign combined;
  };
  MoveStep apply(const PlannedMove& mv, std::vector<int>* disrupted_out = nullptr);

  // -- test support --
  void swap_children(int id);
  void reset_interior_values();

  /// Audits arena links, binary branching and leaf coverage; throws Error
  /// on breakage. `expect_full` additionally requires leaf count == bag size.
  void check_structure(bool expect_full = true) const;

 private:
  struct Node {
    Value value;
    int parent = -1;
    int first = -1;
    int second = -1;
    int leaf = -1;  // bag index when >= 0
    bool live = false;
  };

  int alloc();
  void replace_child(int parent_id, int old_child, int new_child);
  void mark_undetermined_up(int from);
  void eval_rec(int id, const Grammar& grammar, CombinePolicy policy,
                CombineStats* stats, std::size_t& calls);
  int splice(int mover, int dest, int reuse, Value val);
  MoveStep move_impl(int a, int dest, MoveStep::Kind kind, Sign combined,
                     std::vector<int>* disrupted_out);

  std::vector<Node> nodes_;
  std::vector<int> free_;
  int root_ = -1;
  std::shared_ptr<const Bag> bag_;
};

}  // namespace tncb
