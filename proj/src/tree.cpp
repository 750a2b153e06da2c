#include "tncb/tree.hpp"

#include <algorithm>

#include "tncb/errors.hpp"

namespace tncb {

Tncb Tncb::leaf(Sign sign) {
  auto bag = std::make_shared<Bag>();
  bag->items.push_back(BagItem{1, std::move(sign)});
  Tncb t(bag);
  t.set_root(t.add_leaf(0));
  return t;
}

int Tncb::alloc() {
  if (!free_.empty()) {
    int id = free_.back();
    free_.pop_back();
    nodes_[id] = Node{};
    nodes_[id].live = true;
    return id;
  }
  nodes_.push_back(Node{});
  nodes_.back().live = true;
  return static_cast<int>(nodes_.size()) - 1;
}

int Tncb::add_leaf(int bag_index) {
  if (bag_index < 0 || static_cast<std::size_t>(bag_index) >= bag_->size())
    throw PreconditionError("leaf index out of range");
  int id = alloc();
  nodes_[id].leaf = bag_index;
  nodes_[id].value = Value::well_formed(bag_->sign(bag_index));
  return id;
}

int Tncb::add_pair(int first, int second) {
  int id = alloc();
  nodes_[id].first = first;
  nodes_[id].second = second;
  nodes_[id].value = Value::undetermined();
  nodes_[first].parent = id;
  nodes_[second].parent = id;
  return id;
}

void Tncb::set_root(int id) {
  root_ = id;
  nodes_[id].parent = -1;
}

void Tncb::rehook(int parent_id, int old_child, int new_child) {
  replace_child(parent_id, old_child, new_child);
  nodes_[new_child].parent = parent_id;
}

std::size_t Tncb::node_count() const { return preorder().size(); }

std::size_t Tncb::leaf_count() const { return leaves_preorder().size(); }

std::size_t Tncb::interior_count() const {
  std::size_t n = 0;
  for (int id : preorder())
    if (!is_leaf(id)) ++n;
  return n;
}

std::size_t Tncb::well_formed_count() const {
  std::size_t n = 0;
  for (int id : preorder())
    if (nodes_[id].value.well_formed()) ++n;
  return n;
}

std::vector<int> Tncb::preorder() const {
  std::vector<int> out;
  if (root_ < 0) return out;
  std::vector<int> stack{root_};
  while (!stack.empty()) {
    int id = stack.back();
    stack.pop_back();
    out.push_back(id);
    if (!is_leaf(id)) {
      stack.push_back(nodes_[id].second);
      stack.push_back(nodes_[id].first);
    }
  }
  return out;
}

std::vector<int> Tncb::leaves_preorder() const {
  std::vector<int> out;
  for (int id : preorder())
    if (is_leaf(id)) out.push_back(id);
  return out;
}

bool Tncb::is_maximal(int id) const {
  if (!nodes_[id].value.well_formed()) return false;
  int p = nodes_[id].parent;
  return p < 0 || !nodes_[p].value.well_formed();
}

std::vector<int> Tncb::maximal_ids() const {
  std::vector<int> out;
  if (root_ < 0) return out;
  std::vector<int> stack{root_};
  while (!stack.empty()) {
    int id = stack.back();
    stack.pop_back();
    if (nodes_[id].value.well_formed()) {
      out.push_back(id);  // descendants are well-formed too, never maximal
      continue;
    }
    if (!is_leaf(id)) {
      stack.push_back(nodes_[id].second);
      stack.push_back(nodes_[id].first);
    }
  }
  return out;
}

int Tncb::host_of(int site) const {
  int p = nodes_[site].parent;
  if (p < 0 || !nodes_[p].value.well_formed()) return -1;
  while (nodes_[p].parent >= 0 &&
         nodes_[nodes_[p].parent].value.well_formed())
    p = nodes_[p].parent;
  return p;
}

std::vector<int> Tncb::dominators_within_host(int site) const {
  std::vector<int> out;
  int p = nodes_[site].parent;
  while (p >= 0 && nodes_[p].value.well_formed()) {
    out.push_back(p);
    p = nodes_[p].parent;
  }
  return out;
}

std::size_t Tncb::evaluate(const Grammar& grammar, CombinePolicy policy,
                           CombineStats* stats) {
  std::size_t calls = 0;
  if (root_ >= 0) eval_rec(root_, grammar, policy, stats, calls);
  return calls;
}

void Tncb::eval_rec(int id, const Grammar& grammar, CombinePolicy policy,
                    CombineStats* stats, std::size_t& calls) {
  Node& n = nodes_[id];
  if (n.leaf >= 0) return;
  if (n.value.tag != Value::Tag::Undetermined) return;  // settled, keep
  eval_rec(n.first, grammar, policy, stats, calls);
  eval_rec(n.second, grammar, policy, stats, calls);
  const Value& a = nodes_[n.first].value;
  const Value& b = nodes_[n.second].value;
  if (!a.well_formed() || !b.well_formed()) {
    n.value = Value::inconsistent();
    return;
  }
  ++calls;
  auto combined = combine_checked(*a.sign, *b.sign, grammar, policy, stats);
  n.value = combined ? Value::well_formed(std::move(*combined))
                     : Value::inconsistent();
}

void Tncb::replace_child(int parent_id, int old_child, int new_child) {
  Node& p = nodes_[parent_id];
  if (p.first == old_child)
    p.first = new_child;
  else if (p.second == old_child)
    p.second = new_child;
  else
    throw Error("internal: child link out of sync");
}

void Tncb::mark_undetermined_up(int from) {
  for (int id = from; id >= 0; id = nodes_[id].parent)
    if (nodes_[id].leaf < 0) nodes_[id].value = Value::undetermined();
}

Tncb::Detached Tncb::remove(int m) {
  if (m == root_) throw PreconditionError("cannot delete the root");
  if (!nodes_[m].value.well_formed())
    throw PreconditionError("only a well-formed TNCB can be deleted");
  int p = nodes_[m].parent;
  if (nodes_[p].value.well_formed())
    throw PreconditionError("only a maximal TNCB can be deleted");
  int sibling = nodes_[p].first == m ? nodes_[p].second : nodes_[p].first;
  int g = nodes_[p].parent;
  if (g < 0) {
    root_ = sibling;
    nodes_[sibling].parent = -1;
  } else {
    replace_child(g, p, sibling);
    nodes_[sibling].parent = g;
    mark_undetermined_up(g);
  }
  nodes_[m].parent = -1;
  nodes_[p] = Node{};  // freed; caller may reuse the id via splice
  return Detached{m, p};
}

int Tncb::splice(int mover, int dest, int reuse, Value val) {
  int dp = nodes_[dest].parent;
  int r;
  if (reuse >= 0) {
    r = reuse;
    nodes_[r] = Node{};
    nodes_[r].live = true;
  } else {
    r = alloc();
  }
  nodes_[r].value = std::move(val);
  nodes_[r].first = mover;
  nodes_[r].second = dest;
  nodes_[r].parent = dp;
  nodes_[mover].parent = r;
  nodes_[dest].parent = r;
  if (dp < 0)
    root_ = r;
  else
    replace_child(dp, dest, r);
  mark_undetermined_up(dp);
  return r;
}

MoveStep Tncb::move_impl(int a, int dest, MoveStep::Kind kind, Sign combined,
                         std::vector<int>* disrupted_out) {
  const std::size_t nodes_before = node_count();
  Detached d = remove(a);
  std::vector<int> disrupted;
  if (kind == MoveStep::Kind::Adjoin) {
    disrupted = dominators_within_host(dest);
    if (disrupted.empty())
      throw PreconditionError(
          "adjunction site is not strictly inside a maximal TNCB");
    for (int id : disrupted) nodes_[id].value = Value::undetermined();
  }
  splice(d.subtree, dest, d.freed, Value::well_formed(std::move(combined)));
  if (node_count() != nodes_before)
    throw Error("internal: move changed the node count");
  if (disrupted_out) *disrupted_out = disrupted;
  return MoveStep{a, dest, kind, static_cast<int>(disrupted.size())};
}

MoveStep Tncb::conjoin(int a, int b, const Grammar& grammar,
                       CombinePolicy policy, CombineStats* stats) {
  if (a == b) throw PreconditionError("cannot conjoin a node with itself");
  if (!is_maximal(a) || !is_maximal(b))
    throw PreconditionError("conjunction needs two maximal TNCBs");
  auto combined = combine_checked(sign(a), sign(b), grammar, policy, stats);
  if (!combined)
    throw PreconditionError("signs do not combine: " + sign(a).describe() +
                            " + " + sign(b).describe());
  return move_impl(a, b, MoveStep::Kind::Conjoin, std::move(*combined),
                   nullptr);
}

MoveStep Tncb::adjoin(int a, int site, const Grammar& grammar,
                      CombinePolicy policy, CombineStats* stats) {
  if (!is_maximal(a)) throw PreconditionError("adjunction mover not maximal");
  int host = host_of(site);
  if (host < 0)
    throw PreconditionError(
        "adjunction site is not strictly inside a maximal TNCB");
  if (host == a)
    throw PreconditionError("cannot adjoin a TNCB inside itself");
  auto combined = combine_checked(sign(a), sign(site), grammar, policy, stats);
  if (!combined)
    throw PreconditionError("signs do not combine: " + sign(a).describe() +
                            " + " + sign(site).describe());
  return move_impl(a, site, MoveStep::Kind::Adjoin, std::move(*combined),
                   nullptr);
}

MoveStep Tncb::apply(const PlannedMove& mv, std::vector<int>* disrupted_out) {
  return move_impl(mv.mover, mv.destination, mv.kind, mv.combined,
                   disrupted_out);
}

void Tncb::swap_children(int id) {
  if (is_leaf(id)) throw PreconditionError("cannot swap children of a leaf");
  std::swap(nodes_[id].first, nodes_[id].second);
}

void Tncb::reset_interior_values() {
  for (int id : preorder())
    if (!is_leaf(id)) nodes_[id].value = Value::undetermined();
}

void Tncb::check_structure(bool expect_full) const {
  if (root_ < 0) throw Error("structure: no root");
  if (nodes_[root_].parent != -1) throw Error("structure: root has a parent");
  std::vector<int> seen_leaves;
  auto order = preorder();
  for (int id : order) {
    const Node& n = nodes_[id];
    if (!n.live) throw Error("structure: dead node in tree");
    if (n.leaf >= 0) {
      if (n.first != -1 || n.second != -1)
        throw Error("structure: leaf with children");
      if (!n.value.well_formed())
        throw Error("structure: leaf not well-formed");
      seen_leaves.push_back(n.leaf);
    } else {
      if (n.first < 0 || n.second < 0)
        throw Error("structure: interior node is not binary");
      if (nodes_[n.first].parent != id || nodes_[n.second].parent != id)
        throw Error("structure: parent link out of sync");
    }
  }
  std::sort(seen_leaves.begin(), seen_leaves.end());
  if (std::adjacent_find(seen_leaves.begin(), seen_leaves.end()) !=
      seen_leaves.end())
    throw Error("structure: bag element at two leaves");
  if (expect_full) {
    if (seen_leaves.size() != bag_->size())
      throw Error("structure: leaf count differs from bag size");
    std::size_t interiors = order.size() - seen_leaves.size();
    if (!seen_leaves.empty() && interiors != seen_leaves.size() - 1)
      throw Error("structure: interior count is not leaves-1");
  }
}

}  // namespace tncb
