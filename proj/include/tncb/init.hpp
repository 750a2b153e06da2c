#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "tncb/bag.hpp"
#include "tncb/tree.hpp"

namespace tncb {

/// Nested binary grouping over leaf labels, e.g. "((hon wa) (akai desu))".
/// Strictly binary at every level; non-binary groups are rejected.
struct Bracketing {
  std::string label;  // leaf label; empty for a group
  std::vector<Bracketing> parts;  // exactly two for a group

  bool is_leaf() const { return parts.empty(); }
  std::size_t leaf_count() const;
};

Bracketing parse_bracketing(const std::string& text);
Bracketing load_bracketing_file(const std::string& path);
std::string format_bracketing(const Bracketing& b);

/// Relabels every leaf via old -> new label text.
Bracketing relabel(const Bracketing& b,
                   const std::vector<std::pair<std::string, std::string>>& map);

/// Resolves every leaf label against the bag (integer id, or unique orth)
/// and rewrites it as the leaf id. Unmapped, ambiguous or repeated labels
/// are rejected.
Bracketing canonicalize_labels(const Bracketing& b, const Bag& bag);

/// Worst-case comb over the bag in input order: the first two items pair
/// up and each later item hangs off the spine, every interior node
/// undetermined.
Tncb right_branching(std::shared_ptr<const Bag> bag);

/// Uniformly random shape and leaf assignment (Remy growth), deterministic
/// per seed.
Tncb random_tncb(std::shared_ptr<const Bag> bag, std::uint64_t seed);

/// Tree isomorphic to the bracketing with interior nodes undetermined.
/// Labels resolve to bag leaves by id (integer label) or by unique orth;
/// unmapped or duplicate labels are rejected.
Tncb from_bracketing(std::shared_ptr<const Bag> bag, const Bracketing& b);

/// The grouping structure of a tree, leaves labelled with their bag ids.
Bracketing bracketing_of(const Tncb& t);

}  // namespace tncb
