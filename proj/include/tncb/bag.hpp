#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tncb/signs.hpp"

namespace tncb {

struct BagItem {
  std::int64_t id = 0;  // stable leaf identifier
  Sign sign;
};

/// Multiset of ground signs -- the generator's input. Item order is the
/// file order and drives the default (worst-case) initialization.
struct Bag {
  std::vector<BagItem> items;

  std::size_t size() const { return items.size(); }
  const Sign& sign(std::size_t index) const { return items[index].sign; }

  /// Index of the item with the given leaf id, or -1.
  int index_of(std::int64_t id) const;
};

/// JSON list of {id, cat, orth, feats:{name: value}}; integer feature
/// values are indices, strings are atoms. Duplicate ids are rejected.
Bag parse_bag_json(const std::string& text);
Bag load_bag_file(const std::string& path);
std::string format_bag_json(const Bag& bag);

}  // namespace tncb
