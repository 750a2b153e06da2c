#pragma once

#include <memory>
#include <string>

#include "tncb/bag.hpp"
#include "tncb/grammar_io.hpp"
#include "tncb/signs.hpp"

namespace tncb_test {

inline std::string fixture(const std::string& name) {
  return std::string(TNCB_FIXTURES) + "/" + name;
}

inline tncb::Grammar english() {
  return tncb::load_grammar_file(fixture("english.gram"));
}

inline std::shared_ptr<const tncb::Bag> load_bag(const std::string& name) {
  return std::make_shared<const tncb::Bag>(tncb::load_bag_file(fixture(name)));
}

inline tncb::Sign sign(const char* cat, std::string orth,
                       std::initializer_list<std::pair<const char*, tncb::Index>>
                           feats = {}) {
  tncb::Sign s;
  s.cat = tncb::Atom{cat};
  s.orth = std::move(orth);
  for (const auto& [f, v] : feats) s.feats.emplace(f, v);
  return s;
}

inline const tncb::Sign& bag_sign(const tncb::Bag& bag, const std::string& orth) {
  for (const auto& item : bag.items)
    if (item.sign.orth == orth) return item.sign;
  throw std::runtime_error("no sign with orth " + orth);
}

}  // namespace tncb_test
