#include "tncb/init.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "tncb/errors.hpp"

namespace tncb {

std::size_t Bracketing::leaf_count() const {
  if (is_leaf()) return 1;
  std::size_t n = 0;
  for (const auto& p : parts) n += p.leaf_count();
  return n;
}

namespace {

struct BrCursor {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
};

Bracketing parse_group(BrCursor& c) {
  Bracketing b;
  if (c.peek() == '(') {
    ++c.pos;
    while (c.peek() != ')') {
      if (c.peek() == '\0')
        throw ParseError(0, "bracketing: unbalanced parenthesis");
      b.parts.push_back(parse_group(c));
    }
    ++c.pos;
    if (b.parts.size() != 2)
      throw ParseError(0, "bracketing: group with " +
                              std::to_string(b.parts.size()) +
                              " parts (must be binary)");
    return b;
  }
  std::size_t start = c.pos;
  while (c.pos < c.s.size() &&
         !std::isspace(static_cast<unsigned char>(c.s[c.pos])) &&
         c.s[c.pos] != '(' && c.s[c.pos] != ')')
    ++c.pos;
  if (c.pos == start) throw ParseError(0, "bracketing: expected a token");
  b.label = c.s.substr(start, c.pos - start);
  return b;
}

}  // namespace

Bracketing parse_bracketing(const std::string& text) {
  BrCursor c{text, 0};
  Bracketing b = parse_group(c);
  if (c.peek() != '\0')
    throw ParseError(0, "bracketing: trailing text after the top group");
  return b;
}

Bracketing load_bracketing_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open bracketing file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_bracketing(buf.str());
}

std::string format_bracketing(const Bracketing& b) {
  if (b.is_leaf()) return b.label;
  return "(" + format_bracketing(b.parts[0]) + " " +
         format_bracketing(b.parts[1]) + ")";
}

Bracketing relabel(
    const Bracketing& b,
    const std::vector<std::pair<std::string, std::string>>& map) {
  Bracketing out;
  if (b.is_leaf()) {
    for (const auto& [from, to] : map) {
      if (from == b.label) {
        out.label = to;
        return out;
      }
    }
    throw Error("bracketing label '" + b.label + "' has no relabeling");
  }
  for (const auto& p : b.parts) out.parts.push_back(relabel(p, map));
  return out;
}

Tncb right_branching(std::shared_ptr<const Bag> bag) {
  if (bag->size() == 0) throw PreconditionError("empty bag");
  Tncb t(bag);
  int acc = t.add_leaf(0);
  for (std::size_t i = 1; i < bag->size(); ++i)
    acc = t.add_pair(acc, t.add_leaf(static_cast<int>(i)));
  t.set_root(acc);
  return t;
}

Tncb random_tncb(std::shared_ptr<const Bag> bag, std::uint64_t seed) {
  if (bag->size() == 0) throw PreconditionError("empty bag");
  std::mt19937_64 rng(seed);
  // Portable bounded draw; std::uniform_int_distribution is not
  // reproducible across standard libraries.
  auto draw = [&rng](std::uint64_t n) { return rng() % n; };

  Tncb t(bag);
  std::vector<int> pool{t.add_leaf(0)};  // every node currently in the tree
  t.set_root(pool[0]);
  for (std::size_t i = 1; i < bag->size(); ++i) {
    int at = pool[draw(pool.size())];
    int leaf = t.add_leaf(static_cast<int>(i));
    int grand = t.parent(at);
    int pair = draw(2) == 0 ? t.add_pair(leaf, at) : t.add_pair(at, leaf);
    if (grand < 0)
      t.set_root(pair);
    else
      t.rehook(grand, at, pair);
    pool.push_back(leaf);
    pool.push_back(pair);
  }
  return t;
}

namespace {

int resolve_label(const Bag& bag, const std::string& label,
                  std::set<int>& used) {
  int index = -1;
  bool all_digits =
      !label.empty() && std::all_of(label.begin(), label.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c));
      });
  if (all_digits) index = bag.index_of(std::stoll(label));
  if (index < 0) {
    for (std::size_t i = 0; i < bag.size(); ++i) {
      if (bag.items[i].sign.orth == label) {
        if (index >= 0)
          throw Error("bracketing label '" + label +
                      "' matches more than one bag sign");
        index = static_cast<int>(i);
      }
    }
  }
  if (index < 0)
    throw Error("bracketing label '" + label + "' matches no bag sign");
  if (!used.insert(index).second)
    throw Error("bracketing label '" + label + "' used twice");
  return index;
}

int build_from_bracketing(Tncb& t, const Bag& bag, const Bracketing& b,
                          std::set<int>& used) {
  if (b.is_leaf()) return t.add_leaf(resolve_label(bag, b.label, used));
  int first = build_from_bracketing(t, bag, b.parts[0], used);
  int second = build_from_bracketing(t, bag, b.parts[1], used);
  return t.add_pair(first, second);
}

Bracketing canonicalize_rec(const Bracketing& b, const Bag& bag,
                            std::set<int>& used) {
  Bracketing out;
  if (b.is_leaf()) {
    out.label = std::to_string(bag.items[resolve_label(bag, b.label, used)].id);
    return out;
  }
  for (const auto& p : b.parts)
    out.parts.push_back(canonicalize_rec(p, bag, used));
  return out;
}

}  // namespace

Bracketing canonicalize_labels(const Bracketing& b, const Bag& bag) {
  if (b.leaf_count() != bag.size())
    throw Error("bracketing covers " + std::to_string(b.leaf_count()) +
                " leaves but the bag has " + std::to_string(bag.size()));
  std::set<int> used;
  return canonicalize_rec(b, bag, used);
}

Tncb from_bracketing(std::shared_ptr<const Bag> bag, const Bracketing& b) {
  if (b.leaf_count() != bag->size())
    throw Error("bracketing covers " + std::to_string(b.leaf_count()) +
                " leaves but the bag has " + std::to_string(bag->size()));
  Tncb t(bag);
  std::set<int> used;
  t.set_root(build_from_bracketing(t, *bag, b, used));
  return t;
}

namespace {

Bracketing bracketing_of_rec(const Tncb& t, int id) {
  Bracketing b;
  if (t.is_leaf(id)) {
    b.label = std::to_string(t.leaf_id(id));
    return b;
  }
  auto [first, second] = t.children(id);
  b.parts.push_back(bracketing_of_rec(t, first));
  b.parts.push_back(bracketing_of_rec(t, second));
  return b;
}

}  // namespace

Bracketing bracketing_of(const Tncb& t) {
  return bracketing_of_rec(t, t.root());
}

}  // namespace tncb
