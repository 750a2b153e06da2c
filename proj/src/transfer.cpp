#include "tncb/transfer.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "tncb/errors.hpp"

namespace tncb {

namespace {

bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' ||
         c == '\'';
}

struct Cursor {
  const std::string& s;
  std::size_t pos = 0;
  int line;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= s.size();
  }
  void expect(char c) {
    skip_ws();
    if (pos >= s.size() || s[pos] != c)
      throw ParseError(line, std::string("expected '") + c + "'");
    ++pos;
  }
  bool accept(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  bool accept_str(const std::string& w) {
    skip_ws();
    if (s.compare(pos, w.size(), w) == 0) {
      pos += w.size();
      return true;
    }
    return false;
  }
  std::string word() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && is_word_char(s[pos])) ++pos;
    if (pos == start) throw ParseError(line, "expected a token");
    return s.substr(start, pos - start);
  }
};

PatternValue parse_value(const std::string& tok) {
  if (std::all_of(tok.begin(), tok.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c));
      }))
    return Index{std::stoll(tok)};
  if (std::isupper(static_cast<unsigned char>(tok.front())))
    return Variable{tok};
  return Atom{tok};
}

LexemePattern parse_lexeme(Cursor& c) {
  LexemePattern p;
  p.cat = Atom{c.word()};
  c.expect(':');
  p.orth = c.word();
  if (c.accept('[')) {
    if (!c.accept(']')) {
      do {
        std::string feat = c.word();
        c.expect('=');
        p.feats.emplace(feat, parse_value(c.word()));
      } while (c.accept(','));
      c.expect(']');
    }
  }
  return p;
}

void collect_vars(const LexemePattern& p, std::set<std::string>& out) {
  for (const auto& [_, v] : p.feats)
    if (const auto* var = std::get_if<Variable>(&v)) out.insert(var->name);
}

std::optional<Bindings> match_source(const LexemePattern& p, const Sign& sign) {
  if (p.orth != sign.orth) return std::nullopt;
  SignPattern sp{p.cat, p.feats};
  return unify(sp, sign, {});
}

Sign instantiate_target(const LexemePattern& p, const Bindings& bindings,
                        int line) {
  Sign out;
  out.cat = p.cat;
  out.orth = p.orth;
  for (const auto& [feat, v] : p.feats) {
    if (const auto* a = std::get_if<Atom>(&v)) {
      out.feats.emplace(feat, *a);
    } else if (const auto* i = std::get_if<Index>(&v)) {
      out.feats.emplace(feat, *i);
    } else {
      auto it = bindings.find(std::get<Variable>(v).name);
      if (it == bindings.end())
        throw ParseError(line, "target variable '" +
                                   std::get<Variable>(v).name +
                                   "' unbound after source match");
      out.feats.emplace(feat, it->second);
    }
  }
  return out;
}

}  // namespace

Lexicon parse_lexicon(const std::string& text) {
  Lexicon lex;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto sc = raw.find(';'); sc != std::string::npos) raw.erase(sc);
    Cursor c{raw, 0, lineno};
    if (c.at_end()) continue;
    std::string kw = c.word();
    if (kw != "xfer")
      throw ParseError(lineno, "expected 'xfer', got '" + kw + "'");
    BilingualEntry entry;
    entry.line = lineno;
    entry.source.push_back(parse_lexeme(c));
    while (c.accept('+')) entry.source.push_back(parse_lexeme(c));
    if (!c.accept_str("=>")) throw ParseError(lineno, "expected '=>'");
    entry.target.push_back(parse_lexeme(c));
    while (c.accept('+')) entry.target.push_back(parse_lexeme(c));
    if (!c.at_end()) throw ParseError(lineno, "trailing text after entry");

    std::set<std::string> src_vars, tgt_vars;
    for (const auto& p : entry.source) collect_vars(p, src_vars);
    for (const auto& p : entry.target) collect_vars(p, tgt_vars);
    for (const auto& v : tgt_vars)
      if (!src_vars.count(v))
        throw ParseError(lineno,
                         "target variable '" + v + "' not bound on the source side");
    lex.push_back(std::move(entry));
  }
  return lex;
}

Lexicon load_lexicon_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open lexicon file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_lexicon(buf.str());
}

TransferResult transfer_bag(const SourceBag& src, const Lexicon& lexicon) {
  TransferResult out;
  for (const BagItem& item : src.bag.items) {
    const BilingualEntry* applicable = nullptr;
    Bindings bindings;
    for (const BilingualEntry& entry : lexicon) {
      auto b = match_source(entry.source.front(), item.sign);
      if (!b) continue;
      if (applicable)
        throw TransferError("ambiguous coverage: source sign " +
                            item.sign.describe() +
                            " matches entries at lines " +
                            std::to_string(applicable->line) + " and " +
                            std::to_string(entry.line));
      applicable = &entry;
      bindings = std::move(*b);
    }
    if (!applicable)
      throw TransferError("uncovered source sign: " + item.sign.describe());
    if (!applicable->one_to_one())
      throw UnsupportedError(
          "set-to-set entry at line " + std::to_string(applicable->line) +
          " matches " + item.sign.describe() +
          "; only one-to-one entries are executable");
    BagItem translated;
    translated.id = item.id;
    translated.sign =
        instantiate_target(applicable->target.front(), bindings,
                           applicable->line);
    out.bag.items.push_back(std::move(translated));
  }

  // Leaf-for-leaf mirroring: same shape, labels rewritten to the leaf ids,
  // which the target bag preserves.
  out.bracketing = canonicalize_labels(src.bracketing, src.bag);
  return out;
}

}  // namespace tncb
