#include "tncb/grammar_io.hpp"

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

// Scanner over one logical line.
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
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
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
  bool accept_word(const std::string& w) {
    skip_ws();
    if (s.compare(pos, w.size(), w) == 0 &&
        (pos + w.size() == s.size() || !is_word_char(s[pos + w.size()]))) {
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
  if (!tok.empty() &&
      std::all_of(tok.begin(), tok.end(),
                  [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    return Index{std::stoll(tok)};
  }
  if (std::isupper(static_cast<unsigned char>(tok.front())))
    return Variable{tok};
  return Atom{tok};
}

SignPattern parse_pattern(Cursor& c, const std::set<std::string>& features) {
  SignPattern p;
  p.cat = Atom{c.word()};
  if (c.accept('[')) {
    if (!c.accept(']')) {
      do {
        std::string feat = c.word();
        if (!features.count(feat))
          throw ParseError(c.line, "undeclared feature '" + feat + "'");
        c.expect('=');
        PatternValue v = parse_value(c.word());
        if (!p.feats.emplace(feat, v).second)
          throw ParseError(c.line, "feature '" + feat + "' set twice");
      } while (c.accept(','));
      c.expect(']');
    }
  }
  return p;
}

void collect_variables(const SignPattern& p, std::set<std::string>& out) {
  for (const auto& [_, v] : p.feats)
    if (const auto* var = std::get_if<Variable>(&v)) out.insert(var->name);
}

}  // namespace

Grammar parse_grammar(const std::string& text) {
  Grammar g;
  std::set<std::string> rule_names;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto sc = raw.find(';'); sc != std::string::npos) raw.erase(sc);
    Cursor c{raw, 0, lineno};
    if (c.at_end()) continue;

    if (c.accept_word("feature")) {
      std::string name = c.word();
      if (!c.at_end()) throw ParseError(lineno, "trailing text after feature");
      g.features.insert(name);
    } else if (c.accept_word("rule")) {
      Rule r;
      r.name = Atom{c.word()};
      if (!rule_names.insert(r.name.name).second)
        throw ParseError(lineno, "duplicate rule name '" + r.name.name + "'");
      c.expect(':');
      r.mother = parse_pattern(c, g.features);
      c.expect('-');
      c.expect('>');
      r.left = parse_pattern(c, g.features);
      r.right = parse_pattern(c, g.features);
      if (c.accept_word("fuse")) r.orth_mode = OrthMode::Fuse;
      if (!c.at_end()) throw ParseError(lineno, "trailing text after rule");

      std::set<std::string> daughter_vars;
      collect_variables(r.left, daughter_vars);
      collect_variables(r.right, daughter_vars);
      for (const auto& [feat, v] : r.mother.feats) {
        if (const auto* var = std::get_if<Variable>(&v)) {
          if (!daughter_vars.count(var->name))
            throw ParseError(lineno, "mother variable '" + var->name +
                                         "' not bound by a daughter in rule '" +
                                         r.name.name + "'");
        }
      }
      g.rules.push_back(std::move(r));
    } else if (c.accept_word("morph")) {
      std::string left = c.word();
      c.expect('+');
      std::string right = c.word();
      c.expect('=');
      std::string fused = c.word();
      if (!c.at_end()) throw ParseError(lineno, "trailing text after morph");
      g.morph.add(std::move(left), std::move(right), std::move(fused));
    } else {
      throw ParseError(lineno, "expected 'feature', 'rule' or 'morph'");
    }
  }
  return g;
}

Grammar load_grammar_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open grammar file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_grammar(buf.str());
}

}  // namespace tncb
