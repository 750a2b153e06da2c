#pragma once

#include <string>
#include <vector>

#include "tncb/bag.hpp"
#include "tncb/init.hpp"
#include "tncb/signs.hpp"

namespace tncb {

/// Templated side of a bilingual entry: category, literal lexeme, feature
/// constraints with shared variables.
struct LexemePattern {
  Atom cat;
  std::string orth;
  std::map<std::string, PatternValue> feats;
};

/// Translationally equivalent sets of lexical signs. Index variables on
/// the target side must be bound on the source side. Entries with more
/// than one lexeme per side parse but are not executable.
struct BilingualEntry {
  std::vector<LexemePattern> source;
  std::vector<LexemePattern> target;
  int line = 0;

  bool one_to_one() const { return source.size() == 1 && target.size() == 1; }
};

using Lexicon = std::vector<BilingualEntry>;

/// Line format:
///   xfer <src-cat>:<src-orth>[f=V,...] => <tgt-cat>:<tgt-orth>[f=V,...]
/// Multiple lexemes per side are joined with '+'.
Lexicon parse_lexicon(const std::string& text);
Lexicon load_lexicon_file(const std::string& path);

/// Source bag plus its parse bracketing (over leaf ids or orths).
struct SourceBag {
  Bag bag;
  Bracketing bracketing;
};

struct TransferResult {
  Bag bag;                 // target signs, leaf ids preserved
  Bracketing bracketing;   // same shape, leaves relabelled to target ids
};

/// Maps every source sign through exactly one applicable one-to-one entry,
/// copying indices through the entry's variable bindings, and mirrors the
/// source bracketing leaf-for-leaf. Throws TransferError when a sign is
/// uncovered or covered by more than one entry, UnsupportedError when the
/// applicable entry is not one-to-one.
TransferResult transfer_bag(const SourceBag& src, const Lexicon& lexicon);

}  // namespace tncb
