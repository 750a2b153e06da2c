#include "doctest.h"
#include "helpers.hpp"
#include "tncb/errors.hpp"
#include "tncb/generator.hpp"
#include "tncb/grammar_io.hpp"
#include "tncb/transfer.hpp"

using namespace tncb;
using tncb_test::fixture;

namespace {

SourceBag load_source(const std::string& bag, const std::string& brk) {
  SourceBag src;
  src.bag = load_bag_file(fixture(bag));
  src.bracketing = load_bracketing_file(fixture(brk));
  return src;
}

}  // namespace

TEST_CASE("the Japanese bag maps word for word onto the book bag") {
  Lexicon lex = load_lexicon_file(fixture("japanese.lex"));
  TransferResult res =
      transfer_bag(load_source("japanese.src.json", "japanese.brk"), lex);

  REQUIRE(res.bag.size() == 4);
  CHECK(res.bag.items[0].sign.orth == "book");
  CHECK(res.bag.items[1].sign.orth == "the");
  CHECK(res.bag.items[2].sign.orth == "red");
  CHECK(res.bag.items[3].sign.orth == "is");
  // ((hon wa) (akai desu)) mirrors leaf-for-leaf onto ((book the) (red is)).
  CHECK(format_bracketing(res.bracketing) == "((1 2) (3 4))");

  // Indices carried through: book/is share subj index 3, red/is pred 4.
  CHECK(res.bag.items[0].sign.feats.at("idx") == FeatureValue{Index{3}});
  CHECK(res.bag.items[3].sign.feats.at("subj") == FeatureValue{Index{3}});
  CHECK(res.bag.items[2].sign.feats.at("idx") == FeatureValue{Index{4}});
  CHECK(res.bag.items[3].sign.feats.at("pred") == FeatureValue{Index{4}});
}

TEST_CASE("the transferred Japanese bag generates the full sentence") {
  Lexicon lex = load_lexicon_file(fixture("japanese.lex"));
  TransferResult res =
      transfer_bag(load_source("japanese.src.json", "japanese.brk"), lex);
  Grammar g = load_grammar_file(fixture("english.gram"));
  auto bag = std::make_shared<const Bag>(res.bag);
  GenResult r = generate(from_bracketing(bag, res.bracketing), g);
  REQUIRE(r.success);
  CHECK(r.orth == "the book is red");
  CHECK(r.rewrites == 0);
}

TEST_CASE("the French bag maps onto the transferred dog bag with its shape") {
  Lexicon lex = load_lexicon_file(fixture("french.lex"));
  SourceBag src = load_source("french.src.json", "french.brk");
  TransferResult res = transfer_bag(src, lex);
  Bag expected = load_bag_file(fixture("french_dog.bag.json"));
  REQUIRE(res.bag.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(res.bag.items[i].id == expected.items[i].id);
    CHECK(res.bag.items[i].sign == expected.items[i].sign);
  }
  CHECK(format_bracketing(res.bracketing) == "((1 ((2 3) 4)) 5)");
}

TEST_CASE("output bracketing shape always matches the source") {
  Lexicon lex = load_lexicon_file(fixture("french.lex"));
  SourceBag src = load_source("french.src.json", "french.brk");
  TransferResult res = transfer_bag(src, lex);
  // Same nesting, only labels rewritten.
  Bracketing canonical_src = canonicalize_labels(src.bracketing, src.bag);
  CHECK(format_bracketing(res.bracketing) ==
        format_bracketing(canonical_src));
}

TEST_CASE("an empty lexicon leaves every sign uncovered") {
  CHECK_THROWS_AS(
      transfer_bag(load_source("japanese.src.json", "japanese.brk"), {}),
      TransferError);
}

TEST_CASE("ambiguous coverage is rejected with both entry lines") {
  Lexicon lex = parse_lexicon(
      "xfer N:hon[idx=I] => N:book[idx=I]\n"
      "xfer DET:wa[spec=I] => DET:the[spec=I]\n"
      "xfer AP:akai[idx=I] => AP:red[idx=I]\n"
      "xfer CP:desu[ev=E, subj=S, pred=P] => CP:is[ev=E, subj=S, pred=P]\n"
      "xfer N:hon[idx=I] => N:volume[idx=I]\n");
  try {
    transfer_bag(load_source("japanese.src.json", "japanese.brk"), lex);
    FAIL("expected TransferError");
  } catch (const TransferError& e) {
    std::string msg = e.what();
    CHECK(msg.find("hon") != std::string::npos);
    CHECK(msg.find("lines 1 and 5") != std::string::npos);
  }
}

TEST_CASE("set-to-set entries parse but refuse to execute") {
  Lexicon lex = parse_lexicon(
      "xfer N:hon[idx=I] + DET:wa[spec=I] => N:book[idx=I]\n");
  CHECK(lex.size() == 1);
  CHECK_FALSE(lex[0].one_to_one());
  CHECK_THROWS_AS(
      transfer_bag(load_source("japanese.src.json", "japanese.brk"), lex),
      UnsupportedError);
}

TEST_CASE("target variables unbound on the source side are a parse error") {
  CHECK_THROWS_AS(parse_lexicon("xfer N:hon[idx=I] => N:book[idx=I, next=Q]\n"),
                  ParseError);
}

TEST_CASE("feature constraints gate which entry applies") {
  Lexicon lex = parse_lexicon(
      "xfer N:hon[idx=3] => N:book[idx=3]\n"
      "xfer N:hon[idx=9] => N:tome[idx=9]\n"
      "xfer DET:wa[spec=I] => DET:the[spec=I]\n"
      "xfer AP:akai[idx=I] => AP:red[idx=I]\n"
      "xfer CP:desu[ev=E, subj=S, pred=P] => CP:is[ev=E, subj=S, pred=P]\n");
  TransferResult res =
      transfer_bag(load_source("japanese.src.json", "japanese.brk"), lex);
  CHECK(res.bag.items[0].sign.orth == "book");
}
