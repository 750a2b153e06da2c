#include "tncb.h"

#include <cstring>
#include <string>

#include "tncb/bench.hpp"
#include "tncb/errors.hpp"
#include "tncb/generator.hpp"
#include "tncb/grammar_io.hpp"
#include "tncb/init.hpp"
#include "tncb/oracle.hpp"
#include "tncb/transfer.hpp"

struct tncb_grammar {
  tncb::Grammar g;
};
struct tncb_bag {
  std::shared_ptr<const tncb::Bag> b;
};
struct tncb_bracketing {
  tncb::Bracketing b;
};
struct tncb_lexicon {
  tncb::Lexicon l;
};
struct tncb_result {
  tncb::GenResult r;
};
struct tncb_strings {
  std::vector<std::string> items;
};
struct tncb_report {
  tncb::Report r;
  std::string text;
};
struct tncb_bench {
  tncb::BenchResult r;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs `fn`, translating the library's exceptions to status codes.
template <typename Fn>
tncb_status guarded(Fn&& fn) {
  try {
    fn();
    return TNCB_OK;
  } catch (const tncb::ParseError& e) {
    set_error(e.what());
    return TNCB_E_PARSE;
  } catch (const tncb::LimitError& e) {
    set_error(e.what());
    return TNCB_E_LIMIT;
  } catch (const tncb::UnsupportedError& e) {
    set_error(e.what());
    return TNCB_E_UNSUPPORTED;
  } catch (const tncb::TransferError& e) {
    set_error(e.what());
    return TNCB_E_TRANSFER;
  } catch (const tncb::PrecedenceViolationError& e) {
    set_error(e.what());
    return TNCB_E_PRECEDENCE;
  } catch (const tncb::MonotonicityViolationError& e) {
    set_error(e.what());
    return TNCB_E_MONOTONICITY;
  } catch (const tncb::PreconditionError& e) {
    set_error(e.what());
    return TNCB_E_PRECONDITION;
  } catch (const std::exception& e) {
    set_error(e.what());
    return TNCB_E_IO;
  }
}

}  // namespace

extern "C" {

const char* tncb_last_error(void) { return g_last_error.c_str(); }

void tncb_string_free(char* s) { delete[] s; }

/* -- grammars -- */

tncb_status tncb_grammar_parse_text(const char* text, tncb_grammar** out) {
  if (!text || !out) return TNCB_E_INVALID;
  return guarded([&] { *out = new tncb_grammar{tncb::parse_grammar(text)}; });
}

tncb_status tncb_grammar_parse_file(const char* path, tncb_grammar** out) {
  if (!path || !out) return TNCB_E_INVALID;
  return guarded(
      [&] { *out = new tncb_grammar{tncb::load_grammar_file(path)}; });
}

size_t tncb_grammar_rule_count(const tncb_grammar* g) {
  return g ? g->g.rules.size() : 0;
}

void tncb_grammar_free(tncb_grammar* g) { delete g; }

/* -- bags -- */

tncb_status tncb_bag_parse_text(const char* json, tncb_bag** out) {
  if (!json || !out) return TNCB_E_INVALID;
  return guarded([&] {
    *out = new tncb_bag{
        std::make_shared<const tncb::Bag>(tncb::parse_bag_json(json))};
  });
}

tncb_status tncb_bag_parse_file(const char* path, tncb_bag** out) {
  if (!path || !out) return TNCB_E_INVALID;
  return guarded([&] {
    *out = new tncb_bag{
        std::make_shared<const tncb::Bag>(tncb::load_bag_file(path))};
  });
}

size_t tncb_bag_size(const tncb_bag* b) { return b ? b->b->size() : 0; }

tncb_status tncb_bag_format_json(const tncb_bag* b, char** out) {
  if (!b || !out) return TNCB_E_INVALID;
  return guarded([&] { *out = dup_string(tncb::format_bag_json(*b->b)); });
}

void tncb_bag_free(tncb_bag* b) { delete b; }

/* -- bracketings -- */

tncb_status tncb_bracketing_parse_text(const char* text,
                                       tncb_bracketing** out) {
  if (!text || !out) return TNCB_E_INVALID;
  return guarded(
      [&] { *out = new tncb_bracketing{tncb::parse_bracketing(text)}; });
}

tncb_status tncb_bracketing_parse_file(const char* path,
                                       tncb_bracketing** out) {
  if (!path || !out) return TNCB_E_INVALID;
  return guarded(
      [&] { *out = new tncb_bracketing{tncb::load_bracketing_file(path)}; });
}

tncb_status tncb_bracketing_format(const tncb_bracketing* b, char** out) {
  if (!b || !out) return TNCB_E_INVALID;
  return guarded(
      [&] { *out = dup_string(tncb::format_bracketing(b->b) + "\n"); });
}

void tncb_bracketing_free(tncb_bracketing* b) { delete b; }

/* -- lexicons / transfer -- */

tncb_status tncb_lexicon_parse_text(const char* text, tncb_lexicon** out) {
  if (!text || !out) return TNCB_E_INVALID;
  return guarded([&] { *out = new tncb_lexicon{tncb::parse_lexicon(text)}; });
}

tncb_status tncb_lexicon_parse_file(const char* path, tncb_lexicon** out) {
  if (!path || !out) return TNCB_E_INVALID;
  return guarded(
      [&] { *out = new tncb_lexicon{tncb::load_lexicon_file(path)}; });
}

void tncb_lexicon_free(tncb_lexicon* l) { delete l; }

tncb_status tncb_transfer(const tncb_lexicon* lexicon, const tncb_bag* source,
                          const tncb_bracketing* bracketing,
                          tncb_bag** out_bag,
                          tncb_bracketing** out_bracketing) {
  if (!lexicon || !source || !bracketing || !out_bag || !out_bracketing)
    return TNCB_E_INVALID;
  return guarded([&] {
    tncb::SourceBag src{*source->b, bracketing->b};
    tncb::TransferResult res = tncb::transfer_bag(src, lexicon->l);
    *out_bag = new tncb_bag{
        std::make_shared<const tncb::Bag>(std::move(res.bag))};
    *out_bracketing = new tncb_bracketing{std::move(res.bracketing)};
  });
}

/* -- generation -- */

tncb_status tncb_generate(const tncb_grammar* g, const tncb_bag* b,
                          const tncb_gen_options* opts, tncb_result** out) {
  if (!g || !b || !opts || !out) return TNCB_E_INVALID;
  return guarded([&] {
    tncb::Tncb initial = [&]() -> tncb::Tncb {
      switch (opts->init_mode) {
        case TNCB_INIT_RANDOM:
          return tncb::random_tncb(b->b, opts->seed);
        case TNCB_INIT_MIRROR:
          if (!opts->bracketing)
            throw tncb::PreconditionError(
                "mirror initialization needs a bracketing");
          return tncb::from_bracketing(b->b, opts->bracketing->b);
        default:
          return tncb::right_branching(b->b);
      }
    }();
    tncb::GenConfig config;
    if (opts->unbounded)
      config.max_rewrites_policy = tncb::GenConfig::Bound::Unbounded;
    if (opts->first_rule_wins)
      config.violation_policy = tncb::CombinePolicy::FirstRuleWins;
    *out = new tncb_result{tncb::generate(std::move(initial), g->g, config)};
  });
}

int tncb_result_success(const tncb_result* r) {
  return r && r->r.success ? 1 : 0;
}

const char* tncb_result_orth(const tncb_result* r) {
  return r && r->r.success ? r->r.orth.c_str() : nullptr;
}

size_t tncb_result_fragment_count(const tncb_result* r) {
  return r ? r->r.fragments.size() : 0;
}

const char* tncb_result_fragment(const tncb_result* r, size_t i) {
  return r && i < r->r.fragments.size() ? r->r.fragments[i].c_str() : nullptr;
}

size_t tncb_result_rewrites(const tncb_result* r) {
  return r ? r->r.rewrites : 0;
}

uint64_t tncb_result_eval_calls(const tncb_result* r) {
  return r ? r->r.eval_calls : 0;
}

uint64_t tncb_result_search_calls(const tncb_result* r) {
  return r ? r->r.search_calls : 0;
}

tncb_status tncb_result_trace_json(const tncb_result* r, char** out) {
  if (!r || !out) return TNCB_E_INVALID;
  return guarded([&] { *out = dup_string(tncb::trace_to_json(r->r.trace)); });
}

void tncb_result_free(tncb_result* r) { delete r; }

/* -- oracle -- */

tncb_status tncb_oracle_realizations(const tncb_grammar* g, const tncb_bag* b,
                                     size_t limit, tncb_strings** out) {
  if (!g || !b || !out) return TNCB_E_INVALID;
  return guarded([&] {
    auto set = tncb::all_realizations(*b->b, g->g, limit);
    auto* s = new tncb_strings;
    s->items.assign(set.begin(), set.end());  // sorted by construction
    *out = s;
  });
}

size_t tncb_strings_count(const tncb_strings* s) {
  return s ? s->items.size() : 0;
}

const char* tncb_strings_get(const tncb_strings* s, size_t i) {
  return s && i < s->items.size() ? s->items[i].c_str() : nullptr;
}

void tncb_strings_free(tncb_strings* s) { delete s; }

/* -- checking -- */

tncb_status tncb_check(const tncb_grammar* g, const tncb_bag* const* bags,
                       size_t nbags, size_t trials, uint64_t seed,
                       size_t oracle_limit, tncb_report** out) {
  if (!g || (!bags && nbags > 0) || !out) return TNCB_E_INVALID;
  return guarded([&] {
    std::vector<tncb::Bag> plain;
    for (size_t i = 0; i < nbags; ++i) plain.push_back(*bags[i]->b);
    auto* rep = new tncb_report;
    rep->r = tncb::check_precedence_monotonicity(g->g, plain, oracle_limit);
    tncb::Report dom =
        tncb::check_dominance_monotonicity(g->g, plain, trials, seed);
    rep->r.violations.insert(rep->r.violations.end(), dom.violations.begin(),
                             dom.violations.end());
    rep->text = rep->r.text();
    *out = rep;
  });
}

size_t tncb_report_violation_count(const tncb_report* r) {
  return r ? r->r.violations.size() : 0;
}

tncb_status tncb_report_text(const tncb_report* r, char** out) {
  if (!r || !out) return TNCB_E_INVALID;
  *out = dup_string(r->text);
  return TNCB_OK;
}

void tncb_report_free(tncb_report* r) { delete r; }

/* -- benchmark -- */

tncb_status tncb_bench_run(int bench_template, const size_t* sizes,
                           size_t nsizes, size_t reps, uint64_t seed,
                           size_t oracle_limit, tncb_bench** out) {
  if (!sizes || nsizes == 0 || !out) return TNCB_E_INVALID;
  return guarded([&] {
    auto templ = bench_template == TNCB_BENCH_CLAUSE_CHAIN
                     ? tncb::BenchTemplate::ClauseChain
                     : tncb::BenchTemplate::NpAdjuncts;
    std::vector<size_t> szs(sizes, sizes + nsizes);
    *out = new tncb_bench{
        tncb::run_bench(templ, szs, reps, seed, oracle_limit)};
  });
}

size_t tncb_bench_row_count(const tncb_bench* b) {
  return b ? b->r.rows.size() : 0;
}

tncb_status tncb_bench_row(const tncb_bench* b, size_t i, size_t* n,
                           size_t* rewrites, uint64_t* combine_calls,
                           uint64_t* wall_ns, int* method) {
  if (!b || i >= b->r.rows.size()) return TNCB_E_INVALID;
  const tncb::BenchRow& row = b->r.rows[i];
  if (n) *n = row.n;
  if (rewrites) *rewrites = row.rewrites;
  if (combine_calls) *combine_calls = row.combine_calls;
  if (wall_ns) *wall_ns = row.wall_ns;
  if (method)
    *method = row.method == tncb::BenchRow::Method::Greedy ? 0 : 1;
  return TNCB_OK;
}

double tncb_bench_exponent(const tncb_bench* b) {
  return b ? b->r.fitted_exponent : 0.0;
}

size_t tncb_bench_oracle_ratio_count(const tncb_bench* b) {
  return b ? b->r.oracle_ratios.size() : 0;
}

double tncb_bench_oracle_ratio(const tncb_bench* b, size_t i) {
  return b && i < b->r.oracle_ratios.size() ? b->r.oracle_ratios[i] : 0.0;
}

void tncb_bench_free(tncb_bench* b) { delete b; }

} /* extern "C" */
