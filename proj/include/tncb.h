/* C interface to the TNCB bag-generation library.
 *
 * Every object is an opaque handle created by a tncb_*_parse / tncb_*_run
 * function and released with the matching tncb_*_free. Functions returning
 * tncb_status set the thread-local message readable via tncb_last_error()
 * on anything other than TNCB_OK. Strings returned through `char **out`
 * are heap copies owned by the caller; release them with tncb_string_free.
 * Plain `const char *` accessors stay valid until their handle is freed.
 */

#ifndef TNCB_H
#define TNCB_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tncb_status {
  TNCB_OK = 0,
  TNCB_E_PARSE = 1,        /* malformed grammar/bag/bracketing/lexicon */
  TNCB_E_IO = 2,           /* file not readable */
  TNCB_E_PRECONDITION = 3, /* operation preconditions not met */
  TNCB_E_LIMIT = 4,        /* oracle size limit exceeded */
  TNCB_E_UNSUPPORTED = 5,  /* e.g. set-to-set lexicon entry */
  TNCB_E_TRANSFER = 6,     /* uncovered or ambiguous source sign */
  TNCB_E_PRECEDENCE = 7,   /* precedence monotonicity violated */
  TNCB_E_MONOTONICITY = 8, /* rewrite bound / progress violated */
  TNCB_E_INVALID = 9       /* null handle or bad argument */
} tncb_status;

typedef struct tncb_grammar tncb_grammar;
typedef struct tncb_bag tncb_bag;
typedef struct tncb_bracketing tncb_bracketing;
typedef struct tncb_lexicon tncb_lexicon;
typedef struct tncb_result tncb_result;
typedef struct tncb_strings tncb_strings;
typedef struct tncb_report tncb_report;
typedef struct tncb_bench tncb_bench;

/* Message describing the most recent failure on this thread. */
const char *tncb_last_error(void);
void tncb_string_free(char *s);

/* -- grammars -- */
tncb_status tncb_grammar_parse_text(const char *text, tncb_grammar **out);
tncb_status tncb_grammar_parse_file(const char *path, tncb_grammar **out);
size_t tncb_grammar_rule_count(const tncb_grammar *g);
void tncb_grammar_free(tncb_grammar *g);

/* -- bags -- */
tncb_status tncb_bag_parse_text(const char *json, tncb_bag **out);
tncb_status tncb_bag_parse_file(const char *path, tncb_bag **out);
size_t tncb_bag_size(const tncb_bag *b);
tncb_status tncb_bag_format_json(const tncb_bag *b, char **out);
void tncb_bag_free(tncb_bag *b);

/* -- bracketings -- */
tncb_status tncb_bracketing_parse_text(const char *text, tncb_bracketing **out);
tncb_status tncb_bracketing_parse_file(const char *path, tncb_bracketing **out);
tncb_status tncb_bracketing_format(const tncb_bracketing *b, char **out);
void tncb_bracketing_free(tncb_bracketing *b);

/* -- bilingual lexicons and transfer -- */
tncb_status tncb_lexicon_parse_text(const char *text, tncb_lexicon **out);
tncb_status tncb_lexicon_parse_file(const char *path, tncb_lexicon **out);
void tncb_lexicon_free(tncb_lexicon *l);

/* Maps a source bag + bracketing to the target bag + mirrored bracketing. */
tncb_status tncb_transfer(const tncb_lexicon *lexicon, const tncb_bag *source,
                          const tncb_bracketing *bracketing, tncb_bag **out_bag,
                          tncb_bracketing **out_bracketing);

/* -- generation -- */
typedef enum tncb_init_mode {
  TNCB_INIT_RIGHT = 0,  /* worst-case comb in bag order */
  TNCB_INIT_RANDOM = 1, /* uniform shape, seeded */
  TNCB_INIT_MIRROR = 2  /* mirror the supplied bracketing */
} tncb_init_mode;

typedef struct tncb_gen_options {
  int init_mode;                      /* tncb_init_mode */
  uint64_t seed;                      /* TNCB_INIT_RANDOM */
  const tncb_bracketing *bracketing;  /* TNCB_INIT_MIRROR */
  int unbounded;                      /* lift the n-1 rewrite bound */
  int first_rule_wins;                /* downgrade precedence violations */
} tncb_gen_options;

tncb_status tncb_generate(const tncb_grammar *g, const tncb_bag *b,
                          const tncb_gen_options *opts, tncb_result **out);

int tncb_result_success(const tncb_result *r);
const char *tncb_result_orth(const tncb_result *r); /* NULL unless success */
size_t tncb_result_fragment_count(const tncb_result *r);
const char *tncb_result_fragment(const tncb_result *r, size_t i);
size_t tncb_result_rewrites(const tncb_result *r);
uint64_t tncb_result_eval_calls(const tncb_result *r);
uint64_t tncb_result_search_calls(const tncb_result *r);
tncb_status tncb_result_trace_json(const tncb_result *r, char **out);
void tncb_result_free(tncb_result *r);

/* -- oracle -- */
tncb_status tncb_oracle_realizations(const tncb_grammar *g, const tncb_bag *b,
                                     size_t limit, tncb_strings **out);
size_t tncb_strings_count(const tncb_strings *s);
const char *tncb_strings_get(const tncb_strings *s, size_t i);
void tncb_strings_free(tncb_strings *s);

/* -- monotonicity checking -- */
tncb_status tncb_check(const tncb_grammar *g, const tncb_bag *const *bags,
                       size_t nbags, size_t trials, uint64_t seed,
                       size_t oracle_limit, tncb_report **out);
size_t tncb_report_violation_count(const tncb_report *r);
tncb_status tncb_report_text(const tncb_report *r, char **out);
void tncb_report_free(tncb_report *r);

/* -- benchmark -- */
typedef enum tncb_bench_template {
  TNCB_BENCH_NP_ADJUNCTS = 0,
  TNCB_BENCH_CLAUSE_CHAIN = 1
} tncb_bench_template;

tncb_status tncb_bench_run(int bench_template, const size_t *sizes,
                           size_t nsizes, size_t reps, uint64_t seed,
                           size_t oracle_limit, tncb_bench **out);
size_t tncb_bench_row_count(const tncb_bench *b);
/* method: 0 greedy, 1 oracle */
tncb_status tncb_bench_row(const tncb_bench *b, size_t i, size_t *n,
                           size_t *rewrites, uint64_t *combine_calls,
                           uint64_t *wall_ns, int *method);
double tncb_bench_exponent(const tncb_bench *b);
size_t tncb_bench_oracle_ratio_count(const tncb_bench *b);
double tncb_bench_oracle_ratio(const tncb_bench *b, size_t i);
void tncb_bench_free(tncb_bench *b);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* TNCB_H */
