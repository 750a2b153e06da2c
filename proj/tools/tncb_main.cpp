// Command-line front end for the TNCB bag-generation library. Talks to the
// shared library exclusively through the C interface in tncb.h.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tncb.h"

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitLinguisticFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitAssumptionViolation = 3;

int exit_code_for(tncb_status status) {
  switch (status) {
    case TNCB_OK:
      return kExitSuccess;
    case TNCB_E_PRECEDENCE:
    case TNCB_E_MONOTONICITY:
      return kExitAssumptionViolation;
    default:
      return kExitInputError;
  }
}

int fail(tncb_status status) {
  std::cerr << "error: " << tncb_last_error() << "\n";
  return exit_code_for(status);
}

struct StringDeleter {
  void operator()(char* s) const { tncb_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

// Bag file paths, one per line, ';' comments, relative to the manifest.
std::vector<std::string> read_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open manifest: " + path);
  std::filesystem::path dir = std::filesystem::path(path).parent_path();
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (auto sc = line.find(';'); sc != std::string::npos) line.erase(sc);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back())))
      line.pop_back();
    std::size_t start = 0;
    while (start < line.size() &&
           std::isspace(static_cast<unsigned char>(line[start])))
      ++start;
    line = line.substr(start);
    if (line.empty()) continue;
    std::filesystem::path p(line);
    out.push_back(p.is_absolute() ? p.string() : (dir / p).string());
  }
  return out;
}

std::vector<std::size_t> parse_sizes(const std::string& spec) {
  std::vector<std::size_t> sizes;
  if (auto dots = spec.find(".."); dots != std::string::npos) {
    std::size_t lo = std::stoul(spec.substr(0, dots));
    std::size_t hi = std::stoul(spec.substr(dots + 2));
    for (std::size_t n = lo; n <= hi; ++n) sizes.push_back(n);
    return sizes;
  }
  std::size_t pos = 0;
  while (pos < spec.size()) {
    auto comma = spec.find(',', pos);
    if (comma == std::string::npos) comma = spec.size();
    sizes.push_back(std::stoul(spec.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return sizes;
}

struct GenerateArgs {
  std::string grammar, bag, bracketing, lexicon, init = "right", trace_path;
  std::uint64_t seed = 0;
  bool unbounded = false;
  bool first_rule_wins = false;
};

int run_generate(const GenerateArgs& args) {
  tncb_grammar* grammar = nullptr;
  tncb_status st = tncb_grammar_parse_file(args.grammar.c_str(), &grammar);
  if (st != TNCB_OK) return fail(st);

  tncb_bag* bag = nullptr;
  st = tncb_bag_parse_file(args.bag.c_str(), &bag);
  if (st != TNCB_OK) {
    tncb_grammar_free(grammar);
    return fail(st);
  }

  tncb_bracketing* bracketing = nullptr;
  if (!args.bracketing.empty()) {
    st = tncb_bracketing_parse_file(args.bracketing.c_str(), &bracketing);
    if (st != TNCB_OK) {
      tncb_bag_free(bag);
      tncb_grammar_free(grammar);
      return fail(st);
    }
  }

  // With a lexicon the bag/bracketing are source-language inputs; run the
  // transfer phase first and generate from its output.
  if (!args.lexicon.empty()) {
    tncb_lexicon* lexicon = nullptr;
    st = tncb_lexicon_parse_file(args.lexicon.c_str(), &lexicon);
    if (st == TNCB_OK) {
      if (!bracketing) {
        std::cerr << "error: --lexicon needs --bracketing (the source parse)\n";
        tncb_lexicon_free(lexicon);
        tncb_bag_free(bag);
        tncb_grammar_free(grammar);
        return kExitInputError;
      }
      tncb_bag* target_bag = nullptr;
      tncb_bracketing* target_br = nullptr;
      st = tncb_transfer(lexicon, bag, bracketing, &target_bag, &target_br);
      tncb_lexicon_free(lexicon);
      if (st == TNCB_OK) {
        tncb_bag_free(bag);
        tncb_bracketing_free(bracketing);
        bag = target_bag;
        bracketing = target_br;
      }
    }
    if (st != TNCB_OK) {
      if (bracketing) tncb_bracketing_free(bracketing);
      tncb_bag_free(bag);
      tncb_grammar_free(grammar);
      return fail(st);
    }
  }

  tncb_gen_options opts{};
  opts.init_mode = args.init == "random"   ? TNCB_INIT_RANDOM
                   : args.init == "mirror" ? TNCB_INIT_MIRROR
                                           : TNCB_INIT_RIGHT;
  opts.seed = args.seed;
  opts.bracketing = bracketing;
  opts.unbounded = args.unbounded ? 1 : 0;
  opts.first_rule_wins = args.first_rule_wins ? 1 : 0;

  tncb_result* result = nullptr;
  st = tncb_generate(grammar, bag, &opts, &result);
  int code;
  if (st != TNCB_OK) {
    code = fail(st);
  } else {
    if (!args.trace_path.empty()) {
      char* trace = nullptr;
      if (tncb_result_trace_json(result, &trace) == TNCB_OK) {
        std::ofstream out(args.trace_path);
        out << trace;
        tncb_string_free(trace);
      }
    }
    if (tncb_result_success(result)) {
      std::cout << tncb_result_orth(result) << "\n";
      code = kExitSuccess;
    } else {
      std::cerr << "no grammatical ordering found; "
                << tncb_result_fragment_count(result) << " fragment(s):\n";
      for (std::size_t i = 0; i < tncb_result_fragment_count(result); ++i)
        std::cout << tncb_result_fragment(result, i) << "\n";
      code = kExitLinguisticFailure;
    }
    tncb_result_free(result);
  }

  if (bracketing) tncb_bracketing_free(bracketing);
  tncb_bag_free(bag);
  tncb_grammar_free(grammar);
  return code;
}

int run_oracle(const std::string& grammar_path, const std::string& bag_path,
               std::size_t limit) {
  tncb_grammar* grammar = nullptr;
  tncb_status st = tncb_grammar_parse_file(grammar_path.c_str(), &grammar);
  if (st != TNCB_OK) return fail(st);
  tncb_bag* bag = nullptr;
  st = tncb_bag_parse_file(bag_path.c_str(), &bag);
  if (st != TNCB_OK) {
    tncb_grammar_free(grammar);
    return fail(st);
  }
  tncb_strings* strings = nullptr;
  st = tncb_oracle_realizations(grammar, bag, limit, &strings);
  int code;
  if (st != TNCB_OK) {
    code = fail(st);
  } else {
    for (std::size_t i = 0; i < tncb_strings_count(strings); ++i)
      std::cout << tncb_strings_get(strings, i) << "\n";
    std::cerr << tncb_strings_count(strings) << " realization(s)\n";
    tncb_strings_free(strings);
    code = kExitSuccess;
  }
  tncb_bag_free(bag);
  tncb_grammar_free(grammar);
  return code;
}

int run_check(const std::string& grammar_path, const std::string& manifest,
              std::size_t trials, std::uint64_t seed,
              std::size_t oracle_limit) {
  tncb_grammar* grammar = nullptr;
  tncb_status st = tncb_grammar_parse_file(grammar_path.c_str(), &grammar);
  if (st != TNCB_OK) return fail(st);

  std::vector<std::string> paths;
  try {
    paths = read_manifest(manifest);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    tncb_grammar_free(grammar);
    return kExitInputError;
  }

  std::vector<tncb_bag*> bags;
  for (const std::string& p : paths) {
    tncb_bag* bag = nullptr;
    st = tncb_bag_parse_file(p.c_str(), &bag);
    if (st != TNCB_OK) {
      for (tncb_bag* b : bags) tncb_bag_free(b);
      tncb_grammar_free(grammar);
      return fail(st);
    }
    bags.push_back(bag);
  }

  tncb_report* report = nullptr;
  st = tncb_check(grammar,
                  bags.empty() ? nullptr
                               : const_cast<const tncb_bag* const*>(bags.data()),
                  bags.size(), trials, seed, oracle_limit, &report);
  int code;
  if (st != TNCB_OK) {
    code = fail(st);
  } else {
    char* text = nullptr;
    tncb_report_text(report, &text);
    std::cout << text;
    tncb_string_free(text);
    code = tncb_report_violation_count(report) == 0 ? kExitSuccess
                                                    : kExitLinguisticFailure;
    tncb_report_free(report);
  }
  for (tncb_bag* b : bags) tncb_bag_free(b);
  tncb_grammar_free(grammar);
  return code;
}

int run_bench(const std::string& template_name, const std::string& sizes_spec,
              std::size_t reps, std::uint64_t seed, std::size_t oracle_limit,
              const std::string& emit) {
  std::vector<std::size_t> sizes;
  try {
    sizes = parse_sizes(sizes_spec);
  } catch (const std::exception&) {
    std::cerr << "error: bad --sizes '" << sizes_spec << "'\n";
    return kExitInputError;
  }
  int templ = template_name == "clause_chain" ? TNCB_BENCH_CLAUSE_CHAIN
                                              : TNCB_BENCH_NP_ADJUNCTS;
  tncb_bench* bench = nullptr;
  tncb_status st = tncb_bench_run(templ, sizes.data(), sizes.size(), reps,
                                  seed, oracle_limit, &bench);
  if (st != TNCB_OK) return fail(st);

  const bool csv = emit == "csv";
  if (csv)
    std::cout << "n,rewrites,combine_calls,wall_ns,method\n";
  else
    std::printf("%6s %9s %14s %14s  %s\n", "n", "rewrites", "combine_calls",
                "wall_ns", "method");
  for (std::size_t i = 0; i < tncb_bench_row_count(bench); ++i) {
    std::size_t n = 0, rewrites = 0;
    std::uint64_t calls = 0, wall = 0;
    int method = 0;
    tncb_bench_row(bench, i, &n, &rewrites, &calls, &wall, &method);
    const char* name = method == 0 ? "greedy" : "oracle";
    if (csv)
      std::printf("%zu,%zu,%llu,%llu,%s\n", n, rewrites,
                  static_cast<unsigned long long>(calls),
                  static_cast<unsigned long long>(wall), name);
    else
      std::printf("%6zu %9zu %14llu %14llu  %s\n", n, rewrites,
                  static_cast<unsigned long long>(calls),
                  static_cast<unsigned long long>(wall), name);
  }
  std::printf("# fitted log-log exponent (greedy combine calls): %.3f\n",
              tncb_bench_exponent(bench));
  if (tncb_bench_oracle_ratio_count(bench) > 0) {
    std::printf("# oracle growth ratios:");
    for (std::size_t i = 0; i < tncb_bench_oracle_ratio_count(bench); ++i)
      std::printf(" %.2f", tncb_bench_oracle_ratio(bench, i));
    std::printf("\n");
  }
  tncb_bench_free(bench);
  return kExitSuccess;
}

int run_transfer(const std::string& lexicon_path, const std::string& bag_path,
                 const std::string& bracketing_path,
                 const std::string& out_bag_path,
                 const std::string& out_bracketing_path) {
  tncb_lexicon* lexicon = nullptr;
  tncb_status st = tncb_lexicon_parse_file(lexicon_path.c_str(), &lexicon);
  if (st != TNCB_OK) return fail(st);
  tncb_bag* bag = nullptr;
  st = tncb_bag_parse_file(bag_path.c_str(), &bag);
  if (st != TNCB_OK) {
    tncb_lexicon_free(lexicon);
    return fail(st);
  }
  tncb_bracketing* bracketing = nullptr;
  st = tncb_bracketing_parse_file(bracketing_path.c_str(), &bracketing);
  if (st != TNCB_OK) {
    tncb_bag_free(bag);
    tncb_lexicon_free(lexicon);
    return fail(st);
  }

  tncb_bag* out_bag = nullptr;
  tncb_bracketing* out_br = nullptr;
  st = tncb_transfer(lexicon, bag, bracketing, &out_bag, &out_br);
  int code;
  if (st != TNCB_OK) {
    code = fail(st);
  } else {
    CString bag_json, br_text;
    char* raw = nullptr;
    tncb_bag_format_json(out_bag, &raw);
    bag_json.reset(raw);
    raw = nullptr;
    tncb_bracketing_format(out_br, &raw);
    br_text.reset(raw);
    std::ofstream bag_out(out_bag_path);
    bag_out << bag_json.get();
    std::ofstream br_out(out_bracketing_path);
    br_out << br_text.get();
    if (!bag_out || !br_out) {
      std::cerr << "error: cannot write output files\n";
      code = kExitInputError;
    } else {
      code = kExitSuccess;
    }
    tncb_bag_free(out_bag);
    tncb_bracketing_free(out_br);
  }
  tncb_bracketing_free(bracketing);
  tncb_bag_free(bag);
  tncb_lexicon_free(lexicon);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"TNCB bag generation for lexicalist machine translation"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* cmd_gen = app.add_subcommand(
      "generate", "Order a bag of signs into a grammatical string");
  cmd_gen->add_option("--grammar", gen.grammar, "grammar file")->required();
  cmd_gen->add_option("--bag", gen.bag, "bag file (JSON)")->required();
  cmd_gen->add_option("--bracketing", gen.bracketing,
                      "bracketing file (mirror init / transfer source)");
  cmd_gen->add_option("--lexicon", gen.lexicon,
                      "bilingual lexicon; bag/bracketing become source-side");
  cmd_gen->add_option("--init", gen.init, "right|random|mirror")
      ->check(CLI::IsMember({"right", "random", "mirror"}));
  cmd_gen->add_option("--seed", gen.seed, "seed for --init random");
  cmd_gen->add_option("--trace", gen.trace_path, "write the move trace (JSON)");
  cmd_gen->add_flag("--unbounded", gen.unbounded, "lift the n-1 rewrite bound");
  cmd_gen->add_flag("--first-rule-wins", gen.first_rule_wins,
                    "downgrade precedence violations to a warning");

  std::string oracle_grammar, oracle_bag;
  std::size_t oracle_limit = 10;
  auto* cmd_oracle = app.add_subcommand(
      "oracle", "List every realization of a small bag (exhaustive chart)");
  cmd_oracle->add_option("--grammar", oracle_grammar, "grammar file")
      ->required();
  cmd_oracle->add_option("--bag", oracle_bag, "bag file (JSON)")->required();
  cmd_oracle->add_option("--limit", oracle_limit, "bag size limit");

  std::string check_grammar, check_manifest;
  std::size_t check_trials = 100;
  std::uint64_t check_seed = 1;
  std::size_t check_oracle_limit = 10;
  auto* cmd_check = app.add_subcommand(
      "check", "Audit precedence/dominance monotonicity over a bag manifest");
  cmd_check->add_option("--grammar", check_grammar, "grammar file")->required();
  cmd_check->add_option("--manifest", check_manifest,
                        "file listing bag paths, one per line")
      ->required();
  cmd_check->add_option("--trials", check_trials,
                        "random generation runs per bag");
  cmd_check->add_option("--seed", check_seed, "base seed for the trials");
  cmd_check->add_option("--oracle-limit", check_oracle_limit,
                        "bag size limit for the chart");

  std::string bench_template = "np_adjuncts", bench_sizes = "4..16",
              bench_emit = "table";
  std::size_t bench_reps = 3, bench_oracle_limit = 7;
  std::uint64_t bench_seed = 1;
  auto* cmd_bench = app.add_subcommand(
      "bench", "Measure combine-call growth: greedy vs exhaustive search");
  cmd_bench->add_option("--template", bench_template, "np_adjuncts|clause_chain")
      ->check(CLI::IsMember({"np_adjuncts", "clause_chain"}));
  cmd_bench->add_option("--sizes", bench_sizes, "e.g. 4..16 or 4,8,12");
  cmd_bench->add_option("--reps", bench_reps, "timing repetitions per row");
  cmd_bench->add_option("--seed", bench_seed, "seed (interface parity)");
  cmd_bench->add_option("--oracle-limit", bench_oracle_limit,
                        "largest exhaustive-search size");
  cmd_bench->add_option("--emit", bench_emit, "table|csv")
      ->check(CLI::IsMember({"table", "csv"}));

  std::string xfer_lexicon, xfer_bag, xfer_bracketing, xfer_out_bag,
      xfer_out_bracketing;
  auto* cmd_xfer = app.add_subcommand(
      "transfer", "Map a source bag + bracketing through a bilingual lexicon");
  cmd_xfer->add_option("--lexicon", xfer_lexicon, "bilingual lexicon file")
      ->required();
  cmd_xfer->add_option("--bag", xfer_bag, "source bag (JSON)")->required();
  cmd_xfer->add_option("--bracketing", xfer_bracketing, "source bracketing")
      ->required();
  cmd_xfer->add_option("--out-bag", xfer_out_bag, "target bag path")
      ->required();
  cmd_xfer
      ->add_option("--out-bracketing", xfer_out_bracketing,
                   "mirrored bracketing path")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInputError;
  }

  if (cmd_gen->parsed()) return run_generate(gen);
  if (cmd_oracle->parsed())
    return run_oracle(oracle_grammar, oracle_bag, oracle_limit);
  if (cmd_check->parsed())
    return run_check(check_grammar, check_manifest, check_trials, check_seed,
                     check_oracle_limit);
  if (cmd_bench->parsed())
    return run_bench(bench_template, bench_sizes, bench_reps, bench_seed,
                     bench_oracle_limit, bench_emit);
  if (cmd_xfer->parsed())
    return run_transfer(xfer_lexicon, xfer_bag, xfer_bracketing, xfer_out_bag,
                        xfer_out_bracketing);
  return kExitInputError;
}
