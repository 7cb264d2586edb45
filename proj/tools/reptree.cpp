// reptree: command-line front end.
//
// Exit status: 0 property holds / found, 1 violation / unavoidable,
// 2 inconclusive, 3 usage error, 4 input or I/O error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "reptree/constructions.hpp"
#include "reptree/io.hpp"
#include "reptree/search.hpp"
#include "reptree/table1.hpp"
#include "reptree/word_gen.hpp"

using namespace reptree;

namespace {

constexpr int kHolds = 0;
constexpr int kViolated = 1;
constexpr int kInconclusive = 2;
constexpr int kUsage = 3;
constexpr int kInputError = 4;

std::string invocation;

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
}

Word read_word(const std::string& inline_word, std::optional<std::uint32_t> k) {
  if (!inline_word.empty()) return parse_word(inline_word, k);
  std::string line;
  std::getline(std::cin, line);
  return parse_word(line, k);
}

nlohmann::json run_header() {
  return {{"tool", "reptree"}, {"version", kToolVersion}, {"invocation", invocation}};
}

struct ColorFlags {
  std::string out;
  std::string dot;
  std::string check;
  std::optional<std::size_t> max_len;
  unsigned threads = 1;
};

void add_color_flags(CLI::App* cmd, ColorFlags& f) {
  cmd->add_option("--out", f.out, "write graph JSON here (default: stdout)");
  cmd->add_option("--dot", f.dot, "also write a Graphviz DOT file");
  cmd->add_option("--check", f.check, "verify the coloring against A/B[+]");
  cmd->add_option("--max-len", f.max_len, "longest factor considered by --check");
  cmd->add_option("--threads", f.threads, "worker threads for --check")->check(CLI::PositiveNumber);
}

int emit_coloring(const ColoredGraph& g, const ColorFlags& f) {
  if (!f.dot.empty()) write_text(f.dot, to_dot(g));
  if (f.check.empty() || !f.out.empty()) write_text(f.out, graph_to_json(g).dump(1) + "\n");
  if (f.check.empty()) return kHolds;

  const auto spec = parse_spec(f.check);
  const auto w = check_colored(g, spec, f.max_len, f.threads);
  auto j = run_header();
  j["spec"] = spec.str();
  j["vertices"] = g.size();
  j["max_factor_length"] = f.max_len ? nlohmann::json(*f.max_len) : nlohmann::json(nullptr);
  j["free"] = !w;
  if (w) j["witness"] = witness_to_json(*w);
  std::cerr << j.dump() << "\n";
  return w ? kViolated : kHolds;
}

struct SearchFlags {
  std::string family;
  std::size_t pendants = 1;
  std::uint32_t k = 0;
  std::string exp;
  std::size_t n = 0;
  std::optional<std::size_t> n_max;
  std::uint64_t budget = kDefaultSearchBudget;
  std::optional<std::size_t> max_len;
  unsigned threads = 1;
  bool no_symmetry = false;
  bool progress = false;
  std::optional<std::uint64_t> seed;
  std::uint64_t restart_nodes = 1'000'000;
  std::string out;
};

void add_search_flags(CLI::App* cmd, SearchFlags& f) {
  cmd->add_option("--family", f.family, "cp3-full | cp-spec | cubic-ball | binary-tree")
      ->required()
      ->check(CLI::IsMember({"cp3-full", "cp-spec", "cubic-ball", "binary-tree"}));
  cmd->add_option("--pendants", f.pendants, "pendants per backbone vertex for cp-spec");
  cmd->add_option("--k", f.k, "number of colors")->required()->check(CLI::PositiveNumber);
  cmd->add_option("--exp", f.exp, "exponent A/B (alpha-free) or A/B+ (alpha+-free)")->required();
  cmd->add_option("--n", f.n, "instance size (backbone length, radius or depth)")->required();
  cmd->add_option("--budget", f.budget, "node budget per instance");
  cmd->add_option("--max-len", f.max_len, "factor length bound used for pruning");
  cmd->add_option("--threads", f.threads, "worker threads")->check(CLI::PositiveNumber);
  cmd->add_flag("--no-symmetry", f.no_symmetry, "disable canonical color restriction");
  cmd->add_flag("--progress", f.progress, "report node counts on stderr");
  cmd->add_option("--out", f.out, "write the JSON outcome here (default: stdout)");
}

SearchOptions search_options(const SearchFlags& f) {
  SearchOptions o;
  o.symmetry_breaking = !f.no_symmetry;
  o.threads = f.threads;
  if (f.progress) {
    o.progress = [](std::uint64_t nodes) { std::cerr << "  " << nodes << " nodes\n"; };
  }
  return o;
}

SearchProblem make_problem(const SearchFlags& f, std::size_t n) {
  const auto structure = family_by_name(f.family, f.pendants).make(n);
  const auto spec = parse_spec(f.exp);
  return {structure, f.k, spec, {}, f.budget,
          f.max_len ? f.max_len : default_max_factor_length(structure, spec)};
}

int exit_for(Verdict v) {
  switch (v) {
    case Verdict::Colorable:
      return kHolds;
    case Verdict::Unavoidable:
      return kViolated;
    case Verdict::Inconclusive:
      break;
  }
  return kInconclusive;
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 0; i < argc; ++i) invocation += (i ? " " : "") + std::string(argv[i]);

  CLI::App app{"Repetition-threshold colorings of caterpillars and trees"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);
  int status = kHolds;

  // word gen / word check
  auto* word = app.add_subcommand("word", "generate or check words")->require_subcommand(1);
  struct {
    std::uint32_t k = 2;
    std::size_t len = 0;
    std::string exp;
    std::uint64_t budget = kDefaultGenBudget;
    unsigned threads = 1;
    std::optional<std::uint64_t> seed;
    std::uint64_t restart_nodes = 1'000'000;
  } gen;
  auto* word_gen = word->add_subcommand("gen", "backtrack an A/B[+]-free word");
  word_gen->add_option("--k", gen.k, "alphabet size")->required()->check(CLI::Range(2u, 1000u));
  word_gen->add_option("--len", gen.len, "word length")->required()->check(CLI::PositiveNumber);
  word_gen->add_option("--exp", gen.exp, "exponent spec; defaults to the Dejean threshold+");
  word_gen->add_option("--budget", gen.budget, "node budget");
  word_gen->add_option("--threads", gen.threads, "split on the first letter")
      ->check(CLI::PositiveNumber);
  word_gen->add_option("--seed", gen.seed, "randomized letter order with restarts");
  word_gen->add_option("--restart-nodes", gen.restart_nodes, "nodes per restart with --seed");
  word_gen->callback([&] {
    const auto spec = gen.exp.empty() ? FreenessSpec(dejean_threshold(gen.k), true)
                                      : parse_spec(gen.exp);
    GenOptions opts;
    opts.threads = gen.threads;
    opts.seed = gen.seed;
    opts.restart_nodes = gen.restart_nodes;
    const auto r = backtrack_word({gen.k, gen.len, spec, gen.budget}, opts);
    switch (r.status) {
      case GenStatus::Found:
        std::cout << format_word(*r.word) << "\n";
        status = kHolds;
        break;
      case GenStatus::Impossible:
        std::cerr << "no " << spec.str() << "-free word of length " << gen.len << " over "
                  << gen.k << " letters (" << r.nodes << " nodes)\n";
        status = kViolated;
        break;
      case GenStatus::BudgetExhausted:
        std::cerr << "node budget exhausted after " << r.nodes << " nodes\n";
        status = kInconclusive;
        break;
    }
  });

  struct {
    std::string exp;
    std::string word;
    std::optional<std::uint32_t> k;
  } wcheck;
  auto* word_check = word->add_subcommand("check", "max exponent and freeness of a word");
  word_check->add_option("--exp", wcheck.exp, "exponent spec A/B[+]");
  word_check->add_option("--word", wcheck.word, "the word; read from stdin if omitted");
  word_check->add_option("--k", wcheck.k, "alphabet size");
  word_check->callback([&] {
    const auto w = read_word(wcheck.word, wcheck.k);
    auto j = run_header();
    j["length"] = w.size();
    if (!w.empty()) j["max_exponent"] = witness_to_json(max_exponent(w));
    if (!wcheck.exp.empty()) {
      const auto spec = parse_spec(wcheck.exp);
      const auto bad = violates(w, spec);
      j["spec"] = spec.str();
      j["free"] = !bad;
      if (bad) j["witness"] = witness_to_json(*bad);
      status = bad ? kViolated : kHolds;
    }
    std::cout << j.dump() << "\n";
  });

  // code pansiot
  auto* code = app.add_subcommand("code", "word codes")->require_subcommand(1);
  std::string pansiot_word;
  auto* pansiot = code->add_subcommand("pansiot", "Pansiot code of a 5-letter word");
  pansiot->add_option("--word", pansiot_word, "the word; read from stdin if omitted");
  pansiot->callback([&] {
    const auto bits = pansiot_code(read_word(pansiot_word, 5));
    std::string line;
    for (std::size_t i = 0; i < bits.size(); ++i) line += (i ? " " : "") + std::to_string(bits[i]);
    std::cout << line << "\n";
  });

  // color families
  auto* color = app.add_subcommand("color", "explicit colorings")->require_subcommand(1);
  ColorFlags cflags;
  struct {
    std::size_t n = 64;
    std::size_t pendants = 1;
    std::size_t blocks = 4;
    bool dump_tables = false;
    std::uint32_t k = 7;
    std::size_t t = 4;
    std::size_t depth = 6;
  } cf;
  auto* cp2 = color->add_subcommand("cp2", "2 colors, 3+-free caterpillar");
  cp2->add_option("--n", cf.n, "backbone length")->check(CLI::PositiveNumber);
  cp2->add_option("--pendants", cf.pendants, "pendants per backbone vertex");
  add_color_flags(cp2, cflags);
  cp2->callback([&] {
    status = emit_coloring(color_cp2(CaterpillarSpec::uniform(cf.n, cf.pendants, cf.pendants <= 1)),
                           cflags);
  });
  auto* cp3 = color->add_subcommand("cp3", "3 colors, 2+-free caterpillar");
  cp3->add_option("--n", cf.n, "backbone length")->check(CLI::PositiveNumber);
  cp3->add_option("--pendants", cf.pendants, "pendants per backbone vertex");
  add_color_flags(cp3, cflags);
  cp3->callback([&] {
    status = emit_coloring(
        color_cp3_ternary(CaterpillarSpec::uniform(cf.n, cf.pendants, cf.pendants <= 1)), cflags);
  });
  auto* cp35 = color->add_subcommand("cp35", "5 colors, 4/3+-free caterpillar");
  cp35->add_option("--blocks", cf.blocks, "number of 18-vertex blocks")->check(CLI::PositiveNumber);
  cp35->add_flag("--dump-tables", cf.dump_tables, "print the offset tables and exit");
  add_color_flags(cp35, cflags);
  cp35->callback([&] {
    if (cf.dump_tables) {
      std::cout << PansiotOffsets::dump();
      return;
    }
    status = emit_coloring(color_cp3_5letters(cf.blocks), cflags);
  });
  auto* cpk = color->add_subcommand("cpk", "k >= 5 colors, (1+1/ceil(k/2))+-free caterpillar");
  cpk->add_option("--k", cf.k, "number of colors")->check(CLI::Range(5u, 1000u));
  cpk->add_option("--n", cf.n, "backbone length")->check(CLI::PositiveNumber);
  add_color_flags(cpk, cflags);
  cpk->callback([&] { status = emit_coloring(color_cp3_k(cf.k, cf.n), cflags); });
  auto* tree3 = color->add_subcommand("tree3", "(gamma,lambda) coloring of the binary tree");
  tree3->add_option("--t", cf.t, "target exponent 1+1/t")->check(CLI::Range(4u, 64u));
  tree3->add_option("--depth", cf.depth, "truncation depth")->check(CLI::Range(1u, 24u));
  add_color_flags(tree3, cflags);
  tree3->callback([&] { status = emit_coloring(color_tree3({cf.t, cf.depth}), cflags); });

  // check
  struct {
    std::string graph;
    std::string exp;
    std::optional<std::size_t> max_len;
    unsigned threads = 1;
  } chk;
  auto* check = app.add_subcommand("check", "check a colored tree for forbidden factors");
  check->add_option("--graph", chk.graph, "graph JSON file")->required();
  check->add_option("--exp", chk.exp, "exponent spec A/B[+]")->required();
  check->add_option("--max-len", chk.max_len, "longest factor considered");
  check->add_option("--threads", chk.threads, "worker threads")->check(CLI::PositiveNumber);
  check->callback([&] {
    const auto g = parse_graph(read_text(chk.graph));
    const auto spec = parse_spec(chk.exp);
    const auto w = check_colored(g, spec, chk.max_len, chk.threads);
    if (w) {
      std::cout << witness_to_json(*w).dump() << "\n";
      status = kViolated;
    } else {
      std::cout << "free\n";
      status = kHolds;
    }
  });

  // search
  auto* search = app.add_subcommand("search", "exhaustive and existence searches")
                     ->require_subcommand(1);
  SearchFlags sf;
  auto* unavoidable = search->add_subcommand("unavoidable", "prove that no free coloring exists");
  add_search_flags(unavoidable, sf);
  unavoidable->add_option("--n-max", sf.n_max, "bracket mode: try n, n+1, ..., n-max");
  unavoidable->callback([&] {
    auto j = run_header();
    j["budget"] = sf.budget;
    if (sf.n_max) {
      const auto spec = parse_spec(sf.exp);
      const auto ev = rt_bracket(family_by_name(sf.family, sf.pendants), sf.k, spec, sf.n,
                                 *sf.n_max, sf.budget, search_options(sf), sf.max_len);
      j["bracket"] = evidence_to_json(ev);
      status = exit_for(ev.verdict);
    } else {
      const auto p = make_problem(sf, sf.n);
      const auto out = prove_unavoidable(p, search_options(sf));
      j["structure"] = describe(p.structure);
      j["max_factor_length"] =
          p.max_factor_length ? nlohmann::json(*p.max_factor_length) : nlohmann::json(nullptr);
      j["outcome"] = outcome_to_json(out);
      status = exit_for(out.verdict);
    }
    write_text(sf.out, j.dump(1) + "\n");
  });
  auto* exists = search->add_subcommand("exists", "look for a free coloring");
  add_search_flags(exists, sf);
  exists->add_option("--seed", sf.seed, "randomized color order with restarts");
  exists->add_option("--restart-nodes", sf.restart_nodes, "nodes per restart with --seed");
  exists->callback([&] {
    const auto p = make_problem(sf, sf.n);
    FindOptions opts;
    opts.search = search_options(sf);
    opts.seed = sf.seed;
    opts.restart_nodes = sf.restart_nodes;
    const auto out = find_coloring(p, opts);
    auto j = run_header();
    j["budget"] = sf.budget;
    j["seed"] = sf.seed ? nlohmann::json(*sf.seed) : nlohmann::json(nullptr);
    j["structure"] = describe(p.structure);
    j["outcome"] = outcome_to_json(out);
    write_text(sf.out, j.dump(1) + "\n");
    status = exit_for(out.verdict);
  });

  // table1
  struct {
    std::string profile = "quick";
    std::string json;
    unsigned threads = 1;
  } tf;
  auto* table1 = app.add_subcommand("table1", "reproduce the summary table of thresholds");
  table1->add_option("--profile", tf.profile, "quick or full")
      ->check(CLI::IsMember({"quick", "full"}));
  table1->add_option("--json", tf.json, "write the machine-readable report here");
  table1->add_option("--threads", tf.threads, "worker threads")->check(CLI::PositiveNumber);
  table1->callback([&] {
    const auto report = run_table1(tf.profile == "full" ? Table1Profile::Full : Table1Profile::Quick,
                                   tf.threads);
    std::cout << report_to_text(report);
    if (!tf.json.empty()) {
      auto j = report_to_json(report);
      j["invocation"] = invocation;
      write_text(tf.json, j.dump(1) + "\n");
    }
    status = report.ok() ? kHolds : kViolated;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const auto code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  } catch (const ParseError& e) {
    std::cerr << "reptree: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "reptree: " << e.what() << "\n";
    return kInputError;
  }
  return status;
}
