#include "reptree/table1.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "reptree/constructions.hpp"
#include "reptree/io.hpp"
#include "reptree/search.hpp"
#include "reptree/word_gen.hpp"

namespace reptree {

std::string to_string(CellStatus s) {
  switch (s) {
    case CellStatus::Reproduced:
      return "reproduced";
    case CellStatus::EvidenceOnly:
      return "evidence-only";
    case CellStatus::OutOfScope:
      break;
  }
  return "out-of-scope";
}

bool Table1Cell::ok() const {
  for (const auto& r : runs) {
    if (!r.passed) return false;
  }
  return true;
}

bool Table1Report::ok() const {
  for (const auto& c : cells) {
    if (!c.ok()) return false;
  }
  return true;
}

namespace {

constexpr const char* kExhaustive = "exhaustive";
constexpr const char* kDeskScale = "desk-scale evidence";

struct Settings {
  std::uint64_t budget;
  unsigned threads;
  std::size_t cp_backbone;    // color_cp2 / color_cp3_ternary
  std::size_t cp35_blocks;
  std::size_t cpk_backbone;   // odd-k caterpillars
  std::size_t tree_depth;     // bounded check depth for color_tree3
  std::size_t tree_full_depth;
  std::size_t search_backbone;
  std::size_t search_radius;
  std::size_t word_length;
};

FreenessSpec spec_of(const std::string& s) { return parse_spec(s); }

EvidenceRun timed(EvidenceRun run, const std::function<void(EvidenceRun&)>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(run);
  } catch (const std::exception& e) {
    run.passed = false;
    run.result = std::string("error: ") + e.what();
  }
  run.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return run;
}

class Runner {
 public:
  explicit Runner(const Settings& s) : s_(s) {}

  EvidenceRun bracket(const std::string& family, std::size_t pendants, std::uint32_t k,
                      const std::string& exp, std::size_t n_start, std::size_t n_max) const {
    EvidenceRun run;
    run.direction = "lower";
    run.label = kExhaustive;
    run.description = "no " + exp + "-free " + std::to_string(k) + "-coloring of " + family +
                      (family == "cp-spec" ? " with " + std::to_string(pendants) + " pendants" : "") +
                      " for some n in [" + std::to_string(n_start) + ", " + std::to_string(n_max) +
                      "]";
    run.command = "reptree search unavoidable --family " + family +
                  (family == "cp-spec" ? " --pendants " + std::to_string(pendants) : "") +
                  " --k " + std::to_string(k) + " --exp " + exp + " --n " +
                  std::to_string(n_start) + " --n-max " + std::to_string(n_max) + " --budget " +
                  std::to_string(s_.budget);
    return timed(run, [&](EvidenceRun& r) {
      SearchOptions opts;
      opts.threads = s_.threads;
      const auto ev = rt_bracket(family_by_name(family, pendants), k, spec_of(exp), n_start,
                                 n_max, s_.budget, opts);
      r.passed = ev.verdict == Verdict::Unavoidable;
      r.result = ev.n ? "unavoidable at n=" + std::to_string(*ev.n) + " after " +
                            std::to_string(ev.nodes) + " nodes"
                      : ev.detail;
    });
  }

  EvidenceRun construction(const std::string& description, const std::string& command,
                           const std::function<ColoredGraph()>& build, const std::string& exp,
                           std::optional<std::size_t> max_len = std::nullopt) const {
    EvidenceRun run{"upper", description, command, kDeskScale, false, "", 0.0};
    return timed(run, [&](EvidenceRun& r) {
      const auto g = build();
      const auto w = check_colored(g, spec_of(exp), max_len, s_.threads);
      r.passed = !w.has_value();
      r.result = w ? "factor of exponent " + w->exponent.str() + " at vertex " +
                         std::to_string(w->vertices.front())
                   : std::to_string(g.size()) + " vertices, " + std::to_string(g.colors_used()) +
                         " colors, " + exp + "-free" +
                         (max_len ? " for factors up to length " + std::to_string(*max_len) : "");
    });
  }

  EvidenceRun exists(const std::string& family, std::size_t pendants, std::size_t n,
                     std::uint32_t k, const std::string& exp) const {
    EvidenceRun run;
    run.direction = "upper";
    run.label = kDeskScale;
    const auto fam = family_by_name(family, pendants);
    const auto structure = fam.make(n);
    run.description = "search finds a " + exp + "-free " + std::to_string(k) + "-coloring of " +
                      describe(structure);
    run.command = "reptree search exists --family " + family +
                  (family == "cp-spec" ? " --pendants " + std::to_string(pendants) : "") +
                  " --k " + std::to_string(k) + " --exp " + exp + " --n " + std::to_string(n) +
                  " --budget " + std::to_string(s_.budget);
    return timed(run, [&](EvidenceRun& r) {
      SearchProblem p{structure, k, spec_of(exp), {}, s_.budget,
                      default_max_factor_length(structure, spec_of(exp))};
      const auto out = find_coloring(p);
      r.passed = out.verdict == Verdict::Colorable && !check_colored(*out.coloring, p.spec);
      r.result = to_string(out.verdict) + " after " + std::to_string(out.nodes_visited) + " nodes";
    });
  }

  // Smallest n with no RT(k)-free word of length n, by bisection on the
  // exhaustive word search.
  EvidenceRun path_lower(std::uint32_t k, std::size_t n_max) const {
    const auto spec = FreenessSpec(dejean_threshold(k), false);
    EvidenceRun run;
    run.direction = "lower";
    run.label = kExhaustive;
    run.description = "no " + spec.str() + "-free word over " + std::to_string(k) +
                      " letters beyond some length <= " + std::to_string(n_max);
    return timed(run, [&](EvidenceRun& r) {
      auto impossible = [&](std::size_t n) {
        const auto g = backtrack_word({k, n, spec, s_.budget});
        if (g.status == GenStatus::BudgetExhausted) throw Error("word search budget exhausted");
        return g.status == GenStatus::Impossible;
      };
      if (!impossible(n_max)) {
        r.result = spec.str() + "-free word of length " + std::to_string(n_max) + " exists";
        return;
      }
      std::size_t lo = 1;
      std::size_t hi = n_max;
      while (lo < hi) {
        const auto mid = (lo + hi) / 2;
        if (impossible(mid)) {
          hi = mid;
        } else {
          lo = mid + 1;
        }
      }
      r.passed = true;
      r.result = "longest " + spec.str() + "-free word has length " + std::to_string(lo - 1);
      r.command = "reptree word gen --k " + std::to_string(k) + " --len " + std::to_string(lo) +
                  " --exp " + spec.str();
    });
  }

  EvidenceRun path_upper(std::uint32_t k) const {
    const FreenessSpec spec(dejean_threshold(k), true);
    EvidenceRun run;
    run.direction = "upper";
    run.label = kDeskScale;
    run.description = spec.str() + "-free word of length " + std::to_string(s_.word_length) +
                      " over " + std::to_string(k) + " letters";
    run.command = "reptree word gen --k " + std::to_string(k) + " --len " +
                  std::to_string(s_.word_length) + " --exp " + spec.str();
    return timed(run, [&](EvidenceRun& r) {
      const auto w = dejean_word(k, s_.word_length, s_.budget);
      r.passed = !violates(w, spec);
      r.result = r.passed ? "checked " + spec.str() + "-free" : "violation";
    });
  }

  const Settings& settings() const { return s_; }

 private:
  const Settings& s_;
};

Table1Cell cell(std::string cls, std::string alphabet, std::string claimed, bool shaded,
                CellStatus status, std::string note = {}) {
  Table1Cell c;
  c.graph_class = std::move(cls);
  c.alphabet = std::move(alphabet);
  c.claimed = std::move(claimed);
  c.shaded = shaded;
  c.status = status;
  c.note = std::move(note);
  return c;
}

}  // namespace

Table1Report run_table1(Table1Profile profile, unsigned threads) {
  Settings s = profile == Table1Profile::Full
                   ? Settings{kDefaultSearchBudget, threads, 512, 64, 300, 10, 8, 50, 5, 1000}
                   : Settings{100'000'000, threads, 128, 16, 100, 8, 6, 20, 3, 200};
  const Runner run(s);
  Table1Report report;
  report.profile = profile == Table1Profile::Full ? "full" : "quick";
  report.node_budget = s.budget;
  auto& cells = report.cells;
  const auto N = [](std::size_t n) { return std::to_string(n); };
  const std::string ks = "k>=6";

  // Paths: prior work, checked on finite words.
  {
    const char* values[] = {"2", "7/4", "7/5", "5/4"};
    for (std::uint32_t k = 2; k <= 5; ++k) {
      auto c = cell("P", N(k), values[k - 2], false, CellStatus::EvidenceOnly,
                    "prior result; finite words checked");
      c.runs.push_back(run.path_lower(k, 200));
      c.runs.push_back(run.path_upper(k));
      cells.push_back(std::move(c));
    }
    auto c = cell("P", ks, "k/(k-1)", false, CellStatus::EvidenceOnly,
                  "prior result; instances k=6,7");
    for (std::uint32_t k : {6u, 7u}) {
      c.runs.push_back(run.path_lower(k, 200));
      c.runs.push_back(run.path_upper(k));
    }
    cells.push_back(std::move(c));
  }

  const char* cycles[] = {"5/2", "2", "?", "?", "1+1/ceil(k/2)"};
  const char* subdivisions[] = {"7/3", "7/4", "3/2", "3/2", "3/2"};
  const char* alphabets[] = {"2", "3", "4", "5", "k>=6"};
  for (int i = 0; i < 5; ++i) {
    cells.push_back(cell("C", alphabets[i], cycles[i], false, CellStatus::OutOfScope,
                         "cycles: prior work"));
  }
  for (int i = 0; i < 5; ++i) {
    cells.push_back(cell("S", alphabets[i], subdivisions[i], false, CellStatus::OutOfScope,
                         "subdivisions: prior work"));
  }

  // Caterpillars of maximum degree 3.
  {
    auto c = cell("CP3", "2", "3", true, CellStatus::Reproduced);
    c.runs.push_back(run.bracket("cp3-full", 1, 2, "3/1", 1, 30));
    c.runs.push_back(run.construction(
        "Thue-Morse backbone, pendants get the other color, n=" + N(s.cp_backbone),
        "reptree color cp2 --n " + N(s.cp_backbone) + " --check 3/1+",
        [&] { return color_cp2(s.cp_backbone); }, "3/1+"));
    cells.push_back(std::move(c));
  }
  {
    auto c = cell("CP3", "3", "2", true, CellStatus::Reproduced);
    c.runs.push_back(run.bracket("cp3-full", 1, 3, "2/1", 1, 20));
    c.runs.push_back(run.construction(
        "Thue-Morse backbone, pendants colored 2, n=" + N(s.cp_backbone),
        "reptree color cp3 --n " + N(s.cp_backbone) + " --check 2/1+",
        [&] { return color_cp3_ternary(s.cp_backbone); }, "2/1+"));
    cells.push_back(std::move(c));
  }
  {
    auto c = cell("CP3", "4", "3/2", true, CellStatus::EvidenceOnly,
                  "upper bound inherited from trees; finite coloring found by search");
    c.runs.push_back(run.bracket("cp3-full", 1, 4, "3/2", 6, 6));
    c.runs.push_back(run.exists("cp3-full", 1, s.search_backbone, 4, "3/2+"));
    cells.push_back(std::move(c));
  }
  {
    auto c = cell("CP3", "5", "4/3", true, CellStatus::Reproduced);
    c.runs.push_back(run.bracket("cp3-full", 1, 5, "4/3", 1, 6));
    c.runs.push_back(run.construction(
        "Pansiot-code coloring, " + N(s.cp35_blocks) + " blocks, factors up to length 576",
        "reptree color cp35 --blocks " + N(s.cp35_blocks) + " --check 4/3+ --max-len 576",
        [&] { return color_cp3_5letters(s.cp35_blocks); }, "4/3+", 576));
    cells.push_back(std::move(c));
  }
  {
    auto c = cell("CP3", ks, "1+1/ceil(k/2)", true, CellStatus::Reproduced,
                  "instances k=6,7,11");
    c.runs.push_back(run.bracket("cp3-full", 1, 6, "4/3", 1, 12));
    c.runs.push_back(run.construction(
        "k=6 via the 5-color coloring, " + N(s.cp35_blocks) + " blocks",
        "reptree color cpk --k 6 --n " + N(18 * s.cp35_blocks) + " --check 4/3+ --max-len 576",
        [&] { return color_cp3_k(6, 18 * s.cp35_blocks); }, "4/3+", 576));
    c.runs.push_back(run.bracket("cp3-full", 1, 7, "5/4", 1, 12));
    c.runs.push_back(run.construction(
        "k=7: 5-letter Dejean backbone, pendants cycle 2 colors, n=" + N(s.cpk_backbone),
        "reptree color cpk --k 7 --n " + N(s.cpk_backbone) + " --check 5/4+",
        [&] { return color_cp3_odd_k(7, s.cpk_backbone); }, "5/4+"));
    c.runs.push_back(run.bracket("cp3-full", 1, 11, "7/6", 1, 14));
    c.runs.push_back(run.construction(
        "k=11: 7-letter Dejean backbone, pendants cycle 4 colors, n=" + N(s.cpk_backbone),
        "reptree color cpk --k 11 --n " + N(s.cpk_backbone) + " --check 7/6+",
        [&] { return color_cp3_odd_k(11, s.cpk_backbone); }, "7/6+"));
    cells.push_back(std::move(c));
  }

  // Trees of maximum degree 3.
  for (const char* k : {"2", "3"}) {
    cells.push_back(cell("T3", k, "?", false, CellStatus::OutOfScope, "open problem"));
  }
  {
    auto c = cell("T3", "4", "3/2", true, CellStatus::EvidenceOnly,
                  "lower bound from caterpillars; upper bound inherited from trees");
    c.runs.push_back(run.bracket("cp3-full", 1, 4, "3/2", 6, 6));
    c.runs.push_back(run.exists("cubic-ball", 1, s.search_radius, 4, "3/2+"));
    cells.push_back(std::move(c));
  }
  {
    auto c = cell("T3", "5", "3/2", true, CellStatus::EvidenceOnly,
                  "upper bound inherited from trees");
    c.runs.push_back(run.bracket("cubic-ball", 1, 5, "3/2", 0, 4));
    c.runs.push_back(run.exists("cubic-ball", 1, s.search_radius, 5, "3/2+"));
    cells.push_back(std::move(c));
  }
  {
    auto c = cell("T3", ks, "1+1/(2 log k)+o(1/log k)", true, CellStatus::EvidenceOnly,
                  "asymptotic value; bound instances t=4,5");
    for (std::size_t t : {4u, 5u}) {
      const TreeColoringParams params{t, s.tree_depth};
      const auto exp = N(t + 1) + "/" + N(t) + "+";
      c.runs.push_back(run.construction(
          "(gamma,lambda) coloring, t=" + N(t) + ", " + N(params.color_count()) +
              " colors, depth " + N(s.tree_depth),
          "reptree color tree3 --t " + N(t) + " --depth " + N(s.tree_depth) + " --check " + exp +
              " --max-len " + N(2 * t + 2),
          [&] { return color_tree3(params); }, exp, 2 * t + 2));
      c.runs.push_back(run.construction(
          "(gamma,lambda) coloring, t=" + N(t) + ", depth " + N(s.tree_full_depth) +
              ", all factors",
          "reptree color tree3 --t " + N(t) + " --depth " + N(s.tree_full_depth) + " --check " +
              exp,
          [&] { return color_tree3({t, s.tree_full_depth}); }, exp));
      const auto colors = pigeonhole_colors(3, t);
      c.runs.push_back(run.bracket("cubic-ball", 1, static_cast<std::uint32_t>(colors),
                                   N(t + 1) + "/" + N(t), t / 2, t / 2));
    }
    cells.push_back(std::move(c));
  }

  // Caterpillars of unbounded degree.
  {
    auto c = cell("CP", "2", "3", true, CellStatus::Reproduced);
    c.runs.push_back(run.bracket("cp3-full", 1, 2, "3/1", 1, 30));
    c.runs.push_back(run.construction(
        "Thue-Morse backbone, 3 pendants per vertex, n=" + N(s.cp_backbone),
        "reptree color cp2 --n " + N(s.cp_backbone) + " --pendants 3 --check 3/1+",
        [&] { return color_cp2(CaterpillarSpec::uniform(s.cp_backbone, 3)); }, "3/1+"));
    cells.push_back(std::move(c));
  }
  {
    auto c = cell("CP", "3", "2", true, CellStatus::Reproduced);
    c.runs.push_back(run.bracket("cp3-full", 1, 3, "2/1", 1, 20));
    c.runs.push_back(run.construction(
        "Thue-Morse backbone, 3 pendants per vertex colored 2, n=" + N(s.cp_backbone),
        "reptree color cp3 --n " + N(s.cp_backbone) + " --pendants 3 --check 2/1+",
        [&] { return color_cp3_ternary(CaterpillarSpec::uniform(s.cp_backbone, 3)); }, "2/1+"));
    cells.push_back(std::move(c));
  }
  for (std::uint32_t k : {4u, 5u, 6u}) {
    auto c = cell("CP", k == 6 ? ks : N(k), "3/2", true, CellStatus::EvidenceOnly,
                  std::string("lower bound from the star K_{1,k}; upper bound inherited from "
                              "trees") +
                      (k == 6 ? "; instance k=6" : ""));
    c.runs.push_back(run.bracket("cp-spec", k, k, "3/2", 1, 1));
    c.runs.push_back(run.exists("cp-spec", k - 1, s.search_backbone / 2, k, "3/2+"));
    cells.push_back(std::move(c));
  }

  const char* trees[] = {"7/2", "3", "3/2", "3/2", "3/2"};
  for (int i = 0; i < 5; ++i) {
    cells.push_back(cell("T", alphabets[i], trees[i], false, CellStatus::OutOfScope,
                         "trees: prior work"));
  }
  return report;
}

nlohmann::json report_to_json(const Table1Report& r) {
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& c : r.cells) {
    nlohmann::json runs = nlohmann::json::array();
    for (const auto& e : c.runs) {
      runs.push_back({{"direction", e.direction},
                      {"description", e.description},
                      {"command", e.command},
                      {"label", e.label},
                      {"passed", e.passed},
                      {"result", e.result},
                      {"seconds", e.seconds}});
    }
    cells.push_back({{"class", c.graph_class},
                     {"alphabet", c.alphabet},
                     {"claimed", c.claimed},
                     {"shaded", c.shaded},
                     {"status", to_string(c.status)},
                     {"note", c.note},
                     {"ok", c.ok()},
                     {"runs", std::move(runs)}});
  }
  return {{"tool", "reptree"},
          {"version", r.version},
          {"profile", r.profile},
          {"node_budget", r.node_budget},
          {"seed", nullptr},
          {"ok", r.ok()},
          {"cells", std::move(cells)}};
}

std::string report_to_text(const Table1Report& r) {
  std::ostringstream out;
  out << "reptree " << r.version << " table1 (profile " << r.profile << ", node budget "
      << r.node_budget << ")\n";
  out << "Upper bounds concern infinite graphs; finite checks are desk-scale evidence.\n\n";
  for (const auto& c : r.cells) {
    out << (c.shaded ? "* " : "  ") << c.graph_class << "  |A|=" << c.alphabet << "  "
        << c.claimed << "  [" << to_string(c.status) << "]";
    if (!c.note.empty()) out << "  " << c.note;
    out << "\n";
    for (const auto& e : c.runs) {
      out << "      " << (e.passed ? "ok  " : "FAIL") << " " << e.direction << " (" << e.label
          << "): " << e.description << " -> " << e.result;
      char buf[32];
      std::snprintf(buf, sizeof buf, " [%.2fs]", e.seconds);
      out << buf << "\n";
      if (!e.command.empty()) out << "           $ " << e.command << "\n";
    }
  }
  out << "\n" << (r.ok() ? "all runs passed" : "SOME RUNS FAILED") << "\n";
  return out.str();
}

}  // namespace reptree
