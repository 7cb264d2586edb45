// Acceptance suite: one PASS/FAIL line per criterion.  Runtime limits are
// part of each criterion and are enforced alongside the checks.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "reptree/constructions.hpp"
#include "reptree/graph.hpp"
#include "reptree/search.hpp"
#include "reptree/table1.hpp"
#include "reptree/word_gen.hpp"
#include "reptree/words.hpp"

using namespace reptree;

namespace {

FreenessSpec alpha(std::int64_t num, std::int64_t den) { return {Rational(num, den), false}; }
FreenessSpec alpha_plus(std::int64_t num, std::int64_t den) { return {Rational(num, den), true}; }

/// Failed checks are collected rather than thrown so that every criterion
/// reports all of its problems at once.
struct Result {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " FAILED: " << what << ";";
    }
  }
  template <class T>
  Result& note(const T& x) {
    detail << x;
    return *this;
  }
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<void(Result&)> run;
};

std::string bound_str(std::optional<std::size_t> max_len) {
  return max_len ? std::to_string(*max_len) : std::string("unbounded");
}

void cp_lower(Result& r, std::uint32_t k, const FreenessSpec& spec, std::size_t n_max) {
  const auto ev = rt_bracket(family_by_name("cp3-full"), k, spec, 1, n_max);
  r.require(ev.holds(), "cp3-full k=" + std::to_string(k) + " " + spec.str() +
                            " not unavoidable within n <= " + std::to_string(n_max));
  if (ev.n) {
    r.note(" cp3-full k=").note(k).note(" ").note(spec.str()).note(": unavoidable at n=")
        .note(*ev.n).note(" (").note(ev.nodes).note(" nodes, max-len unbounded);");
  }
}

void full_check(Result& r, const std::string& name, const ColoredGraph& g, const FreenessSpec& spec,
                std::optional<std::size_t> max_len = std::nullopt) {
  const auto w = check_colored(g, spec, max_len);
  r.require(!w, name + " has a forbidden factor of exponent " +
                    (w ? w->exponent.str() : std::string()) + " for " + spec.str());
  r.note(" ").note(name).note(" (").note(g.size()).note(" vertices) ").note(spec.str())
      .note("-free, max-len ").note(bound_str(max_len)).note(";");
}

// 1
void words_oracle(Result& r) {
  std::mt19937_64 rng(20240601);
  const int words = 10'000;
  int mismatches = 0;
  for (int i = 0; i < words; ++i) {
    const auto k = static_cast<std::uint32_t>(2 + i % 5);
    const auto letters = oracle::random_word(rng, 50, k);
    const Word w(letters, k);
    const auto got = max_exponent(w);
    const auto want = oracle::max_exponent_by_runs(letters);
    const bool same = prefix_smallest_periods(w) == oracle::prefix_periods(letters) &&
                      got.start == want.start && got.total_length == want.length &&
                      got.period == want.period;
    if (!same) ++mismatches;
  }
  r.require(mismatches == 0, std::to_string(mismatches) + " words disagree with the oracle");
  r.note(" ").note(words).note(" random words, lengths 1..50, alphabets 2..6;");
}

// 2
void graphs_oracle(Result& r) {
  std::mt19937_64 rng(20240602);
  const int trees = 600;
  const std::vector<FreenessSpec> specs{alpha(2, 1), alpha_plus(3, 2), alpha(5, 4),
                                        alpha_plus(7, 4), alpha(3, 1)};
  int mismatches = 0, witnesses = 0;
  for (int i = 0; i < trees; ++i) {
    const auto n = 1 + static_cast<std::size_t>(i % 25);
    const auto k = static_cast<std::uint32_t>(2 + i % 4);
    const auto g = oracle::random_tree(rng, n, k);
    for (const auto& spec : specs) {
      const auto w = check_colored(g, spec);
      if (w.has_value() != !oracle::graph_free(g, spec)) ++mismatches;
      if (w) {
        ++witnesses;
        std::vector<Letter> word;
        for (auto v : w->vertices) word.push_back(static_cast<Letter>(g.color(v)));
        if (oracle::period(word, 0, word.size()) != w->period ||
            !spec.forbids(w->total_length, w->period)) {
          ++mismatches;
        }
      }
    }
  }
  r.require(mismatches == 0, std::to_string(mismatches) + " disagreements");
  r.note(" ").note(trees).note(" random trees of 1..25 vertices, ").note(specs.size())
      .note(" specs each, ").note(witnesses).note(" witnesses validated;");
}

// 3
void two_colors(Result& r) {
  full_check(r, "color_cp2(512)", color_cp2(512), alpha_plus(3, 1));
  cp_lower(r, 2, alpha(3, 1), 30);
}

// 4
void three_colors(Result& r) {
  full_check(r, "color_cp3_ternary(512)", color_cp3_ternary(512), alpha_plus(2, 1));
  cp_lower(r, 3, alpha(2, 1), 20);
}

// 5
void four_colors(Result& r) {
  const SearchProblem six{CaterpillarSpec::uniform(6, 1, true), 4, alpha(3, 2), {},
                          kDefaultSearchBudget, std::nullopt};
  const auto out = prove_unavoidable(six);
  r.require(out.verdict == Verdict::Unavoidable,
            "cp3-full n=6 k=4 3/2 is " + to_string(out.verdict));
  r.note(" cp3-full n=6 k=4 3/2: ").note(to_string(out.verdict)).note(" (")
      .note(out.nodes_visited).note(" nodes, max-len unbounded);");

  const auto ev = rt_bracket(family_by_name("cp3-full"), 4, alpha(3, 2), 1, 10);
  r.require(ev.holds(), "no unavoidable instance up to n=10");
  if (ev.n) r.note(" minimal n=").note(*ev.n).note(";");

  const SearchProblem fifty{CaterpillarSpec::uniform(50, 1, true), 4, alpha_plus(3, 2), {},
                            kDefaultSearchBudget, std::nullopt};
  const auto found = find_coloring(fifty);
  r.require(found.verdict == Verdict::Colorable,
            "cp3-full n=50 k=4 3/2+ is " + to_string(found.verdict));
  if (found.coloring) full_check(r, "search result n=50", *found.coloring, alpha_plus(3, 2));
}

// 6
void five_colors(Result& r) {
  const std::size_t blocks = 64;
  const auto word = dejean_word(5, blocks + 6);
  const auto g = color_cp3_5letters(blocks, word);
  const std::size_t n = 18 * blocks;
  r.require(g.size() == 2 * n, "unexpected vertex count");
  full_check(r, "color_cp3_5letters(64)", g, alpha_plus(4, 3), 576);

  std::vector<Letter> backbone;
  for (Vertex v = 0; v < n; ++v) backbone.push_back(static_cast<Letter>(g.color(v)));
  const auto bw = violates(Word(backbone, 5), alpha_plus(4, 3));
  r.require(!bw, "backbone word has a 4/3+ violation");
  r.note(" backbone word (").note(n).note(" letters) 4/3+-free at full length;");

  const std::string expected =
      "h[0][0]=150251053150352053\n"
      "h[0][1]=033332322221211110\n"
      "h[1][0]=143123021324123103\n"
      "h[1][1]=000044440400004444\n";
  r.require(PansiotOffsets::dump() == expected, "offset table dump differs");
  r.note(" offset table dump byte-identical;");
}

// 7
void many_colors(Result& r) {
  cp_lower(r, 5, alpha(4, 3), 6);
  cp_lower(r, 6, alpha(4, 3), 12);
  full_check(r, "color_cp3_odd_k(7, 300)", color_cp3_odd_k(7, 300), alpha_plus(5, 4));
  full_check(r, "color_cp3_odd_k(11, 300)", color_cp3_odd_k(11, 300), alpha_plus(7, 6));
}

// 8
void cubic_five(Result& r) {
  const auto spec = alpha(3, 2);
  const auto max_len = default_max_factor_length(Ball{3, 0}, spec);
  const auto ev = rt_bracket(family_by_name("cubic-ball"), 5, spec, 0, 4, kDefaultSearchBudget);
  r.require(ev.holds(), "no unavoidable cubic ball up to radius 4 (" + ev.detail + ")");
  if (ev.n) {
    r.note(" cubic-ball k=5 3/2: unavoidable at minimal radius r=").note(*ev.n).note(" (")
        .note(ev.nodes).note(" nodes, max-len ").note(bound_str(max_len)).note(");");
  }
}

// 9
void tree_upper(Result& r) {
  const TreeColoringParams params{4, 10};
  const auto g = color_tree3(params);
  r.require(params.color_count() == 20 && g.k() == 20, "palette is not 20 colors");
  full_check(r, "color_tree3(t=4, D=10)", g, alpha_plus(5, 4), 10);

  const TreeColoringParams small{4, 8};
  const auto h = color_tree3(small);
  full_check(r, "color_tree3(t=4, D=8)", h, alpha_plus(5, 4));

  std::size_t edges = 0, wrong = 0;
  for (Vertex v = 1; v < h.size(); ++v) {
    const auto p = *h.parent(v);
    ++edges;
    if (father_from_gamma(small.gamma_of(h.color(p)), small.gamma_of(h.color(v))) != Father::First) {
      ++wrong;
    }
  }
  r.require(wrong == 0, std::to_string(wrong) + " edges where the father rule fails");
  r.note(" father rule holds on all ").note(edges).note(" edges at D=8;");
}

// 10
void pigeonhole(Result& r) {
  const std::vector<std::tuple<std::size_t, std::size_t, std::uint64_t>> cases{
      {3, 4, 9}, {3, 6, 21}, {4, 4, 16}};
  for (auto [delta, t, want] : cases) {
    const auto got = pigeonhole_colors(delta, t);
    const auto ball = build_tree(Ball{delta, t / 2});
    r.require(got == want, "pigeonhole_colors(" + std::to_string(delta) + "," +
                               std::to_string(t) + ") = " + std::to_string(got));
    r.require(ball.size() == got + 1, "ball vertex count mismatch");
    std::size_t diam = 0;
    for (Vertex u = 0; u < ball.size(); ++u) {
      for (auto d : distances_from(ball, u)) diam = std::max(diam, d);
    }
    r.require(diam <= t, "ball diameter exceeds t");
    r.note(" (").note(delta).note(",").note(t).note(")=").note(got).note(" with ")
        .note(ball.size()).note(" vertices, max distance ").note(diam).note(";");
  }
  const StructureSpec ball = Ball{3, 2};
  const auto spec = alpha(5, 4);
  const SearchProblem p{ball, 9, spec, {}, kDefaultSearchBudget,
                        default_max_factor_length(ball, spec)};
  const auto out = prove_unavoidable(p);
  r.require(out.verdict == Verdict::Unavoidable, "Ball(3,2) with 9 colors is " +
                                                     to_string(out.verdict));
  r.note(" Ball(3,2) k=9 5/4: ").note(to_string(out.verdict)).note(" (").note(out.nodes_visited)
      .note(" nodes, max-len ").note(bound_str(p.max_factor_length)).note(");");
}

// 11
void table_labels(Result& r) {
  const auto report = run_table1(Table1Profile::Full);
  r.require(report.ok(), "some table run failed");

  const std::set<std::pair<std::string, std::string>> shaded_expected{
      {"CP3", "2"}, {"CP3", "3"}, {"CP3", "4"}, {"CP3", "5"}, {"CP3", "k>=6"},
      {"T3", "4"},  {"T3", "5"},  {"T3", "k>=6"},
      {"CP", "2"},  {"CP", "3"},  {"CP", "4"},  {"CP", "5"},  {"CP", "k>=6"}};
  std::map<std::pair<std::string, std::string>, int> shaded_seen;
  std::size_t desk = 0, out_of_scope = 0;
  for (const auto& c : report.cells) {
    if (c.shaded) ++shaded_seen[{c.graph_class, c.alphabet}];
    if (c.graph_class == "C" || c.graph_class == "S" || c.graph_class == "T") {
      r.require(c.status == CellStatus::OutOfScope, c.graph_class + " " + c.alphabet +
                                                        " is not out-of-scope");
      ++out_of_scope;
    }
    for (const auto& run : c.runs) {
      const auto want = run.direction == "upper" ? "desk-scale evidence" : "exhaustive";
      r.require(run.label == want, c.graph_class + " " + c.alphabet + " " + run.direction +
                                       " run labeled '" + run.label + "'");
      if (run.direction == "upper") ++desk;
    }
  }
  r.require(shaded_seen.size() == shaded_expected.size(), "shaded cell set differs");
  for (const auto& key : shaded_expected) {
    r.require(shaded_seen[key] == 1, key.first + " " + key.second + " not listed exactly once");
  }
  r.require(out_of_scope == 15, "expected 15 out-of-scope C/S/T cells");
  r.note(" ").note(report.cells.size()).note(" cells, ").note(shaded_expected.size())
      .note(" shaded, ").note(desk).note(" upper runs labeled desk-scale evidence, ")
      .note(out_of_scope).note(" C/S/T cells out-of-scope;");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "oracle equivalence on words", 60, words_oracle},
      {2, "oracle equivalence on colored trees", 60, graphs_oracle},
      {3, "two colors: 3+-free caterpillar, 3-free impossible", 300, two_colors},
      {4, "three colors: 2+-free caterpillar, 2-free impossible", 300, three_colors},
      {5, "four colors: 3/2 lower bound and 3/2+ existence", 600, four_colors},
      {6, "five colors: offset-table caterpillar", 600, five_colors},
      {7, "k >= 5 colors: lower brackets and cyclic-pendant colorings", 900, many_colors},
      {8, "cubic balls with five colors", 1800, cubic_five},
      {9, "(gamma,lambda) coloring of the binary tree", 900, tree_upper},
      {10, "pigeonhole bound for balls", 300, pigeonhole},
      {11, "table labels and scope", 600, table_labels},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Result r;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(r);
    } catch (const std::exception& e) {
      r.require(false, std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char timing[64];
    std::snprintf(timing, sizeof timing, " [%.2fs, limit %.0fs]", secs, c.limit_seconds);
    r.require(secs <= c.limit_seconds, "runtime limit exceeded");
    if (!r.ok) ++failed;
    std::cout << (r.ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << ":"
              << r.detail.str() << timing << std::endl;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed")
            << std::endl;
  return failed ? 1 : 0;
}
