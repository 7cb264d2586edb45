#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "reptree/search.hpp"

using namespace reptree;

namespace {

FreenessSpec spec(std::int64_t num, std::int64_t den, bool strict) {
  return FreenessSpec(Rational(num, den), strict);
}

SearchProblem problem(StructureSpec s, std::uint32_t k, const FreenessSpec& spec) {
  auto max_len = default_max_factor_length(s, spec);
  return {std::move(s), k, spec, {}, kDefaultSearchBudget, max_len};
}

StructureSpec cp3(std::size_t n) { return CaterpillarSpec::uniform(n, 1, true); }

StructureSpec path_spec(std::size_t n) { return CaterpillarSpec::uniform(n, 0, true); }

}  // namespace

TEST_CASE("search examples", "[search]") {
  CHECK(prove_unavoidable(problem(cp3(6), 4, spec(3, 2, false))).verdict == Verdict::Unavoidable);
  CHECK(prove_unavoidable(problem(cp3(4), 5, spec(4, 3, false))).verdict == Verdict::Unavoidable);
  CHECK(prove_unavoidable(problem(path_spec(2), 1, spec(2, 1, false))).verdict ==
        Verdict::Unavoidable);
}

TEST_CASE("existence search examples", "[search]") {
  for (auto [k, s] : {std::pair{4u, spec(3, 2, true)}, std::pair{3u, spec(2, 1, true)},
                      std::pair{2u, spec(3, 1, true)}}) {
    const auto p = problem(cp3(50), k, s);
    const auto out = find_coloring(p);
    REQUIRE(out.verdict == Verdict::Colorable);
    REQUIRE(out.coloring);
    CHECK(out.coloring->size() == 100);
    CHECK_FALSE(check_colored(*out.coloring, p.spec));
  }
}

TEST_CASE("existence search reports exhausted trees as inconclusive", "[search]") {
  const auto out = find_coloring(problem(cp3(6), 4, spec(3, 2, false)));
  CHECK(out.verdict == Verdict::Inconclusive);
}

TEST_CASE("budget exhaustion is inconclusive", "[search]") {
  auto p = problem(cp3(30), 4, spec(3, 2, true));
  p.node_budget = 20;
  CHECK(prove_unavoidable(p).verdict == Verdict::Inconclusive);
}

TEST_CASE("search agrees with brute force on toy instances", "[search][oracle]") {
  const std::vector<StructureSpec> structures{
      path_spec(5), cp3(3), CaterpillarSpec{2, {2, 1}, false}, CaterpillarSpec{1, {4}, false},
      Ball{3, 1}, EmbeddedBinaryTree{2}, cp3(4)};
  const std::vector<std::pair<std::int64_t, std::int64_t>> bounds{{2, 1}, {3, 2}, {3, 1}, {7, 4}};
  for (const auto& s : structures) {
    const auto g = build_structure(s);
    REQUIRE(g.size() <= 8);
    for (std::uint32_t k = 1; k <= 3; ++k) {
      for (auto [num, den] : bounds) {
        for (bool strict : {false, true}) {
          const auto f = spec(num, den, strict);
          const SearchProblem p{s, k, f, {}, kDefaultSearchBudget, std::nullopt};
          const auto out = prove_unavoidable(p);
          const bool colorable = oracle::any_free_coloring(g, k, f);
          INFO(describe(s) << " k=" << k << " spec=" << f.str());
          REQUIRE(out.verdict == (colorable ? Verdict::Colorable : Verdict::Unavoidable));
          if (out.coloring) REQUIRE(oracle::graph_free(*out.coloring, f));
        }
      }
    }
  }
}

TEST_CASE("symmetry breaking never changes the verdict", "[search][property]") {
  for (std::size_t n = 2; n <= 7; ++n) {
    for (std::uint32_t k = 2; k <= 4; ++k) {
      for (auto [num, den] : {std::pair{2, 1}, std::pair{3, 2}, std::pair{3, 1}}) {
        const auto p = problem(cp3(n), k, spec(num, den, false));
        SearchOptions on, off;
        off.symmetry_breaking = false;
        REQUIRE(prove_unavoidable(p, on).verdict == prove_unavoidable(p, off).verdict);
      }
    }
  }
}

TEST_CASE("unavoidability is monotone in the instance size", "[search][property]") {
  for (auto [k, num, den, n] : {std::tuple{2u, 3, 1, 17u}, std::tuple{3u, 2, 1, 8u},
                                std::tuple{4u, 3, 2, 5u}, std::tuple{5u, 4, 3, 4u}}) {
    auto p = problem(cp3(n), k, spec(num, den, false));
    REQUIRE(prove_unavoidable(p).verdict == Verdict::Unavoidable);
    p.structure = cp3(n + 1);
    REQUIRE(prove_unavoidable(p).verdict == Verdict::Unavoidable);
  }
}

TEST_CASE("single-threaded searches are deterministic", "[search][property]") {
  const auto p = problem(cp3(40), 3, spec(2, 1, true));
  const auto a = prove_unavoidable(p);
  const auto b = prove_unavoidable(p);
  CHECK(a.nodes_visited == b.nodes_visited);
  REQUIRE(a.coloring);
  CHECK(*a.coloring == *b.coloring);

  const auto u = problem(cp3(17), 2, spec(3, 1, false));
  CHECK(prove_unavoidable(u).nodes_visited == prove_unavoidable(u).nodes_visited);
}

TEST_CASE("parallel search returns the canonical answer", "[search]") {
  SearchOptions par;
  par.threads = 4;
  const auto p = problem(cp3(30), 4, spec(3, 2, true));
  const auto a = prove_unavoidable(p);
  const auto b = prove_unavoidable(p, par);
  REQUIRE(a.verdict == Verdict::Colorable);
  REQUIRE(b.verdict == Verdict::Colorable);
  CHECK(*a.coloring == *b.coloring);
  CHECK_FALSE(b.task_nodes.empty());

  const auto u = problem(cp3(8), 3, spec(2, 1, false));
  CHECK(prove_unavoidable(u, par).verdict == Verdict::Unavoidable);
}

TEST_CASE("bounded factor length only prunes", "[search]") {
  // A bound too short to see any repetition still yields a truly free
  // coloring or a correct Unavoidable verdict.
  auto p = problem(cp3(12), 2, spec(3, 1, false));
  p.max_factor_length = 2;
  const auto out = prove_unavoidable(p);
  REQUIRE(out.verdict == Verdict::Colorable);
  CHECK_FALSE(check_colored(*out.coloring, p.spec));

  auto q = problem(cp3(17), 2, spec(3, 1, false));
  q.max_factor_length = 3;
  CHECK(prove_unavoidable(q).verdict == Verdict::Unavoidable);
}

TEST_CASE("custom vertex orders are validated", "[search]") {
  auto p = problem(cp3(3), 3, spec(2, 1, false));
  p.vertex_order = {0, 1, 2, 3, 4, 5};
  CHECK(prove_unavoidable(p).verdict == Verdict::Colorable);
  p.vertex_order = {0, 2, 1, 3, 4, 5};
  CHECK_THROWS_AS(prove_unavoidable(p), Error);
  p.vertex_order = {0, 1, 2};
  CHECK_THROWS_AS(prove_unavoidable(p), Error);
}

TEST_CASE("default orders and factor bounds", "[search]") {
  const StructureSpec s = cp3(3);
  const auto g = build_structure(s);
  CHECK(default_vertex_order(s, g) == std::vector<Vertex>{0, 3, 1, 4, 2, 5});
  CHECK_FALSE(default_max_factor_length(s, FreenessSpec(Rational(5, 4), false)));
  CHECK(default_max_factor_length(Ball{3, 2}, FreenessSpec(Rational(5, 4), false)) ==
        std::size_t{16});
}

TEST_CASE("seeded existence search", "[search]") {
  FindOptions opts;
  opts.seed = 7;
  opts.restart_nodes = 2000;
  const auto p = problem(cp3(40), 4, spec(3, 2, true));
  const auto out = find_coloring(p, opts);
  REQUIRE(out.verdict == Verdict::Colorable);
  CHECK_FALSE(check_colored(*out.coloring, p.spec));
}

TEST_CASE("bracketing", "[bracket]") {
  const auto ev = rt_bracket(family_by_name("cp3-full"), 3, FreenessSpec(Rational(2, 1), false),
                             1, 20);
  CHECK(ev.holds());
  REQUIRE(ev.n);
  CHECK(*ev.n == ev.steps.back().n);
  for (std::size_t i = 0; i + 1 < ev.steps.size(); ++i) {
    CHECK(ev.steps[i].verdict == Verdict::Colorable);
  }

  const auto none = rt_bracket(family_by_name("cp3-full"), 3,
                               FreenessSpec(Rational(2, 1), true), 1, 6);
  CHECK_FALSE(none.holds());
  CHECK(none.verdict == Verdict::Inconclusive);

  CHECK_THROWS_AS(family_by_name("no-such-family"), Error);
}

TEST_CASE("upper evidence", "[bracket]") {
  const auto g = build_structure(cp3(2));
  auto colored = g;
  colored.set_k(4);
  for (Vertex v = 0; v < colored.size(); ++v) colored.set_color(v, static_cast<Color>(v));
  CHECK(upper_evidence("manual", colored, FreenessSpec(Rational(3, 2), false)).holds());
  colored.set_color(3, 0);
  CHECK_FALSE(upper_evidence("manual", colored, FreenessSpec(Rational(3, 2), false)).holds());
}
