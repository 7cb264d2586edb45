#include "reptree/search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <random>
#include <thread>

namespace reptree {

ColoredGraph build_structure(const StructureSpec& s) {
  if (const auto* cat = std::get_if<CaterpillarSpec>(&s)) return build_caterpillar(*cat);
  return build_tree(std::get<TreeSpec>(s));
}

std::string describe(const StructureSpec& s) {
  if (const auto* cat = std::get_if<CaterpillarSpec>(&s)) {
    std::string out = "caterpillar(n=" + std::to_string(cat->backbone_length) + ", pendants=";
    const auto& pc = cat->pendant_counts;
    if (!pc.empty() && std::all_of(pc.begin(), pc.end(), [&](auto x) { return x == pc[0]; })) {
      out += std::to_string(pc[0]) + " each";
    } else {
      for (std::size_t i = 0; i < pc.size(); ++i) out += (i ? "," : "[") + std::to_string(pc[i]);
      out += "]";
    }
    return out + ")";
  }
  const auto& tree = std::get<TreeSpec>(s);
  if (const auto* bin = std::get_if<EmbeddedBinaryTree>(&tree)) {
    return "binary-tree(depth=" + std::to_string(bin->depth) + ")";
  }
  const auto& ball = std::get<Ball>(tree);
  return "ball(degree=" + std::to_string(ball.degree) + ", radius=" + std::to_string(ball.radius) +
         ")";
}

std::vector<Vertex> default_vertex_order(const StructureSpec& s, const ColoredGraph& g) {
  std::vector<Vertex> order;
  order.reserve(g.size());
  if (std::holds_alternative<CaterpillarSpec>(s)) {
    std::vector<std::vector<Vertex>> pendants;
    for (Vertex v = 0; v < g.size(); ++v) {
      if (const auto& b = g.tags(v).backbone) {
        if (pendants.size() <= *b) pendants.resize(*b + 1);
      }
    }
    for (Vertex v = 0; v < g.size(); ++v) {
      if (auto p = g.tags(v).pendant_of) pendants[*p].push_back(v);
    }
    for (Vertex b = 0; b < pendants.size(); ++b) {
      order.push_back(b);
      for (auto v : pendants[b]) order.push_back(v);
    }
    return order;
  }
  // build_tree numbers vertices breadth-first already.
  order.resize(g.size());
  std::iota(order.begin(), order.end(), Vertex{0});
  return order;
}

void validate_vertex_order(const ColoredGraph& g, std::span<const Vertex> order) {
  if (order.size() != g.size()) {
    throw Error("vertex order has " + std::to_string(order.size()) + " entries for " +
                std::to_string(g.size()) + " vertices");
  }
  std::vector<bool> placed(g.size(), false);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto v = order[i];
    if (v >= g.size() || placed[v]) {
      throw Error("vertex order is not a permutation (entry " + std::to_string(i) + ")");
    }
    if (i > 0) {
      const auto nbrs = g.neighbors(v);
      if (std::none_of(nbrs.begin(), nbrs.end(), [&](Vertex u) { return placed[u]; })) {
        throw Error("vertex " + std::to_string(v) + " at position " + std::to_string(i) +
                    " has no earlier neighbor in the vertex order");
      }
    }
    placed[v] = true;
  }
}

std::optional<std::size_t> default_max_factor_length(const StructureSpec& s,
                                                     const FreenessSpec& spec) {
  if (std::holds_alternative<CaterpillarSpec>(s)) return std::nullopt;
  const auto& b = spec.bound;
  if (b.num() == b.den() + 1) return static_cast<std::size_t>(4 * b.den());
  return std::nullopt;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Unavoidable:
      return "unavoidable";
    case Verdict::Colorable:
      return "colorable";
    case Verdict::Inconclusive:
      break;
  }
  return "inconclusive";
}

namespace {

struct RunResult {
  Verdict verdict;
  std::optional<ColoredGraph> coloring;
  std::uint64_t nodes = 0;
};

class Engine {
 public:
  Engine(const SearchProblem& p, const SearchOptions& opts)
      : problem_(p), opts_(opts), shell_(build_structure(p.structure)), checker_(shell_) {
    if (p.k < 1) throw Error("search needs at least one color");
    order_ = p.vertex_order.empty() ? default_vertex_order(p.structure, shell_) : p.vertex_order;
    validate_vertex_order(shell_, order_);
    shell_.set_k(p.k);
    limit_ = p.max_factor_length.value_or(std::numeric_limits<std::size_t>::max());
  }

  std::size_t size() const { return order_.size(); }

  /// All valid assignments to the first `depth` vertices, in canonical order.
  std::vector<std::vector<Color>> prefixes(std::size_t depth, std::uint64_t& nodes) {
    std::vector<std::vector<Color>> out;
    depth = std::min(depth, order_.size());
    ColoredGraph g = shell_;
    std::vector<Color> cur;
    expand(g, cur, depth, -1, out, nodes);
    return out;
  }

  /// Depth-first search below a fixed prefix.  With `rng`, the colors at
  /// each depth are tried in a random order.
  RunResult run(std::span<const Color> prefix, std::uint64_t budget, std::mt19937_64* rng) {
    const auto n = order_.size();
    ColoredGraph g = shell_;
    Color max_used = -1;
    for (std::size_t d = 0; d < prefix.size(); ++d) {
      g.set_color(order_[d], prefix[d]);
      max_used = std::max(max_used, prefix[d]);
    }
    const auto base = prefix.size();
    if (base == n) {
      if (!check_colored(g, problem_.spec)) return {Verdict::Colorable, std::move(g), 0};
      return {Verdict::Unavoidable, std::nullopt, 0};
    }

    std::vector<std::uint32_t> next(n + 1, 0);
    std::vector<Color> top(n + 1, -1);
    std::vector<std::vector<Color>> candidates(n + 1);
    top[base] = max_used;
    std::uint64_t nodes = 0;
    std::size_t d = base;
    enter(d, top[d], candidates, rng);

    while (true) {
      if (d == n) {
        if (!check_colored(g, problem_.spec)) return {Verdict::Colorable, std::move(g), nodes};
        --d;  // rejected by the unbounded check
        continue;
      }
      const auto v = order_[d];
      if (next[d] >= candidates[d].size()) {
        g.clear_color(v);
        if (d == base) return {Verdict::Unavoidable, std::nullopt, nodes};
        --d;
        continue;
      }
      const auto c = candidates[d][next[d]++];
      if (++nodes > budget) return {Verdict::Inconclusive, std::nullopt, nodes - 1};
      if (opts_.progress && nodes % opts_.progress_interval == 0) opts_.progress(nodes);
      g.set_color(v, c);
      if (checker_.violated(g, v, problem_.spec, limit_)) continue;
      top[d + 1] = std::max(top[d], c);
      ++d;
      next[d] = 0;
      if (d < n) enter(d, top[d], candidates, rng);
    }
  }

 private:
  std::uint32_t color_limit(Color max_used) const {
    if (!opts_.symmetry_breaking) return problem_.k;
    return std::min<std::uint32_t>(problem_.k, static_cast<std::uint32_t>(max_used + 2));
  }

  void enter(std::size_t d, Color max_used, std::vector<std::vector<Color>>& candidates,
             std::mt19937_64* rng) const {
    auto& c = candidates[d];
    c.resize(color_limit(max_used));
    std::iota(c.begin(), c.end(), Color{0});
    if (rng) std::shuffle(c.begin(), c.end(), *rng);
  }

  void expand(ColoredGraph& g, std::vector<Color>& cur, std::size_t depth, Color max_used,
              std::vector<std::vector<Color>>& out, std::uint64_t& nodes) {
    if (cur.size() == depth) {
      out.push_back(cur);
      return;
    }
    const auto v = order_[cur.size()];
    const auto lim = color_limit(max_used);
    for (Color c = 0; static_cast<std::uint32_t>(c) < lim; ++c) {
      ++nodes;
      g.set_color(v, c);
      if (checker_.violated(g, v, problem_.spec, limit_)) continue;
      cur.push_back(c);
      expand(g, cur, depth, std::max(max_used, c), out, nodes);
      cur.pop_back();
    }
    g.clear_color(v);
  }

  const SearchProblem& problem_;
  const SearchOptions& opts_;
  ColoredGraph shell_;
  std::vector<Vertex> order_;
  ExtensionChecker checker_;
  std::size_t limit_;
};

SearchOutcome run_parallel(const SearchProblem& p, const SearchOptions& opts, std::uint64_t budget) {
  Engine root(p, opts);
  std::uint64_t prefix_nodes = 0;
  const auto tasks = root.prefixes(2, prefix_nodes);
  if (tasks.empty()) return {Verdict::Unavoidable, std::nullopt, prefix_nodes, {}};

  std::vector<RunResult> results(tasks.size());
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  const auto workers = std::min<std::size_t>(opts.threads, tasks.size());
  for (std::size_t t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      Engine engine(p, opts);
      for (auto i = next++; i < tasks.size(); i = next++) {
        results[i] = engine.run(tasks[i], budget, nullptr);
      }
    });
  }
  for (auto& th : pool) th.join();

  SearchOutcome out{Verdict::Unavoidable, std::nullopt, prefix_nodes, {}};
  bool inconclusive = false;
  for (auto& r : results) {
    out.task_nodes.push_back(r.nodes);
    out.nodes_visited += r.nodes;
    if (r.verdict == Verdict::Colorable && !out.coloring) out.coloring = std::move(r.coloring);
    if (r.verdict == Verdict::Inconclusive) inconclusive = true;
  }
  if (out.coloring) {
    out.verdict = Verdict::Colorable;
  } else if (inconclusive) {
    out.verdict = Verdict::Inconclusive;
  }
  return out;
}

}  // namespace

SearchOutcome prove_unavoidable(const SearchProblem& p, const SearchOptions& opts) {
  const auto budget = p.node_budget.value_or(std::numeric_limits<std::uint64_t>::max());
  if (opts.threads > 1) return run_parallel(p, opts, budget);
  Engine engine(p, opts);
  auto r = engine.run({}, budget, nullptr);
  return {r.verdict, std::move(r.coloring), r.nodes, {}};
}

SearchOutcome find_coloring(const SearchProblem& p, const FindOptions& opts) {
  const auto budget = p.node_budget.value_or(std::numeric_limits<std::uint64_t>::max());
  SearchOutcome out{Verdict::Inconclusive, std::nullopt, 0, {}};
  if (!opts.seed) {
    out = prove_unavoidable(p, opts.search);
  } else {
    Engine engine(p, opts.search);
    std::mt19937_64 rng(*opts.seed);
    std::uint64_t used = 0;
    while (used < budget) {
      const auto slice = std::min(opts.restart_nodes, budget - used);
      auto r = engine.run({}, slice, &rng);
      used += r.nodes;
      if (r.verdict != Verdict::Inconclusive) {
        out = {r.verdict, std::move(r.coloring), used, {}};
        break;
      }
      out.nodes_visited = used;
    }
  }
  if (out.verdict == Verdict::Unavoidable) out.verdict = Verdict::Inconclusive;
  return out;
}

Family family_by_name(const std::string& name, std::size_t pendants) {
  if (name == "cp3-full") {
    return {name, [](std::size_t n) -> StructureSpec { return CaterpillarSpec::uniform(n, 1, true); }};
  }
  if (name == "cp-spec") {
    return {name + "(" + std::to_string(pendants) + ")", [pendants](std::size_t n) -> StructureSpec {
              return CaterpillarSpec::uniform(n, pendants, false);
            }};
  }
  if (name == "cubic-ball") {
    return {name, [](std::size_t r) -> StructureSpec { return TreeSpec{Ball{3, r}}; }};
  }
  if (name == "binary-tree") {
    return {name, [](std::size_t d) -> StructureSpec { return TreeSpec{EmbeddedBinaryTree{d}}; }};
  }
  throw Error("unknown family '" + name + "' (expected cp3-full, cp-spec, cubic-ball, binary-tree)");
}

ThresholdEvidence rt_bracket(const Family& family, std::uint32_t k, const FreenessSpec& spec,
                             std::size_t n_start, std::size_t n_max,
                             std::optional<std::uint64_t> budget, const SearchOptions& opts,
                             std::optional<std::size_t> max_factor_length) {
  ThresholdEvidence ev{family.name, k,   spec, Direction::Lower, Verdict::Inconclusive,
                       std::nullopt, {}, std::nullopt, 0, ""};
  for (auto n = n_start; n <= n_max; ++n) {
    const auto structure = family.make(n);
    SearchProblem problem{structure, k, spec, {}, budget,
                          max_factor_length ? max_factor_length
                                            : default_max_factor_length(structure, spec)};
    const auto r = prove_unavoidable(problem, opts);
    ev.steps.push_back({n, r.verdict, r.nodes_visited});
    ev.nodes += r.nodes_visited;
    if (r.verdict == Verdict::Unavoidable) {
      ev.verdict = Verdict::Unavoidable;
      ev.n = n;
      ev.detail = "no " + spec.str() + "-free " + std::to_string(k) + "-coloring of " +
                  describe(structure);
      return ev;
    }
    if (r.verdict == Verdict::Inconclusive) {
      ev.detail = "node budget exhausted at n=" + std::to_string(n);
      return ev;
    }
  }
  ev.detail = "colorable for every n up to " + std::to_string(n_max);
  return ev;
}

ThresholdEvidence upper_evidence(std::string family, const ColoredGraph& coloring,
                                 const FreenessSpec& spec,
                                 std::optional<std::size_t> max_factor_length) {
  ThresholdEvidence ev{std::move(family), coloring.k(), spec, Direction::Upper, Verdict::Colorable,
                       coloring.size(), {}, coloring, 0, ""};
  if (auto w = check_colored(coloring, spec, max_factor_length)) {
    ev.verdict = Verdict::Inconclusive;
    ev.coloring.reset();
    ev.detail = "factor of exponent " + w->exponent.str() + " starting at vertex " +
                std::to_string(w->vertices.front());
  } else {
    ev.detail = std::to_string(coloring.size()) + " vertices, " +
                std::to_string(coloring.colors_used()) + " colors, " + spec.str() + "-free" +
                (max_factor_length ? " up to factor length " + std::to_string(*max_factor_length)
                                   : std::string());
  }
  return ev;
}

}  // namespace reptree
