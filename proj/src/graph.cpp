#include "reptree/graph.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <limits>
#include <set>
#include <thread>

namespace reptree {

ColoredGraph ColoredGraph::from_parents(const std::vector<std::optional<Vertex>>& parents,
                                        std::uint32_t k) {
  const auto n = parents.size();
  if (n == 0) throw Error("graph has no vertices");
  std::optional<Vertex> root;
  std::vector<std::vector<Vertex>> children(n);
  for (Vertex v = 0; v < n; ++v) {
    if (!parents[v]) {
      if (root) {
        throw Error("vertices " + std::to_string(*root) + " and " + std::to_string(v) +
                    " both have no parent");
      }
      root = v;
    } else if (*parents[v] >= n || *parents[v] == v) {
      throw Error("vertex " + std::to_string(v) + " has invalid parent " +
                  std::to_string(*parents[v]));
    } else {
      children[*parents[v]].push_back(v);
    }
  }
  if (!root) throw Error("graph has no root (a vertex with null parent)");

  std::vector<bool> seen(n, false);
  std::vector<Vertex> todo{*root};
  seen[*root] = true;
  std::size_t reached = 1;
  while (!todo.empty()) {
    const auto v = todo.back();
    todo.pop_back();
    for (auto c : children[v]) {
      if (!seen[c]) {
        seen[c] = true;
        ++reached;
        todo.push_back(c);
      }
    }
  }
  if (reached != n) throw Error("parent links contain a cycle or do not form a single tree");

  ColoredGraph g(k);
  g.parent_ = parents;
  g.adjacency_.assign(n, {});
  g.color_.assign(n, kUncolored);
  g.tags_.assign(n, {});
  for (Vertex v = 0; v < n; ++v) {
    if (parents[v]) {
      g.adjacency_[v].push_back(*parents[v]);
      g.adjacency_[*parents[v]].push_back(v);
    }
  }
  for (auto& adj : g.adjacency_) std::sort(adj.begin(), adj.end());
  return g;
}

Vertex ColoredGraph::add_vertex(std::optional<Vertex> parent, VertexTags tags) {
  const auto v = static_cast<Vertex>(parent_.size());
  if (parent) {
    if (*parent >= v) throw Error("parent " + std::to_string(*parent) + " does not exist");
    adjacency_[*parent].push_back(v);
    std::sort(adjacency_[*parent].begin(), adjacency_[*parent].end());
  } else if (v != 0) {
    throw Error("only the first vertex may be a root");
  }
  parent_.push_back(parent);
  adjacency_.emplace_back();
  if (parent) adjacency_.back().push_back(*parent);
  color_.push_back(kUncolored);
  tags_.push_back(tags);
  return v;
}

std::size_t ColoredGraph::max_degree() const {
  std::size_t d = 0;
  for (const auto& adj : adjacency_) d = std::max(d, adj.size());
  return d;
}

void ColoredGraph::set_color(Vertex v, Color c) {
  if (c < 0 || static_cast<std::uint32_t>(c) >= k_) {
    throw Error("color " + std::to_string(c) + " of vertex " + std::to_string(v) +
                " outside palette of size " + std::to_string(k_));
  }
  color_[v] = c;
}

void ColoredGraph::clear_colors() { std::fill(color_.begin(), color_.end(), kUncolored); }

std::size_t ColoredGraph::colors_used() const {
  std::set<Color> used;
  for (auto c : color_) {
    if (c != kUncolored) used.insert(c);
  }
  return used.size();
}

CaterpillarSpec CaterpillarSpec::uniform(std::size_t n, std::size_t pendants, bool max_degree3) {
  return {n, std::vector<std::size_t>(n, pendants), max_degree3};
}

void CaterpillarSpec::validate() const {
  if (backbone_length < 1) throw Error("caterpillar backbone must have at least one vertex");
  if (pendant_counts.size() != backbone_length) {
    throw Error("caterpillar needs one pendant count per backbone vertex (" +
                std::to_string(backbone_length) + "), got " +
                std::to_string(pendant_counts.size()));
  }
  if (max_degree3) {
    for (std::size_t i = 0; i < backbone_length; ++i) {
      if (pendant_counts[i] > 1) {
        throw Error("backbone vertex " + std::to_string(i) +
                    " has more than one pendant in a max-degree-3 caterpillar");
      }
    }
  }
}

ColoredGraph build_caterpillar(const CaterpillarSpec& spec) {
  spec.validate();
  ColoredGraph g;
  for (std::size_t i = 0; i < spec.backbone_length; ++i) {
    VertexTags tags;
    tags.backbone = i;
    g.add_vertex(i == 0 ? std::nullopt : std::optional<Vertex>(static_cast<Vertex>(i - 1)), tags);
  }
  for (std::size_t i = 0; i < spec.backbone_length; ++i) {
    for (std::size_t p = 0; p < spec.pendant_counts[i]; ++p) {
      VertexTags tags;
      tags.pendant_of = static_cast<Vertex>(i);
      g.add_vertex(static_cast<Vertex>(i), tags);
    }
  }
  return g;
}

ColoredGraph build_tree(const TreeSpec& spec) {
  ColoredGraph g;
  VertexTags root_tags;
  root_tags.level = 0;
  g.add_vertex(std::nullopt, root_tags);

  if (const auto* bin = std::get_if<EmbeddedBinaryTree>(&spec)) {
    for (Vertex v = 0; v < g.size(); ++v) {
      const auto level = *g.tags(v).level;
      if (level >= bin->depth) continue;
      for (auto side : {Side::Left, Side::Right}) {
        VertexTags tags;
        tags.level = level + 1;
        tags.side = side;
        g.add_vertex(v, tags);
      }
    }
    return g;
  }

  const auto& ball = std::get<Ball>(spec);
  if (ball.degree < 3) throw Error("ball degree must be at least 3");
  for (Vertex v = 0; v < g.size(); ++v) {
    const auto level = *g.tags(v).level;
    if (level >= ball.radius) continue;
    const auto children = level == 0 ? ball.degree : ball.degree - 1;
    for (std::size_t c = 0; c < children; ++c) {
      VertexTags tags;
      tags.level = level + 1;
      g.add_vertex(v, tags);
    }
  }
  return g;
}

namespace {

using Frame = detail::PathFrame;

// Depth-first walk over the simple paths starting at `start` that stay on
// colored vertices.  With `shortest`, the walk keeps going after a hit and
// only looks for shorter ones; otherwise it stops at the first hit.  The
// best path found is left in `path`.
bool walk(const ColoredGraph& g, Vertex start, const FreenessSpec& spec, std::size_t limit,
          bool shortest, std::vector<Frame>& stack, IncrementalPeriods& periods,
          std::vector<Vertex>* path, std::size_t* period) {
  stack.clear();
  periods.clear();
  stack.push_back({start, start, 0});
  periods.push(static_cast<Letter>(g.color(start)));
  bool found = false;
  while (!stack.empty()) {
    auto& top = stack.back();
    const auto nbrs = g.neighbors(top.vertex);
    if (stack.size() >= limit || top.next >= nbrs.size()) {
      stack.pop_back();
      periods.pop();
      continue;
    }
    const auto u = nbrs[top.next++];
    if (u == top.from || !g.colored(u)) continue;
    const auto from = top.vertex;
    const auto q = periods.push(static_cast<Letter>(g.color(u)));
    stack.push_back({u, from, 0});
    if (spec.forbids(stack.size(), q)) {
      found = true;
      if (path) {
        path->clear();
        for (const auto& f : stack) path->push_back(f.vertex);
        *period = q;
      }
      if (!shortest) return true;
      limit = stack.size() - 1;
    }
  }
  return found;
}

PathWitness make_witness(const ColoredGraph& g, std::vector<Vertex> path, std::size_t period) {
  PathWitness w{std::move(path), {}, period, 0, Rational(1, 1)};
  for (auto v : w.vertices) w.colors.push_back(g.color(v));
  w.total_length = w.vertices.size();
  w.exponent = Rational(static_cast<std::int64_t>(w.total_length), static_cast<std::int64_t>(period));
  return w;
}

std::size_t limit_of(std::optional<std::size_t> max_factor_length) {
  return max_factor_length.value_or(std::numeric_limits<std::size_t>::max());
}

}  // namespace

std::optional<PathWitness> check_colored(const ColoredGraph& g, const FreenessSpec& spec,
                                         std::optional<std::size_t> max_factor_length,
                                         unsigned threads) {
  for (Vertex v = 0; v < g.size(); ++v) {
    if (!g.colored(v)) throw Error("vertex " + std::to_string(v) + " is uncolored");
  }
  const auto limit = limit_of(max_factor_length);
  const auto n = static_cast<Vertex>(g.size());

  if (threads <= 1) {
    std::vector<Frame> stack;
    IncrementalPeriods periods;
    std::vector<Vertex> path;
    std::size_t period = 0;
    for (Vertex s = 0; s < n; ++s) {
      if (walk(g, s, spec, limit, true, stack, periods, &path, &period)) {
        return make_witness(g, std::move(path), period);
      }
    }
    return std::nullopt;
  }

  // Workers skip starts beyond the smallest start that already has a hit, so
  // the answer is the sequential one.
  std::atomic<Vertex> next{0};
  std::atomic<Vertex> best_start{n};
  std::vector<std::optional<PathWitness>> hits(n);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      std::vector<Frame> stack;
      IncrementalPeriods periods;
      std::vector<Vertex> path;
      std::size_t period = 0;
      for (auto s = next++; s < n; s = next++) {
        if (s > best_start.load()) break;
        if (walk(g, s, spec, limit, true, stack, periods, &path, &period)) {
          hits[s] = make_witness(g, path, period);
          auto cur = best_start.load();
          while (s < cur && !best_start.compare_exchange_weak(cur, s)) {
          }
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  const auto b = best_start.load();
  if (b == n) return std::nullopt;
  return hits[b];
}

std::optional<PathWitness> check_extension(const ColoredGraph& g, Vertex v,
                                           const FreenessSpec& spec,
                                           std::optional<std::size_t> max_factor_length) {
  if (!g.colored(v)) throw Error("vertex " + std::to_string(v) + " is uncolored");
  std::vector<Frame> stack;
  IncrementalPeriods periods;
  std::vector<Vertex> path;
  std::size_t period = 0;
  if (walk(g, v, spec, limit_of(max_factor_length), false, stack, periods, &path, &period)) {
    return make_witness(g, std::move(path), period);
  }
  return std::nullopt;
}

bool ExtensionChecker::violated(const ColoredGraph& g, Vertex v, const FreenessSpec& spec,
                                std::size_t max_factor_length) {
  return walk(g, v, spec, max_factor_length, false, stack_, periods_, nullptr, nullptr);
}

std::uint64_t ball_size(std::size_t delta, std::size_t radius) {
  if (delta < 3) throw Error("ball degree must be at least 3");
  // 1 + delta * (1 + (delta-1) + ... + (delta-1)^(radius-1))
  std::uint64_t layer = delta;
  std::uint64_t total = 1;
  for (std::size_t r = 1; r <= radius; ++r) {
    total += layer;
    layer *= delta - 1;
  }
  return total;
}

std::uint64_t pigeonhole_colors(std::size_t delta, std::size_t t) {
  if (delta < 3) throw Error("pigeonhole bound needs delta >= 3");
  if (t < 2) throw Error("pigeonhole bound needs t >= 2");
  std::uint64_t power = 1;
  for (std::size_t i = 0; i < t / 2; ++i) power *= delta - 1;
  return delta * (power - 1) / (delta - 2);
}

std::vector<std::size_t> distances_from(const ColoredGraph& g, Vertex u) {
  std::vector<std::size_t> dist(g.size(), std::numeric_limits<std::size_t>::max());
  std::deque<Vertex> queue{u};
  dist[u] = 0;
  while (!queue.empty()) {
    const auto v = queue.front();
    queue.pop_front();
    for (auto w : g.neighbors(v)) {
      if (dist[w] == std::numeric_limits<std::size_t>::max()) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::size_t distance(const ColoredGraph& g, Vertex u, Vertex v) { return distances_from(g, u)[v]; }

std::size_t diameter(const ColoredGraph& g) {
  if (g.size() == 0) return 0;
  auto d0 = distances_from(g, 0);
  const auto far = static_cast<Vertex>(std::max_element(d0.begin(), d0.end()) - d0.begin());
  auto d1 = distances_from(g, far);
  return *std::max_element(d1.begin(), d1.end());
}

std::vector<Vertex> tree_path(const ColoredGraph& g, Vertex u, Vertex v) {
  // Walk both ends up to their common ancestor using depths from the root.
  std::vector<std::size_t> depth(g.size(), 0);
  for (Vertex x = 0; x < g.size(); ++x) {
    std::size_t d = 0;
    for (auto y = g.parent(x); y; y = g.parent(*y)) ++d;
    depth[x] = d;
  }
  std::vector<Vertex> left{u};
  std::vector<Vertex> right{v};
  while (left.back() != right.back()) {
    if (depth[left.back()] >= depth[right.back()]) {
      left.push_back(*g.parent(left.back()));
    } else {
      right.push_back(*g.parent(right.back()));
    }
  }
  right.pop_back();
  left.insert(left.end(), right.rbegin(), right.rend());
  return left;
}

}  // namespace reptree
