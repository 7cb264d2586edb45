// graph.hpp
//
// Vertex-colored trees and the families used throughout: caterpillars,
// the embedded binary tree and balls of Delta-regular trees.  A factor of a
// colored tree is the color sequence along a simple path.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "reptree/words.hpp"

namespace reptree {

using Vertex = std::uint32_t;
using Color = std::int32_t;
inline constexpr Color kUncolored = -1;

enum class Side { Left, Right };

struct VertexTags {
  std::optional<std::size_t> backbone;  // index along the backbone
  std::optional<Vertex> pendant_of;     // backbone vertex a pendant hangs from
  std::optional<std::size_t> level;     // depth below the root / center
  std::optional<Side> side;             // left or right son

  friend bool operator==(const VertexTags&, const VertexTags&) = default;
};

/// A tree with an optional color per vertex.  Every vertex but the root has
/// exactly one parent; the builders put the root at id 0.  Neighbor lists
/// are sorted by id.
class ColoredGraph {
 public:
  explicit ColoredGraph(std::uint32_t k = 1) : k_(k) {}

  /// Builds from a parent array; exactly one entry (the root) must be empty
  /// and the parent links must reach it from every vertex.
  static ColoredGraph from_parents(const std::vector<std::optional<Vertex>>& parents,
                                   std::uint32_t k);

  /// Adds a vertex hanging from an existing one (or the root if the graph
  /// is empty) and returns its id.
  Vertex add_vertex(std::optional<Vertex> parent, VertexTags tags = {});

  std::size_t size() const { return parent_.size(); }
  std::uint32_t k() const { return k_; }
  void set_k(std::uint32_t k) { k_ = k; }

  std::optional<Vertex> parent(Vertex v) const { return parent_[v]; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  std::size_t max_degree() const;

  Color color(Vertex v) const { return color_[v]; }
  bool colored(Vertex v) const { return color_[v] != kUncolored; }
  void set_color(Vertex v, Color c);
  void clear_color(Vertex v) { color_[v] = kUncolored; }
  void clear_colors();
  std::span<const Color> colors() const { return color_; }
  /// Number of distinct colors actually used.
  std::size_t colors_used() const;

  const VertexTags& tags(Vertex v) const { return tags_[v]; }
  VertexTags& tags(Vertex v) { return tags_[v]; }

  friend bool operator==(const ColoredGraph&, const ColoredGraph&) = default;

 private:
  std::uint32_t k_;
  std::vector<std::optional<Vertex>> parent_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Color> color_;
  std::vector<VertexTags> tags_;
};

struct CaterpillarSpec {
  std::size_t backbone_length;
  std::vector<std::size_t> pendant_counts;
  bool max_degree3 = false;

  /// Every backbone vertex with the same number of pendants.
  static CaterpillarSpec uniform(std::size_t n, std::size_t pendants, bool max_degree3 = false);
  void validate() const;
};

struct EmbeddedBinaryTree {
  std::size_t depth;
};
struct Ball {
  std::size_t degree;
  std::size_t radius;
};
using TreeSpec = std::variant<EmbeddedBinaryTree, Ball>;

struct PathWitness {
  std::vector<Vertex> vertices;
  std::vector<Color> colors;
  std::size_t period;
  std::size_t total_length;
  Rational exponent;
};

/// Backbone ids 0..n-1 in path order, then pendants in backbone order.
ColoredGraph build_caterpillar(const CaterpillarSpec& spec);

/// Ids in breadth-first order, left son before right son.
ColoredGraph build_tree(const TreeSpec& spec);

/// A forbidden factor with minimal start vertex, then minimal length.
/// Throws if a vertex is uncolored.  `threads` > 1 splits start vertices
/// across workers without changing the result.
std::optional<PathWitness> check_colored(const ColoredGraph& g, const FreenessSpec& spec,
                                         std::optional<std::size_t> max_factor_length = {},
                                         unsigned threads = 1);

/// A forbidden factor with an endpoint at `v`, walking colored vertices
/// only.  If every assignment step passes, the final coloring passes
/// check_colored as long as the colored vertices stay connected.
std::optional<PathWitness> check_extension(const ColoredGraph& g, Vertex v,
                                           const FreenessSpec& spec,
                                           std::optional<std::size_t> max_factor_length = {});

namespace detail {
struct PathFrame {
  Vertex vertex;
  Vertex from;
  std::uint32_t next;
};
}  // namespace detail

/// Reusable scratch space for repeated extension checks (the search engine
/// runs one per assignment).
class ExtensionChecker {
 public:
  explicit ExtensionChecker(const ColoredGraph& g) { stack_.reserve(g.size()); }
  /// Same contract as check_extension, without building a witness.
  bool violated(const ColoredGraph& g, Vertex v, const FreenessSpec& spec,
                std::size_t max_factor_length);

 private:
  std::vector<detail::PathFrame> stack_;
  IncrementalPeriods periods_;
};

/// Number of colors that cannot give a (1+1/t)-free coloring of T_Delta:
/// one less than the size of a radius floor(t/2) ball.
std::uint64_t pigeonhole_colors(std::size_t delta, std::size_t t);

/// Vertex count of build_tree(Ball{delta, radius}).
std::uint64_t ball_size(std::size_t delta, std::size_t radius);

std::size_t distance(const ColoredGraph& g, Vertex u, Vertex v);
std::vector<std::size_t> distances_from(const ColoredGraph& g, Vertex u);
std::size_t diameter(const ColoredGraph& g);

/// The unique path from u to v, both included.
std::vector<Vertex> tree_path(const ColoredGraph& g, Vertex u, Vertex v);

}  // namespace reptree
