// search.hpp
//
// Exhaustive backtracking over k-colorings of finite trees.  An Unavoidable
// outcome means the whole canonical search tree was exhausted, i.e. no
// spec-free k-coloring of the structure exists: a machine-checked lower
// bound on the repetition threshold of any class containing it.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "reptree/graph.hpp"

namespace reptree {

using StructureSpec = std::variant<CaterpillarSpec, TreeSpec>;

ColoredGraph build_structure(const StructureSpec& s);
std::string describe(const StructureSpec& s);

/// Caterpillars: backbone 0, its pendants, backbone 1, its pendants, ...
/// Trees: breadth-first from the root or center.
std::vector<Vertex> default_vertex_order(const StructureSpec& s, const ColoredGraph& g);

/// Throws unless `order` is a permutation in which every vertex after the
/// first has an earlier neighbor.
void validate_vertex_order(const ColoredGraph& g, std::span<const Vertex> order);

/// 4t for trees searched against 1 + 1/t, unbounded otherwise.
std::optional<std::size_t> default_max_factor_length(const StructureSpec& s,
                                                     const FreenessSpec& spec);

inline constexpr std::uint64_t kDefaultSearchBudget = 1'000'000'000;

struct SearchProblem {
  StructureSpec structure;
  std::uint32_t k;
  FreenessSpec spec;
  std::vector<Vertex> vertex_order;  // empty: default_vertex_order
  std::optional<std::uint64_t> node_budget = kDefaultSearchBudget;
  /// Pruning bound on factor length during the search.  Completed colorings
  /// always get the full check, so any bound keeps the verdict exact.
  std::optional<std::size_t> max_factor_length;
};

struct SearchOptions {
  /// Vertex i may only take a color up to 1 + the largest color used
  /// before it.  Sound because freeness is invariant under renaming colors.
  bool symmetry_breaking = true;
  /// > 1 splits the tree at the first two assignment levels.  Each task gets
  /// the full node budget.
  unsigned threads = 1;
  std::uint64_t progress_interval = 10'000'000;
  std::function<void(std::uint64_t nodes)> progress;
};

enum class Verdict { Unavoidable, Colorable, Inconclusive };
std::string to_string(Verdict v);

struct SearchOutcome {
  Verdict verdict;
  std::optional<ColoredGraph> coloring;  // set iff Colorable
  std::uint64_t nodes_visited = 0;
  std::vector<std::uint64_t> task_nodes;  // parallel mode only
};

/// Canonical depth-first search.  Colorable returns the first completed
/// coloring in canonical order, re-verified with check_colored.
SearchOutcome prove_unavoidable(const SearchProblem& p, const SearchOptions& opts = {});

struct FindOptions {
  SearchOptions search;
  /// Randomized color order with restarts every `restart_nodes` nodes.
  std::optional<std::uint64_t> seed;
  std::uint64_t restart_nodes = 1'000'000;
};

/// Existence search.  Never reports Unavoidable: an exhausted tree comes
/// back as Inconclusive.
SearchOutcome find_coloring(const SearchProblem& p, const FindOptions& opts = {});

/// Instances indexed by a size parameter, each containing the previous one.
struct Family {
  std::string name;
  std::function<StructureSpec(std::size_t)> make;
};

/// "cp3-full" (n backbone vertices, one pendant each), "cp-spec" (n
/// backbone vertices, `pendants` each), "cubic-ball" (radius n),
/// "binary-tree" (depth n).
Family family_by_name(const std::string& name, std::size_t pendants = 1);

enum class Direction { Lower, Upper };

struct BracketStep {
  std::size_t n;
  Verdict verdict;
  std::uint64_t nodes;
};

/// Lower evidence carries an Unavoidable instance; upper evidence carries a
/// coloring that passed check_colored.
struct ThresholdEvidence {
  std::string family;
  std::uint32_t k;
  FreenessSpec spec;
  Direction direction;
  Verdict verdict;  // Unavoidable / Colorable when the evidence holds
  std::optional<std::size_t> n;
  std::vector<BracketStep> steps;
  std::optional<ColoredGraph> coloring;
  std::uint64_t nodes = 0;
  std::string detail;

  bool holds() const {
    return direction == Direction::Lower ? verdict == Verdict::Unavoidable
                                         : verdict == Verdict::Colorable;
  }
};

/// Runs prove_unavoidable for n = n_start, n_start + 1, ... and stops at the
/// first Unavoidable instance (the smallest such n in range), at the first
/// Inconclusive one, or past n_max.
ThresholdEvidence rt_bracket(const Family& family, std::uint32_t k, const FreenessSpec& spec,
                             std::size_t n_start, std::size_t n_max,
                             std::optional<std::uint64_t> budget = kDefaultSearchBudget,
                             const SearchOptions& opts = {},
                             std::optional<std::size_t> max_factor_length = std::nullopt);

/// Upper evidence from a given coloring: verdict Colorable iff the full
/// check passes (bounded by max_factor_length when given).
ThresholdEvidence upper_evidence(std::string family, const ColoredGraph& coloring,
                                 const FreenessSpec& spec,
                                 std::optional<std::size_t> max_factor_length = std::nullopt);

}  // namespace reptree
