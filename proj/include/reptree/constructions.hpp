// constructions.hpp
//
// Explicit alpha+-free colorings of caterpillars and of the embedded binary
// tree.  Every construction is deterministic: the same inputs give the same
// coloring bit for bit.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "reptree/graph.hpp"
#include "reptree/word_gen.hpp"

namespace reptree {

/// Offset tables for the 5-color caterpillar.  Row [t][role] is used for a
/// block whose Pansiot bit is t; role 0 colors the backbone, role 1 the
/// pendants.  Digit j is the offset into the Dejean word for position j of
/// the 18-vertex block.
struct PansiotOffsets {
  static constexpr std::size_t kBlock = 18;
  static constexpr std::array<std::array<std::string_view, 2>, 2> kRows{{
      {"150251053150352053", "033332322221211110"},
      {"143123021324123103", "000044440400004444"},
  }};

  static unsigned offset(unsigned transition, unsigned role, std::size_t j) {
    return static_cast<unsigned>(kRows.at(transition).at(role).at(j) - '0');
  }

  /// Four lines "h[t][l]=digits".
  static std::string dump();
};

/// Thue-Morse backbone, each pendant takes the other color.
ColoredGraph color_cp2(std::size_t n);
ColoredGraph color_cp2(const CaterpillarSpec& spec);

/// Thue-Morse backbone over {0,1}, every pendant colored 2.
ColoredGraph color_cp3_ternary(std::size_t n);
ColoredGraph color_cp3_ternary(const CaterpillarSpec& spec);

/// 18 * blocks backbone vertices, one pendant each, 5 colors.  `dejean`
/// must be 5/4+-free with length >= blocks + 6; by default the
/// lexicographically least such word is generated.
ColoredGraph color_cp3_5letters(std::size_t blocks, std::optional<Word> dejean = std::nullopt);

/// Odd k >= 7: backbone is an (eta+1)-letter Dejean word with
/// eta = ceil(k/2), pendants cycle through the remaining eta - 2 colors.
ColoredGraph color_cp3_odd_k(std::uint32_t k, std::size_t n);

/// Any k >= 5 with at least n backbone vertices: 5 and 6 use the 5-color
/// construction, even k >= 8 reuses the k - 1 coloring.  The palette size of
/// the result is k.
ColoredGraph color_cp3_k(std::uint32_t k, std::size_t n);

struct TreeColoringParams {
  std::size_t t;
  std::size_t depth;

  std::size_t lambda_bits() const { return (t - 1) / 2; }
  std::size_t gamma_count() const { return 2 * t + 2; }
  /// (t+1) * 2^floor((t+1)/2)
  std::uint32_t color_count() const {
    return static_cast<std::uint32_t>((t + 1) << ((t + 1) / 2));
  }
  Color encode(std::uint32_t gamma, std::uint32_t lambda) const {
    return static_cast<Color>((gamma << lambda_bits()) | lambda);
  }
  std::uint32_t gamma_of(Color c) const { return static_cast<std::uint32_t>(c) >> lambda_bits(); }
  std::uint32_t lambda_of(Color c) const {
    return static_cast<std::uint32_t>(c) & ((1u << lambda_bits()) - 1);
  }
  void validate() const;
};

/// (gamma, lambda) coloring of the embedded binary tree truncated at
/// `depth`.  gamma at level l is 2 * w[l / 2] + (l % 2) for a (t+1)-letter
/// Dejean word w; lambda records the last floor((t-1)/2) left/right steps,
/// 0-padded near the root.
ColoredGraph color_tree3(const TreeColoringParams& params,
                         std::optional<Word> dejean = std::nullopt);

enum class Father { First, Second };

/// Given the gamma components of two adjacent vertices of a color_tree3
/// output, tells which one is the father.
Father father_from_gamma(std::uint32_t gamma_a, std::uint32_t gamma_b);

}  // namespace reptree
