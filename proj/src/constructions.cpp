#include "reptree/constructions.hpp"

namespace reptree {

std::string PansiotOffsets::dump() {
  std::string out;
  for (unsigned t = 0; t < 2; ++t) {
    for (unsigned role = 0; role < 2; ++role) {
      out += "h[" + std::to_string(t) + "][" + std::to_string(role) + "]=";
      out += kRows[t][role];
      out += '\n';
    }
  }
  return out;
}

namespace {

// Colors the backbone with `backbone` and every pendant with pendant(color
// of its backbone vertex, backbone index).
template <typename PendantColor>
ColoredGraph color_caterpillar(const CaterpillarSpec& spec, std::uint32_t k, const Word& backbone,
                               PendantColor pendant) {
  auto g = build_caterpillar(spec);
  g.set_k(k);
  for (Vertex v = 0; v < g.size(); ++v) {
    const auto& tags = g.tags(v);
    if (tags.backbone) {
      g.set_color(v, static_cast<Color>(backbone[*tags.backbone]));
    } else {
      const auto b = *tags.pendant_of;
      g.set_color(v, pendant(static_cast<Color>(backbone[b]), b));
    }
  }
  return g;
}

}  // namespace

ColoredGraph color_cp2(std::size_t n) { return color_cp2(CaterpillarSpec::uniform(n, 1, true)); }

ColoredGraph color_cp2(const CaterpillarSpec& spec) {
  return color_caterpillar(spec, 2, thue_morse(spec.backbone_length),
                           [](Color c, std::size_t) { return 1 - c; });
}

ColoredGraph color_cp3_ternary(std::size_t n) {
  return color_cp3_ternary(CaterpillarSpec::uniform(n, 1, true));
}

ColoredGraph color_cp3_ternary(const CaterpillarSpec& spec) {
  return color_caterpillar(spec, 3, thue_morse(spec.backbone_length),
                           [](Color, std::size_t) { return Color{2}; });
}

ColoredGraph color_cp3_5letters(std::size_t blocks, std::optional<Word> dejean) {
  if (blocks < 1) throw Error("need at least one block");
  const Word w = dejean ? std::move(*dejean) : dejean_word(5, blocks + 6);
  if (w.size() < blocks + 6) {
    throw Error("5-letter word of length " + std::to_string(w.size()) + " is too short for " +
                std::to_string(blocks) + " blocks");
  }
  const auto code = pansiot_code(w);
  constexpr auto B = PansiotOffsets::kBlock;

  auto g = build_caterpillar(CaterpillarSpec::uniform(B * blocks, 1, true));
  g.set_k(5);
  for (Vertex v = 0; v < g.size(); ++v) {
    const auto& tags = g.tags(v);
    const unsigned role = tags.backbone ? 0 : 1;
    const std::size_t pos = tags.backbone ? *tags.backbone : *tags.pendant_of;
    const auto i = pos / B;
    const auto j = pos % B;
    g.set_color(v, static_cast<Color>(w[i + PansiotOffsets::offset(code[i], role, j)]));
  }
  return g;
}

ColoredGraph color_cp3_odd_k(std::uint32_t k, std::size_t n) {
  if (k < 7 || k % 2 == 0) throw Error("odd-k caterpillar coloring needs odd k >= 7");
  const std::uint32_t eta = (k + 1) / 2;
  const auto backbone = dejean_word(eta + 1, n);
  return color_caterpillar(CaterpillarSpec::uniform(n, 1, true), k, backbone,
                           [eta](Color, std::size_t i) {
                             return static_cast<Color>(eta + 1 + i % (eta - 2));
                           });
}

ColoredGraph color_cp3_k(std::uint32_t k, std::size_t n) {
  if (k < 5) throw Error("caterpillar coloring by k needs k >= 5");
  ColoredGraph g = k <= 6 ? color_cp3_5letters((n + PansiotOffsets::kBlock - 1) / PansiotOffsets::kBlock)
                          : color_cp3_odd_k(k % 2 == 1 ? k : k - 1, n);
  g.set_k(k);
  return g;
}

void TreeColoringParams::validate() const {
  if (t < 4) throw Error("tree coloring needs t >= 4");
  if (depth < 1) throw Error("tree coloring needs depth >= 1");
}

ColoredGraph color_tree3(const TreeColoringParams& params, std::optional<Word> dejean) {
  params.validate();
  const auto letters = static_cast<std::uint32_t>(params.t + 1);
  const std::size_t needed = (params.depth + 2) / 2 + 1;
  const Word w = dejean ? std::move(*dejean) : dejean_word(letters, needed);
  if (w.size() * 2 < params.depth + 1) throw Error("Dejean word too short for the tree depth");
  if (w.alphabet_size() > letters) throw Error("Dejean word uses more than t + 1 letters");

  auto g = build_tree(EmbeddedBinaryTree{params.depth});
  g.set_k(params.color_count());
  const std::uint32_t mask = (1u << params.lambda_bits()) - 1;
  std::vector<std::uint32_t> lambda(g.size(), 0);
  // Breadth-first ids: the parent is always colored first.
  for (Vertex v = 0; v < g.size(); ++v) {
    const auto level = *g.tags(v).level;
    if (auto p = g.parent(v)) {
      const std::uint32_t step = g.tags(v).side == Side::Right ? 1 : 0;
      lambda[v] = ((lambda[*p] << 1) | step) & mask;
    }
    const auto gamma = static_cast<std::uint32_t>(2 * w[level / 2] + level % 2);
    g.set_color(v, params.encode(gamma, lambda[v]));
  }
  return g;
}

Father father_from_gamma(std::uint32_t gamma_a, std::uint32_t gamma_b) {
  const auto letter_a = gamma_a / 2;
  const auto letter_b = gamma_b / 2;
  const auto sub_a = gamma_a % 2;
  const auto sub_b = gamma_b % 2;
  if (sub_a == sub_b) {
    throw Error("gamma components " + std::to_string(gamma_a) + " and " + std::to_string(gamma_b) +
                " cannot sit on adjacent levels");
  }
  // Same letter: the pair is m(i) = i_0 i_1 and the father holds i_0.
  // Different letters: the pair straddles two images, the father holds i_1.
  const unsigned father_sub = letter_a == letter_b ? 0 : 1;
  return sub_a == father_sub ? Father::First : Father::Second;
}

}  // namespace reptree
