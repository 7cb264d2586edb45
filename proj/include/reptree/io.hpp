// io.hpp
//
// Text formats: words as space-separated letters, exponent specs as "a/b"
// or "a/b+", colored trees as JSON
//   {"k": int, "vertices": [{"id": int, "parent": int|null,
//                            "color": int|null, "tags": {...}}]}
// and Graphviz DOT for figures.

#pragma once

#include <json.hpp>
#include <string>
#include <string_view>

#include "reptree/graph.hpp"
#include "reptree/search.hpp"
#include "reptree/words.hpp"

namespace reptree {

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Alphabet size defaults to max letter + 1.
Word parse_word(std::string_view line, std::optional<std::uint32_t> alphabet_size = std::nullopt);
std::string format_word(const Word& w);

FreenessSpec parse_spec(std::string_view text);
Rational parse_rational(std::string_view text);

nlohmann::json graph_to_json(const ColoredGraph& g);
ColoredGraph graph_from_json(const nlohmann::json& j);
ColoredGraph parse_graph(std::string_view text);

std::string to_dot(const ColoredGraph& g, std::string_view name = "G");

nlohmann::json witness_to_json(const RepetitionWitness& w);
nlohmann::json witness_to_json(const PathWitness& w);
nlohmann::json outcome_to_json(const SearchOutcome& o);
nlohmann::json evidence_to_json(const ThresholdEvidence& e);

}  // namespace reptree
