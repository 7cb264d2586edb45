#include "reptree/io.hpp"

#include <charconv>

namespace reptree {

namespace {

std::int64_t parse_int(std::string_view s, const std::string& what) {
  std::int64_t value = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc() || ptr != end || s.empty()) {
    throw ParseError(what + ": expected an integer, got '" + std::string(s) + "'");
  }
  return value;
}

}  // namespace

Word parse_word(std::string_view line, std::optional<std::uint32_t> alphabet_size) {
  std::vector<Letter> letters;
  std::size_t field = 0;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r' || line[i] == '\n') {
      ++i;
      continue;
    }
    auto j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r' &&
           line[j] != '\n') {
      ++j;
    }
    const auto value = parse_int(line.substr(i, j - i), "letter " + std::to_string(field));
    if (value < 0 || value > UINT32_MAX) {
      throw ParseError("letter " + std::to_string(field) + ": must be a non-negative integer");
    }
    letters.push_back(static_cast<Letter>(value));
    ++field;
    i = j;
  }
  if (alphabet_size) return Word(std::move(letters), *alphabet_size);
  return Word::from_letters(std::move(letters));
}

std::string format_word(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(w[i]);
  }
  return out;
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, "exponent"), 1);
  const auto num = parse_int(text.substr(0, slash), "exponent numerator");
  const auto den = parse_int(text.substr(slash + 1), "exponent denominator");
  try {
    return Rational(num, den);
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

FreenessSpec parse_spec(std::string_view text) {
  const bool strict = !text.empty() && text.back() == '+';
  if (strict) text.remove_suffix(1);
  try {
    return FreenessSpec(parse_rational(text), strict);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

nlohmann::json graph_to_json(const ColoredGraph& g) {
  nlohmann::json vertices = nlohmann::json::array();
  for (Vertex v = 0; v < g.size(); ++v) {
    nlohmann::json jv;
    jv["id"] = v;
    jv["parent"] = g.parent(v) ? nlohmann::json(*g.parent(v)) : nlohmann::json(nullptr);
    jv["color"] = g.colored(v) ? nlohmann::json(g.color(v)) : nlohmann::json(nullptr);
    nlohmann::json tags = nlohmann::json::object();
    const auto& t = g.tags(v);
    if (t.backbone) tags["backbone"] = *t.backbone;
    if (t.pendant_of) tags["pendant_of"] = *t.pendant_of;
    if (t.level) tags["level"] = *t.level;
    if (t.side) tags["side"] = *t.side == Side::Left ? "left" : "right";
    jv["tags"] = std::move(tags);
    vertices.push_back(std::move(jv));
  }
  return {{"k", g.k()}, {"vertices", std::move(vertices)}};
}

namespace {

std::optional<std::int64_t> optional_int(const nlohmann::json& obj, const char* key,
                                         const std::string& where) {
  if (!obj.contains(key) || obj[key].is_null()) return std::nullopt;
  if (!obj[key].is_number_integer()) throw ParseError(where + "." + key + ": expected integer");
  return obj[key].get<std::int64_t>();
}

}  // namespace

ColoredGraph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("graph: expected a JSON object");
  if (!j.contains("k") || !j["k"].is_number_integer() || j["k"].get<std::int64_t>() < 1) {
    throw ParseError("k: expected a positive integer");
  }
  if (!j.contains("vertices") || !j["vertices"].is_array()) {
    throw ParseError("vertices: expected an array");
  }
  const auto k = j["k"].get<std::uint32_t>();
  const auto& vs = j["vertices"];
  const auto n = vs.size();
  std::vector<std::optional<Vertex>> parents(n);
  std::vector<std::optional<Color>> colors(n);
  std::vector<VertexTags> tags(n);
  std::vector<bool> seen(n, false);

  for (std::size_t i = 0; i < n; ++i) {
    const auto where = "vertices[" + std::to_string(i) + "]";
    const auto& jv = vs[i];
    if (!jv.is_object()) throw ParseError(where + ": expected an object");
    const auto id = optional_int(jv, "id", where);
    if (!id || *id < 0 || static_cast<std::size_t>(*id) >= n) {
      throw ParseError(where + ".id: expected an integer in [0, " + std::to_string(n) + ")");
    }
    if (seen[*id]) throw ParseError(where + ".id: duplicate id " + std::to_string(*id));
    seen[*id] = true;
    if (auto p = optional_int(jv, "parent", where)) {
      if (*p < 0 || static_cast<std::size_t>(*p) >= n) {
        throw ParseError(where + ".parent: no vertex with id " + std::to_string(*p));
      }
      parents[*id] = static_cast<Vertex>(*p);
    }
    if (auto c = optional_int(jv, "color", where)) {
      if (*c < 0 || *c >= k) {
        throw ParseError(where + ".color: " + std::to_string(*c) + " outside [0, " +
                         std::to_string(k) + ")");
      }
      colors[*id] = static_cast<Color>(*c);
    }
    if (jv.contains("tags")) {
      const auto& jt = jv["tags"];
      if (!jt.is_object()) throw ParseError(where + ".tags: expected an object");
      const auto tw = where + ".tags";
      auto& t = tags[*id];
      if (auto b = optional_int(jt, "backbone", tw)) t.backbone = static_cast<std::size_t>(*b);
      if (auto p = optional_int(jt, "pendant_of", tw)) t.pendant_of = static_cast<Vertex>(*p);
      if (auto l = optional_int(jt, "level", tw)) t.level = static_cast<std::size_t>(*l);
      if (jt.contains("side")) {
        const auto& s = jt["side"];
        if (s == "left") {
          t.side = Side::Left;
        } else if (s == "right") {
          t.side = Side::Right;
        } else {
          throw ParseError(tw + ".side: expected \"left\" or \"right\"");
        }
      }
    }
  }

  ColoredGraph g;
  try {
    g = ColoredGraph::from_parents(parents, k);
  } catch (const Error& e) {
    throw ParseError(std::string("vertices: ") + e.what());
  }
  for (Vertex v = 0; v < n; ++v) {
    if (colors[v]) g.set_color(v, *colors[v]);
    g.tags(v) = tags[v];
  }
  return g;
}

ColoredGraph parse_graph(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("graph JSON: ") + e.what());
  }
  return graph_from_json(j);
}

std::string to_dot(const ColoredGraph& g, std::string_view name) {
  std::string out = "graph " + std::string(name) + " {\n  node [shape=circle];\n";
  for (Vertex v = 0; v < g.size(); ++v) {
    out += "  " + std::to_string(v) + " [label=\"" +
           (g.colored(v) ? std::to_string(g.color(v)) : std::string("?")) + "\"";
    if (g.tags(v).pendant_of) out += ", shape=box";
    out += "];\n";
  }
  for (Vertex v = 0; v < g.size(); ++v) {
    if (auto p = g.parent(v)) out += "  " + std::to_string(*p) + " -- " + std::to_string(v) + ";\n";
  }
  out += "}\n";
  return out;
}

nlohmann::json witness_to_json(const RepetitionWitness& w) {
  return {{"start", w.start},
          {"total_length", w.total_length},
          {"period", w.period},
          {"exponent", w.exponent.str()}};
}

nlohmann::json witness_to_json(const PathWitness& w) {
  return {{"vertices", w.vertices},
          {"colors", w.colors},
          {"total_length", w.total_length},
          {"period", w.period},
          {"exponent", w.exponent.str()}};
}

nlohmann::json outcome_to_json(const SearchOutcome& o) {
  nlohmann::json j{{"verdict", to_string(o.verdict)}, {"nodes_visited", o.nodes_visited}};
  if (!o.task_nodes.empty()) j["task_nodes"] = o.task_nodes;
  if (o.coloring) j["graph"] = graph_to_json(*o.coloring);
  return j;
}

nlohmann::json evidence_to_json(const ThresholdEvidence& e) {
  nlohmann::json j{{"family", e.family},
                   {"k", e.k},
                   {"spec", e.spec.str()},
                   {"direction", e.direction == Direction::Lower ? "lower" : "upper"},
                   {"verdict", to_string(e.verdict)},
                   {"holds", e.holds()},
                   {"nodes", e.nodes},
                   {"detail", e.detail}};
  j["n"] = e.n ? nlohmann::json(*e.n) : nlohmann::json(nullptr);
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : e.steps) {
    steps.push_back({{"n", s.n}, {"verdict", to_string(s.verdict)}, {"nodes", s.nodes}});
  }
  j["steps"] = std::move(steps);
  return j;
}

}  // namespace reptree
