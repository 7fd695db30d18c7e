#pragma once

#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "linarr/arrangement.hpp"
#include "linarr/graph.hpp"

namespace linarr {

/// Malformed input text. Line and column are 1-based; 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : std::runtime_error(line == 0 ? what
                                     : "line " + std::to_string(line) + ", column " +
                                           std::to_string(column) + ": " + what),
        line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A label that was never declared.
class ReferenceError : public ParseError {
 public:
  using ParseError::ParseError;
};

enum class GraphFormat { EdgeList, Json };

/// Graph plus the external name of each vertex.
struct LabeledGraph {
  Graph graph;
  std::vector<std::string> labels;

  const std::string& label(Vertex v) const { return labels.at(v); }

  std::optional<Vertex> find(std::string_view name) const {
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == name) return static_cast<Vertex>(i);
    return std::nullopt;
  }

  /// Labels "1".."n".
  static LabeledGraph numbered(Graph g) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < g.order(); ++i) labels.push_back(std::to_string(i + 1));
    return LabeledGraph{std::move(g), std::move(labels)};
  }
};

namespace detail {

class LabelTable {
 public:
  Vertex intern(const std::string& name) {
    auto [it, inserted] = index_.try_emplace(name, static_cast<Vertex>(labels_.size()));
    if (inserted) labels_.push_back(name);
    return it->second;
  }
  std::optional<Vertex> lookup(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  std::vector<std::string>& labels() { return labels_; }

 private:
  std::map<std::string, Vertex> index_;
  std::vector<std::string> labels_;
};

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline LabeledGraph parse_edge_list(const std::string& text) {
  LabelTable table;
  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::istringstream in(text);
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    struct Token {
      std::string text;
      std::size_t column;
    };
    std::vector<Token> tokens;
    for (std::size_t i = 0; i < line.size();) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      tokens.push_back({line.substr(i, j - i), i + 1});
      i = j;
    }
    if (tokens.empty()) continue;
    if (tokens.size() > 2) {
      throw ParseError("expected \"label label\", found " + std::to_string(tokens.size()) +
                           " tokens",
                       lineno, tokens[2].column);
    }
    if (tokens.size() == 1) {
      table.intern(tokens[0].text);
      continue;
    }
    if (tokens[0].text == tokens[1].text) {
      throw ParseError("self-loop on '" + tokens[0].text + "'", lineno, tokens[1].column);
    }
    Vertex a = table.intern(tokens[0].text);
    Vertex b = table.intern(tokens[1].text);
    pairs.emplace_back(a, b);
  }
  auto& labels = table.labels();
  return LabeledGraph{make_graph(labels.size(), pairs), std::move(labels)};
}

inline std::string json_label(const nlohmann::json& j, const char* where) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw ParseError(std::string("expected a string or integer label in ") + where);
}

inline LabeledGraph parse_json_graph(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // Recover line/column from the byte offset.
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("malformed JSON", line, column);
  }
  if (!doc.is_object()) throw ParseError("graph document must be a JSON object", 1, 1);
  LabelTable table;
  const bool declared = doc.contains("vertices");
  if (declared) {
    if (!doc["vertices"].is_array()) throw ParseError("\"vertices\" must be an array");
    for (const auto& v : doc["vertices"]) {
      std::string name = json_label(v, "\"vertices\"");
      if (table.lookup(name)) throw ParseError("duplicate vertex label '" + name + "'");
      table.intern(name);
    }
  }
  std::vector<std::pair<Vertex, Vertex>> pairs;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw ParseError("\"edges\" must be an array");
    for (const auto& e : doc["edges"]) {
      if (!e.is_array() || e.size() != 2) throw ParseError("each edge must be a two-element array");
      std::string a = json_label(e[0], "\"edges\"");
      std::string b = json_label(e[1], "\"edges\"");
      if (a == b) throw ParseError("self-loop on '" + a + "'");
      auto resolve = [&](const std::string& name) -> Vertex {
        if (!declared) return table.intern(name);
        if (auto v = table.lookup(name)) return *v;
        throw ReferenceError("edge references undeclared vertex '" + name + "'");
      };
      Vertex va = resolve(a);
      Vertex vb = resolve(b);
      pairs.emplace_back(va, vb);
    }
  }
  auto& labels = table.labels();
  return LabeledGraph{make_graph(labels.size(), pairs), std::move(labels)};
}

}  // namespace detail

/// Edge list: one "label label" pair per line, a lone label declares a
/// vertex, '#' starts a comment. JSON: {"vertices": [...], "edges": [[u, v], ...]};
/// without "vertices", labels are declared by first appearance.
inline LabeledGraph parse_graph(const std::string& text, GraphFormat format) {
  return format == GraphFormat::Json ? detail::parse_json_graph(text)
                                     : detail::parse_edge_list(text);
}

/// JSON if the first non-blank character is '{', edge list otherwise.
inline GraphFormat sniff_format(std::string_view text) {
  auto t = detail::trim(text);
  return !t.empty() && t.front() == '{' ? GraphFormat::Json : GraphFormat::EdgeList;
}

inline std::string emit_edge_list(const LabeledGraph& lg) {
  const Graph& g = lg.graph;
  // Declarations are needed when edges alone would not reproduce the label
  // order, or when some vertex is isolated.
  std::vector<Vertex> seen_order;
  std::vector<char> seen(g.order(), 0);
  for (const Edge& e : g.edges())
    for (Vertex v : {e.lo, e.hi})
      if (!seen[v]) {
        seen[v] = 1;
        seen_order.push_back(v);
      }
  bool declare = seen_order.size() != g.order();
  for (std::size_t i = 0; !declare && i < seen_order.size(); ++i) declare = seen_order[i] != i;

  std::string out;
  if (declare)
    for (const auto& l : lg.labels) out += l + "\n";
  for (const Edge& e : g.edges()) out += lg.label(e.lo) + " " + lg.label(e.hi) + "\n";
  return out;
}

inline nlohmann::ordered_json graph_to_json(const LabeledGraph& lg) {
  nlohmann::ordered_json doc;
  doc["vertices"] = lg.labels;
  auto edges = nlohmann::ordered_json::array();
  for (const Edge& e : lg.graph.edges()) edges.push_back({lg.label(e.lo), lg.label(e.hi)});
  doc["edges"] = std::move(edges);
  return doc;
}

inline std::string emit_graph(const LabeledGraph& lg, GraphFormat format) {
  return format == GraphFormat::Json ? graph_to_json(lg).dump(2) + "\n" : emit_edge_list(lg);
}

/// "a,e,b,d,c": labels in position order.
inline Arrangement parse_arrangement(const LabeledGraph& lg, std::string_view text) {
  std::vector<Vertex> order;
  std::size_t column = 1;
  for (std::string_view rest = text;;) {
    auto comma = rest.find(',');
    auto token = detail::trim(rest.substr(0, comma));
    if (token.empty()) throw ParseError("empty label in arrangement", 1, column);
    auto v = lg.find(token);
    if (!v) throw ReferenceError("unknown label '" + std::string(token) + "' in arrangement", 1, column);
    order.push_back(*v);
    if (comma == std::string_view::npos) break;
    column += comma + 1;
    rest.remove_prefix(comma + 1);
  }
  if (order.size() != lg.graph.order()) {
    throw ValidationError("arrangement lists " + std::to_string(order.size()) +
                          " vertices but the graph has " + std::to_string(lg.graph.order()));
  }
  return Arrangement::from_order(std::move(order));
}

inline std::string format_arrangement(const LabeledGraph& lg, const Arrangement& arr) {
  std::string out;
  for (Vertex v : arr.order()) {
    if (!out.empty()) out += ',';
    out += lg.label(v);
  }
  return out;
}

/// "a-b,b-c,c-a": comma-separated edges, endpoints joined by '-'.
inline EdgeSubset parse_edge_subset(const LabeledGraph& lg, std::string_view text) {
  EdgeSubset out;
  std::size_t column = 1;
  for (std::string_view rest = text;;) {
    auto comma = rest.find(',');
    auto token = detail::trim(rest.substr(0, comma));
    auto dash = token.find('-');
    if (dash == std::string_view::npos) throw ParseError("expected edge \"u-v\"", 1, column);
    auto a = detail::trim(token.substr(0, dash));
    auto b = detail::trim(token.substr(dash + 1));
    auto va = lg.find(a);
    auto vb = lg.find(b);
    if (!va || !vb) {
      throw ReferenceError("unknown label '" + std::string(va ? b : a) + "' in edge list", 1,
                           column);
    }
    if (*va == *vb) throw ValidationError("self-loop in edge list");
    out.edges.emplace_back(*va, *vb);
    if (comma == std::string_view::npos) break;
    column += comma + 1;
    rest.remove_prefix(comma + 1);
  }
  return out;
}

inline std::string format_edge(const LabeledGraph& lg, const Edge& e) {
  return "{" + lg.label(e.lo) + "," + lg.label(e.hi) + "}";
}

}  // namespace linarr
