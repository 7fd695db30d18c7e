#pragma once

#include <algorithm>
#include <cstdio>
#include <string>

#include "linarr/arrangement.hpp"
#include "linarr/io.hpp"

namespace linarr {

enum class DiagramFormat { Dot, Tikz, Svg };

namespace detail {

inline std::string fixed(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

inline std::string dot_id(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

inline std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

inline std::string tikz_name(Vertex v) { return "v" + std::to_string(v); }

inline std::string tex_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '_' || c == '&' || c == '%' || c == '$' || c == '#' || c == '{' || c == '}') out += '\\';
    out += c;
  }
  return out;
}

// Arcs are cubic curves with both control points at height kArcRise * span
// above the baseline. With height proportional to span, an arc nested inside
// another stays strictly below it away from shared endpoints, and spans that
// interleave always produce intersecting curves.
inline constexpr double kArcRise = 0.5;

inline std::string emit_dot(const LabeledGraph& lg, const Arrangement& arr) {
  const Graph& g = lg.graph;
  std::string out = "graph arrangement {\n";
  out += "  layout=neato;\n  splines=curved;\n  node [shape=circle];\n";
  for (Vertex v : arr.order()) {
    out += "  " + dot_id(lg.label(v)) + " [pos=\"" + std::to_string(arr.position(v)) + ",0!\"];\n";
  }
  out += "  { rank=same;";
  for (Vertex v : arr.order()) out += " " + dot_id(lg.label(v)) + ";";
  out += " }\n";
  for (const Edge& e : g.edges()) {
    const Span s = span_of(arr, e);
    out += "  " + dot_id(lg.label(arr.at(s.left))) + " -- " + dot_id(lg.label(arr.at(s.right))) +
           ";\n";
  }
  out += "}\n";
  return out;
}

inline std::string emit_tikz(const LabeledGraph& lg, const Arrangement& arr) {
  const Graph& g = lg.graph;
  std::string out = "\\begin{tikzpicture}\n";
  for (Vertex v : arr.order()) {
    out += "  \\node[circle, draw, inner sep=1.5pt, label=below:{$" + tex_escape(lg.label(v)) +
           "$}] (" + tikz_name(v) + ") at (" + std::to_string(arr.position(v) - 1) + ",0) {};\n";
  }
  for (const Edge& e : g.edges()) {
    const Span s = span_of(arr, e);
    const Vertex l = arr.at(s.left);
    const Vertex r = arr.at(s.right);
    if (s.length() == 1) {
      out += "  \\draw (" + tikz_name(l) + ") -- (" + tikz_name(r) + ");\n";
    } else {
      const std::string h = fixed(kArcRise * s.length());
      out += "  \\draw (" + tikz_name(l) + ") .. controls +(0," + h + ") and +(0," + h +
             ") .. (" + tikz_name(r) + ");\n";
    }
  }
  out += "\\end{tikzpicture}\n";
  return out;
}

inline std::string emit_svg(const LabeledGraph& lg, const Arrangement& arr) {
  const Graph& g = lg.graph;
  constexpr double kGap = 60.0;
  constexpr double kMargin = 30.0;
  std::uint32_t max_span = 1;
  for (const Edge& e : g.edges()) max_span = std::max(max_span, span_of(arr, e).length());
  const double baseline = kMargin + kArcRise * kGap * max_span;
  const double width = 2 * kMargin + kGap * (arr.size() > 0 ? arr.size() - 1 : 0);
  const double height = baseline + kMargin;
  auto x_of = [&](Position p) { return kMargin + kGap * (p - 1); };

  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fixed(width) +
                    "\" height=\"" + fixed(height) + "\">\n";
  for (const Edge& e : g.edges()) {
    const Span s = span_of(arr, e);
    const double x1 = x_of(s.left);
    const double x2 = x_of(s.right);
    const double top = baseline - kArcRise * kGap * s.length();
    out += "  <path d=\"M " + fixed(x1) + " " + fixed(baseline) + " C " + fixed(x1) + " " +
           fixed(top) + ", " + fixed(x2) + " " + fixed(top) + ", " + fixed(x2) + " " +
           fixed(baseline) + "\" fill=\"none\" stroke=\"black\"/>\n";
  }
  for (Vertex v : arr.order()) {
    const double x = x_of(arr.position(v));
    out += "  <circle cx=\"" + fixed(x) + "\" cy=\"" + fixed(baseline) +
           "\" r=\"5.00\" fill=\"black\"/>\n";
    out += "  <text x=\"" + fixed(x) + "\" y=\"" + fixed(baseline + 20) +
           "\" text-anchor=\"middle\">" + xml_escape(lg.label(v)) + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace detail

/// Arc diagram: vertices left to right in arrangement order, every edge drawn
/// as an arc above the baseline whose height grows with its span.
inline std::string emit_arc_diagram(const LabeledGraph& lg, const Arrangement& arr,
                                    DiagramFormat format) {
  check_fits(lg.graph, arr);
  switch (format) {
    case DiagramFormat::Dot: return detail::emit_dot(lg, arr);
    case DiagramFormat::Tikz: return detail::emit_tikz(lg, arr);
    case DiagramFormat::Svg: return detail::emit_svg(lg, arr);
  }
  return {};
}

}  // namespace linarr
