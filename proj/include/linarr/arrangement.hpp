#pragma once

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <utility>
#include <vector>

#include "linarr/graph.hpp"

namespace linarr {

using Position = std::uint32_t;

/// Bijection vertex -> position, positions 1..n.
class Arrangement {
 public:
  Arrangement() = default;

  /// From positions: positions[v] is the 1-based position of vertex v.
  static Arrangement from_positions(std::vector<Position> positions) {
    const std::size_t n = positions.size();
    std::vector<Vertex> order(n, 0);
    std::vector<char> seen(n, 0);
    for (Vertex v = 0; v < n; ++v) {
      Position p = positions[v];
      if (p < 1 || p > n) throw ValidationError("position out of range 1..n");
      if (seen[p - 1]) throw ValidationError("position used twice");
      seen[p - 1] = 1;
      order[p - 1] = v;
    }
    return Arrangement(std::move(positions), std::move(order));
  }

  /// From the left-to-right vertex order: order[i] sits at position i+1.
  static Arrangement from_order(std::vector<Vertex> order) {
    const std::size_t n = order.size();
    std::vector<Position> positions(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      Vertex v = order[i];
      if (v >= n) throw ValidationError("vertex out of range in arrangement");
      if (positions[v] != 0) throw ValidationError("vertex placed twice");
      positions[v] = static_cast<Position>(i + 1);
    }
    return Arrangement(std::move(positions), std::move(order));
  }

  static Arrangement identity(std::size_t n) {
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{0});
    return from_order(std::move(order));
  }

  std::size_t size() const { return positions_.size(); }
  Position position(Vertex v) const { return positions_.at(v); }
  Vertex at(Position p) const { return order_.at(p - 1); }
  const std::vector<Position>& positions() const { return positions_; }
  const std::vector<Vertex>& order() const { return order_; }

  friend bool operator==(const Arrangement&, const Arrangement&) = default;
  /// Lexicographic on the position sequence.
  friend bool operator<(const Arrangement& a, const Arrangement& b) {
    return a.positions_ < b.positions_;
  }

 private:
  Arrangement(std::vector<Position> positions, std::vector<Vertex> order)
      : positions_(std::move(positions)), order_(std::move(order)) {}

  std::vector<Position> positions_;
  std::vector<Vertex> order_;
};

/// Closed position interval [left, right] spanned by an edge.
struct Span {
  Position left = 0;
  Position right = 0;
  Position length() const { return right - left; }
};

inline Span span_of(const Arrangement& arr, const Edge& e) {
  Position a = arr.position(e.lo);
  Position b = arr.position(e.hi);
  return a < b ? Span{a, b} : Span{b, a};
}

inline void check_fits(const Graph& g, const Arrangement& arr) {
  if (arr.size() != g.order()) {
    throw ValidationError("arrangement has " + std::to_string(arr.size()) +
                          " vertices but the graph has " + std::to_string(g.order()));
  }
}

/// Sum of edge lengths |pi(u) - pi(v)|.
inline std::uint64_t cost(const Graph& g, const Arrangement& arr) {
  check_fits(g, arr);
  std::uint64_t total = 0;
  for (const Edge& e : g.edges()) total += span_of(arr, e).length();
  return total;
}

/// Spans interleave: exactly one endpoint of one lies strictly inside the
/// other. Shared endpoints never cross.
inline bool spans_cross(Span a, Span b) {
  if (a.left > b.left) std::swap(a, b);
  return a.left < b.left && b.left < a.right && a.right < b.right;
}

inline bool crosses(const Arrangement& arr, const Edge& e1, const Edge& e2) {
  if (e1 == e2) throw ValidationError("crossing is only defined for distinct edges");
  return spans_cross(span_of(arr, e1), span_of(arr, e2));
}

/// All crossing edge pairs, in edge-list order.
inline std::vector<std::pair<Edge, Edge>> crossing_pairs(const Graph& g, const Arrangement& arr) {
  check_fits(g, arr);
  std::vector<std::pair<Edge, Edge>> out;
  const auto& es = g.edges();
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j)
      if (spans_cross(span_of(arr, es[i]), span_of(arr, es[j]))) out.emplace_back(es[i], es[j]);
  return out;
}

inline bool is_planar_arrangement(const Graph& g, const Arrangement& arr) {
  check_fits(g, arr);
  const auto& es = g.edges();
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j)
      if (spans_cross(span_of(arr, es[i]), span_of(arr, es[j]))) return false;
  return true;
}

/// Domination in the literal sense of the definition: `inner` dominates
/// `outer` iff they differ and pos(u) <= pos(x) < pos(y) <= pos(v) with
/// {x,y} = inner and {u,v} = outer, i.e. outer's closed span contains inner's.
/// See covers() for the reading where the wide edge is the active party.
inline bool dominates(const Arrangement& arr, const Edge& inner, const Edge& outer) {
  if (inner == outer) throw ValidationError("domination is only defined for distinct edges");
  const Span in = span_of(arr, inner);
  const Span out = span_of(arr, outer);
  return out.left <= in.left && in.right <= out.right;
}

/// `outer` covers `inner`: same relation as dominates(arr, inner, outer).
/// "An edge that dominates all other edges" in the nesting argument is an edge
/// that covers all others.
inline bool covers(const Arrangement& arr, const Edge& outer, const Edge& inner) {
  return dominates(arr, inner, outer);
}

/// Position p maps to n+1-p.
inline Arrangement reverse(const Arrangement& arr) {
  std::vector<Vertex> order(arr.order().rbegin(), arr.order().rend());
  return Arrangement::from_order(std::move(order));
}

/// The lexicographically smaller of arr and its mirror image.
inline Arrangement canonical_orientation(const Arrangement& arr) {
  Arrangement r = reverse(arr);
  return r < arr ? r : arr;
}

}  // namespace linarr
