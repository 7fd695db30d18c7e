#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace linarr {

using Vertex = std::uint32_t;

/// Raised when a graph, arrangement or edge set violates its invariants.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Unordered edge, stored with lo < hi.
struct Edge {
  Vertex lo = 0;
  Vertex hi = 0;

  constexpr Edge() = default;
  constexpr Edge(Vertex a, Vertex b) : lo(a < b ? a : b), hi(a < b ? b : a) {}

  constexpr bool touches(Vertex v) const { return lo == v || hi == v; }
  constexpr bool shares_endpoint(const Edge& o) const {
    return touches(o.lo) || touches(o.hi);
  }

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Undirected simple graph on vertices 0..order-1. Immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Validates and deduplicates. Throws ValidationError on self-loops or
  /// out-of-range endpoints.
  Graph(std::size_t order, std::span<const std::pair<Vertex, Vertex>> pairs)
      : order_(order), adjacency_(order) {
    edges_.reserve(pairs.size());
    for (auto [a, b] : pairs) {
      if (a >= order || b >= order) {
        throw ValidationError("edge endpoint out of range: {" + std::to_string(a) + "," +
                              std::to_string(b) + "} with order " + std::to_string(order));
      }
      if (a == b) {
        throw ValidationError("self-loop on vertex " + std::to_string(a));
      }
      edges_.emplace_back(a, b);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    for (const Edge& e : edges_) {
      adjacency_[e.lo].push_back(e.hi);
      adjacency_[e.hi].push_back(e.lo);
    }
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
  }

  std::size_t order() const { return order_; }
  std::size_t size() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

  bool has_edge(Vertex a, Vertex b) const {
    if (a >= order_ || b >= order_ || a == b) return false;
    return std::binary_search(edges_.begin(), edges_.end(), Edge(a, b));
  }
  bool has_edge(const Edge& e) const { return has_edge(e.lo, e.hi); }

  /// Index of e in edges(), or size() if absent.
  std::size_t edge_index(const Edge& e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return edges_.size();
    return static_cast<std::size_t>(it - edges_.begin());
  }

  bool is_connected() const {
    if (order_ <= 1) return true;
    std::vector<char> seen(order_, 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : adjacency_[v]) {
        if (!seen[w]) {
          seen[w] = 1;
          ++reached;
          stack.push_back(w);
        }
      }
    }
    return reached == order_;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order_ == b.order_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t order_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

inline Graph make_graph(std::size_t order, std::span<const std::pair<Vertex, Vertex>> pairs) {
  return Graph(order, pairs);
}

inline Graph make_graph(std::size_t order,
                        std::initializer_list<std::pair<Vertex, Vertex>> pairs) {
  return Graph(order, std::span<const std::pair<Vertex, Vertex>>(pairs.begin(), pairs.size()));
}

/// Edge set that designates a cycle of a host graph.
struct EdgeSubset {
  std::vector<Edge> edges;
};

/// Checks membership and that the edges form one simple cycle through every
/// vertex they touch. Throws ValidationError otherwise.
inline void validate_cycle(const Graph& g, const EdgeSubset& cycle) {
  const auto& es = cycle.edges;
  if (es.size() < 3) throw ValidationError("a cycle needs at least three edges");
  std::vector<std::size_t> deg(g.order(), 0);
  std::vector<Edge> sorted = es;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ValidationError("cycle lists an edge twice");
  }
  for (const Edge& e : es) {
    if (!g.has_edge(e)) {
      throw ValidationError("cycle edge {" + std::to_string(e.lo) + "," + std::to_string(e.hi) +
                            "} is not an edge of the graph");
    }
    ++deg[e.lo];
    ++deg[e.hi];
  }
  std::size_t touched = 0;
  for (std::size_t d : deg) {
    if (d == 0) continue;
    if (d != 2) throw ValidationError("edge subset is not a simple cycle");
    ++touched;
  }
  if (touched != es.size()) throw ValidationError("edge subset is not a simple cycle");
  // Walk from the first edge; a single cycle visits every edge.
  std::vector<char> used(es.size(), 0);
  Vertex start = es.front().lo;
  Vertex cur = start;
  std::size_t walked = 0;
  do {
    bool moved = false;
    for (std::size_t i = 0; i < es.size(); ++i) {
      if (!used[i] && es[i].touches(cur)) {
        used[i] = 1;
        cur = es[i].lo == cur ? es[i].hi : es[i].lo;
        ++walked;
        moved = true;
        break;
      }
    }
    if (!moved) break;
  } while (cur != start);
  if (walked != es.size()) throw ValidationError("edge subset is not a single cycle");
}

namespace fixtures {

/// 5-cycle a-b-c-d-e-a with chord b-d; a..e map to 0..4.
inline Graph house_with_chord() {
  return make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {1, 3}});
}

inline EdgeSubset house_cycle() {
  return EdgeSubset{{Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(3, 4), Edge(4, 0)}};
}

inline Graph path(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> es;
  for (Vertex i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return make_graph(n, es);
}

inline Graph cycle(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> es;
  for (Vertex i = 0; i < n; ++i) es.emplace_back(i, static_cast<Vertex>((i + 1) % n));
  return make_graph(n, es);
}

inline Graph complete(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> es;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) es.emplace_back(i, j);
  return make_graph(n, es);
}

inline Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<std::pair<Vertex, Vertex>> es;
  for (Vertex i = 0; i < a; ++i)
    for (Vertex j = 0; j < b; ++j) es.emplace_back(i, static_cast<Vertex>(a + j));
  return make_graph(a + b, es);
}

}  // namespace fixtures
}  // namespace linarr
