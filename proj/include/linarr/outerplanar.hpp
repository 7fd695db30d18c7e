#pragma once

#include <cstdint>
#include <vector>

#include "linarr/graph.hpp"

namespace linarr {

namespace detail {

// Minor search by branch-set assignment: every host vertex gets a label in
// 0..k (0 = unused). A model of the pattern exists iff some assignment makes
// every branch set nonempty and connected, with an edge between the sets of
// every adjacent pattern pair.
class MinorSearch {
 public:
  MinorSearch(const Graph& host, const Graph& pattern, std::vector<int> symmetry_class)
      : host_(host), pattern_(pattern), sym_(std::move(symmetry_class)),
        label_(host.order(), 0), used_(pattern.order() + 1, 0) {}

  bool run() {
    if (pattern_.order() > host_.order() || pattern_.size() > host_.size()) return false;
    return assign(0);
  }

 private:
  bool assign(std::size_t v) {
    if (v == host_.order()) return check();
    const std::size_t k = pattern_.order();
    for (std::size_t lab = 0; lab <= k; ++lab) {
      // Interchangeable pattern vertices are opened in index order.
      if (lab > 0 && used_[lab] == 0 && lab > 1 && sym_[lab - 1] == sym_[lab - 2] &&
          used_[lab - 1] == 0) {
        continue;
      }
      label_[v] = static_cast<int>(lab);
      ++used_[lab];
      if (assign(v + 1)) return true;
      --used_[lab];
    }
    label_[v] = 0;
    return false;
  }

  bool check() const {
    const std::size_t k = pattern_.order();
    for (std::size_t lab = 1; lab <= k; ++lab) {
      if (used_[lab] == 0 || !connected_set(static_cast<int>(lab))) return false;
    }
    std::vector<std::uint32_t> touch(k, 0);
    for (const Edge& e : host_.edges()) {
      int a = label_[e.lo];
      int b = label_[e.hi];
      if (a > 0 && b > 0 && a != b) {
        touch[a - 1] |= 1U << (b - 1);
        touch[b - 1] |= 1U << (a - 1);
      }
    }
    for (const Edge& e : pattern_.edges()) {
      if (!((touch[e.lo] >> e.hi) & 1U)) return false;
    }
    return true;
  }

  bool connected_set(int lab) const {
    std::vector<char> seen(host_.order(), 0);
    std::vector<Vertex> stack;
    std::size_t members = 0;
    for (Vertex v = 0; v < host_.order(); ++v) {
      if (label_[v] == lab) {
        ++members;
        if (stack.empty()) {
          stack.push_back(v);
          seen[v] = 1;
        }
      }
    }
    std::size_t reached = stack.size();
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : host_.neighbors(v)) {
        if (!seen[w] && label_[w] == lab) {
          seen[w] = 1;
          ++reached;
          stack.push_back(w);
        }
      }
    }
    return reached == members;
  }

  const Graph& host_;
  const Graph& pattern_;
  std::vector<int> sym_;
  std::vector<int> label_;
  std::vector<std::size_t> used_;
};

// Strips vertices of degree <= 1 repeatedly. Neither forbidden pattern has a
// vertex of degree < 2, so no minor model needs them.
inline Graph strip_leaves(const Graph& g) {
  std::vector<std::size_t> deg(g.order());
  std::vector<char> alive(g.order(), 1);
  std::vector<Vertex> queue;
  for (Vertex v = 0; v < g.order(); ++v) {
    deg[v] = g.degree(v);
    if (deg[v] <= 1) queue.push_back(v);
  }
  while (!queue.empty()) {
    Vertex v = queue.back();
    queue.pop_back();
    if (!alive[v]) continue;
    alive[v] = 0;
    for (Vertex w : g.neighbors(v)) {
      if (alive[w] && --deg[w] == 1) queue.push_back(w);
    }
  }
  std::vector<Vertex> remap(g.order(), 0);
  std::size_t n = 0;
  for (Vertex v = 0; v < g.order(); ++v)
    if (alive[v]) remap[v] = static_cast<Vertex>(n++);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (const Edge& e : g.edges())
    if (alive[e.lo] && alive[e.hi]) pairs.emplace_back(remap[e.lo], remap[e.hi]);
  return make_graph(n, pairs);
}

}  // namespace detail

/// Exhaustive minor test for small patterns (pattern order <= 31).
inline bool has_minor(const Graph& host, const Graph& pattern) {
  std::vector<int> sym(pattern.order());
  for (std::size_t i = 0; i < sym.size(); ++i) sym[i] = static_cast<int>(i);
  return detail::MinorSearch(host, pattern, std::move(sym)).run();
}

/// True iff g has neither a K4 nor a K2,3 minor. Exhaustive; meant for
/// order <= 10.
inline bool is_outerplanar(const Graph& g) {
  const Graph core = detail::strip_leaves(g);
  if (core.order() < 4) return true;
  // K4: all four vertices interchangeable.
  if (detail::MinorSearch(core, fixtures::complete(4), {0, 0, 0, 0}).run()) return false;
  // K2,3: vertices 0,1 form one side, 2,3,4 the other.
  if (detail::MinorSearch(core, fixtures::complete_bipartite(2, 3), {0, 0, 1, 1, 1}).run())
    return false;
  return true;
}

}  // namespace linarr
