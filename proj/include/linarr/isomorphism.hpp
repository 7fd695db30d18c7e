#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "linarr/graph.hpp"

namespace linarr {

/// Largest order the 64-bit canonical code can represent (n(n-1)/2 <= 64).
inline constexpr std::size_t kMaxCanonicalOrder = 11;

/// Canonical form of a small graph: the minimum upper-triangle adjacency code
/// over all relabelings that list vertices by non-increasing degree, together
/// with the relabeled graph that attains it. Degree order is itself invariant
/// under isomorphism, so two graphs are isomorphic iff their codes match.
struct CanonicalForm {
  std::uint64_t code = 0;
  Graph graph;
};

namespace detail {

inline std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

inline std::uint64_t adjacency_code(const std::vector<std::uint32_t>& adj,
                                    const std::vector<Vertex>& seq) {
  const std::size_t n = seq.size();
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint32_t row = adj[seq[i]];
    for (std::size_t j = i + 1; j < n; ++j) {
      code = (code << 1) | ((row >> seq[j]) & 1U);
    }
  }
  return code;
}

// Enumerates every ordering in which each degree block is permuted freely.
template <typename Visit>
void for_each_block_permutation(std::vector<Vertex>& seq,
                                const std::vector<std::pair<std::size_t, std::size_t>>& blocks,
                                std::size_t block, Visit&& visit) {
  if (block == blocks.size()) {
    visit(seq);
    return;
  }
  auto [lo, hi] = blocks[block];
  auto first = seq.begin() + static_cast<std::ptrdiff_t>(lo);
  auto last = seq.begin() + static_cast<std::ptrdiff_t>(hi);
  std::sort(first, last);
  do {
    for_each_block_permutation(seq, blocks, block + 1, visit);
  } while (std::next_permutation(first, last));
}

}  // namespace detail

inline CanonicalForm canonical_form(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kMaxCanonicalOrder) {
    throw ValidationError("canonical form supports at most " +
                          std::to_string(kMaxCanonicalOrder) + " vertices");
  }
  std::vector<std::uint32_t> adj(n, 0);
  for (const Edge& e : g.edges()) {
    adj[e.lo] |= 1U << e.hi;
    adj[e.hi] |= 1U << e.lo;
  }
  std::vector<Vertex> seq(n);
  std::iota(seq.begin(), seq.end(), Vertex{0});
  std::stable_sort(seq.begin(), seq.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && g.degree(seq[j]) == g.degree(seq[i])) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }

  std::uint64_t best = ~std::uint64_t{0};
  std::vector<Vertex> best_seq = seq;
  detail::for_each_block_permutation(seq, blocks, 0, [&](const std::vector<Vertex>& s) {
    const std::uint64_t c = detail::adjacency_code(adj, s);
    if (c < best) {
      best = c;
      best_seq = s;
    }
  });
  if (n < 2) best = 0;

  // best_seq[new] = old; relabel old -> new.
  std::vector<Vertex> relabel(n);
  for (std::size_t i = 0; i < n; ++i) relabel[best_seq[i]] = static_cast<Vertex>(i);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(g.size());
  for (const Edge& e : g.edges()) pairs.emplace_back(relabel[e.lo], relabel[e.hi]);
  return CanonicalForm{best, make_graph(n, pairs)};
}

inline bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<std::size_t> da(a.order()), db(b.order());
  for (Vertex v = 0; v < a.order(); ++v) {
    da[v] = a.degree(v);
    db[v] = b.degree(v);
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return canonical_form(a).code == canonical_form(b).code;
}

/// One canonical representative per isomorphism class of connected simple
/// graphs on `order` vertices, ordered by edge count and then canonical code.
inline std::vector<Graph> enumerate_connected_graphs(std::size_t order) {
  if (order == 0) return {};
  // Classes grouped by edge count; each layer is the closure of the previous
  // one under adding a single missing edge.
  std::map<std::uint64_t, Graph> layer;
  {
    auto empty = canonical_form(Graph(order, {}));
    layer.emplace(empty.code, std::move(empty.graph));
  }
  std::vector<Graph> out;
  const std::size_t max_edges = detail::pair_count(order);
  for (std::size_t m = 0;; ++m) {
    for (const auto& [code, g] : layer) {
      if (g.is_connected()) out.push_back(g);
    }
    if (m == max_edges) break;
    std::map<std::uint64_t, Graph> next;
    for (const auto& [code, g] : layer) {
      std::vector<std::pair<Vertex, Vertex>> pairs;
      for (const Edge& e : g.edges()) pairs.emplace_back(e.lo, e.hi);
      for (Vertex i = 0; i < order; ++i) {
        for (Vertex j = i + 1; j < order; ++j) {
          if (g.has_edge(i, j)) continue;
          pairs.emplace_back(i, j);
          auto cf = canonical_form(make_graph(order, pairs));
          pairs.pop_back();
          next.try_emplace(cf.code, std::move(cf.graph));
        }
      }
    }
    layer = std::move(next);
  }
  return out;
}

}  // namespace linarr
