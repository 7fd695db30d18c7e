#pragma once

#include <random>
#include <string>
#include <vector>

#include "linarr/linarr.hpp"
#include "oracles.hpp"

namespace support {

inline linarr::Graph to_graph(int n, const oracle::EdgeList& es) {
  std::vector<std::pair<linarr::Vertex, linarr::Vertex>> pairs;
  for (auto [u, v] : es) pairs.emplace_back(u, v);
  return linarr::make_graph(n, pairs);
}

inline oracle::EdgeList to_edges(const linarr::Graph& g) {
  oracle::EdgeList es;
  for (const auto& e : g.edges()) es.push_back({static_cast<int>(e.lo), static_cast<int>(e.hi)});
  return es;
}

inline std::vector<int> to_order(const linarr::Arrangement& arr) {
  return std::vector<int>(arr.order().begin(), arr.order().end());
}

inline linarr::Arrangement from_order(const std::vector<int>& order) {
  return linarr::Arrangement::from_order(std::vector<linarr::Vertex>(order.begin(), order.end()));
}

inline linarr::Arrangement random_arrangement(std::size_t n, std::mt19937& rng) {
  std::vector<linarr::Vertex> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<linarr::Vertex>(i);
  std::shuffle(order.begin(), order.end(), rng);
  return linarr::Arrangement::from_order(std::move(order));
}

// Vertex order from labels a..e.
inline linarr::Arrangement house_order(const std::string& letters) {
  std::vector<linarr::Vertex> order;
  for (char c : letters) order.push_back(static_cast<linarr::Vertex>(c - 'a'));
  return linarr::Arrangement::from_order(std::move(order));
}

inline linarr::Edge house_edge(char x, char y) {
  return linarr::Edge(static_cast<linarr::Vertex>(x - 'a'), static_cast<linarr::Vertex>(y - 'a'));
}

}  // namespace support
