#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <thread>
#include <vector>

#include "linarr/arrangement.hpp"
#include "linarr/graph.hpp"
#include "linarr/isomorphism.hpp"
#include "linarr/outerplanar.hpp"
#include "linarr/solvers.hpp"

namespace linarr {

/// Unrestricted versus crossing-free optimum for one graph.
struct GapReport {
  Graph graph;
  std::uint64_t minla_opt = 0;
  std::optional<std::uint64_t> planar_opt;
  Arrangement minla_witness;
  std::optional<Arrangement> planar_witness;
  bool outerplanar = false;

  /// planar_opt - minla_opt, absent when no crossing-free arrangement exists.
  std::optional<std::uint64_t> gap() const {
    if (!planar_opt) return std::nullopt;
    return *planar_opt - minla_opt;
  }
};

inline GapReport compute_gap(const Graph& g) {
  GapReport r;
  r.graph = g;
  // All optima, so best() is the lexicographically smallest witness.
  const SolveOptions all{.all_optima = true, .collapse_reversals = false};
  const auto minla = solve_minla_bnb(g, all);
  r.minla_opt = minla.optimal_cost;
  r.minla_witness = minla.best();
  if (auto planar = solve_planar_minla(g, all)) {
    r.planar_opt = planar->optimal_cost;
    r.planar_witness = planar->best();
  }
  r.outerplanar = is_outerplanar(g);
  return r;
}

struct SearchOptions {
  /// Worker threads; 0 means hardware concurrency.
  unsigned threads = 1;
  /// Resume point: skip classes before (start_order, start_index).
  std::size_t start_order = 1;
  std::size_t start_index = 0;
  /// Called once per examined class, in enumeration order.
  std::function<void(std::size_t order, std::size_t index, const GapReport&)> on_class;
};

/// Every connected graph up to max_order (one per isomorphism class) whose gap
/// is defined and at least min_gap. Output order is enumeration order and
/// does not depend on the thread count.
inline std::vector<GapReport> search_gap_graphs(std::size_t max_order, std::uint64_t min_gap,
                                                const SearchOptions& opt = {}) {
  if (min_gap == 0) throw ValidationError("min-gap must be positive");
  unsigned threads = opt.threads == 0 ? std::max(1U, std::thread::hardware_concurrency())
                                      : opt.threads;
  std::vector<GapReport> out;
  for (std::size_t order = std::max<std::size_t>(1, opt.start_order); order <= max_order;
       ++order) {
    const auto graphs = enumerate_connected_graphs(order);
    const std::size_t first = order == opt.start_order ? std::min(opt.start_index, graphs.size()) : 0;
    std::vector<GapReport> reports(graphs.size());
    std::atomic<std::size_t> next{first};
    auto work = [&] {
      for (std::size_t i = next++; i < graphs.size(); i = next++) reports[i] = compute_gap(graphs[i]);
    };
    const unsigned workers = std::min<std::size_t>(threads, graphs.size() - first);
    if (workers <= 1) {
      work();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
    }
    for (std::size_t i = first; i < graphs.size(); ++i) {
      if (opt.on_class) opt.on_class(order, i, reports[i]);
      const auto gap = reports[i].gap();
      if (gap && *gap >= min_gap) out.push_back(std::move(reports[i]));
    }
  }
  return out;
}

}  // namespace linarr
