#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "linarr/arrangement.hpp"
#include "linarr/graph.hpp"

namespace linarr {

struct SolveOptions {
  /// Keep every optimal arrangement. When false, branch-and-bound prunes on
  /// ties and reports just the optimum it reached first.
  bool all_optima = true;
  /// Replace each witness by the lexicographically smaller of itself and its
  /// mirror image, then deduplicate.
  bool collapse_reversals = false;
};

struct SolveResult {
  std::uint64_t optimal_cost = 0;
  /// Sorted by position sequence; never empty.
  std::vector<Arrangement> witnesses;
  /// Search-tree nodes visited, root included.
  std::uint64_t explored = 0;
  std::string solver;
  bool reversals_collapsed = false;

  /// Lexicographically smallest witness.
  const Arrangement& best() const { return witnesses.front(); }
};

namespace detail {

enum class Pruning { None, OnTie, BeyondIncumbent };

// Left-to-right placement over the prefix tree of vertex orders. Tracks the
// admissible bound
//   closed edge lengths + sum over half-placed edges of (next free position -
//   placed endpoint) + number of untouched edges
// and, when `planar` is set, rejects a prefix the moment two placed edges
// cross. Placement cannot remove a crossing between edges whose endpoints are
// all fixed, so the rejection is final.
class PrefixSearch {
 public:
  PrefixSearch(const Graph& g, Pruning pruning, bool planar, bool collect_all = false)
      : g_(g), n_(g.order()), pruning_(pruning), planar_(planar), collect_all_(collect_all),
        pos_(n_, 0), order_(n_, 0), untouched_(g.size()) {}

  std::uint64_t explored() const { return explored_; }
  std::uint64_t best_cost() const { return best_; }
  std::vector<Arrangement>& leaves() { return leaves_; }

  void run() {
    ++explored_;
    if (n_ == 0) {
      record(0);
      return;
    }
    extend(0);
  }

 private:
  void extend(std::size_t k) {
    if (k == n_) {
      record(closed_);
      return;
    }
    const Position p = static_cast<Position>(k + 1);
    for (Vertex v = 0; v < n_; ++v) {
      if (pos_[v] != 0) continue;
      // Place v at p.
      std::uint64_t added = 0;
      std::size_t newly_closed = 0;
      std::size_t newly_open = 0;
      bool crossing = false;
      for (Vertex w : g_.neighbors(v)) {
        if (pos_[w] != 0) {
          added += p - pos_[w];
          ++newly_closed;
          if (planar_ && !crossing && crosses_closed(pos_[w])) crossing = true;
        } else {
          ++newly_open;
        }
      }
      ++explored_;
      if (crossing) continue;

      pos_[v] = p;
      order_[k] = v;
      closed_ += added;
      open_count_ = open_count_ - newly_closed + newly_open;
      open_pos_sum_ = open_pos_sum_ - closed_partner_sum(v) + newly_open * p;
      untouched_ -= newly_open;
      if (planar_) push_closed(v);

      if (!prune(k + 1)) extend(k + 1);

      if (planar_) pop_closed(v);
      untouched_ += newly_open;
      open_pos_sum_ = open_pos_sum_ + closed_partner_sum(v) - newly_open * p;
      open_count_ = open_count_ + newly_closed - newly_open;
      closed_ -= added;
      order_[k] = 0;
      pos_[v] = 0;
    }
  }

  // Sum of positions of v's already-placed neighbors (those edges were open).
  std::uint64_t closed_partner_sum(Vertex v) const {
    std::uint64_t s = 0;
    for (Vertex w : g_.neighbors(v))
      if (pos_[w] != 0 && w != v && pos_[w] < pos_[v]) s += pos_[w];
    return s;
  }

  bool prune(std::size_t placed) const {
    if (pruning_ == Pruning::None || best_ == kUnset) return false;
    const std::uint64_t frontier = placed + 1;
    const std::uint64_t bound =
        closed_ + (open_count_ * frontier - open_pos_sum_) + untouched_;
    return pruning_ == Pruning::OnTie ? bound >= best_ : bound > best_;
  }

  // New edge (q, p) with p the newest position crosses a closed edge (a, b)
  // iff a < q < b; every closed edge ends before p.
  bool crosses_closed(Position q) const {
    for (const Span& s : closed_spans_)
      if (s.left < q && q < s.right) return true;
    return false;
  }

  void push_closed(Vertex v) {
    for (Vertex w : g_.neighbors(v))
      if (pos_[w] != 0 && w != v) closed_spans_.push_back(Span{pos_[w], pos_[v]});
  }
  void pop_closed(Vertex v) {
    for (Vertex w : g_.neighbors(v))
      if (pos_[w] != 0 && w != v) closed_spans_.pop_back();
  }

  void record(std::uint64_t c) {
    if (collect_all_) {
      best_ = std::min(best_, c);
      leaves_.push_back(Arrangement::from_order(order_));
      return;
    }
    if (c < best_) {
      best_ = c;
      leaves_.clear();
    }
    if (c == best_) leaves_.push_back(Arrangement::from_order(order_));
  }

 private:
  static constexpr std::uint64_t kUnset = std::numeric_limits<std::uint64_t>::max();

  const Graph& g_;
  std::size_t n_;
  Pruning pruning_;
  bool planar_;
  bool collect_all_;  // keep every leaf, not just the cheapest
  std::vector<Position> pos_;
  std::vector<Vertex> order_;
  std::vector<Span> closed_spans_;
  std::uint64_t closed_ = 0;
  std::uint64_t open_count_ = 0;
  std::uint64_t open_pos_sum_ = 0;
  std::uint64_t untouched_;
  std::uint64_t explored_ = 0;
  std::uint64_t best_ = kUnset;
  std::vector<Arrangement> leaves_;
};

inline void finish_witnesses(std::vector<Arrangement>& ws, bool collapse) {
  if (collapse)
    for (auto& a : ws) a = canonical_orientation(a);
  std::sort(ws.begin(), ws.end());
  ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
}

inline SolveResult package(PrefixSearch& s, std::string solver, const SolveOptions& opt) {
  SolveResult r;
  r.optimal_cost = s.best_cost();
  r.witnesses = std::move(s.leaves());
  finish_witnesses(r.witnesses, opt.collapse_reversals);
  r.explored = s.explored();
  r.solver = std::move(solver);
  r.reversals_collapsed = opt.collapse_reversals;
  return r;
}

}  // namespace detail

/// Minimum of cost over all n! arrangements, visiting the full prefix tree.
inline SolveResult solve_minla_exhaustive(const Graph& g, SolveOptions opt = {}) {
  detail::PrefixSearch s(g, detail::Pruning::None, false);
  s.run();
  return detail::package(s, "exhaustive", opt);
}

/// Branch-and-bound minLA; same optimum as solve_minla_exhaustive.
inline SolveResult solve_minla_bnb(const Graph& g, SolveOptions opt = {}) {
  detail::PrefixSearch s(
      g, opt.all_optima ? detail::Pruning::BeyondIncumbent : detail::Pruning::OnTie, false);
  s.run();
  return detail::package(s, "branch-and-bound", opt);
}

/// Minimum cost over crossing-free arrangements, or nullopt when g has none.
inline std::optional<SolveResult> solve_planar_minla(const Graph& g, SolveOptions opt = {}) {
  detail::PrefixSearch s(
      g, opt.all_optima ? detail::Pruning::BeyondIncumbent : detail::Pruning::OnTie, true);
  s.run();
  if (s.leaves().empty()) return std::nullopt;
  return detail::package(s, "planar-branch-and-bound", opt);
}

/// Every crossing-free arrangement of g, sorted by position sequence.
inline std::vector<Arrangement> enumerate_planar_arrangements(const Graph& g) {
  detail::PrefixSearch s(g, detail::Pruning::None, true, true);
  s.run();
  auto out = std::move(s.leaves());
  std::sort(out.begin(), out.end());
  return out;
}

/// Planar optima up to reversal, or nullopt when g has no crossing-free
/// arrangement.
inline std::optional<std::vector<Arrangement>> enumerate_planar_optima(const Graph& g) {
  auto r = solve_planar_minla(g, SolveOptions{.all_optima = true, .collapse_reversals = true});
  if (!r) return std::nullopt;
  return std::move(r->witnesses);
}

struct ClaimWitness {
  Arrangement arrangement;
  Edge edge;
};

struct ClaimVerdict {
  bool holds = true;
  std::optional<ClaimWitness> counterexample;
};

struct ClaimReport {
  std::size_t arrangement_count = 0;
  /// Every cycle edge covers all other edges or joins adjacent positions.
  ClaimVerdict claim1;
  /// Exactly one cycle edge covers all other edges.
  ClaimVerdict claim2;
};

/// Checks the two nesting claims over every crossing-free arrangement of g.
/// Throws ValidationError if `cycle` is not a simple cycle of g.
inline ClaimReport check_dominating_edge_claims(const Graph& g, const EdgeSubset& cycle) {
  validate_cycle(g, cycle);
  ClaimReport report;
  const auto arrangements = enumerate_planar_arrangements(g);
  report.arrangement_count = arrangements.size();
  for (const Arrangement& arr : arrangements) {
    std::size_t covering = 0;
    std::optional<Edge> extra;
    for (const Edge& e : cycle.edges) {
      bool covers_all = true;
      for (const Edge& f : g.edges()) {
        if (f != e && !covers(arr, e, f)) {
          covers_all = false;
          break;
        }
      }
      const bool adjacent = span_of(arr, e).length() == 1;
      if (!covers_all && !adjacent && report.claim1.holds) {
        report.claim1 = {false, ClaimWitness{arr, e}};
      }
      if (covers_all && ++covering == 2) extra = e;
    }
    if (covering != 1 && report.claim2.holds) {
      report.claim2 = {false, ClaimWitness{arr, extra.value_or(cycle.edges.front())}};
    }
  }
  return report;
}

}  // namespace linarr
