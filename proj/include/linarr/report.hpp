#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "linarr/arrangement.hpp"
#include "linarr/gap.hpp"
#include "linarr/io.hpp"
#include "linarr/solvers.hpp"

// Machine-readable reports. Keys and nesting are part of the CLI contract and
// are pinned by golden tests; see README for the schema.
namespace linarr::report {

using Json = nlohmann::ordered_json;

inline Json arrangement(const LabeledGraph& lg, const Arrangement& arr) {
  Json out = Json::array();
  for (Vertex v : arr.order()) out.push_back(lg.label(v));
  return out;
}

inline Json edge(const LabeledGraph& lg, const Edge& e) {
  return Json::array({lg.label(e.lo), lg.label(e.hi)});
}

inline Json solve(const LabeledGraph& lg, const SolveResult& r, const char* command) {
  Json out;
  out["command"] = command;
  out["solver"] = r.solver;
  out["optimal-cost"] = r.optimal_cost;
  out["witness"] = arrangement(lg, r.best());
  out["witness-count"] = r.witnesses.size();
  out["reversals-collapsed"] = r.reversals_collapsed;
  out["explored"] = r.explored;
  return out;
}

inline Json planar(const LabeledGraph& lg, const std::optional<SolveResult>& r) {
  Json out;
  out["command"] = "planar-minla";
  out["planar"] = r.has_value();
  if (!r) {
    out["optimal-cost"] = nullptr;
    out["witnesses"] = Json::array();
    return out;
  }
  out["solver"] = r->solver;
  out["optimal-cost"] = r->optimal_cost;
  Json ws = Json::array();
  for (const auto& w : r->witnesses) ws.push_back(arrangement(lg, w));
  out["witnesses"] = std::move(ws);
  out["reversals-collapsed"] = r->reversals_collapsed;
  out["explored"] = r->explored;
  return out;
}

inline Json verify(const LabeledGraph& lg, const Arrangement& arr) {
  Json out;
  out["command"] = "verify";
  out["arrangement"] = arrangement(lg, arr);
  out["cost"] = cost(lg.graph, arr);
  out["planar"] = is_planar_arrangement(lg.graph, arr);
  Json pairs = Json::array();
  for (const auto& [a, b] : crossing_pairs(lg.graph, arr)) pairs.push_back(Json::array({edge(lg, a), edge(lg, b)}));
  out["crossing-pairs"] = std::move(pairs);
  return out;
}

inline Json gap(const LabeledGraph& lg, const GapReport& r) {
  Json out;
  out["command"] = "gap";
  out["graph"] = graph_to_json(lg);
  out["minla-opt"] = r.minla_opt;
  out["planar-opt"] = r.planar_opt ? Json(*r.planar_opt) : Json(nullptr);
  out["gap"] = r.gap() ? Json(*r.gap()) : Json(nullptr);
  out["outerplanar"] = r.outerplanar;
  out["minla-witness"] = arrangement(lg, r.minla_witness);
  out["planar-witness"] = r.planar_witness ? arrangement(lg, *r.planar_witness) : Json(nullptr);
  return out;
}

inline Json claim_verdict(const LabeledGraph& lg, const ClaimVerdict& v) {
  Json out;
  out["holds"] = v.holds;
  if (v.counterexample) {
    out["counterexample"] = {{"arrangement", arrangement(lg, v.counterexample->arrangement)},
                             {"edge", edge(lg, v.counterexample->edge)}};
  } else {
    out["counterexample"] = nullptr;
  }
  return out;
}

inline Json claims(const LabeledGraph& lg, const ClaimReport& r) {
  Json out;
  out["command"] = "claims";
  out["arrangement-count"] = r.arrangement_count;
  out["claim1"] = claim_verdict(lg, r.claim1);
  out["claim2"] = claim_verdict(lg, r.claim2);
  return out;
}

}  // namespace linarr::report
