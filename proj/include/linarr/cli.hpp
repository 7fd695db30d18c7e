#pragma once

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "linarr/gap.hpp"
#include "linarr/io.hpp"
#include "linarr/render.hpp"
#include "linarr/report.hpp"
#include "linarr/solvers.hpp"

namespace linarr::cli {

enum ExitCode : int { kOk = 0, kValidation = 1, kParse = 2 };

namespace detail {

struct Context {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  bool json = false;
  std::string input_format = "auto";
};

inline LabeledGraph load_graph(const Context& ctx, const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(ctx.in), std::istreambuf_iterator<char>());
  } else {
    std::ifstream file(path);
    if (!file) throw ParseError("cannot read graph file '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
  }
  GraphFormat format = sniff_format(text);
  if (ctx.input_format == "edge-list") format = GraphFormat::EdgeList;
  if (ctx.input_format == "json") format = GraphFormat::Json;
  return parse_graph(text, format);
}

inline void emit(const Context& ctx, const report::Json& j) { ctx.out << j.dump(2) << "\n"; }

inline std::string describe_cost(const std::optional<std::uint64_t>& c) {
  return c ? std::to_string(*c) : std::string("none");
}

inline void run_minla(const Context& ctx, const std::string& path, const std::string& solver) {
  const auto lg = load_graph(ctx, path);
  const auto r = solver == "exhaustive" ? solve_minla_exhaustive(lg.graph) : solve_minla_bnb(lg.graph);
  if (ctx.json) return emit(ctx, report::solve(lg, r, "minla"));
  ctx.out << "solver: " << r.solver << "\n"
          << "optimal cost: " << r.optimal_cost << "\n"
          << "witness: " << format_arrangement(lg, r.best()) << "\n"
          << "optimal arrangements: " << r.witnesses.size() << "\n"
          << "nodes explored: " << r.explored << "\n";
}

inline void run_planar(const Context& ctx, const std::string& path) {
  const auto lg = load_graph(ctx, path);
  const auto r = solve_planar_minla(lg.graph, SolveOptions{.all_optima = true, .collapse_reversals = true});
  if (ctx.json) return emit(ctx, report::planar(lg, r));
  if (!r) {
    ctx.out << "no crossing-free arrangement exists\n";
    return;
  }
  ctx.out << "optimal planar cost: " << r->optimal_cost << "\n"
          << "optimal planar arrangements (up to reversal): " << r->witnesses.size() << "\n";
  for (const auto& w : r->witnesses) ctx.out << "  " << format_arrangement(lg, w) << "\n";
  ctx.out << "nodes explored: " << r->explored << "\n";
}

inline void run_verify(const Context& ctx, const std::string& path, const std::string& arrangement) {
  const auto lg = load_graph(ctx, path);
  const auto arr = parse_arrangement(lg, arrangement);
  if (ctx.json) return emit(ctx, report::verify(lg, arr));
  const auto pairs = crossing_pairs(lg.graph, arr);
  ctx.out << "arrangement: " << format_arrangement(lg, arr) << "\n"
          << "cost: " << cost(lg.graph, arr) << "\n"
          << "planar: " << (pairs.empty() ? "yes" : "no") << "\n";
  for (const auto& [a, b] : pairs)
    ctx.out << "  crossing: " << format_edge(lg, a) << " x " << format_edge(lg, b) << "\n";
}

inline void run_gap(const Context& ctx, const std::string& path) {
  const auto lg = load_graph(ctx, path);
  const auto r = compute_gap(lg.graph);
  if (ctx.json) return emit(ctx, report::gap(lg, r));
  ctx.out << "minla optimum: " << r.minla_opt << " (" << format_arrangement(lg, r.minla_witness) << ")\n"
          << "planar optimum: " << describe_cost(r.planar_opt);
  if (r.planar_witness) ctx.out << " (" << format_arrangement(lg, *r.planar_witness) << ")";
  ctx.out << "\n"
          << "gap: " << describe_cost(r.gap()) << "\n"
          << "outerplanar: " << (r.outerplanar ? "yes" : "no") << "\n";
}

inline unsigned env_threads() {
  const char* s = std::getenv("LINARR_THREADS");
  if (!s) return 1;
  try {
    return static_cast<unsigned>(std::max(1L, std::stol(s)));
  } catch (const std::exception&) {
    throw ValidationError("LINARR_THREADS must be a positive integer");
  }
}

inline void run_search(const Context& ctx, std::size_t max_order, std::uint64_t min_gap,
                       std::size_t start_order, std::size_t start_index, bool progress) {
  SearchOptions opt;
  opt.threads = env_threads();
  opt.start_order = start_order;
  opt.start_index = start_index;
  if (progress) {
    opt.on_class = [&](std::size_t order, std::size_t index, const GapReport& r) {
      ctx.err << "checked order " << order << " class " << index << " gap "
              << describe_cost(r.gap()) << "\n";
    };
  }
  const auto reports = search_gap_graphs(max_order, min_gap, opt);
  if (ctx.json) {
    report::Json out;
    out["command"] = "search";
    out["max-order"] = max_order;
    out["min-gap"] = min_gap;
    report::Json results = report::Json::array();
    for (const auto& r : reports) {
      auto item = report::gap(LabeledGraph::numbered(r.graph), r);
      item.erase("command");
      results.push_back(std::move(item));
    }
    out["results"] = std::move(results);
    return emit(ctx, out);
  }
  ctx.out << reports.size() << " graph(s) with gap >= " << min_gap << " up to order " << max_order
          << "\n";
  for (const auto& r : reports) {
    const auto lg = LabeledGraph::numbered(r.graph);
    ctx.out << "order " << r.graph.order() << ", edges";
    for (const Edge& e : r.graph.edges()) ctx.out << " " << lg.label(e.lo) << "-" << lg.label(e.hi);
    ctx.out << ": minla " << r.minla_opt << ", planar " << describe_cost(r.planar_opt) << ", gap "
            << describe_cost(r.gap()) << "\n";
  }
}

inline void run_claims(const Context& ctx, const std::string& path, const std::string& cycle) {
  const auto lg = load_graph(ctx, path);
  const auto r = check_dominating_edge_claims(lg.graph, parse_edge_subset(lg, cycle));
  if (ctx.json) return emit(ctx, report::claims(lg, r));
  ctx.out << "crossing-free arrangements examined: " << r.arrangement_count << "\n";
  auto line = [&](const char* name, const ClaimVerdict& v) {
    ctx.out << name << ": " << (v.holds ? "holds" : "fails");
    if (v.counterexample)
      ctx.out << " (arrangement " << format_arrangement(lg, v.counterexample->arrangement)
              << ", edge " << format_edge(lg, v.counterexample->edge) << ")";
    ctx.out << "\n";
  };
  line("claim 1 (each cycle edge covers all edges or is short)", r.claim1);
  line("claim 2 (exactly one cycle edge covers all edges)", r.claim2);
}

inline void run_render(const Context& ctx, const std::string& path, const std::string& arrangement,
                       const std::string& format) {
  const auto lg = load_graph(ctx, path);
  const auto arr = parse_arrangement(lg, arrangement);
  const DiagramFormat f = format == "tikz" ? DiagramFormat::Tikz
                          : format == "svg" ? DiagramFormat::Svg
                                            : DiagramFormat::Dot;
  const std::string text = emit_arc_diagram(lg, arr, f);
  if (ctx.json) {
    report::Json out;
    out["command"] = "render";
    out["format"] = format;
    out["text"] = text;
    return emit(ctx, out);
  }
  ctx.out << text;
}

}  // namespace detail

/// Runs one CLI invocation. args excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"Exact minimum linear arrangement and planar arrangement toolkit", "linarr"};
  app.require_subcommand(1);
  app.fallthrough();
  detail::Context ctx{in, out, err};
  app.add_flag("--json", ctx.json, "Print a machine-readable JSON report");
  app.add_option("--input-format", ctx.input_format, "Graph file format")
      ->check(CLI::IsMember({"auto", "edge-list", "json"}));

  std::string graph_path, arrangement, solver = "bnb", cycle, format = "dot";
  std::size_t max_order = 5, start_order = 1, start_index = 0;
  std::uint64_t min_gap = 1;
  bool progress = false;

  auto* minla = app.add_subcommand("minla", "Exact minimum linear arrangement");
  minla->add_option("graph", graph_path, "Graph file ('-' for stdin)")->required();
  minla->add_option("--solver", solver, "Search algorithm")
      ->check(CLI::IsMember({"exhaustive", "bnb"}));

  auto* planar = app.add_subcommand("planar-minla", "Exact minimum crossing-free arrangement");
  planar->add_option("graph", graph_path, "Graph file ('-' for stdin)")->required();

  auto* verify = app.add_subcommand("verify", "Cost, planarity and crossings of an arrangement");
  verify->add_option("graph", graph_path, "Graph file ('-' for stdin)")->required();
  verify->add_option("arrangement", arrangement, "Labels in position order, e.g. a,e,b,d,c")
      ->required();

  auto* gap = app.add_subcommand("gap", "Planar optimum minus unrestricted optimum");
  gap->add_option("graph", graph_path, "Graph file ('-' for stdin)")->required();

  auto* search = app.add_subcommand("search", "Find small connected graphs with a positive gap");
  search->add_option("--max-order", max_order, "Largest vertex count")->required()
      ->check(CLI::Range(1, 8));
  search->add_option("--min-gap", min_gap, "Smallest reported gap")->required()
      ->check(CLI::PositiveNumber);
  search->add_option("--start-order", start_order, "Resume at this vertex count");
  search->add_option("--start-index", start_index, "Resume at this class index");
  search->add_flag("--progress", progress, "Report each examined class on stderr");

  auto* claims = app.add_subcommand("claims", "Check the nesting claims over all crossing-free arrangements");
  claims->add_option("graph", graph_path, "Graph file ('-' for stdin)")->required();
  claims->add_option("--cycle", cycle, "Cycle edges, e.g. a-b,b-c,c-d,d-e,e-a")->required();

  auto* render = app.add_subcommand("render", "Draw an arrangement as an arc diagram");
  render->add_option("graph", graph_path, "Graph file ('-' for stdin)")->required();
  render->add_option("arrangement", arrangement, "Labels in position order")->required();
  render->add_option("--format", format, "Output format")->check(CLI::IsMember({"dot", "tikz", "svg"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  }

  try {
    if (minla->parsed()) detail::run_minla(ctx, graph_path, solver);
    else if (planar->parsed()) detail::run_planar(ctx, graph_path);
    else if (verify->parsed()) detail::run_verify(ctx, graph_path, arrangement);
    else if (gap->parsed()) detail::run_gap(ctx, graph_path);
    else if (search->parsed()) detail::run_search(ctx, max_order, min_gap, start_order, start_index, progress);
    else if (claims->parsed()) detail::run_claims(ctx, graph_path, cycle);
    else if (render->parsed()) detail::run_render(ctx, graph_path, arrangement, format);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
    return kValidation;
  }
  return kOk;
}

}  // namespace linarr::cli
