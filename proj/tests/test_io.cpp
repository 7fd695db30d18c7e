#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "support.hpp"

using namespace linarr;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  EXPECT_TRUE(in) << path;
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string golden(const std::string& name) { return slurp(std::string(LINARR_GOLDEN_DIR) + "/" + name); }

const char* kHouseText = "a b\nb c\nc d\nd e\ne a\nb d\n";

}  // namespace

TEST(ParseGraph, EdgeListHouse) {
  const auto lg = parse_graph(kHouseText, GraphFormat::EdgeList);
  EXPECT_EQ(lg.labels, (std::vector<std::string>{"a", "b", "c", "d", "e"}));
  EXPECT_EQ(lg.graph, fixtures::house_with_chord());
}

TEST(ParseGraph, CommentsAndBlankLines) {
  const auto lg = parse_graph("# header\n\nx y  # trailing\n   \nz\n", GraphFormat::EdgeList);
  EXPECT_EQ(lg.labels, (std::vector<std::string>{"x", "y", "z"}));
  EXPECT_EQ(lg.graph.size(), 1u);
}

TEST(ParseGraph, JsonSingleVertex) {
  const auto lg = parse_graph(R"({"vertices":["x"],"edges":[]})", GraphFormat::Json);
  EXPECT_EQ(lg.graph.order(), 1u);
  EXPECT_EQ(lg.graph.size(), 0u);
  EXPECT_EQ(lg.labels.front(), "x");
}

TEST(ParseGraph, JsonFileMatchesEdgeList) {
  const auto a = parse_graph(slurp(std::string(LINARR_DATA_DIR) + "/house.json"), GraphFormat::Json);
  const auto b = parse_graph(slurp(std::string(LINARR_DATA_DIR) + "/house.txt"), GraphFormat::EdgeList);
  EXPECT_EQ(a.graph, b.graph);
  EXPECT_EQ(a.labels, b.labels);
}

TEST(ParseGraph, SelfLoopIsParseError) {
  try {
    parse_graph("a a", GraphFormat::EdgeList);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 3u);
  }
}

TEST(ParseGraph, TooManyTokens) {
  try {
    parse_graph("a b\nb c d\n", GraphFormat::EdgeList);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 5u);
  }
}

TEST(ParseGraph, JsonSyntaxErrorHasPosition) {
  try {
    parse_graph("{\n  \"edges\": [[\"a\", ]\n}", GraphFormat::Json);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_GT(e.column(), 0u);
  }
}

TEST(ParseGraph, JsonUnknownLabel) {
  EXPECT_THROW(parse_graph(R"({"vertices":["a","b"],"edges":[["a","c"]]})", GraphFormat::Json),
               ReferenceError);
}

TEST(ParseGraph, JsonDuplicateLabel) {
  EXPECT_THROW(parse_graph(R"({"vertices":["a","a"],"edges":[]})", GraphFormat::Json), ParseError);
}

TEST(ParseGraph, JsonIntegerLabels) {
  const auto lg = parse_graph(R"({"edges":[[1,2],[2,3]]})", GraphFormat::Json);
  EXPECT_EQ(lg.labels, (std::vector<std::string>{"1", "2", "3"}));
  EXPECT_EQ(lg.graph.size(), 2u);
}

TEST(ParseGraph, Sniffing) {
  EXPECT_EQ(sniff_format("  {\"edges\":[]}"), GraphFormat::Json);
  EXPECT_EQ(sniff_format("a b\n"), GraphFormat::EdgeList);
}

TEST(EmitGraph, RoundTripPreservesLabels) {
  const auto lg = parse_graph(kHouseText, GraphFormat::EdgeList);
  for (auto fmt : {GraphFormat::EdgeList, GraphFormat::Json}) {
    const auto back = parse_graph(emit_graph(lg, fmt), fmt);
    EXPECT_EQ(back.labels, lg.labels);
    EXPECT_EQ(back.graph, lg.graph);
  }
}

TEST(EmitGraph, IsolatedVerticesSurvive) {
  LabeledGraph lg{make_graph(4, {{1, 2}}), {"p", "q", "r", "s"}};
  const auto back = parse_graph(emit_graph(lg, GraphFormat::EdgeList), GraphFormat::EdgeList);
  EXPECT_EQ(back.labels, lg.labels);
  EXPECT_EQ(back.graph, lg.graph);
}

TEST(Arrangements, ParseAndFormat) {
  const auto lg = parse_graph(kHouseText, GraphFormat::EdgeList);
  const auto arr = parse_arrangement(lg, "a, e,b ,d,c");
  EXPECT_EQ(arr, support::house_order("aebdc"));
  EXPECT_EQ(format_arrangement(lg, arr), "a,e,b,d,c");
  EXPECT_THROW(parse_arrangement(lg, "a,e,b,d,x"), ReferenceError);
  EXPECT_THROW(parse_arrangement(lg, "a,e,b,d"), ValidationError);
  EXPECT_THROW(parse_arrangement(lg, "a,e,b,d,d"), ValidationError);
  EXPECT_THROW(parse_arrangement(lg, "a,,b,d,c"), ParseError);
}

TEST(Arrangements, EdgeSubset) {
  const auto lg = parse_graph(kHouseText, GraphFormat::EdgeList);
  const auto cyc = parse_edge_subset(lg, "a-b,b-c,c-d,d-e,e-a");
  ASSERT_EQ(cyc.edges.size(), 5u);
  EXPECT_EQ(cyc.edges[4], Edge(0, 4));
  EXPECT_THROW(parse_edge_subset(lg, "a-q"), ReferenceError);
  EXPECT_THROW(parse_edge_subset(lg, "ab"), ParseError);
}

TEST(ArcDiagram, DotGolden) {
  const auto lg = parse_graph(kHouseText, GraphFormat::EdgeList);
  const auto text = emit_arc_diagram(lg, support::house_order("aebdc"), DiagramFormat::Dot);
  EXPECT_EQ(text, golden("house_pi1.dot"));
  EXPECT_EQ(text.find("digraph"), std::string::npos);
}

TEST(ArcDiagram, TikzAndSvgGolden) {
  const auto lg = parse_graph(kHouseText, GraphFormat::EdgeList);
  EXPECT_EQ(emit_arc_diagram(lg, support::house_order("aedcb"), DiagramFormat::Tikz),
            golden("house_fig_a.tikz"));
  EXPECT_EQ(emit_arc_diagram(lg, support::house_order("aebdc"), DiagramFormat::Svg),
            golden("house_pi1.svg"));
}

TEST(ArcDiagram, SingleEdgeSvg) {
  LabeledGraph lg{fixtures::complete(2), {"u", "v"}};
  const auto svg = emit_arc_diagram(lg, Arrangement::identity(2), DiagramFormat::Svg);
  auto count = [&](const std::string& needle) {
    std::size_t n = 0;
    for (auto p = svg.find(needle); p != std::string::npos; p = svg.find(needle, p + 1)) ++n;
    return n;
  };
  EXPECT_EQ(count("<circle"), 2u);
  EXPECT_EQ(count("<path"), 1u);
}

TEST(ArcDiagram, Deterministic) {
  const auto lg = parse_graph(kHouseText, GraphFormat::EdgeList);
  for (auto f : {DiagramFormat::Dot, DiagramFormat::Tikz, DiagramFormat::Svg})
    EXPECT_EQ(emit_arc_diagram(lg, support::house_order("abcde"), f),
              emit_arc_diagram(lg, support::house_order("abcde"), f));
}

TEST(ArcDiagram, NodeOrderFollowsArrangement) {
  const auto lg = parse_graph(kHouseText, GraphFormat::EdgeList);
  const auto dot = emit_arc_diagram(lg, support::house_order("aebdc"), DiagramFormat::Dot);
  std::size_t last = 0;
  for (const char* id : {"\"a\" [pos=\"1", "\"e\" [pos=\"2", "\"b\" [pos=\"3", "\"d\" [pos=\"4",
                         "\"c\" [pos=\"5"}) {
    const auto at = dot.find(id);
    ASSERT_NE(at, std::string::npos) << id;
    EXPECT_GE(at, last);
    last = at;
  }
}

TEST(ArcDiagram, RejectsWrongArity) {
  const auto lg = parse_graph(kHouseText, GraphFormat::EdgeList);
  EXPECT_THROW(emit_arc_diagram(lg, Arrangement::identity(3), DiagramFormat::Svg), ValidationError);
}
