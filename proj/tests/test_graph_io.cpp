#include <gtest/gtest.h>

#include <random>

#include "drd/errors.hpp"
#include "drd/graph.hpp"
#include "drd/graph_io.hpp"
#include "oracle.hpp"

using namespace drd;

namespace {

std::size_t error_position(std::string_view text, GraphFormat f) {
  try {
    parse_graph(text, f);
  } catch (const ParseError& e) {
    return e.position();
  }
  ADD_FAILURE() << "no parse error for '" << text << "'";
  return 0;
}

}  // namespace

TEST(EdgeList, ParsesPath) {
  EXPECT_EQ(parse_graph("3 2\n0 1\n1 2", GraphFormat::edge_list), path_graph(3));
  EXPECT_EQ(parse_graph("3 2\n0 1\n1 2\n", GraphFormat::edge_list), path_graph(3));
  EXPECT_EQ(parse_graph("  3   2 \n0\t1\n\n1 2\n", GraphFormat::edge_list), path_graph(3));
  EXPECT_EQ(parse_graph("1 0\n", GraphFormat::edge_list), Graph(1));
}

TEST(EdgeList, Serializes) {
  EXPECT_EQ(serialize_graph(path_graph(3), GraphFormat::edge_list), "3 2\n0 1\n1 2\n");
  EXPECT_EQ(serialize_graph(Graph(2), GraphFormat::edge_list), "2 0\n");
}

TEST(EdgeList, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_position("2 1\n0 0", GraphFormat::edge_list), 2u);
  EXPECT_EQ(error_position("3 2\n0 1\n1 3", GraphFormat::edge_list), 3u);
  EXPECT_EQ(error_position("3 1\n1 0", GraphFormat::edge_list), 2u);
  EXPECT_EQ(error_position("3 2\n0 1\n0 1", GraphFormat::edge_list), 3u);
  EXPECT_EQ(error_position("3 x\n", GraphFormat::edge_list), 1u);
  EXPECT_EQ(error_position("0 0\n", GraphFormat::edge_list), 1u);
  EXPECT_THROW(parse_graph("3 2\n0 1\n", GraphFormat::edge_list), ParseError);
  EXPECT_THROW(parse_graph("3 1\n0 1\n1 2\n", GraphFormat::edge_list), ParseError);
  EXPECT_THROW(parse_graph("", GraphFormat::edge_list), ParseError);
  EXPECT_THROW(parse_graph("3 1\n0 1 2\n", GraphFormat::edge_list), ParseError);
}

// Reference strings produced by networkx.to_graph6_bytes.
TEST(Graph6, ReferenceEncodings) {
  EXPECT_EQ(serialize_graph(path_graph(3), GraphFormat::graph6), "Bg");
  EXPECT_EQ(serialize_graph(complete_graph(7), GraphFormat::graph6), "F~~~w");
  EXPECT_EQ(serialize_graph(Graph(2), GraphFormat::graph6), "A?");
  EXPECT_EQ(serialize_graph(Graph(1), GraphFormat::graph6), "@");
  const Graph petersen(10, {{0, 1}, {0, 4}, {0, 5}, {1, 2}, {1, 6}, {2, 3}, {2, 7}, {3, 4}, {3, 8}, {4, 9},
                            {5, 7}, {5, 8}, {6, 8}, {6, 9}, {7, 9}});
  EXPECT_EQ(serialize_graph(petersen, GraphFormat::graph6), "IheA@GUAo");
}

TEST(Graph6, Decodes) {
  // "B_" is three vertices with the single edge 0-1; two isolated vertices is "A?".
  EXPECT_EQ(parse_graph("B_", GraphFormat::graph6), disjoint_union(path_graph(2), Graph(1)));
  EXPECT_EQ(parse_graph("A?", GraphFormat::graph6), disjoint_union(Graph(1), Graph(1)));
  EXPECT_EQ(parse_graph(">>graph6<<Bg\n", GraphFormat::graph6), path_graph(3));
}

TEST(Graph6, Errors) {
  EXPECT_THROW(parse_graph("", GraphFormat::graph6), ParseError);
  EXPECT_THROW(parse_graph("?", GraphFormat::graph6), ParseError);   // n = 0
  EXPECT_THROW(parse_graph("B", GraphFormat::graph6), ParseError);   // missing data byte
  EXPECT_THROW(parse_graph("B__", GraphFormat::graph6), ParseError); // trailing byte
  EXPECT_EQ(error_position("B`", GraphFormat::graph6), 1u);            // padding bit set
  EXPECT_EQ(error_position("C~ ", GraphFormat::graph6), 2u);
  EXPECT_THROW(serialize_graph(Graph(63), GraphFormat::graph6), InvalidArgument);
}

TEST(RoundTrip, RandomGraphsBothFormats) {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> order(1, 10);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  for (int trial = 0; trial < 300; ++trial) {
    Graph g = testgen::random_graph(rng, order(rng), density(rng));
    for (auto f : {GraphFormat::edge_list, GraphFormat::graph6}) {
      const auto text = serialize_graph(g, f);
      EXPECT_EQ(parse_graph(text, f), g) << text;
    }
  }
}

TEST(Formats, Names) {
  EXPECT_EQ(parse_graph_format("edge_list"), GraphFormat::edge_list);
  EXPECT_EQ(parse_graph_format("graph6"), GraphFormat::graph6);
  EXPECT_THROW(parse_graph_format("dot"), InvalidArgument);
}
