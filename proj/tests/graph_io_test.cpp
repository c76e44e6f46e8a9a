#include <gtest/gtest.h>

#include "toughlab/error.hpp"
#include "toughlab/families.hpp"
#include "toughlab/graph_io.hpp"

using namespace toughlab;

namespace {

ErrorCode parse_error(std::string_view text, Graph (*parse)(std::string_view)) {
  try {
    parse(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for '" << text << "'";
  return ErrorCode::Overflow;
}

}  // namespace

TEST(Graph6, TriangleHandEncoded) {
  // n = 3 -> 'B'; upper triangle bits x01 x02 x12 = 111 padded to 111000 = 56 -> 'w'.
  EXPECT_EQ(emit_graph6(cycle(3)), "Bw");
  EXPECT_EQ(parse_graph6("Bw"), cycle(3));
}

TEST(Graph6, MalformedInput) {
  EXPECT_EQ(parse_error("!!!", parse_graph6), ErrorCode::MalformedGraph6);
  EXPECT_EQ(parse_error("", parse_graph6), ErrorCode::MalformedGraph6);
  EXPECT_EQ(parse_error("Bww", parse_graph6), ErrorCode::MalformedGraph6);  // one byte too many
  EXPECT_EQ(parse_error("B", parse_graph6), ErrorCode::MalformedGraph6);    // truncated
  EXPECT_EQ(parse_error("Bx", parse_graph6), ErrorCode::MalformedGraph6);   // padding bit set
}

TEST(Graph6, HeaderAndWhitespaceAccepted) {
  EXPECT_EQ(parse_graph6(">>graph6<<Bw\n"), cycle(3));
  EXPECT_EQ(parse_graph6("  Bw \r\n"), cycle(3));
}

TEST(Graph6, KnownEncodings) {
  // Reference strings from the public graph6 definition and nauty's geng/showg.
  EXPECT_EQ(emit_graph6(Graph::from_edge_list(0, {})), "?");
  EXPECT_EQ(emit_graph6(Graph::from_edge_list(1, {})), "@");
  EXPECT_EQ(emit_graph6(complete(2)), "A_");
  EXPECT_EQ(emit_graph6(complete(4)), "C~");
  // The example of the graph6 description: 5 vertices, edges 0-2 0-4 1-3 3-4.
  const std::vector<Edge> example{{0, 2}, {0, 4}, {1, 3}, {3, 4}};
  EXPECT_EQ(emit_graph6(Graph::from_edge_list(5, example)), "DQc");
}

TEST(Graph6, LongHeaderForLargeOrders) {
  const Graph g = hypercube(6);
  const std::string text = emit_graph6(g);
  ASSERT_GE(text.size(), 4u);
  // 64 = 000000 000001 000000 in three sextets.
  EXPECT_EQ(text.substr(0, 4), "~?@?");
  EXPECT_EQ(text.size(), 4u + (64 * 63 / 2 + 5) / 6);
  EXPECT_EQ(parse_graph6(text), g);
}

TEST(Graph6, RoundTripOnGenerators) {
  for (const Graph& g : {petersen(), kneser(7, 3), cycle(12), complete(8), complete_bipartite(5, 5), hypercube(4),
                         circulant(12, {1, 5}), random_regular(14, 5, 17), Graph::from_edge_list(63, {})}) {
    EXPECT_EQ(parse_graph6(emit_graph6(g)), g);
  }
}

TEST(EdgeList, RoundTripAndFormat) {
  const std::string text = emit_edge_list(complete(4));
  EXPECT_EQ(text, "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
  EXPECT_EQ(parse_edge_list(text), complete(4));
  EXPECT_EQ(parse_edge_list(emit_edge_list(petersen())), petersen());
}

TEST(EdgeList, Errors) {
  EXPECT_EQ(parse_error("3", parse_edge_list), ErrorCode::ParseError);
  EXPECT_EQ(parse_error("3 2\n0 1\n", parse_edge_list), ErrorCode::ParseError);
  EXPECT_EQ(parse_error("3 1\n0 1\n2 0\n", parse_edge_list), ErrorCode::ParseError);
  EXPECT_EQ(parse_error("3 1\n0 5\n", parse_edge_list), ErrorCode::EndpointOutOfRange);
  EXPECT_EQ(parse_error("3 1\n1 1\n", parse_edge_list), ErrorCode::SelfLoop);
}

TEST(AutoDetect, PicksFormatFromFirstLine) {
  EXPECT_EQ(parse_graph_auto("Bw\n"), cycle(3));
  EXPECT_EQ(parse_graph_auto("\n3 3\n0 1\n1 2\n2 0\n"), cycle(3));
  EXPECT_EQ(parse_error("   \n", parse_graph_auto), ErrorCode::ParseError);
  EXPECT_EQ(parse_error("Bw\nBw\n", parse_graph_auto), ErrorCode::ParseError);
}
