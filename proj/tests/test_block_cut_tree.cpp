#include <doctest.h>

#include <set>

#include "sds/block_cut_tree.hpp"
#include "sds/errors.hpp"
#include "sds/generators.hpp"
#include "support.hpp"

using namespace sds;

TEST_CASE("path has two blocks and one cut vertex") {
  BlockCutTree bct = blocks_and_cut_vertices(path_graph(3));
  CHECK(bct.blocks == std::vector<VertexSet>{{0, 1}, {1, 2}});
  CHECK(bct.cut_vertices == VertexSet{1});
}

TEST_CASE("triangle is one block") {
  BlockCutTree bct = blocks_and_cut_vertices(complete_graph(3));
  CHECK(bct.blocks == std::vector<VertexSet>{{0, 1, 2}});
  CHECK(bct.cut_vertices.empty());
  CHECK(is_single_block(complete_graph(3)));
  CHECK(is_single_block(Graph(1)));
  CHECK(is_single_block(Graph(2, {{0, 1}})));
  CHECK_FALSE(is_single_block(path_graph(3)));
}

TEST_CASE("gap graph k=3 has 7 blocks and 6 cut vertices") {
  Graph g = gap_graph(3);
  BlockCutTree bct = blocks_and_cut_vertices(g);
  CHECK(bct.num_blocks() == 7);
  CHECK(bct.cut_vertices == VertexSet{0, 1, 2, 3, 4, 5});
  int clique_blocks = 0;
  for (const auto& b : bct.blocks) clique_blocks += b.size() == 3;
  CHECK(clique_blocks == 1);
}

TEST_CASE("disconnected or empty input is rejected") {
  CHECK_THROWS_AS(blocks_and_cut_vertices(Graph(2)), DisconnectedError);
  CHECK_THROWS_AS(blocks_and_cut_vertices(Graph(0)), DisconnectedError);
  CHECK_FALSE(is_single_block(Graph(2)));
}

TEST_CASE("leaf component order examples") {
  auto single = leaf_component_order(blocks_and_cut_vertices(complete_graph(4)));
  REQUIRE(single.size() == 1);
  CHECK(single[0].block == 0);
  CHECK_FALSE(single[0].connection.has_value());

  auto path = leaf_component_order(blocks_and_cut_vertices(path_graph(3)));
  REQUIRE(path.size() == 2);
  CHECK(path[0].block == 0);
  CHECK(path[0].connection == 1);
  CHECK_FALSE(path[1].connection.has_value());

  auto star = leaf_component_order(blocks_and_cut_vertices(star_graph(3)));
  REQUIRE(star.size() == 3);
  CHECK(star[0].connection == 0);
  CHECK(star[1].connection == 0);
  CHECK_FALSE(star[2].connection.has_value());
}

namespace {

void check_structure(const Graph& g) {
  BlockCutTree bct = blocks_and_cut_vertices(g);
  const int n = g.num_vertices();

  // Cut vertices agree with the deletion definition and with block counts.
  for (Vertex v = 0; v < n; ++v) {
    CHECK(bct.cut(v) == sds::testing::is_cut_by_deletion(g, v));
    CHECK(bct.cut(v) == (bct.blocks_of[v].size() >= 2));
  }

  // Each edge lies in exactly one block, and that block contains it.
  std::vector<int> edges_in_block(bct.num_blocks(), 0);
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    int b = bct.block_of_edge[i];
    const VertexSet& blk = bct.blocks[b];
    CHECK(std::binary_search(blk.begin(), blk.end(), g.edges()[i].u));
    CHECK(std::binary_search(blk.begin(), blk.end(), g.edges()[i].v));
    ++edges_in_block[b];
    int containing = 0;
    for (const VertexSet& other : bct.blocks)
      containing += std::binary_search(other.begin(), other.end(), g.edges()[i].u) &&
                    std::binary_search(other.begin(), other.end(), g.edges()[i].v);
    CHECK(containing == 1);
  }

  // Each block is 2-connected (or K1/K2) and maximal sizes add up: the
  // block-cut tree has #blocks + #cuts nodes and sum |cuts of B| edges.
  std::size_t tree_edges = 0, excess = 0;
  for (int b = 0; b < bct.num_blocks(); ++b) {
    CHECK(is_single_block(induced_subgraph(g, bct.blocks[b]).graph));
    tree_edges += bct.cut_vertices_of_block[b].size();
    excess += bct.blocks[b].size() - 1;
  }
  CHECK(tree_edges + 1 == bct.blocks.size() + bct.cut_vertices.size());
  CHECK(excess == static_cast<std::size_t>(n - 1));

  // Replaying the leaf order keeps the graph connected.
  std::vector<char> alive(n, 1);
  auto order = leaf_component_order(bct);
  CHECK(order.size() == bct.blocks.size());
  CHECK_FALSE(order.back().connection.has_value());
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    REQUIRE(order[i].connection.has_value());
    Vertex v = *order[i].connection;
    CHECK(bct.cut(v));
    // A leaf: v is the block's only cut vertex still shared with live blocks.
    for (Vertex w : bct.blocks[order[i].block])
      if (w != v) alive[w] = 0;
    VertexSet keep;
    for (Vertex w = 0; w < n; ++w)
      if (alive[w]) keep.push_back(w);
    CHECK(is_connected(induced_subgraph(g, keep).graph));
  }
  for (std::size_t i = 0; i + 1 < order.size(); ++i) CHECK(order[i].block != order.back().block);
}

}  // namespace

TEST_CASE("block structure matches brute force on all graphs up to 6 vertices") {
  for (int n = 1; n <= 6; ++n) sds::testing::for_each_connected_graph(n, check_structure);
}

TEST_CASE("block structure matches brute force on random graphs up to 8 vertices") {
  sds::Rng rng(2024);
  for (int trial = 0; trial < 2000; ++trial) {
    int n = static_cast<int>(rng.uniform(7, 8));
    check_structure(sds::testing::random_connected_upto(n, 14, rng));
  }
}

TEST_CASE("larger random graphs stay consistent") {
  sds::Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    int n = static_cast<int>(rng.uniform(20, 60));
    check_structure(random_connected(n, static_cast<int>(rng.uniform(n - 1, 2 * n)), rng.uniform(0, 1 << 30)));
  }
}

TEST_CASE("deep path does not overflow the stack") {
  Graph g = path_graph(100000);
  BlockCutTree bct = blocks_and_cut_vertices(g);
  CHECK(bct.num_blocks() == 99999);
  CHECK(bct.cut_vertices.size() == 99998);
}
