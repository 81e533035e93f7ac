#pragma once

#include <optional>
#include <vector>

#include "sds/graph.hpp"

namespace sds {

/// Blocks (maximal 2-connected subgraphs, bridges as 2-vertex blocks) and
/// cut vertices of a connected graph.
///
/// Blocks are ordered by the DFS discovery times of their vertices (the
/// sorted discovery-time sequences compared lexicographically), with the DFS
/// started at vertex 0 and neighbours visited in ascending order.
struct BlockCutTree {
  std::vector<VertexSet> blocks;
  VertexSet cut_vertices;
  std::vector<char> is_cut;                       // per vertex
  std::vector<std::vector<int>> blocks_of;        // vertex -> block indices, ascending
  std::vector<VertexSet> cut_vertices_of_block;   // block -> its cut vertices
  std::vector<int> block_of_edge;                 // index into Graph::edges()

  int num_blocks() const noexcept { return static_cast<int>(blocks.size()); }
  bool cut(Vertex v) const { return is_cut[v] != 0; }
  /// N_B(v): neighbours of v joined to it by an edge of block b.
  VertexSet neighbours_in_block(const Graph& g, Vertex v, int b) const;
};

/// Throws DisconnectedError when g is not connected or empty.
BlockCutTree blocks_and_cut_vertices(const Graph& g);

/// True iff g is connected and has a single block (K1 and K2 included).
bool is_single_block(const Graph& g);

struct LeafStep {
  int block;
  std::optional<Vertex> connection;  // empty for the final (root) block
};

/// Order in which blocks can be peeled off as leaf-components. Each entry's
/// block is a leaf of the block-cut tree that remains after deleting
/// V(B) \ {v} for all earlier entries; ties go to the smallest block index.
std::vector<LeafStep> leaf_component_order(const BlockCutTree& bct);

}  // namespace sds
