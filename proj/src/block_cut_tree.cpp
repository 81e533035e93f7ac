#include "sds/block_cut_tree.hpp"

#include <algorithm>
#include <queue>

#include "sds/errors.hpp"

namespace sds {

VertexSet BlockCutTree::neighbours_in_block(const Graph& g, Vertex v, int b) const {
  VertexSet out;
  for (Vertex w : g.neighbours(v))
    if (block_of_edge[*g.edge_index(v, w)] == b) out.push_back(w);
  return out;
}

BlockCutTree blocks_and_cut_vertices(const Graph& g) {
  const int n = g.num_vertices();
  if (n == 0 || !is_connected(g)) throw DisconnectedError();

  BlockCutTree bct;
  bct.is_cut.assign(n, 0);
  bct.blocks_of.assign(n, {});
  bct.block_of_edge.assign(g.num_edges(), -1);

  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<std::vector<std::size_t>> raw_blocks;  // edge indices per block
  std::vector<std::size_t> edge_stack;

  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };
  std::vector<Frame> stack{{0, -1, 0}};
  int timer = 0;
  disc[0] = low[0] = timer++;
  int root_children = 0;

  // Iterative Hopcroft-Tarjan lowpoint DFS with an edge stack.
  while (!stack.empty()) {
    Frame& f = stack.back();
    auto nbrs = g.neighbours(f.v);
    if (f.next < nbrs.size()) {
      Vertex w = nbrs[f.next++];
      if (w == f.parent) continue;
      std::size_t e = *g.edge_index(f.v, w);
      if (disc[w] < 0) {
        edge_stack.push_back(e);
        disc[w] = low[w] = timer++;
        if (f.v == 0) ++root_children;
        stack.push_back({w, f.v, 0});
      } else if (disc[w] < disc[f.v]) {
        edge_stack.push_back(e);
        low[f.v] = std::min(low[f.v], disc[w]);
      }
      continue;
    }
    Vertex v = f.v, p = f.parent;
    stack.pop_back();
    if (p < 0) break;
    low[p] = std::min(low[p], low[v]);
    if (low[v] >= disc[p]) {
      if (p != 0) bct.is_cut[p] = 1;
      std::size_t tree_edge = *g.edge_index(p, v);
      std::vector<std::size_t> block;
      while (true) {
        std::size_t e = edge_stack.back();
        edge_stack.pop_back();
        block.push_back(e);
        if (e == tree_edge) break;
      }
      raw_blocks.push_back(std::move(block));
    }
  }
  if (root_children >= 2) bct.is_cut[0] = 1;

  if (raw_blocks.empty()) {
    // n == 1: the lone vertex forms a block without edges.
    bct.blocks.push_back({0});
  } else {
    struct Keyed {
      std::vector<int> key;
      VertexSet vertices;
      std::vector<std::size_t> edges;
    };
    std::vector<Keyed> keyed;
    for (auto& edges : raw_blocks) {
      VertexSet vs;
      for (std::size_t e : edges) {
        vs.push_back(g.edges()[e].u);
        vs.push_back(g.edges()[e].v);
      }
      std::sort(vs.begin(), vs.end());
      vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
      std::vector<int> key;
      for (Vertex v : vs) key.push_back(disc[v]);
      std::sort(key.begin(), key.end());
      keyed.push_back({std::move(key), std::move(vs), std::move(edges)});
    }
    std::sort(keyed.begin(), keyed.end(),
              [](const Keyed& a, const Keyed& b) { return a.key < b.key; });
    for (std::size_t b = 0; b < keyed.size(); ++b) {
      for (std::size_t e : keyed[b].edges) bct.block_of_edge[e] = static_cast<int>(b);
      bct.blocks.push_back(std::move(keyed[b].vertices));
    }
  }

  bct.cut_vertices_of_block.assign(bct.blocks.size(), {});
  for (int b = 0; b < bct.num_blocks(); ++b)
    for (Vertex v : bct.blocks[b]) {
      bct.blocks_of[v].push_back(b);
      if (bct.is_cut[v]) bct.cut_vertices_of_block[b].push_back(v);
    }
  for (Vertex v = 0; v < n; ++v)
    if (bct.is_cut[v]) bct.cut_vertices.push_back(v);
  return bct;
}

bool is_single_block(const Graph& g) {
  if (g.num_vertices() == 0 || !is_connected(g)) return false;
  return blocks_and_cut_vertices(g).num_blocks() == 1;
}

std::vector<LeafStep> leaf_component_order(const BlockCutTree& bct) {
  const int nb = bct.num_blocks();
  std::vector<int> remaining_blocks(bct.is_cut.size(), 0);
  for (Vertex c : bct.cut_vertices) remaining_blocks[c] = static_cast<int>(bct.blocks_of[c].size());

  // A block's live cut vertices are those still shared with another block.
  auto live_cuts = [&](int b) {
    VertexSet live;
    for (Vertex c : bct.cut_vertices_of_block[b])
      if (remaining_blocks[c] >= 2) live.push_back(c);
    return live;
  };

  std::vector<char> removed(nb, 0), queued(nb, 0);
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (int b = 0; b < nb; ++b)
    if (live_cuts(b).size() == 1) {
      leaves.push(b);
      queued[b] = 1;
    }

  std::vector<LeafStep> order;
  int left = nb;
  while (left > 1) {
    int b = leaves.top();
    leaves.pop();
    Vertex v = live_cuts(b).front();
    order.push_back({b, v});
    removed[b] = 1;
    --left;
    --remaining_blocks[v];
    for (int nbk : bct.blocks_of[v])
      if (!removed[nbk] && !queued[nbk] && live_cuts(nbk).size() == 1) {
        leaves.push(nbk);
        queued[nbk] = 1;
      }
  }
  for (int b = 0; b < nb; ++b)
    if (!removed[b]) order.push_back({b, std::nullopt});
  return order;
}

}  // namespace sds
