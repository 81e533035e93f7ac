#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sds/graph.hpp"
#include "sds/vertex_cover.hpp"

namespace sds {

struct TreeDecomposition {
  std::vector<VertexSet> bags;
  std::vector<std::vector<int>> tree;  // adjacency over bag indices

  int width() const;
};

/// Min-fill elimination heuristic. Disconnected inputs are handled by
/// chaining the per-component trees. No bag is contained in a neighbouring
/// bag.
TreeDecomposition min_fill_decomposition(const Graph& g);

struct DecompositionCheck {
  bool ok = true;
  std::string diagnostic;
  explicit operator bool() const { return ok; }
};

/// Checks that bags cover V, that each edge sits in some bag, that the bags
/// holding any vertex form a connected subtree, and that `tree` is a tree.
DecompositionCheck validate_decomposition(const Graph& g, const TreeDecomposition& td);

enum class NiceKind { leaf, introduce, forget, join };

struct NiceNode {
  NiceKind kind = NiceKind::leaf;
  Vertex vertex = -1;  // introduced or forgotten vertex
  VertexSet bag;
  std::vector<int> children;
};

/// Rooted nice decomposition; leaves and the root have empty bags. Every
/// node's children have smaller indices than the node itself.
struct NiceDecomposition {
  std::vector<NiceNode> nodes;
  int root = -1;
  int width() const;
};

NiceDecomposition make_nice(const TreeDecomposition& td);
/// Plain view of a nice decomposition, for validation.
TreeDecomposition to_tree_decomposition(const NiceDecomposition& nice);

inline constexpr int kMaxDpWidth = 20;

/// Exact minimum cover by subset DP over a nice form of `td`. Throws
/// BudgetExceededError above kMaxDpWidth and std::invalid_argument if td is
/// not a valid decomposition of g.
VcResult vc_via_tree_decomposition(const Graph& g, const TreeDecomposition& td);

/// PACE ".td" text: "s td <bags> <max bag size> <n>", "b <i> <v...>" lines
/// and tree edge lines, all 1-based.
void write_pace_td(std::ostream& out, const Graph& g, const TreeDecomposition& td);

}  // namespace sds
