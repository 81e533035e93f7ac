#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "sds/graph.hpp"

namespace sds {

enum class VcBackend { bnb, bipartite, treewidth };
std::string_view to_string(VcBackend b);

struct VcResult {
  VertexSet cover;
  std::size_t size = 0;
  VcBackend backend = VcBackend::bnb;
  std::optional<std::size_t> lower_bound;  // maximal/maximum matching size
};

struct BnbOptions {
  /// Abort with BudgetExceededError after this many search nodes.
  std::optional<std::uint64_t> node_budget;
};

/// Exact minimum vertex cover by branch and bound: degree-0/1 reductions,
/// maximal-matching lower bound, branching on a highest-degree vertex
/// (smallest index on ties) into {v} / N(v).
VcResult min_vc_branch_and_bound(const Graph& g, const BnbOptions& options = {});

struct Bipartition {
  VertexSet left;
  VertexSet right;
};

/// BFS 2-colouring per component, smallest vertex of each component on the
/// left; nullopt when an odd cycle exists.
std::optional<Bipartition> bipartition(const Graph& g);

/// Maximum matching by Hopcroft-Karp; mate[v] == -1 when unmatched.
std::vector<Vertex> maximum_bipartite_matching(const Graph& g, const Bipartition& sides);

/// Minimum cover via Konig: alternating reachability from unmatched left
/// vertices Z, cover = (left \ Z) + (right & Z). Throws
/// std::invalid_argument if `sides` is not a bipartition of g.
VcResult min_vc_bipartite(const Graph& g, const Bipartition& sides);

/// Greedy maximal matching over edges in index order.
std::vector<Edge> maximal_matching(const Graph& g);
/// Both endpoints of maximal_matching(g).
VertexSet matching_2approx_vc(const Graph& g);

/// Perfect elimination ordering (vertex order in which each vertex is
/// simplicial among the later ones) if g is chordal. Lex-BFS based.
std::optional<std::vector<Vertex>> is_chordal(const Graph& g);
std::vector<Vertex> lex_bfs(const Graph& g);

}  // namespace sds
