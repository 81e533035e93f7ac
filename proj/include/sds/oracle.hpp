#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "sds/domination.hpp"
#include "sds/graph.hpp"

// Exponential-time ground truth. Every routine refuses (BudgetExceededError)
// rather than run past its size cap.
namespace sds::oracle {

inline constexpr std::size_t kMaxTreeEnumerationEdges = 16;
inline constexpr int kMaxSdsVertices = 16;
inline constexpr int kMaxVcVertices = 20;

/// Spanning tree as indices into Graph::edges(), ascending.
using SpanningTree = std::vector<std::size_t>;

/// Calls `visit` for every spanning tree exactly once; stops early when
/// `visit` returns false. Returns the number of trees visited.
std::uint64_t for_each_spanning_tree(const Graph& g,
                                     const std::function<bool(const SpanningTree&)>& visit);
std::vector<SpanningTree> enumerate_spanning_trees(const Graph& g);

/// Kirchhoff matrix-tree count, exact (fraction-free Bareiss elimination).
std::int64_t kirchhoff_tree_count(const Graph& g);

/// Definition check: s dominates g in every spanning tree.
bool is_sd_set_by_enumeration(const Graph& g, std::span<const Vertex> s);

/// Calls `visit` on subsets of 0..n-1 ordered by size and then
/// lexicographically, until it returns true. Returns the accepted subset.
std::optional<VertexSet> first_subset(int n, const std::function<bool(const VertexSet&)>& accept);

VertexSet min_vc_bruteforce(const Graph& g);
/// Uses the block-structure verifier; g must be connected.
VertexSet min_sds_bruteforce(const Graph& g);
VertexSet min_crsds_bruteforce(const Graph& g, std::span<const Colour> f);

}  // namespace sds::oracle
