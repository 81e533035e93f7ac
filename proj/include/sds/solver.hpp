#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "sds/domination.hpp"
#include "sds/graph.hpp"
#include "sds/vertex_cover.hpp"

namespace sds {

enum class BackendChoice { automatic, bnb, bipartite, treewidth };
std::optional<BackendChoice> parse_backend(std::string_view name);

struct SolveOptions {
  BackendChoice backend = BackendChoice::automatic;
  std::optional<std::uint64_t> bnb_node_budget;
  /// Largest min-fill width routed to the DP backend under automatic dispatch.
  int treewidth_threshold = 12;
};

/// Minimum vertex cover with backend dispatch. Automatic: bipartite graphs go
/// to Konig, min-fill width <= threshold to the DP, everything else to branch
/// and bound. A forced bipartite backend on a non-bipartite graph falls back
/// to branch and bound.
VcResult min_vertex_cover(const Graph& g, const SolveOptions& options = {});

struct CrsdsResult {
  VertexSet set;
  std::size_t size = 0;
  VcBackend backend = VcBackend::bnb;
};

/// Minimum f-respecting SD-set of a 2-connected graph (K1 and K2 count):
/// drop the ONE vertices, drop edges between ZERO vertices, add a minimum
/// vertex cover of what is left to the ONE vertices. Throws
/// NotTwoConnectedError otherwise.
CrsdsResult crsds_2connected(const Graph& g, std::span<const Colour> f,
                             const SolveOptions& options = {});

enum class BlockCase {
  all_equal,       // #1 = #0hat = #0: take S_1, v becomes ONE
  one_costlier,    // #1 > #0hat = #0: take S_0hat, v becomes best(f(v), ZERO)
  dominate_later,  // #0 < #0hat = #1: take S_0, colour of v unchanged
  root,            // last block, solved once under the current colouring
};
std::string_view to_string(BlockCase c);

struct BlockLogEntry {
  int block = -1;
  VertexSet vertices;
  std::optional<Vertex> connection;
  std::optional<std::size_t> size_one, size_zero, size_zero_hat;
  std::size_t size_root = 0;
  BlockCase taken = BlockCase::root;
  Colour colour_before = Colour::zero_hat;
  Colour colour_after = Colour::zero_hat;
  VertexSet chosen;  // vertices contributed, original numbering
  std::vector<VcBackend> backends;  // distinct, in enum order
};

struct SolveReport {
  VertexSet solution;
  std::size_t size = 0;
  std::vector<BlockLogEntry> blocks;
  std::vector<VcBackend> backends;  // distinct, in enum order
  bool verified = false;
};

/// Minimum f-respecting SD-set of a connected graph by peeling leaf blocks.
/// Throws DisconnectedError; throws std::logic_error if the size pattern of
/// the three recoloured block solves ever leaves #0 <= #0hat <= #1 <= #0 + 1,
/// or if the result fails verification.
SolveReport solve_crsds(const Graph& g, std::span<const Colour> f, const SolveOptions& options = {});

/// solve_crsds with every vertex coloured ZERO_HAT.
SolveReport solve_sds(const Graph& g, const SolveOptions& options = {});

/// Classifies the three recolour sizes; nullopt for an impossible pattern.
std::optional<BlockCase> classify_block_sizes(std::size_t one, std::size_t zero_hat, std::size_t zero);

}  // namespace sds
