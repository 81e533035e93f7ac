#pragma once

#include "sds/block_cut_tree.hpp"
#include "sds/graph.hpp"
#include "sds/lp.hpp"

namespace sds {

struct RoundingOptions {
  /// Re-check the LP rows with the current (x', y') after every rounding
  /// step, and that no variable at 1 is ever lowered. Violations throw
  /// std::logic_error.
  bool check_steps = false;
};

struct RoundingResult {
  VertexSet set;
  std::size_t rounded_up_first = 0;  // x >= 1/2 in the LP optimum
  VertexSet raised_cut_vertices;     // cut vertices set to 1 bottom-up
  VertexSet lowered;                 // argmin neighbours set to 0 bottom-up
  std::size_t steps_checked = 0;
};

/// Rounds an LP optimum of build_sds_ip(g, bct, false) to an SD-set:
///  1. x' = 1 where x >= 1/2, y'(v,B) = min of x' over N_B(v);
///  2. walk cut vertices bottom-up in the block-cut tree rooted at the
///     smallest cut vertex; a cut vertex with x'_v < 1 and every
///     y'(v,B) < 1/2 is raised to 1 and, in each child block, one minimum
///     neighbour (smallest index on ties) is lowered to 0;
///  3. remaining fractional x' go to 0.
/// Throws std::logic_error if the result is not an SD-set.
RoundingResult round_lp(const Graph& g, const BlockCutTree& bct, const LpModel& model,
                        const LpSolution& sol, const RoundingOptions& options = {});

struct Approx2Result {
  VertexSet set;
  Rational lp_bound;  // LP optimum, a lower bound on the minimum SD-set size
  LpSolution lp;
  RoundingResult rounding;
};

/// LP-rounding 2-approximation: |set| <= 2 * lp_bound.
Approx2Result approx2_sds(const Graph& g, const RoundingOptions& options = {});

/// Extends an SD-set to a vertex cover with at most |s| - 1 extra vertices:
/// roots the block-cut tree at the first block meeting s and adds each cut
/// vertex whose child blocks meet s. Throws std::invalid_argument if s is not
/// an SD-set or g has fewer than two vertices.
VertexSet sds_to_vertex_cover(const Graph& g, const BlockCutTree& bct, std::span<const Vertex> s);

/// Matching-based cover, which is also an SD-set of size < 4 * optimum.
VertexSet approx4_sds_via_vc(const Graph& g);

}  // namespace sds
