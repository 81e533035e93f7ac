#pragma once

#include <optional>
#include <span>
#include <vector>

#include "sds/block_cut_tree.hpp"
#include "sds/graph.hpp"

namespace sds {

/// Vertex colours for colour-respecting domination. The enumerator order is
/// the "better than" order: ONE beats ZERO beats ZERO_HAT.
enum class Colour : unsigned char {
  zero_hat = 0,  // must be simultaneously dominated
  zero = 1,      // exempt from domination
  one = 2,       // forced into the set
};

using Colouring = std::vector<Colour>;

/// Maximum of a nonempty colour set under ONE > ZERO > ZERO_HAT. Throws
/// std::invalid_argument on an empty span.
Colour best_colour(std::span<const Colour> colours);
inline Colour best_colour(Colour a, Colour b) { return a > b ? a : b; }

const char* to_string(Colour c);

/// Whether v is dominated in every spanning tree by s. `in_s` is the
/// membership vector of s. Uses the block structure instead of trees: a
/// non-cut vertex needs all neighbours in s, a cut vertex needs all of its
/// neighbours inside at least one of its blocks.
bool is_simultaneously_dominated(const Graph& g, const BlockCutTree& bct,
                                 std::span<const char> in_s, Vertex v);
bool is_simultaneously_dominated(const Graph& g, const BlockCutTree& bct,
                                 std::span<const Vertex> s, Vertex v);

bool is_sd_set(const Graph& g, const BlockCutTree& bct, std::span<const Vertex> s);
/// First vertex not simultaneously dominated by s, if any.
std::optional<Vertex> undominated_witness(const Graph& g, const BlockCutTree& bct,
                                          std::span<const Vertex> s);

bool is_f_respecting(const Graph& g, const BlockCutTree& bct, std::span<const Colour> f,
                     std::span<const Vertex> s);

bool is_vertex_cover(const Graph& g, std::span<const Vertex> s);

}  // namespace sds
