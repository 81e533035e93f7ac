#include "sds/domination.hpp"

#include <algorithm>
#include <stdexcept>

namespace sds {

Colour best_colour(std::span<const Colour> colours) {
  if (colours.empty()) throw std::invalid_argument("best_colour of an empty colour set");
  return *std::max_element(colours.begin(), colours.end());
}

const char* to_string(Colour c) {
  switch (c) {
    case Colour::one: return "1";
    case Colour::zero: return "0";
    case Colour::zero_hat: return "0hat";
  }
  return "?";
}

bool is_simultaneously_dominated(const Graph& g, const BlockCutTree& bct,
                                 std::span<const char> in_s, Vertex v) {
  if (in_s[v]) return true;
  if (!bct.cut(v)) {
    return std::all_of(g.neighbours(v).begin(), g.neighbours(v).end(),
                       [&](Vertex w) { return in_s[w] != 0; });
  }
  // Cut vertex: group neighbours by the block of the connecting edge.
  const auto& blocks = bct.blocks_of[v];
  std::vector<char> block_ok(blocks.size(), 1);
  for (Vertex w : g.neighbours(v)) {
    if (in_s[w]) continue;
    int b = bct.block_of_edge[*g.edge_index(v, w)];
    auto pos = std::lower_bound(blocks.begin(), blocks.end(), b) - blocks.begin();
    block_ok[pos] = 0;
  }
  return std::any_of(block_ok.begin(), block_ok.end(), [](char c) { return c != 0; });
}

bool is_simultaneously_dominated(const Graph& g, const BlockCutTree& bct,
                                 std::span<const Vertex> s, Vertex v) {
  auto in = membership(g.num_vertices(), s);
  return is_simultaneously_dominated(g, bct, in, v);
}

std::optional<Vertex> undominated_witness(const Graph& g, const BlockCutTree& bct,
                                          std::span<const Vertex> s) {
  auto in = membership(g.num_vertices(), s);
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (!is_simultaneously_dominated(g, bct, in, v)) return v;
  return std::nullopt;
}

bool is_sd_set(const Graph& g, const BlockCutTree& bct, std::span<const Vertex> s) {
  return !undominated_witness(g, bct, s).has_value();
}

bool is_f_respecting(const Graph& g, const BlockCutTree& bct, std::span<const Colour> f,
                     std::span<const Vertex> s) {
  auto in = membership(g.num_vertices(), s);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (f[v] == Colour::one && !in[v]) return false;
    if (f[v] == Colour::zero_hat && !is_simultaneously_dominated(g, bct, in, v)) return false;
  }
  return true;
}

bool is_vertex_cover(const Graph& g, std::span<const Vertex> s) {
  auto in = membership(g.num_vertices(), s);
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [&](const Edge& e) { return in[e.u] || in[e.v]; });
}

}  // namespace sds
