#include "sds/solver.hpp"

#include <algorithm>
#include <stdexcept>

#include "sds/block_cut_tree.hpp"
#include "sds/errors.hpp"
#include "sds/treewidth.hpp"

namespace sds {

std::optional<BackendChoice> parse_backend(std::string_view name) {
  if (name == "auto") return BackendChoice::automatic;
  if (name == "bnb") return BackendChoice::bnb;
  if (name == "bipartite") return BackendChoice::bipartite;
  if (name == "treewidth") return BackendChoice::treewidth;
  return std::nullopt;
}

std::string_view to_string(BlockCase c) {
  switch (c) {
    case BlockCase::all_equal: return "all_equal";
    case BlockCase::one_costlier: return "one_costlier";
    case BlockCase::dominate_later: return "dominate_later";
    case BlockCase::root: return "root";
  }
  return "?";
}

VcResult min_vertex_cover(const Graph& g, const SolveOptions& options) {
  BnbOptions bnb{options.bnb_node_budget};
  switch (options.backend) {
    case BackendChoice::bnb:
      return min_vc_branch_and_bound(g, bnb);
    case BackendChoice::bipartite:
      if (auto sides = bipartition(g)) return min_vc_bipartite(g, *sides);
      return min_vc_branch_and_bound(g, bnb);
    case BackendChoice::treewidth:
      return vc_via_tree_decomposition(g, min_fill_decomposition(g));
    case BackendChoice::automatic:
      break;
  }
  if (auto sides = bipartition(g)) return min_vc_bipartite(g, *sides);
  auto td = min_fill_decomposition(g);
  if (td.width() <= options.treewidth_threshold) return vc_via_tree_decomposition(g, td);
  return min_vc_branch_and_bound(g, bnb);
}

CrsdsResult crsds_2connected(const Graph& g, std::span<const Colour> f, const SolveOptions& options) {
  if (static_cast<int>(f.size()) != g.num_vertices())
    throw std::invalid_argument("colouring size does not match graph");
  if (!is_single_block(g)) throw NotTwoConnectedError();

  VertexSet ones;
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (f[v] == Colour::one) ones.push_back(v);
  InducedSubgraph rest = delete_vertices(g, ones);
  VertexSet zeros;
  for (Vertex w = 0; w < rest.graph.num_vertices(); ++w)
    if (f[rest.to_parent[w]] == Colour::zero) zeros.push_back(w);
  Graph residue = delete_edges_within(rest.graph, zeros);

  VcResult vc = min_vertex_cover(residue, options);
  CrsdsResult out;
  out.set = ones;
  for (Vertex w : vc.cover) out.set.push_back(rest.to_parent[w]);
  std::sort(out.set.begin(), out.set.end());
  out.size = out.set.size();
  out.backend = vc.backend;
  return out;
}

std::optional<BlockCase> classify_block_sizes(std::size_t one, std::size_t zero_hat, std::size_t zero) {
  if (!(zero <= zero_hat && zero_hat <= one && one <= zero + 1)) return std::nullopt;
  if (one == zero_hat && zero_hat == zero) return BlockCase::all_equal;
  if (one > zero_hat && zero_hat == zero) return BlockCase::one_costlier;
  return BlockCase::dominate_later;
}

SolveReport solve_crsds(const Graph& g, std::span<const Colour> f_in, const SolveOptions& options) {
  if (static_cast<int>(f_in.size()) != g.num_vertices())
    throw std::invalid_argument("colouring size does not match graph");
  const BlockCutTree bct = blocks_and_cut_vertices(g);
  Colouring f(f_in.begin(), f_in.end());
  std::vector<char> in_solution(g.num_vertices(), 0);
  std::vector<char> used_backend(3, 0);
  SolveReport report;

  auto solve_block = [&](const InducedSubgraph& sub, Colour pivot_colour, std::optional<Vertex> pivot) {
    Colouring local(sub.graph.num_vertices());
    for (Vertex w = 0; w < sub.graph.num_vertices(); ++w) local[w] = f[sub.to_parent[w]];
    if (pivot) local[sub.from_parent[*pivot]] = pivot_colour;
    CrsdsResult r = crsds_2connected(sub.graph, local, options);
    for (Vertex& w : r.set) w = sub.to_parent[w];
    used_backend[static_cast<int>(r.backend)] = 1;
    return r;
  };

  for (const LeafStep& step : leaf_component_order(bct)) {
    BlockLogEntry entry;
    entry.block = step.block;
    entry.vertices = bct.blocks[step.block];
    entry.connection = step.connection;
    InducedSubgraph sub = induced_subgraph(g, entry.vertices);

    CrsdsResult chosen;
    if (!step.connection) {
      chosen = solve_block(sub, Colour::zero_hat, std::nullopt);
      entry.size_root = chosen.size;
      entry.taken = BlockCase::root;
      entry.backends.push_back(chosen.backend);
    } else {
      const Vertex v = *step.connection;
      CrsdsResult s_one = solve_block(sub, Colour::one, v);
      CrsdsResult s_zero = solve_block(sub, Colour::zero, v);
      CrsdsResult s_zero_hat = solve_block(sub, Colour::zero_hat, v);
      entry.size_one = s_one.size;
      entry.size_zero = s_zero.size;
      entry.size_zero_hat = s_zero_hat.size;
      entry.backends = {s_one.backend, s_zero.backend, s_zero_hat.backend};
      std::sort(entry.backends.begin(), entry.backends.end());
      entry.backends.erase(std::unique(entry.backends.begin(), entry.backends.end()), entry.backends.end());
      entry.colour_before = f[v];

      auto taken = classify_block_sizes(s_one.size, s_zero_hat.size, s_zero.size);
      if (!taken)
        throw std::logic_error("block " + std::to_string(step.block) +
                               ": recolour sizes violate #0 <= #0hat <= #1 <= #0+1");
      entry.taken = *taken;
      switch (*taken) {
        case BlockCase::all_equal:
          f[v] = Colour::one;
          chosen = std::move(s_one);
          break;
        case BlockCase::one_costlier:
          f[v] = best_colour(f[v], Colour::zero);
          chosen = std::move(s_zero_hat);
          break;
        default:
          chosen = std::move(s_zero);
          break;
      }
      entry.colour_after = f[v];
    }
    for (Vertex w : chosen.set) in_solution[w] = 1;
    entry.chosen = std::move(chosen.set);
    report.blocks.push_back(std::move(entry));
  }

  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (in_solution[v]) report.solution.push_back(v);
  report.size = report.solution.size();
  for (int b = 0; b < 3; ++b)
    if (used_backend[b]) report.backends.push_back(static_cast<VcBackend>(b));
  report.verified = is_f_respecting(g, bct, f_in, report.solution);
  if (!report.verified) throw std::logic_error("solver output is not f-respecting");
  return report;
}

SolveReport solve_sds(const Graph& g, const SolveOptions& options) {
  Colouring f(g.num_vertices(), Colour::zero_hat);
  return solve_crsds(g, f, options);
}

}  // namespace sds
