#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "sds/domination.hpp"
#include "sds/generators.hpp"
#include "sds/graph.hpp"

namespace sds::testing {

inline Graph random_graph(int n, double p, Rng& rng) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) edges.push_back({u, v});
  return Graph(n, edges);
}

// Connected graph on n vertices with a random edge count in [n-1, cap].
inline Graph random_connected_upto(int n, int max_m, Rng& rng) {
  const int full = n * (n - 1) / 2;
  const int hi = std::min(full, std::max(n - 1, max_m));
  const int m = static_cast<int>(rng.uniform(std::max(0, n - 1), hi));
  return random_connected(n, m, rng.uniform(0, 1'000'000'000));
}

inline Graph random_two_connected_upto(int n, Rng& rng) {
  if (n == 2) return Graph(2, {{0, 1}});
  const int full = n * (n - 1) / 2;
  return random_two_connected(n, static_cast<int>(rng.uniform(n, full)), rng.uniform(0, 1'000'000'000));
}

inline VertexSet random_subset(int n, Rng& rng, double p = 0.5) {
  VertexSet s;
  for (int v = 0; v < n; ++v)
    if (rng.bernoulli(p)) s.push_back(v);
  return s;
}

inline Colouring random_colouring(int n, Rng& rng) {
  Colouring f(n);
  for (auto& c : f) c = static_cast<Colour>(rng.uniform(0, 2));
  return f;
}

inline std::vector<Vertex> random_permutation(int n, Rng& rng) {
  std::vector<Vertex> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  rng.shuffle(perm.begin(), perm.end());
  return perm;
}

// Every connected labelled graph on n <= 6 vertices (all masks).
inline void for_each_connected_graph(int n, const std::function<void(const Graph&)>& visit) {
  const int pairs = n * (n - 1) / 2;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    Graph g = graph_from_mask(n, mask);
    if (is_connected(g)) visit(g);
  }
}

inline int count_components(const Graph& g) {
  int count = 0;
  connected_components(g, &count);
  return count;
}

// Cut vertex by definition: deleting v leaves more components.
inline bool is_cut_by_deletion(const Graph& g, Vertex v) {
  Vertex arr[] = {v};
  return count_components(delete_vertices(g, arr).graph) > count_components(g);
}

// A chordless cycle of odd length >= 5, by extending induced paths whose
// smallest vertex is the start.
inline std::optional<std::vector<Vertex>> find_odd_hole(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<Vertex> path;
  std::vector<char> on_path(n, 0);
  std::optional<std::vector<Vertex>> found;
  std::function<void()> extend = [&] {
    if (found) return;
    const Vertex s = path.front();
    const Vertex last = path.back();
    for (Vertex w : g.neighbours(last)) {
      if (w <= s || on_path[w]) continue;
      bool chord = false;
      for (std::size_t i = 1; i + 1 < path.size() && !chord; ++i) chord = g.has_edge(w, path[i]);
      if (chord) continue;
      if (path.size() >= 2 && g.has_edge(w, s)) {
        const std::size_t len = path.size() + 1;
        if (len >= 5 && len % 2 == 1) {
          found = path;
          found->push_back(w);
          return;
        }
        continue;
      }
      path.push_back(w);
      on_path[w] = 1;
      extend();
      on_path[w] = 0;
      path.pop_back();
      if (found) return;
    }
  };
  for (Vertex s = 0; s < n && !found; ++s) {
    path = {s};
    on_path.assign(n, 0);
    on_path[s] = 1;
    extend();
  }
  return found;
}

inline Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (int u = 0; u < g.num_vertices(); ++u)
    for (int v = u + 1; v < g.num_vertices(); ++v)
      if (!g.has_edge(u, v)) edges.push_back({u, v});
  return Graph(g.num_vertices(), edges);
}

}  // namespace sds::testing
