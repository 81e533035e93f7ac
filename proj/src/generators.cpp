#include "sds/generators.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

namespace sds {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(engine_());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / span * span;
  std::uint64_t r;
  do r = engine_();
  while (r >= limit);
  return lo + static_cast<std::int64_t>(r % span);
}

double Rng::unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

Graph gap_graph(int k) {
  if (k < 1) throw std::invalid_argument("gap graph needs k >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) edges.push_back({i, j});
  for (int i = 0; i < k; ++i) {
    edges.push_back({i, k + i});
    edges.push_back({k + i, 2 * k + i});
  }
  return Graph(3 * k, edges);
}

namespace {

Graph add_random_edges(int n, std::set<Edge> edges, int m, Rng& rng) {
  std::vector<Edge> missing;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!edges.count({u, v})) missing.push_back({u, v});
  rng.shuffle(missing.begin(), missing.end());
  for (std::size_t i = 0; static_cast<int>(edges.size()) < m; ++i) edges.insert(missing[i]);
  return Graph(n, std::vector<Edge>(edges.begin(), edges.end()));
}

Edge ordered(Vertex a, Vertex b) { return {std::min(a, b), std::max(a, b)}; }

}  // namespace

Graph random_connected(int n, int m, std::uint64_t seed) {
  const long long max_m = static_cast<long long>(n) * (n - 1) / 2;
  if (n < 1 || m < n - 1 || m > max_m) throw std::invalid_argument("need n >= 1 and n-1 <= m <= n(n-1)/2");
  Rng rng(seed);
  std::vector<Vertex> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  rng.shuffle(perm.begin(), perm.end());
  std::set<Edge> edges;
  for (int i = 1; i < n; ++i) edges.insert(ordered(perm[i], perm[rng.uniform(0, i - 1)]));
  return add_random_edges(n, std::move(edges), m, rng);
}

Graph random_two_connected(int n, int m, std::uint64_t seed) {
  if (n == 2 && m == 1) return Graph(2, {{0, 1}});
  const long long max_m = static_cast<long long>(n) * (n - 1) / 2;
  if (n < 3 || m < n || m > max_m) throw std::invalid_argument("need n >= 3 and n <= m <= n(n-1)/2");
  Rng rng(seed);
  std::vector<Vertex> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  rng.shuffle(perm.begin(), perm.end());
  std::set<Edge> edges;
  for (int i = 0; i < n; ++i) edges.insert(ordered(perm[i], perm[(i + 1) % n]));
  return add_random_edges(n, std::move(edges), m, rng);
}

Graph random_chordal(int n, double fill, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("chordal graph needs n >= 1");
  if (fill < 0.0 || fill > 1.0) throw std::invalid_argument("fill must lie in [0,1]");
  Rng rng(seed);
  std::vector<std::vector<Vertex>> adj(n);
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) {
    Vertex anchor = static_cast<Vertex>(rng.uniform(0, v - 1));
    std::vector<Vertex> clique{anchor};
    std::vector<Vertex> candidates = adj[anchor];
    rng.shuffle(candidates.begin(), candidates.end());
    for (Vertex w : candidates) {
      if (!rng.bernoulli(fill)) continue;
      bool joins = std::all_of(clique.begin(), clique.end(), [&](Vertex c) {
        return std::find(adj[w].begin(), adj[w].end(), c) != adj[w].end();
      });
      if (joins) clique.push_back(w);
    }
    // v is simplicial when added, so reverse insertion order is a PEO.
    for (Vertex c : clique) {
      adj[v].push_back(c);
      adj[c].push_back(v);
      edges.push_back({c, v});
    }
  }
  return Graph(n, edges);
}

Graph random_bipartite(int a, int b, double p, std::uint64_t seed) {
  if (a < 0 || b < 0) throw std::invalid_argument("side sizes must be nonnegative");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("edge probability must lie in [0,1]");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v)
      if (rng.bernoulli(p)) edges.push_back({u, a + v});
  return Graph(a + b, edges);
}

Graph graph_from_mask(int n, std::uint64_t mask) {
  std::vector<Edge> edges;
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if (mask >> bit & 1u) edges.push_back({u, v});
  return Graph(n, edges);
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph(n, edges);
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph(n, edges);
}

Graph star_graph(int leaves) {
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.push_back({0, i});
  return Graph(leaves + 1, edges);
}

}  // namespace sds
