#include "sds/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "sds/block_cut_tree.hpp"
#include "sds/errors.hpp"

namespace sds::oracle {

namespace {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
};

// Whether the included edges plus every not-yet-decided edge still connect g.
bool can_connect(const Graph& g, std::span<const char> state, std::size_t from) {
  DisjointSets ds(g.num_vertices());
  int parts = g.num_vertices();
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (e < from && !state[e]) continue;
    int a = ds.find(g.edges()[e].u), b = ds.find(g.edges()[e].v);
    if (a != b) {
      ds.parent[a] = b;
      --parts;
    }
  }
  return parts <= 1;
}

bool has_path(const Graph& g, std::span<const char> state, std::size_t upto, Vertex s, Vertex t) {
  DisjointSets ds(g.num_vertices());
  for (std::size_t e = 0; e < upto; ++e)
    if (state[e]) ds.parent[ds.find(g.edges()[e].u)] = ds.find(g.edges()[e].v);
  return ds.find(s) == ds.find(t);
}

}  // namespace

std::uint64_t for_each_spanning_tree(const Graph& g,
                                     const std::function<bool(const SpanningTree&)>& visit) {
  if (g.num_edges() > kMaxTreeEnumerationEdges)
    throw BudgetExceededError("spanning tree enumeration limited to " +
                              std::to_string(kMaxTreeEnumerationEdges) + " edges");
  if (!is_connected(g)) throw DisconnectedError();
  const std::size_t m = g.num_edges();
  const std::size_t need = static_cast<std::size_t>(std::max(g.num_vertices() - 1, 0));
  std::vector<char> state(m, 0);
  std::uint64_t count = 0;
  bool stop = false;

  // Include/exclude backtracking over edges in index order.
  std::function<void(std::size_t, std::size_t)> recurse = [&](std::size_t e, std::size_t chosen) {
    if (stop) return;
    if (chosen == need) {
      SpanningTree tree;
      for (std::size_t i = 0; i < e; ++i)
        if (state[i]) tree.push_back(i);
      ++count;
      if (!visit(tree)) stop = true;
      return;
    }
    if (e == m || m - e < need - chosen) return;
    const Edge& edge = g.edges()[e];
    if (!has_path(g, state, e, edge.u, edge.v)) {
      state[e] = 1;
      recurse(e + 1, chosen + 1);
      state[e] = 0;
    }
    if (can_connect(g, state, e + 1)) recurse(e + 1, chosen);
  };
  recurse(0, 0);
  return count;
}

std::vector<SpanningTree> enumerate_spanning_trees(const Graph& g) {
  std::vector<SpanningTree> trees;
  for_each_spanning_tree(g, [&](const SpanningTree& t) {
    trees.push_back(t);
    return true;
  });
  return trees;
}

std::int64_t kirchhoff_tree_count(const Graph& g) {
  const int n = g.num_vertices();
  if (n <= 1) return 1;
  const int k = n - 1;
  std::vector<std::vector<__int128>> a(k, std::vector<__int128>(k, 0));
  for (auto [u, v] : g.edges()) {
    if (u < k) ++a[u][u];
    if (v < k) ++a[v][v];
    if (u < k && v < k) {
      --a[u][v];
      --a[v][u];
    }
  }
  // Bareiss: every intermediate division is exact.
  __int128 prev = 1;
  int sign = 1;
  for (int i = 0; i < k; ++i) {
    if (a[i][i] == 0) {
      int r = i + 1;
      while (r < k && a[r][i] == 0) ++r;
      if (r == k) return 0;
      std::swap(a[i], a[r]);
      sign = -sign;
    }
    for (int r = i + 1; r < k; ++r) {
      for (int c = i + 1; c < k; ++c) a[r][c] = (a[r][c] * a[i][i] - a[r][i] * a[i][c]) / prev;
      a[r][i] = 0;
    }
    prev = a[i][i];
  }
  return static_cast<std::int64_t>(sign * a[k - 1][k - 1]);
}

bool is_sd_set_by_enumeration(const Graph& g, std::span<const Vertex> s) {
  const int n = g.num_vertices();
  auto in = membership(n, s);
  bool ok = true;
  for_each_spanning_tree(g, [&](const SpanningTree& tree) {
    std::vector<char> dominated(in.begin(), in.end());
    for (std::size_t e : tree) {
      auto [u, v] = g.edges()[e];
      if (in[u]) dominated[v] = 1;
      if (in[v]) dominated[u] = 1;
    }
    ok = std::all_of(dominated.begin(), dominated.end(), [](char c) { return c != 0; });
    return ok;
  });
  return ok;
}

std::optional<VertexSet> first_subset(int n, const std::function<bool(const VertexSet&)>& accept) {
  for (int k = 0; k <= n; ++k) {
    VertexSet subset(k);
    std::iota(subset.begin(), subset.end(), 0);
    while (true) {
      if (accept(subset)) return subset;
      // Advance to the next k-combination in lexicographic order.
      int i = k - 1;
      while (i >= 0 && subset[i] == n - k + i) --i;
      if (i < 0) break;
      ++subset[i];
      for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
    }
  }
  return std::nullopt;
}

VertexSet min_vc_bruteforce(const Graph& g) {
  if (g.num_vertices() > kMaxVcVertices)
    throw BudgetExceededError("vertex cover oracle limited to " + std::to_string(kMaxVcVertices) +
                              " vertices");
  return *first_subset(g.num_vertices(), [&](const VertexSet& s) { return is_vertex_cover(g, s); });
}

VertexSet min_sds_bruteforce(const Graph& g) {
  if (g.num_vertices() > kMaxSdsVertices)
    throw BudgetExceededError("SD-set oracle limited to " + std::to_string(kMaxSdsVertices) +
                              " vertices");
  auto bct = blocks_and_cut_vertices(g);
  return *first_subset(g.num_vertices(), [&](const VertexSet& s) { return is_sd_set(g, bct, s); });
}

VertexSet min_crsds_bruteforce(const Graph& g, std::span<const Colour> f) {
  if (g.num_vertices() > kMaxSdsVertices)
    throw BudgetExceededError("SD-set oracle limited to " + std::to_string(kMaxSdsVertices) +
                              " vertices");
  auto bct = blocks_and_cut_vertices(g);
  return *first_subset(g.num_vertices(),
                       [&](const VertexSet& s) { return is_f_respecting(g, bct, f, s); });
}

}  // namespace sds::oracle
