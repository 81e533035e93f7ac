#include "sds/treewidth.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <limits>
#include <ostream>
#include <set>
#include <stdexcept>

#include "sds/errors.hpp"

namespace sds {

int TreeDecomposition::width() const {
  std::size_t w = 0;
  for (const auto& b : bags) w = std::max(w, b.size());
  return static_cast<int>(w) - 1;
}

int NiceDecomposition::width() const {
  std::size_t w = 0;
  for (const auto& node : nodes) w = std::max(w, node.bag.size());
  return static_cast<int>(w) - 1;
}

namespace {

// Contracts every tree edge whose one bag contains the other, keeping the
// larger bag. Survivors keep their relative order.
TreeDecomposition without_nested_bags(const TreeDecomposition& td) {
  const std::size_t k = td.bags.size();
  std::vector<std::set<int>> adj(k);
  for (std::size_t i = 0; i < k; ++i) adj[i].insert(td.tree[i].begin(), td.tree[i].end());
  std::vector<char> alive(k, 1);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t a = 0; a < k; ++a) {
      if (!alive[a]) continue;
      for (int b : adj[a]) {
        const VertexSet& inner = td.bags[a];
        const VertexSet& outer = td.bags[b];
        if (!std::includes(outer.begin(), outer.end(), inner.begin(), inner.end())) continue;
        for (int c : adj[a]) {
          if (c == b) continue;
          adj[c].erase(static_cast<int>(a));
          adj[c].insert(b);
          adj[b].insert(c);
        }
        adj[b].erase(static_cast<int>(a));
        adj[a].clear();
        alive[a] = 0;
        changed = true;
        break;
      }
    }
  }
  std::vector<int> index(k, -1);
  TreeDecomposition out;
  for (std::size_t i = 0; i < k; ++i)
    if (alive[i]) {
      index[i] = static_cast<int>(out.bags.size());
      out.bags.push_back(td.bags[i]);
    }
  out.tree.resize(out.bags.size());
  for (std::size_t i = 0; i < k; ++i)
    if (alive[i])
      for (int c : adj[i]) out.tree[index[i]].push_back(index[c]);
  for (auto& nbrs : out.tree) std::sort(nbrs.begin(), nbrs.end());
  return out;
}

}  // namespace

TreeDecomposition min_fill_decomposition(const Graph& g) {
  const int n = g.num_vertices();
  TreeDecomposition td;
  if (n == 0) {
    td.bags.push_back({});
    td.tree.push_back({});
    return td;
  }
  std::vector<std::set<Vertex>> adj(n);
  for (auto [u, v] : g.edges()) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  std::vector<char> eliminated(n, 0);
  std::vector<int> position(n, -1);
  std::vector<Vertex> order;
  std::vector<VertexSet> higher(n);  // neighbours at elimination time

  auto fill_in = [&](Vertex v) {
    std::size_t missing = 0;
    for (auto a = adj[v].begin(); a != adj[v].end(); ++a)
      for (auto b = std::next(a); b != adj[v].end(); ++b)
        if (!adj[*a].count(*b)) ++missing;
    return missing;
  };

  for (int step = 0; step < n; ++step) {
    Vertex pick = -1;
    std::size_t best_fill = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (eliminated[v]) continue;
      std::size_t f = fill_in(v);
      if (pick < 0 || f < best_fill || (f == best_fill && adj[v].size() < adj[pick].size())) {
        pick = v;
        best_fill = f;
      }
    }
    higher[pick].assign(adj[pick].begin(), adj[pick].end());
    for (Vertex a : higher[pick])
      for (Vertex b : higher[pick])
        if (a != b) adj[a].insert(b);
    for (Vertex a : higher[pick]) adj[a].erase(pick);
    adj[pick].clear();
    eliminated[pick] = 1;
    position[pick] = step;
    order.push_back(pick);
  }

  // Bag i belongs to the i-th eliminated vertex.
  td.bags.resize(n);
  td.tree.assign(n, {});
  int previous_root = -1;
  for (int i = 0; i < n; ++i) {
    Vertex v = order[i];
    VertexSet bag = higher[v];
    bag.push_back(v);
    std::sort(bag.begin(), bag.end());
    td.bags[i] = std::move(bag);
    int parent = -1;
    for (Vertex w : higher[v])
      if (parent < 0 || position[w] < parent) parent = position[w];
    if (parent < 0) {
      if (previous_root >= 0) parent = previous_root;
      previous_root = i;
    }
    if (parent >= 0) {
      td.tree[i].push_back(parent);
      td.tree[parent].push_back(i);
    }
  }
  return without_nested_bags(td);
}

DecompositionCheck validate_decomposition(const Graph& g, const TreeDecomposition& td) {
  const int n = g.num_vertices();
  const int k = static_cast<int>(td.bags.size());
  auto fail = [](std::string msg) { return DecompositionCheck{false, std::move(msg)}; };

  if (k == 0) return fail("tree: no bags");
  if (static_cast<int>(td.tree.size()) != k) return fail("tree: adjacency size differs from bag count");
  std::size_t degree_sum = 0;
  for (int i = 0; i < k; ++i)
    for (int j : td.tree[i]) {
      if (j < 0 || j >= k || j == i) return fail("tree: bad neighbour index at bag " + std::to_string(i));
      if (std::count(td.tree[j].begin(), td.tree[j].end(), i) != 1)
        return fail("tree: asymmetric or repeated edge " + std::to_string(i) + "-" + std::to_string(j));
      ++degree_sum;
    }
  if (degree_sum != 2 * static_cast<std::size_t>(k - 1)) return fail("tree: edge count is not bags-1");
  {
    std::vector<char> seen(k, 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    int reached = 1;
    while (!queue.empty()) {
      int i = queue.front();
      queue.pop_front();
      for (int j : td.tree[i])
        if (!seen[j]) {
          seen[j] = 1;
          ++reached;
          queue.push_back(j);
        }
    }
    if (reached != k) return fail("tree: not connected");
  }

  std::vector<std::vector<int>> holding(n);
  for (int i = 0; i < k; ++i)
    for (Vertex v : td.bags[i]) {
      if (!g.contains(v)) return fail("bag " + std::to_string(i) + " holds unknown vertex " + std::to_string(v));
      holding[v].push_back(i);
    }
  for (Vertex v = 0; v < n; ++v)
    if (holding[v].empty()) return fail("property (i): vertex " + std::to_string(v) + " in no bag");

  for (auto [u, v] : g.edges()) {
    bool covered = std::any_of(holding[u].begin(), holding[u].end(), [&, v = v](int i) {
      return std::binary_search(td.bags[i].begin(), td.bags[i].end(), v);
    });
    if (!covered)
      return fail("property (ii): edge {" + std::to_string(u) + "," + std::to_string(v) + "} in no bag");
  }

  std::vector<int> mark(k, -1);
  for (Vertex v = 0; v < n; ++v) {
    for (int i : holding[v]) mark[i] = v;
    std::deque<int> queue{holding[v].front()};
    std::size_t reached = 1;
    mark[holding[v].front()] = -2 - v;
    while (!queue.empty()) {
      int i = queue.front();
      queue.pop_front();
      for (int j : td.tree[i])
        if (mark[j] == v) {
          mark[j] = -2 - v;
          ++reached;
          queue.push_back(j);
        }
    }
    if (reached != holding[v].size())
      return fail("property (iii): bags holding vertex " + std::to_string(v) + " are not connected");
  }
  return {};
}

namespace {

class NiceBuilder {
 public:
  explicit NiceBuilder(const TreeDecomposition& td) : td_(td) {}

  NiceDecomposition build() {
    int top = subtree(0, -1);
    top = retarget(top, {});
    out_.root = top;
    return std::move(out_);
  }

 private:
  int add(NiceKind kind, Vertex v, VertexSet bag, std::vector<int> children) {
    out_.nodes.push_back({kind, v, std::move(bag), std::move(children)});
    return static_cast<int>(out_.nodes.size()) - 1;
  }

  // Forget then introduce until the node's bag equals `target`.
  int retarget(int node, const VertexSet& target) {
    VertexSet bag = out_.nodes[node].bag;
    for (Vertex v : VertexSet(bag)) {
      if (std::binary_search(target.begin(), target.end(), v)) continue;
      bag.erase(std::find(bag.begin(), bag.end(), v));
      node = add(NiceKind::forget, v, bag, {node});
    }
    for (Vertex v : target) {
      if (std::binary_search(bag.begin(), bag.end(), v)) continue;
      bag.insert(std::lower_bound(bag.begin(), bag.end(), v), v);
      node = add(NiceKind::introduce, v, bag, {node});
    }
    return node;
  }

  int subtree(int t, int parent) {
    const VertexSet& bag = td_.bags[t];
    int acc = -1;
    for (int c : td_.tree[t]) {
      if (c == parent) continue;
      int child = retarget(subtree(c, t), bag);
      acc = acc < 0 ? child : add(NiceKind::join, -1, bag, {acc, child});
    }
    if (acc < 0) acc = retarget(add(NiceKind::leaf, -1, {}, {}), bag);
    return acc;
  }

  const TreeDecomposition& td_;
  NiceDecomposition out_;
};

constexpr int kInfCost = std::numeric_limits<int>::max() / 4;

std::uint32_t drop_bit(std::uint32_t mask, int p) {
  std::uint32_t low = mask & ((1u << p) - 1);
  return low | ((mask >> (p + 1)) << p);
}

std::uint32_t insert_bit(std::uint32_t mask, int p, std::uint32_t bit) {
  std::uint32_t low = mask & ((1u << p) - 1);
  return low | (bit << p) | ((mask >> p) << (p + 1));
}

int position_in(const VertexSet& bag, Vertex v) {
  return static_cast<int>(std::lower_bound(bag.begin(), bag.end(), v) - bag.begin());
}

}  // namespace

NiceDecomposition make_nice(const TreeDecomposition& td) { return NiceBuilder(td).build(); }

TreeDecomposition to_tree_decomposition(const NiceDecomposition& nice) {
  TreeDecomposition td;
  td.tree.assign(nice.nodes.size(), {});
  for (std::size_t i = 0; i < nice.nodes.size(); ++i) {
    td.bags.push_back(nice.nodes[i].bag);
    for (int c : nice.nodes[i].children) {
      td.tree[i].push_back(c);
      td.tree[c].push_back(static_cast<int>(i));
    }
  }
  return td;
}

VcResult vc_via_tree_decomposition(const Graph& g, const TreeDecomposition& td) {
  if (auto check = validate_decomposition(g, td); !check)
    throw std::invalid_argument("invalid tree decomposition: " + check.diagnostic);
  if (td.width() > kMaxDpWidth)
    throw BudgetExceededError("tree decomposition width " + std::to_string(td.width()) +
                              " exceeds DP limit " + std::to_string(kMaxDpWidth));

  NiceDecomposition nice = make_nice(td);
  const auto& nodes = nice.nodes;
  std::vector<std::vector<int>> cost(nodes.size());

  // Children are always created before their parent.
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const NiceNode& node = nodes[i];
    const std::uint32_t states = 1u << node.bag.size();
    auto& table = cost[i];
    table.assign(states, kInfCost);
    switch (node.kind) {
      case NiceKind::leaf:
        table[0] = 0;
        break;
      case NiceKind::introduce: {
        const auto& child = cost[node.children[0]];
        int p = position_in(node.bag, node.vertex);
        std::uint32_t nbr = 0;
        for (std::size_t j = 0; j < node.bag.size(); ++j)
          if (g.has_edge(node.vertex, node.bag[j])) nbr |= 1u << j;
        for (std::uint32_t m = 0; m < states; ++m) {
          int c = child[drop_bit(m, p)];
          if (c >= kInfCost) continue;
          if (m >> p & 1u)
            table[m] = c + 1;
          else if ((m & nbr) == nbr)
            table[m] = c;
        }
        break;
      }
      case NiceKind::forget: {
        const auto& child = cost[node.children[0]];
        int p = position_in(nodes[node.children[0]].bag, node.vertex);
        for (std::uint32_t m = 0; m < states; ++m)
          table[m] = std::min(child[insert_bit(m, p, 0)], child[insert_bit(m, p, 1)]);
        break;
      }
      case NiceKind::join: {
        const auto& a = cost[node.children[0]];
        const auto& b = cost[node.children[1]];
        for (std::uint32_t m = 0; m < states; ++m)
          if (a[m] < kInfCost && b[m] < kInfCost) table[m] = a[m] + b[m] - std::popcount(m);
        break;
      }
    }
  }

  std::vector<char> in_cover(g.num_vertices(), 0);
  std::vector<std::pair<int, std::uint32_t>> stack{{nice.root, 0u}};
  while (!stack.empty()) {
    auto [i, m] = stack.back();
    stack.pop_back();
    const NiceNode& node = nodes[i];
    switch (node.kind) {
      case NiceKind::leaf:
        break;
      case NiceKind::introduce: {
        int p = position_in(node.bag, node.vertex);
        if (m >> p & 1u) in_cover[node.vertex] = 1;
        stack.push_back({node.children[0], drop_bit(m, p)});
        break;
      }
      case NiceKind::forget: {
        int child = node.children[0];
        int p = position_in(nodes[child].bag, node.vertex);
        std::uint32_t without = insert_bit(m, p, 0), with = insert_bit(m, p, 1);
        stack.push_back({child, cost[child][without] <= cost[child][with] ? without : with});
        break;
      }
      case NiceKind::join:
        stack.push_back({node.children[0], m});
        stack.push_back({node.children[1], m});
        break;
    }
  }

  VcResult out;
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (in_cover[v]) out.cover.push_back(v);
  out.size = out.cover.size();
  out.backend = VcBackend::treewidth;
  if (static_cast<int>(out.size) != cost[nice.root][0])
    throw std::logic_error("tree decomposition DP reconstruction mismatch");
  return out;
}

void write_pace_td(std::ostream& out, const Graph& g, const TreeDecomposition& td) {
  out << "s td " << td.bags.size() << ' ' << td.width() + 1 << ' ' << g.num_vertices() << '\n';
  for (std::size_t i = 0; i < td.bags.size(); ++i) {
    out << "b " << i + 1;
    for (Vertex v : td.bags[i]) out << ' ' << v + 1;
    out << '\n';
  }
  for (std::size_t i = 0; i < td.tree.size(); ++i)
    for (int j : td.tree[i])
      if (static_cast<std::size_t>(j) > i) out << i + 1 << ' ' << j + 1 << '\n';
}

}  // namespace sds
