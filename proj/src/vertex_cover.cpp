#include "sds/vertex_cover.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

#include "sds/domination.hpp"
#include "sds/errors.hpp"

namespace sds {

std::string_view to_string(VcBackend b) {
  switch (b) {
    case VcBackend::bnb: return "bnb";
    case VcBackend::bipartite: return "bipartite";
    case VcBackend::treewidth: return "treewidth";
  }
  return "?";
}

std::vector<Edge> maximal_matching(const Graph& g) {
  std::vector<char> used(g.num_vertices(), 0);
  std::vector<Edge> matching;
  for (auto e : g.edges())
    if (!used[e.u] && !used[e.v]) {
      used[e.u] = used[e.v] = 1;
      matching.push_back(e);
    }
  return matching;
}

VertexSet matching_2approx_vc(const Graph& g) {
  VertexSet cover;
  for (auto [u, v] : maximal_matching(g)) {
    cover.push_back(u);
    cover.push_back(v);
  }
  std::sort(cover.begin(), cover.end());
  return cover;
}

namespace {

class BranchAndBound {
 public:
  BranchAndBound(const Graph& g, const BnbOptions& options)
      : g_(g), options_(options), active_(g.num_vertices(), 1), deg_(g.num_vertices()) {
    for (Vertex v = 0; v < g.num_vertices(); ++v) deg_[v] = g.degree(v);
    best_ = matching_2approx_vc(g);
  }

  VertexSet run() {
    search();
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  void remove(Vertex v) {
    active_[v] = 0;
    for (Vertex w : g_.neighbours(v))
      if (active_[w]) --deg_[w];
    trail_.push_back(v);
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      Vertex v = trail_.back();
      trail_.pop_back();
      active_[v] = 1;
      deg_[v] = 0;
      for (Vertex w : g_.neighbours(v))
        if (active_[w]) {
          ++deg_[w];
          ++deg_[v];
        }
    }
  }

  void take(Vertex v) {
    cover_.push_back(v);
    remove(v);
  }

  // Degree-0 vertices leave; a degree-1 vertex forces its neighbour in.
  void reduce() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (Vertex v = 0; v < g_.num_vertices(); ++v) {
        if (!active_[v] || deg_[v] > 1) continue;
        if (deg_[v] == 1) {
          for (Vertex w : g_.neighbours(v))
            if (active_[w]) {
              take(w);
              break;
            }
        }
        remove(v);
        changed = true;
      }
    }
  }

  std::size_t matching_bound() const {
    std::vector<char> used(g_.num_vertices(), 0);
    std::size_t m = 0;
    for (Vertex v = 0; v < g_.num_vertices(); ++v) {
      if (!active_[v] || used[v]) continue;
      for (Vertex w : g_.neighbours(v))
        if (active_[w] && !used[w]) {
          used[v] = used[w] = 1;
          ++m;
          break;
        }
    }
    return m;
  }

  void search() {
    if (options_.node_budget && ++nodes_ > *options_.node_budget)
      throw BudgetExceededError("branch-and-bound node budget exhausted");
    const std::size_t trail_mark = trail_.size();
    const std::size_t cover_mark = cover_.size();
    reduce();

    Vertex pivot = -1;
    for (Vertex v = 0; v < g_.num_vertices(); ++v)
      if (active_[v] && (pivot < 0 || deg_[v] > deg_[pivot])) pivot = v;

    if (pivot < 0) {
      if (cover_.size() < best_.size()) best_ = cover_;
    } else if (cover_.size() + matching_bound() < best_.size()) {
      const std::size_t mark = trail_.size();
      const std::size_t reduced_cover = cover_.size();
      take(pivot);
      search();
      undo_to(mark);
      cover_.resize(reduced_cover);

      std::vector<Vertex> nbrs;
      for (Vertex w : g_.neighbours(pivot))
        if (active_[w]) nbrs.push_back(w);
      for (Vertex w : nbrs) take(w);
      remove(pivot);
      search();
      undo_to(mark);
    }
    undo_to(trail_mark);
    cover_.resize(cover_mark);
  }

  const Graph& g_;
  BnbOptions options_;
  std::vector<char> active_;
  std::vector<int> deg_;
  std::vector<Vertex> trail_;
  std::vector<Vertex> cover_;
  VertexSet best_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

VcResult min_vc_branch_and_bound(const Graph& g, const BnbOptions& options) {
  VcResult out;
  out.cover = BranchAndBound(g, options).run();
  out.size = out.cover.size();
  out.backend = VcBackend::bnb;
  out.lower_bound = maximal_matching(g).size();
  return out;
}

std::optional<Bipartition> bipartition(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> side(n, -1);
  std::deque<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    queue.push_back(s);
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbours(v)) {
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          queue.push_back(w);
        } else if (side[w] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition out;
  for (Vertex v = 0; v < n; ++v) (side[v] == 0 ? out.left : out.right).push_back(v);
  return out;
}

namespace {

void check_bipartition(const Graph& g, const Bipartition& sides) {
  std::vector<int> side(g.num_vertices(), -1);
  for (Vertex v : sides.left) {
    if (!g.contains(v) || side[v] >= 0) throw std::invalid_argument("invalid bipartition");
    side[v] = 0;
  }
  for (Vertex v : sides.right) {
    if (!g.contains(v) || side[v] >= 0) throw std::invalid_argument("invalid bipartition");
    side[v] = 1;
  }
  for (int s : side)
    if (s < 0) throw std::invalid_argument("invalid bipartition: vertex on neither side");
  for (auto [u, v] : g.edges())
    if (side[u] == side[v]) throw std::invalid_argument("invalid bipartition: edge inside a side");
}

}  // namespace

std::vector<Vertex> maximum_bipartite_matching(const Graph& g, const Bipartition& sides) {
  check_bipartition(g, sides);
  const int n = g.num_vertices();
  constexpr int kInf = std::numeric_limits<int>::max();
  std::vector<Vertex> mate(n, -1);
  std::vector<int> dist(n, kInf);
  std::vector<std::size_t> it(n, 0);

  auto bfs = [&] {
    std::deque<Vertex> queue;
    bool found = false;
    for (Vertex u : sides.left) {
      dist[u] = mate[u] < 0 ? 0 : kInf;
      if (mate[u] < 0) queue.push_back(u);
    }
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbours(u)) {
        Vertex next = mate[w];
        if (next < 0) {
          found = true;
        } else if (dist[next] == kInf) {
          dist[next] = dist[u] + 1;
          queue.push_back(next);
        }
      }
    }
    return found;
  };

  // Iterative layered augmentation along shortest alternating paths.
  auto dfs = [&](Vertex root) {
    struct Frame {
      Vertex u;
      Vertex via;  // right vertex used to reach u
    };
    std::vector<Frame> stack{{root, -1}};
    while (!stack.empty()) {
      Vertex u = stack.back().u;
      auto nbrs = g.neighbours(u);
      bool advanced = false;
      while (it[u] < nbrs.size()) {
        Vertex w = nbrs[it[u]++];
        Vertex next = mate[w];
        if (next < 0) {
          // Flip the path.
          Vertex right = w;
          for (auto f = stack.rbegin(); f != stack.rend(); ++f) {
            Vertex prev_right = mate[f->u];
            mate[f->u] = right;
            mate[right] = f->u;
            right = prev_right;
          }
          return true;
        }
        if (dist[next] == dist[u] + 1) {
          stack.push_back({next, w});
          advanced = true;
          break;
        }
      }
      if (!advanced) {
        dist[u] = kInf;
        stack.pop_back();
      }
    }
    return false;
  };

  while (bfs()) {
    std::fill(it.begin(), it.end(), 0);
    for (Vertex u : sides.left)
      if (mate[u] < 0) dfs(u);
  }
  return mate;
}

VcResult min_vc_bipartite(const Graph& g, const Bipartition& sides) {
  auto mate = maximum_bipartite_matching(g, sides);
  const int n = g.num_vertices();
  std::size_t matching = 0;
  for (Vertex u : sides.left)
    if (mate[u] >= 0) ++matching;

  std::vector<char> reached(n, 0);
  std::deque<Vertex> queue;
  for (Vertex u : sides.left)
    if (mate[u] < 0) {
      reached[u] = 1;
      queue.push_back(u);
    }
  while (!queue.empty()) {
    Vertex u = queue.front();  // left vertex
    queue.pop_front();
    for (Vertex w : g.neighbours(u)) {
      if (reached[w] || mate[u] == w) continue;
      reached[w] = 1;
      Vertex back = mate[w];
      if (back >= 0 && !reached[back]) {
        reached[back] = 1;
        queue.push_back(back);
      }
    }
  }

  VcResult out;
  for (Vertex u : sides.left)
    if (!reached[u]) out.cover.push_back(u);
  for (Vertex w : sides.right)
    if (reached[w]) out.cover.push_back(w);
  std::sort(out.cover.begin(), out.cover.end());
  out.size = out.cover.size();
  out.backend = VcBackend::bipartite;
  out.lower_bound = matching;
  if (out.size != matching || !is_vertex_cover(g, out.cover))
    throw std::logic_error("Konig cover extraction failed");
  return out;
}

std::vector<Vertex> lex_bfs(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<std::vector<int>> label(n);
  std::vector<char> numbered(n, 0);
  std::vector<Vertex> order;
  order.reserve(n);
  for (int i = 0; i < n; ++i) {
    Vertex pick = -1;
    for (Vertex v = 0; v < n; ++v)
      if (!numbered[v] && (pick < 0 || label[v] > label[pick])) pick = v;
    numbered[pick] = 1;
    order.push_back(pick);
    for (Vertex w : g.neighbours(pick))
      if (!numbered[w]) label[w].push_back(n - i);
  }
  return order;
}

std::optional<std::vector<Vertex>> is_chordal(const Graph& g) {
  auto order = lex_bfs(g);
  std::reverse(order.begin(), order.end());
  const int n = g.num_vertices();
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  for (Vertex v : order) {
    Vertex parent = -1;
    for (Vertex w : g.neighbours(v))
      if (pos[w] > pos[v] && (parent < 0 || pos[w] < pos[parent])) parent = w;
    if (parent < 0) continue;
    for (Vertex w : g.neighbours(v))
      if (pos[w] > pos[v] && w != parent && !g.has_edge(parent, w)) return std::nullopt;
  }
  return order;
}

}  // namespace sds
