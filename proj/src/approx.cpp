#include "sds/approx.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "sds/domination.hpp"
#include "sds/vertex_cover.hpp"

namespace sds {

namespace {

const Rational kHalf(1, 2);

class Rounder {
 public:
  Rounder(const Graph& g, const BlockCutTree& bct, const LpModel& model, const LpSolution& sol,
          const RoundingOptions& options)
      : g_(g), bct_(bct), model_(model), options_(options), x_(g.num_vertices()), pinned_(g.num_vertices(), 0) {
    if (sol.status != LpStatus::optimal || sol.values.size() != model.vars.size())
      throw std::invalid_argument("rounding needs an optimal solution of the model");
    for (Vertex v = 0; v < g.num_vertices(); ++v) x_[v] = sol.values[model.x_var[v]];
    original_ = x_;
  }

  RoundingResult run() {
    RoundingResult out;
    for (Vertex v = 0; v < g_.num_vertices(); ++v)
      if (x_[v] >= kHalf) {
        raise(v);
        ++out.rounded_up_first;
      }
    check(out);

    for (Vertex v : bottom_up_cut_vertices()) {
      if (x_[v] == 1) continue;
      bool dominated = std::any_of(bct_.blocks_of[v].begin(), bct_.blocks_of[v].end(),
                                   [&](int b) { return y(v, b) >= kHalf; });
      if (dominated) continue;
      raise(v);
      out.raised_cut_vertices.push_back(v);
      for (int b : bct_.blocks_of[v]) {
        if (b == parent_block_[v]) continue;
        Vertex arg = -1;
        for (Vertex u : bct_.neighbours_in_block(g_, v, b))
          if (arg < 0 || x_[u] < x_[arg]) arg = u;
        lower(arg);
        out.lowered.push_back(arg);
      }
      check(out);
    }

    for (Vertex v = 0; v < g_.num_vertices(); ++v)
      if (x_[v] != 1 && x_[v] != 0) lower(v);
    check(out);

    for (Vertex v = 0; v < g_.num_vertices(); ++v)
      if (x_[v] == 1) out.set.push_back(v);
    std::sort(out.lowered.begin(), out.lowered.end());
    out.lowered.erase(std::unique(out.lowered.begin(), out.lowered.end()), out.lowered.end());
    if (!is_sd_set(g_, bct_, out.set)) throw std::logic_error("rounded LP solution is not an SD-set");
    return out;
  }

 private:
  // y' is never stored: it is always the minimum of x' over N_B(v).
  Rational y(Vertex v, int b) const {
    Rational m = 1;
    for (Vertex u : bct_.neighbours_in_block(g_, v, b)) m = std::min(m, x_[u]);
    return m;
  }

  void raise(Vertex v) {
    x_[v] = 1;
    pinned_[v] = 1;
  }

  void lower(Vertex v) {
    if (pinned_[v] || x_[v] >= kHalf) throw std::logic_error("rounding lowered a variable at 1");
    x_[v] = 0;
  }

  // Cut vertices by decreasing depth in the block-cut tree rooted at the
  // smallest cut vertex; also records each cut vertex's parent block.
  std::vector<Vertex> bottom_up_cut_vertices() {
    parent_block_.assign(g_.num_vertices(), -1);
    if (bct_.cut_vertices.empty()) return {};
    std::vector<int> depth(g_.num_vertices(), -1);
    std::vector<char> block_seen(bct_.num_blocks(), 0);
    const Vertex root = bct_.cut_vertices.front();
    depth[root] = 0;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      Vertex c = queue.front();
      queue.pop_front();
      for (int b : bct_.blocks_of[c]) {
        if (block_seen[b]) continue;
        block_seen[b] = 1;
        for (Vertex d : bct_.cut_vertices_of_block[b])
          if (depth[d] < 0) {
            depth[d] = depth[c] + 1;
            parent_block_[d] = b;
            queue.push_back(d);
          }
      }
    }
    std::vector<Vertex> order = bct_.cut_vertices;
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return depth[a] > depth[b]; });
    return order;
  }

  void check(RoundingResult& out) {
    if (!options_.check_steps) return;
    ++out.steps_checked;
    for (Vertex v = 0; v < g_.num_vertices(); ++v) {
      if (pinned_[v] && x_[v] != 1) throw std::logic_error("variable at 1 was decreased");
      if (x_[v] < 0 || x_[v] > 1) throw std::logic_error("x' left [0,1]");
      if (x_[v] != 1 && x_[v] >= kHalf) throw std::logic_error("x' in [1/2, 1) after rounding up");
      if (x_[v] > original_[v] && x_[v] != 1) throw std::logic_error("x' grew without reaching 1");
    }
    for (const LpRow& r : model_.rows) {
      Rational lhs = 0;
      for (auto [var, coef] : r.terms) lhs += coef * value(var);
      if (lhs < r.rhs)
        throw std::logic_error("LP row about vertex " + std::to_string(r.vertex) +
                               " violated during rounding");
    }
  }

  Rational value(int var) const {
    const LpVariable& v = model_.vars[var];
    return v.kind == LpVariable::Kind::x ? x_[v.vertex] : y(v.vertex, v.block);
  }

  const Graph& g_;
  const BlockCutTree& bct_;
  const LpModel& model_;
  RoundingOptions options_;
  std::vector<Rational> x_;
  std::vector<Rational> original_;
  std::vector<char> pinned_;
  std::vector<int> parent_block_;
};

}  // namespace

RoundingResult round_lp(const Graph& g, const BlockCutTree& bct, const LpModel& model,
                        const LpSolution& sol, const RoundingOptions& options) {
  return Rounder(g, bct, model, sol, options).run();
}

Approx2Result approx2_sds(const Graph& g, const RoundingOptions& options) {
  BlockCutTree bct = blocks_and_cut_vertices(g);
  LpModel model = build_sds_ip(g, bct, false);
  Approx2Result out;
  out.lp = solve_lp_simplex(model);
  if (out.lp.status != LpStatus::optimal)
    throw std::logic_error("SD-set LP relaxation reported infeasible or unbounded");
  out.lp_bound = out.lp.objective;
  out.rounding = round_lp(g, bct, model, out.lp, options);
  out.set = out.rounding.set;
  return out;
}

VertexSet sds_to_vertex_cover(const Graph& g, const BlockCutTree& bct, std::span<const Vertex> s_in) {
  if (g.num_vertices() < 2) throw std::invalid_argument("vertex cover extension needs n >= 2");
  VertexSet s = normalize_set(g, {s_in.begin(), s_in.end()});
  if (!is_sd_set(g, bct, s)) throw std::invalid_argument("input set is not an SD-set");
  auto in_s = membership(g.num_vertices(), s);

  int root = -1;
  for (int b = 0; b < bct.num_blocks() && root < 0; ++b)
    if (std::any_of(bct.blocks[b].begin(), bct.blocks[b].end(), [&](Vertex v) { return in_s[v]; }))
      root = b;

  // Parent block of every cut vertex when rooted at block `root`.
  std::vector<int> parent(g.num_vertices(), -1);
  std::vector<char> block_seen(bct.num_blocks(), 0);
  std::deque<int> queue{root};
  block_seen[root] = 1;
  while (!queue.empty()) {
    int b = queue.front();
    queue.pop_front();
    for (Vertex c : bct.cut_vertices_of_block[b]) {
      if (parent[c] >= 0) continue;
      parent[c] = b;
      for (int child : bct.blocks_of[c])
        if (!block_seen[child]) {
          block_seen[child] = 1;
          queue.push_back(child);
        }
    }
  }

  std::vector<char> in_c = in_s;
  for (Vertex c : bct.cut_vertices) {
    bool meets = false;
    for (int b : bct.blocks_of[c]) {
      if (b == parent[c]) continue;
      meets = meets || std::any_of(bct.blocks[b].begin(), bct.blocks[b].end(), [&](Vertex w) { return in_s[w]; });
    }
    if (meets) in_c[c] = 1;
  }
  VertexSet cover;
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (in_c[v]) cover.push_back(v);
  if (!is_vertex_cover(g, cover) || cover.size() + 1 > 2 * s.size())
    throw std::logic_error("SD-set extension is not a small enough vertex cover");
  return cover;
}

VertexSet approx4_sds_via_vc(const Graph& g) {
  BlockCutTree bct = blocks_and_cut_vertices(g);
  VertexSet cover = matching_2approx_vc(g);
  if (!is_sd_set(g, bct, cover)) throw std::logic_error("vertex cover failed SD-set verification");
  return cover;
}

}  // namespace sds
