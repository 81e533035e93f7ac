#include "sds/lp.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <ostream>
#include <set>
#include <stdexcept>

#include "sds/errors.hpp"

namespace sds {

std::size_t LpModel::count_rows(LpRow::Family family) const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [&](const LpRow& r) { return r.family == family; }));
}

LpModel build_sds_ip(const Graph& g, const BlockCutTree& bct, bool integral) {
  LpModel m;
  m.integral = integral;
  const int n = g.num_vertices();
  m.x_var.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    m.x_var[v] = m.num_vars();
    m.vars.push_back({LpVariable::Kind::x, v, -1, "x_" + std::to_string(v)});
  }
  for (Vertex v : bct.cut_vertices)
    for (int b : bct.blocks_of[v]) {
      m.y_var[{v, b}] = m.num_vars();
      m.vars.push_back({LpVariable::Kind::y, v, b, "y_" + std::to_string(v) + "_" + std::to_string(b)});
    }

  for (Vertex v = 0; v < n; ++v) {
    if (bct.cut(v)) continue;
    for (Vertex u : g.neighbours(v)) {
      LpRow row;
      row.family = LpRow::Family::non_cut_edge;
      row.terms = {{m.x_var[u], 1}, {m.x_var[v], 1}};
      row.rhs = 1;
      row.vertex = v;
      row.neighbour = u;
      m.rows.push_back(std::move(row));
    }
  }
  for (Vertex v : bct.cut_vertices)
    for (int b : bct.blocks_of[v])
      for (Vertex u : bct.neighbours_in_block(g, v, b)) {
        LpRow row;
        row.family = LpRow::Family::block_link;
        row.terms = {{m.x_var[u], 1}, {m.y_var.at({v, b}), -1}};
        row.rhs = 0;
        row.vertex = v;
        row.block = b;
        row.neighbour = u;
        m.rows.push_back(std::move(row));
      }
  for (Vertex v : bct.cut_vertices) {
    LpRow row;
    row.family = LpRow::Family::cut_cover;
    for (int b : bct.blocks_of[v]) row.terms.push_back({m.y_var.at({v, b}), 1});
    row.terms.push_back({m.x_var[v], 1});
    row.rhs = 1;
    row.vertex = v;
    m.rows.push_back(std::move(row));
  }
  return m;
}

namespace {

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : t_(rows, std::vector<Rational>(cols + 1)), basis_(rows), cols_(cols) {}

  std::vector<Rational>& row(std::size_t i) { return t_[i]; }
  std::size_t rows() const { return t_.size(); }
  std::size_t cols() const { return cols_; }
  std::vector<std::size_t>& basis() { return basis_; }
  std::vector<Rational>& objective() { return z_; }

  void set_costs(const std::vector<Rational>& cost) {
    const std::size_t c = cols();
    z_.assign(c + 1, 0);
    for (std::size_t j = 0; j < c; ++j) z_[j] = cost[j];
    for (std::size_t i = 0; i < rows(); ++i) {
      const Rational& cb = cost[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= c; ++j)
        if (t_[i][j] != 0) z_[j] -= cb * t_[i][j];
    }
  }

  void pivot(std::size_t r, std::size_t col) {
    const std::size_t c = cols();
    Rational p = t_[r][col];
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j <= c; ++j)
      if (t_[r][j] != 0) {
        t_[r][j] /= p;
        nz.push_back(j);
      }
    auto eliminate = [&](std::vector<Rational>& target) {
      if (target[col] == 0) return;
      Rational factor = target[col];
      for (std::size_t j : nz) target[j] -= factor * t_[r][j];
    };
    for (std::size_t i = 0; i < rows(); ++i)
      if (i != r) eliminate(t_[i]);
    eliminate(z_);
    basis_[r] = col;
    ++pivots_;
  }

  // Bland: lowest-index improving column, then lowest-index leaving basic.
  // Returns false when unbounded.
  bool optimize(const std::vector<char>& allowed, const std::vector<char>& live_row) {
    const std::size_t c = cols();
    while (true) {
      std::size_t enter = c;
      for (std::size_t j = 0; j < c; ++j)
        if (allowed[j] && z_[j] < 0) {
          enter = j;
          break;
        }
      if (enter == c) return true;
      std::size_t leave = rows();
      Rational best_ratio;
      for (std::size_t i = 0; i < rows(); ++i) {
        if (!live_row[i] || t_[i][enter] <= 0) continue;
        Rational ratio = t_[i][c] / t_[i][enter];
        if (leave == rows() || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == rows()) return false;
      pivot(leave, enter);
    }
  }

  std::size_t pivots() const { return pivots_; }

 private:
  std::vector<std::vector<Rational>> t_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> z_;
  std::size_t cols_;
  std::size_t pivots_ = 0;
};

}  // namespace

LpSolution solve_lp_simplex(const LpModel& model) {
  // Identical rows (the two orientations of an edge between non-cut
  // vertices) are kept once.
  std::set<std::pair<std::vector<std::pair<int, int>>, int>> seen;
  std::vector<const LpRow*> rows;
  for (const LpRow& r : model.rows) {
    auto terms = r.terms;
    std::sort(terms.begin(), terms.end());
    if (seen.insert({terms, r.rhs}).second) rows.push_back(&r);
  }

  const std::size_t nv = model.vars.size();
  const std::size_t m = rows.size();
  const std::size_t cols = nv + 2 * m;  // structural | surplus | artificial
  Tableau tab(m, cols);
  for (std::size_t i = 0; i < m; ++i) {
    auto& row = tab.row(i);
    int sign = rows[i]->rhs < 0 ? -1 : 1;
    for (auto [var, coef] : rows[i]->terms) row[var] += sign * coef;
    row[nv + i] = -sign;
    row[nv + m + i] = 1;
    row[cols] = sign * rows[i]->rhs;
    tab.basis()[i] = nv + m + i;
  }

  LpSolution sol;
  std::vector<char> live(m, 1);
  std::vector<char> allowed(cols, 1);
  std::vector<Rational> phase1(cols, 0);
  for (std::size_t i = 0; i < m; ++i) phase1[nv + m + i] = 1;
  tab.set_costs(phase1);
  tab.optimize(allowed, live);  // bounded below by zero
  if (-tab.objective()[cols] > 0) {
    sol.status = LpStatus::infeasible;
    sol.pivots = tab.pivots();
    return sol;
  }

  // Drive zero-valued artificials out of the basis; rows where that is
  // impossible are linearly dependent and dropped.
  for (std::size_t i = 0; i < m; ++i) {
    if (tab.basis()[i] < nv + m) continue;
    std::size_t enter = cols;
    for (std::size_t j = 0; j < nv + m; ++j)
      if (tab.row(i)[j] != 0) {
        enter = j;
        break;
      }
    if (enter == cols)
      live[i] = 0;
    else
      tab.pivot(i, enter);
  }
  for (std::size_t j = nv + m; j < cols; ++j) allowed[j] = 0;

  std::vector<Rational> cost(cols, 0);
  for (std::size_t j = 0; j < nv; ++j) cost[j] = model.cost(static_cast<int>(j));
  tab.set_costs(cost);
  if (!tab.optimize(allowed, live)) {
    sol.status = LpStatus::unbounded;
    sol.pivots = tab.pivots();
    return sol;
  }

  sol.values.assign(nv, 0);
  for (std::size_t i = 0; i < m; ++i)
    if (live[i] && tab.basis()[i] < nv) sol.values[tab.basis()[i]] = tab.row(i)[cols];
  sol.objective = 0;
  for (std::size_t j = 0; j < nv; ++j) sol.objective += model.cost(static_cast<int>(j)) * sol.values[j];
  sol.pivots = tab.pivots();
  return sol;
}

bool is_feasible(const LpModel& model, const std::vector<Rational>& values) {
  if (values.size() != model.vars.size()) return false;
  for (const Rational& v : values) {
    if (v < 0) return false;
    if (model.integral && v != 0 && v != 1) return false;
  }
  for (const LpRow& r : model.rows) {
    Rational lhs = 0;
    for (auto [var, coef] : r.terms) lhs += coef * values[var];
    if (lhs < r.rhs) return false;
  }
  return true;
}

std::optional<std::pair<int, std::vector<int>>> solve_ip_bruteforce(const LpModel& model) {
  const int nv = model.num_vars();
  if (nv > kMaxIpBruteforceVars)
    throw BudgetExceededError("IP enumeration limited to " + std::to_string(kMaxIpBruteforceVars) +
                              " variables");
  std::optional<std::pair<int, std::vector<int>>> best;
  std::vector<int> value(nv);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nv); ++mask) {
    int objective = 0;
    for (int j = 0; j < nv; ++j) {
      value[j] = static_cast<int>(mask >> j & 1u);
      objective += model.cost(j) * value[j];
    }
    if (best && objective >= best->first) continue;
    bool ok = std::all_of(model.rows.begin(), model.rows.end(), [&](const LpRow& r) {
      int lhs = 0;
      for (auto [var, coef] : r.terms) lhs += coef * value[var];
      return lhs >= r.rhs;
    });
    if (ok) best = {objective, value};
  }
  return best;
}

void write_lp(std::ostream& out, const LpModel& model) {
  auto term = [&](int coef, int var, bool first) {
    if (coef < 0)
      out << (first ? "-" : " - ");
    else if (!first)
      out << " + ";
    if (std::abs(coef) != 1) out << std::abs(coef) << ' ';
    out << model.vars[var].name;
  };
  out << "Minimize\n obj:";
  bool first = true;
  for (int j = 0; j < model.num_vars(); ++j)
    if (model.cost(j) != 0) {
      if (first) out << ' ';
      term(model.cost(j), j, first);
      first = false;
    }
  if (first) out << " 0";
  out << "\nSubject To\n";
  for (std::size_t i = 0; i < model.rows.size(); ++i) {
    out << " r" << i + 1 << ": ";
    bool head = true;
    for (auto [var, coef] : model.rows[i].terms) {
      term(coef, var, head);
      head = false;
    }
    out << " >= " << model.rows[i].rhs << '\n';
  }
  out << "Bounds\n";
  for (const auto& v : model.vars) {
    if (model.integral)
      out << " 0 <= " << v.name << " <= 1\n";
    else
      out << ' ' << v.name << " >= 0\n";
  }
  if (model.integral) {
    out << "Binary\n";
    for (const auto& v : model.vars) out << ' ' << v.name << '\n';
  }
  out << "End\n";
}

}  // namespace sds
