#include <doctest.h>

#include <sstream>

#include "sds/block_cut_tree.hpp"
#include "sds/errors.hpp"
#include "sds/lp.hpp"
#include "sds/oracle.hpp"
#include "support.hpp"

using namespace sds;

namespace {

using Row = std::vector<Rational>;

// Solves the square system a * x = b exactly; nullopt when singular.
std::optional<Row> solve_square(std::vector<Row> a, Row b) {
  const std::size_t k = b.size();
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = c;
    while (p < k && a[p][c] == 0) ++p;
    if (p == k) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = 0; r < k; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rational f = a[r][c] / a[c][c];
      for (std::size_t j = c; j < k; ++j) a[r][j] -= f * a[c][j];
      b[r] -= f * b[c];
    }
  }
  Row x(k);
  for (std::size_t i = 0; i < k; ++i) x[i] = b[i] / a[i][i];
  return x;
}

// LP minimum by enumerating the vertices of {rows, vars >= 0}: every
// feasible basic point is a solution of k tight constraints.
std::optional<Rational> lp_min_by_vertices(const LpModel& m) {
  const int k = m.num_vars();
  std::vector<Row> cons;
  Row rhs;
  for (const LpRow& r : m.rows) {
    Row a(k);
    for (auto [var, coef] : r.terms) a[var] += coef;
    cons.push_back(a);
    rhs.push_back(r.rhs);
  }
  for (int j = 0; j < k; ++j) {
    Row a(k);
    a[j] = 1;
    cons.push_back(a);
    rhs.push_back(0);
  }
  std::optional<Rational> best;
  std::vector<int> pick(k);
  std::function<void(int, int)> choose = [&](int start, int depth) {
    if (depth == k) {
      std::vector<Row> a;
      Row b;
      for (int i : pick) {
        a.push_back(cons[i]);
        b.push_back(rhs[i]);
      }
      auto x = solve_square(a, b);
      if (!x) return;
      for (std::size_t i = 0; i < cons.size(); ++i) {
        Rational lhs = 0;
        for (int j = 0; j < k; ++j) lhs += cons[i][j] * (*x)[j];
        if (lhs < rhs[i]) return;
      }
      Rational obj = 0;
      for (int j = 0; j < k; ++j) obj += m.cost(j) * (*x)[j];
      if (!best || obj < *best) best = obj;
      return;
    }
    for (int i = start; i < static_cast<int>(cons.size()); ++i) {
      pick[depth] = i;
      choose(i + 1, depth + 1);
    }
  };
  choose(0, 0);
  return best;
}

LpModel lp_of(const Graph& g) { return build_sds_ip(g, blocks_and_cut_vertices(g), false); }

}  // namespace

TEST_CASE("model structure on the triangle") {
  Graph tri = complete_graph(3);
  LpModel m = build_sds_ip(tri, blocks_and_cut_vertices(tri));
  CHECK(m.integral);
  CHECK(m.count_rows(LpRow::Family::non_cut_edge) == 6);
  CHECK(m.y_var.empty());
  CHECK(m.num_vars() == 3);
}

TEST_CASE("model structure on the path") {
  Graph p = path_graph(3);
  LpModel m = build_sds_ip(p, blocks_and_cut_vertices(p));
  CHECK(m.count_rows(LpRow::Family::non_cut_edge) == 2);
  CHECK(m.count_rows(LpRow::Family::block_link) == 2);
  CHECK(m.count_rows(LpRow::Family::cut_cover) == 1);
  CHECK(m.num_vars() == 5);
  CHECK(m.y_var.size() == 2);
  for (const LpRow& r : m.rows)
    if (r.family == LpRow::Family::non_cut_edge) CHECK(r.neighbour == 1);
}

TEST_CASE("row counts follow degrees and block neighbourhoods") {
  sds::Rng rng(64);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = static_cast<int>(rng.uniform(2, 20));
    Graph g = sds::testing::random_connected_upto(n, 2 * n, rng);
    BlockCutTree bct = blocks_and_cut_vertices(g);
    LpModel m = build_sds_ip(g, bct);
    std::size_t type1 = 0, type2 = 0, ys = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (!bct.cut(v)) {
        type1 += g.degree(v);
        continue;
      }
      for (int b : bct.blocks_of[v]) {
        type2 += bct.neighbours_in_block(g, v, b).size();
        ++ys;
      }
    }
    CHECK(m.count_rows(LpRow::Family::non_cut_edge) == type1);
    CHECK(m.count_rows(LpRow::Family::block_link) == type2);
    CHECK(m.count_rows(LpRow::Family::cut_cover) == bct.cut_vertices.size());
    CHECK(m.num_vars() == static_cast<int>(n + ys));
    for (const LpRow& r : m.rows)
      for (auto [var, coef] : r.terms) {
        CHECK(var >= 0);
        CHECK(var < m.num_vars());
        CHECK((coef == 1 || coef == -1));
      }
  }
}

TEST_CASE("gap graph model has one cover row per cut vertex") {
  Graph g = gap_graph(3);
  CHECK(build_sds_ip(g, blocks_and_cut_vertices(g)).count_rows(LpRow::Family::cut_cover) == 6);
}

TEST_CASE("simplex examples") {
  LpSolution tri = solve_lp_simplex(lp_of(complete_graph(3)));
  REQUIRE(tri.status == LpStatus::optimal);
  CHECK(tri.objective == Rational(3, 2));
  for (const Rational& x : tri.values) CHECK(x == Rational(1, 2));

  LpSolution edge = solve_lp_simplex(lp_of(Graph(2, {{0, 1}})));
  CHECK(edge.objective == 1);
  LpSolution p3 = solve_lp_simplex(lp_of(path_graph(3)));
  CHECK(p3.objective == 1);
}

TEST_CASE("simplex matches polytope vertex enumeration") {
  CHECK(lp_min_by_vertices(lp_of(complete_graph(3))) == Rational(3, 2));
  CHECK(lp_min_by_vertices(lp_of(Graph(2, {{0, 1}}))) == 1);
  CHECK(lp_min_by_vertices(lp_of(path_graph(3))) == 1);
  sds::Rng rng(100);
  int compared = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const int n = static_cast<int>(rng.uniform(2, 5));
    Graph g = sds::testing::random_connected_upto(n, 6, rng);
    LpModel m = lp_of(g);
    if (m.num_vars() > 7 || m.rows.size() + m.num_vars() > 18) continue;
    LpSolution s = solve_lp_simplex(m);
    REQUIRE(s.status == LpStatus::optimal);
    CHECK(s.objective == lp_min_by_vertices(m));
    ++compared;
  }
  CHECK(compared > 10);
}

TEST_CASE("simplex solutions are feasible and bounded by the IP") {
  sds::Rng rng(65);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = static_cast<int>(rng.uniform(1, 12));
    Graph g = sds::testing::random_connected_upto(n, 2 * n, rng);
    LpModel m = lp_of(g);
    LpSolution s = solve_lp_simplex(m);
    REQUIRE(s.status == LpStatus::optimal);
    CHECK(is_feasible(m, s.values));
    Rational obj = 0;
    for (int j = 0; j < m.num_vars(); ++j) obj += m.cost(j) * s.values[j];
    CHECK(obj == s.objective);
    CHECK(s.objective <= static_cast<long>(oracle::min_sds_bruteforce(g).size()));
    CHECK(s.objective * 2 >= 0);
  }
}

TEST_CASE("IP optimum equals the minimum SD-set size") {
  sds::Rng rng(66);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = static_cast<int>(rng.uniform(1, 7));
    Graph g = sds::testing::random_connected_upto(n, 12, rng);
    LpModel m = build_sds_ip(g, blocks_and_cut_vertices(g));
    if (m.num_vars() > kMaxIpBruteforceVars) continue;
    auto ip = solve_ip_bruteforce(m);
    REQUIRE(ip.has_value());
    CHECK(static_cast<std::size_t>(ip->first) == oracle::min_sds_bruteforce(g).size());
  }
  LpModel big = build_sds_ip(path_graph(16), blocks_and_cut_vertices(path_graph(16)));
  CHECK_THROWS_AS(solve_ip_bruteforce(big), BudgetExceededError);
}

TEST_CASE("feasibility checker rejects violations") {
  LpModel m = lp_of(complete_graph(3));
  CHECK(is_feasible(m, {1, 1, 0}));
  CHECK_FALSE(is_feasible(m, {1, 0, 0}));
  CHECK_FALSE(is_feasible(m, {Rational(-1), 2, 2}));
}

TEST_CASE("LP text export") {
  Graph p = path_graph(3);
  std::ostringstream out;
  write_lp(out, build_sds_ip(p, blocks_and_cut_vertices(p)));
  const std::string text = out.str();
  CHECK(text.rfind("Minimize\n obj: x_0 + x_1 + x_2\n", 0) == 0);
  CHECK(text.find("Subject To") != std::string::npos);
  CHECK(text.find("x_0 - y_1_0 >= 0") != std::string::npos);
  CHECK(text.find("Binary") != std::string::npos);
  CHECK(text.find("End") != std::string::npos);
  std::ostringstream relaxed;
  write_lp(relaxed, lp_of(p));
  CHECK(relaxed.str().find("Binary") == std::string::npos);
}
