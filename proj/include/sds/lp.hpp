#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sds/block_cut_tree.hpp"
#include "sds/graph.hpp"

namespace sds {

using Rational = mpq_class;

struct LpVariable {
  enum class Kind { x, y };
  Kind kind = Kind::x;
  Vertex vertex = -1;
  int block = -1;  // y variables only
  std::string name;
};

/// A ">=" row. Families follow the SD-set IP: a non-cut vertex needs itself
/// or each neighbour; a block may only dominate a cut vertex if all of the
/// vertex's neighbours there are chosen; a cut vertex needs itself or one
/// dominating block.
struct LpRow {
  enum class Family { non_cut_edge, block_link, cut_cover };
  Family family = Family::non_cut_edge;
  std::vector<std::pair<int, int>> terms;  // (variable, coefficient)
  int rhs = 0;
  Vertex vertex = -1;  // the vertex the row is about
  int block = -1;
  Vertex neighbour = -1;
};

struct LpModel {
  std::vector<LpVariable> vars;
  std::vector<LpRow> rows;
  std::vector<int> x_var;                     // vertex -> variable
  std::map<std::pair<Vertex, int>, int> y_var;  // (cut vertex, block) -> variable
  bool integral = true;                       // binary vs. nonnegative bounds

  int num_vars() const { return static_cast<int>(vars.size()); }
  /// Objective coefficient: 1 on x variables, 0 on y variables.
  int cost(int var) const { return vars[var].kind == LpVariable::Kind::x ? 1 : 0; }
  std::size_t count_rows(LpRow::Family family) const;
};

/// Minimize the sum of x over the three row families. `integral` selects
/// {0,1} bounds (the IP) or x, y >= 0 (the LP relaxation).
LpModel build_sds_ip(const Graph& g, const BlockCutTree& bct, bool integral = true);

enum class LpStatus { optimal, infeasible, unbounded };

struct LpSolution {
  LpStatus status = LpStatus::optimal;
  std::vector<Rational> values;  // per model variable
  Rational objective;
  std::size_t pivots = 0;
};

/// Two-phase dense tableau simplex over exact rationals with Bland's rule.
/// The model's integrality flag is ignored (the relaxation is solved).
LpSolution solve_lp_simplex(const LpModel& model);

/// Whether `values` satisfies every row and the bounds of the model.
bool is_feasible(const LpModel& model, const std::vector<Rational>& values);

/// Exhaustive minimum over all 0/1 assignments; nullopt if none feasible.
/// Throws BudgetExceededError above kMaxIpBruteforceVars variables.
inline constexpr int kMaxIpBruteforceVars = 24;
std::optional<std::pair<int, std::vector<int>>> solve_ip_bruteforce(const LpModel& model);

/// CPLEX-style LP text.
void write_lp(std::ostream& out, const LpModel& model);

}  // namespace sds
