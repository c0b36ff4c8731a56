#include "kbound/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "kbound/error.hpp"

namespace kbound {
namespace {

struct StandardForm {
  // min c^T z  s.t.  A z = b, z >= 0, b >= 0; rows are the surviving
  // original constraints after scaling.
  int rows = 0;
  int cols = 0;
  std::vector<double> a;  // rows x cols
  std::vector<double> b;
  std::vector<double> c;
  std::vector<int> source_row;     // original constraint index for each row
  std::vector<double> row_factor;  // standard row = factor * original row
  std::vector<int> plus_col, minus_col;  // per original var; minus -1 if nonneg
  std::vector<bool> artificial;
  std::vector<int> initial_basis;

  double& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  double at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
};

class Tableau {
public:
  Tableau(const StandardForm& sf) : m_(sf.rows), w_(sf.cols + 1), t_(static_cast<std::size_t>(m_) * w_) {
    for (int i = 0; i < m_; ++i) {
      for (int j = 0; j < sf.cols; ++j) cell(i, j) = sf.at(i, j);
      cell(i, sf.cols) = sf.b[i];
    }
    basis_ = sf.initial_basis;
  }

  double& cell(int i, int j) { return t_[static_cast<std::size_t>(i) * w_ + j]; }
  int rows() const { return m_; }
  int rhs_col() const { return w_ - 1; }
  std::vector<int>& basis() { return basis_; }

  void pivot(int r, int c) {
    const double inv = 1.0 / cell(r, c);
    for (int j = 0; j < w_; ++j) cell(r, j) *= inv;
    cell(r, c) = 1.0;
    for (int i = 0; i < m_; ++i) {
      if (i == r) continue;
      const double f = cell(i, c);
      if (f == 0.0) continue;
      for (int j = 0; j < w_; ++j) cell(i, j) -= f * cell(r, j);
      cell(i, c) = 0.0;
    }
    basis_[r] = c;
  }

  void drop_row(int r) {
    t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(r) * w_, t_.begin() + static_cast<std::ptrdiff_t>(r + 1) * w_);
    basis_.erase(basis_.begin() + r);
    --m_;
  }

private:
  int m_, w_;
  std::vector<double> t_;
  std::vector<int> basis_;
};

enum class PhaseResult { Optimal, Unbounded };

// Minimise cost^T z over the tableau, never entering columns flagged in
// `blocked`. Bland's rule: lowest-index improving column, ties in the ratio
// test broken by lowest basic variable index.
PhaseResult run_phase(Tableau& tab, const std::vector<double>& cost, const std::vector<bool>& blocked,
                      const LpOptions& opt, int& pivots) {
  const int cols = static_cast<int>(cost.size());
  for (;;) {
    int enter = -1;
    for (int j = 0; j < cols && enter < 0; ++j) {
      if (blocked[j]) continue;
      double d = cost[j];
      for (int i = 0; i < tab.rows(); ++i) d -= cost[tab.basis()[i]] * tab.cell(i, j);
      if (d < -opt.pivot_tol) enter = j;
    }
    if (enter < 0) return PhaseResult::Optimal;

    int leave = -1;
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < tab.rows(); ++i) {
      const double e = tab.cell(i, enter);
      if (e <= opt.pivot_tol) continue;
      const double ratio = tab.cell(i, tab.rhs_col()) / e;
      if (ratio < best - 1e-12 ||
          (std::abs(ratio - best) <= 1e-12 && tab.basis()[i] < tab.basis()[leave])) {
        best = ratio;
        leave = i;
      }
    }
    if (leave < 0) return PhaseResult::Unbounded;
    if (++pivots > opt.max_pivots)
      throw_numeric("PIVOT_LIMIT", "simplex exceeded " + std::to_string(opt.max_pivots) + " pivots");
    tab.pivot(leave, enter);
  }
}

double row_dot(const std::vector<double>& a, const std::vector<double>& x) {
  double s = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) s += a[j] * x[j];
  return s;
}

// Solve B^T y = c_B with partial pivoting; B holds the basis columns of the
// standard form restricted to `rows`.
std::vector<double> basis_duals(const StandardForm& sf, const std::vector<int>& rows,
                                const std::vector<int>& basis, const std::vector<double>& cost, int pivots) {
  const int m = static_cast<int>(rows.size());
  // M = B^T: M[r][i] = A[rows[i]][basis[r]]
  std::vector<double> M(static_cast<std::size_t>(m) * (m + 1));
  auto at = [&](int r, int c) -> double& { return M[static_cast<std::size_t>(r) * (m + 1) + c]; };
  for (int r = 0; r < m; ++r) {
    for (int i = 0; i < m; ++i) at(r, i) = sf.at(rows[i], basis[r]);
    at(r, m) = cost[basis[r]];
  }
  for (int c = 0; c < m; ++c) {
    int piv = c;
    for (int r = c + 1; r < m; ++r)
      if (std::abs(at(r, c)) > std::abs(at(piv, c))) piv = r;
    if (std::abs(at(piv, c)) < 1e-12)
      throw_numeric("SINGULAR_BASIS", "numerically singular basis after " + std::to_string(pivots) + " pivots");
    if (piv != c)
      for (int j = 0; j <= m; ++j) std::swap(at(piv, j), at(c, j));
    for (int r = 0; r < m; ++r) {
      if (r == c) continue;
      const double f = at(r, c) / at(c, c);
      if (f == 0.0) continue;
      for (int j = c; j <= m; ++j) at(r, j) -= f * at(c, j);
    }
  }
  std::vector<double> y(m);
  for (int i = 0; i < m; ++i) y[i] = at(i, m) / at(i, i);
  return y;
}

}  // namespace

LpSolution solve_lp(const LinearProgram& lp, const LpOptions& opt) {
  const int nvar = static_cast<int>(lp.objective.size());
  for (const auto& con : lp.constraints)
    if (static_cast<int>(con.coeffs.size()) != nvar)
      throw_input("DIMENSION_MISMATCH", "constraint length differs from objective length");
  if (!lp.nonnegative.empty() && static_cast<int>(lp.nonnegative.size()) != nvar)
    throw_input("DIMENSION_MISMATCH", "nonnegative flags length differs from objective length");

  StandardForm sf;
  int col = 0;
  sf.plus_col.resize(nvar);
  sf.minus_col.resize(nvar, -1);
  for (int j = 0; j < nvar; ++j) {
    sf.plus_col[j] = col++;
    if (lp.nonnegative.empty() || !lp.nonnegative[j]) sf.minus_col[j] = col++;
  }
  const int structural = col;

  struct Row {
    std::vector<double> coeffs;
    Relation rel;
    double rhs;
    int source;
    double factor;
  };
  std::vector<Row> rows;
  for (int i = 0; i < static_cast<int>(lp.constraints.size()); ++i) {
    const auto& con = lp.constraints[i];
    double scale = 0.0;
    for (double v : con.coeffs) scale = std::max(scale, std::abs(v));
    if (scale == 0.0) {
      const bool ok = (con.relation == Relation::LessEqual && 0.0 <= con.rhs + opt.feasibility_tol) ||
                      (con.relation == Relation::GreaterEqual && 0.0 >= con.rhs - opt.feasibility_tol) ||
                      (con.relation == Relation::Equal && std::abs(con.rhs) <= opt.feasibility_tol);
      if (!ok) return LpSolution{LpStatus::Infeasible, {}, 0.0, {}, 0};
      continue;
    }
    Row r{{}, con.relation, con.rhs / scale, i, 1.0 / scale};
    r.coeffs.assign(structural, 0.0);
    for (int j = 0; j < nvar; ++j) {
      r.coeffs[sf.plus_col[j]] = con.coeffs[j] / scale;
      if (sf.minus_col[j] >= 0) r.coeffs[sf.minus_col[j]] = -con.coeffs[j] / scale;
    }
    if (r.rhs < 0.0) {
      for (double& v : r.coeffs) v = -v;
      r.rhs = -r.rhs;
      r.factor = -r.factor;
      if (r.rel == Relation::LessEqual) r.rel = Relation::GreaterEqual;
      else if (r.rel == Relation::GreaterEqual) r.rel = Relation::LessEqual;
    }
    rows.push_back(std::move(r));
  }

  int slack_count = 0, art_count = 0;
  for (const auto& r : rows) {
    if (r.rel != Relation::Equal) ++slack_count;
    if (r.rel != Relation::LessEqual) ++art_count;
  }
  sf.rows = static_cast<int>(rows.size());
  sf.cols = structural + slack_count + art_count;
  sf.a.assign(static_cast<std::size_t>(sf.rows) * sf.cols, 0.0);
  sf.b.resize(sf.rows);
  sf.artificial.assign(sf.cols, false);
  sf.initial_basis.resize(sf.rows);
  int next_slack = structural, next_art = structural + slack_count;
  for (int i = 0; i < sf.rows; ++i) {
    const auto& r = rows[i];
    for (int j = 0; j < structural; ++j) sf.at(i, j) = r.coeffs[j];
    sf.b[i] = r.rhs;
    sf.source_row.push_back(r.source);
    sf.row_factor.push_back(r.factor);
    if (r.rel == Relation::LessEqual) {
      sf.at(i, next_slack) = 1.0;
      sf.initial_basis[i] = next_slack++;
    } else {
      if (r.rel == Relation::GreaterEqual) sf.at(i, next_slack++) = -1.0;
      sf.at(i, next_art) = 1.0;
      sf.artificial[next_art] = true;
      sf.initial_basis[i] = next_art++;
    }
  }

  sf.c.assign(sf.cols, 0.0);
  const double sense = lp.sense == Sense::Maximize ? -1.0 : 1.0;
  for (int j = 0; j < nvar; ++j) {
    sf.c[sf.plus_col[j]] = sense * lp.objective[j];
    if (sf.minus_col[j] >= 0) sf.c[sf.minus_col[j]] = -sense * lp.objective[j];
  }

  Tableau tab(sf);
  std::vector<int> row_of(sf.rows);
  for (int i = 0; i < sf.rows; ++i) row_of[i] = i;
  int pivots = 0;

  if (art_count > 0) {
    std::vector<double> phase1(sf.cols, 0.0);
    for (int j = 0; j < sf.cols; ++j)
      if (sf.artificial[j]) phase1[j] = 1.0;
    std::vector<bool> none(sf.cols, false);
    run_phase(tab, phase1, none, opt, pivots);
    double infeas = 0.0;
    for (int i = 0; i < tab.rows(); ++i)
      if (sf.artificial[tab.basis()[i]]) infeas += tab.cell(i, tab.rhs_col());
    if (infeas > opt.feasibility_tol) return LpSolution{LpStatus::Infeasible, {}, 0.0, {}, pivots};

    // Drive zero-level artificials out of the basis; drop redundant rows.
    for (int i = 0; i < tab.rows();) {
      if (!sf.artificial[tab.basis()[i]]) {
        ++i;
        continue;
      }
      int enter = -1;
      for (int j = 0; j < sf.cols && enter < 0; ++j)
        if (!sf.artificial[j] && std::abs(tab.cell(i, j)) > opt.pivot_tol) enter = j;
      if (enter >= 0) {
        tab.pivot(i, enter);
        ++pivots;
        ++i;
      } else {
        tab.drop_row(i);
        row_of.erase(row_of.begin() + i);
      }
    }
  }

  if (run_phase(tab, sf.c, sf.artificial, opt, pivots) == PhaseResult::Unbounded)
    return LpSolution{LpStatus::Unbounded, {}, 0.0, {}, pivots};

  std::vector<double> z(sf.cols, 0.0);
  for (int i = 0; i < tab.rows(); ++i) z[tab.basis()[i]] = tab.cell(i, tab.rhs_col());

  LpSolution sol;
  sol.status = LpStatus::Optimal;
  sol.pivots = pivots;
  sol.point.resize(nvar);
  for (int j = 0; j < nvar; ++j)
    sol.point[j] = z[sf.plus_col[j]] - (sf.minus_col[j] >= 0 ? z[sf.minus_col[j]] : 0.0);
  sol.value = row_dot(lp.objective, sol.point);

  const auto y_std = basis_duals(sf, row_of, tab.basis(), sf.c, pivots);
  sol.duals.assign(lp.constraints.size(), 0.0);
  for (std::size_t r = 0; r < row_of.size(); ++r) {
    const int srow = row_of[r];
    sol.duals[sf.source_row[srow]] = sense * sf.row_factor[srow] * y_std[r];
  }

  // Certify the vertex: primal feasibility, complementary slackness, and
  // equality of primal and dual objective values.
  double dual_value = 0.0;
  for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
    const auto& con = lp.constraints[i];
    const double lhs = row_dot(con.coeffs, sol.point);
    const double tol = opt.feasibility_tol * (1.0 + std::abs(con.rhs));
    const bool feasible = (con.relation == Relation::LessEqual && lhs <= con.rhs + tol) ||
                          (con.relation == Relation::GreaterEqual && lhs >= con.rhs - tol) ||
                          (con.relation == Relation::Equal && std::abs(lhs - con.rhs) <= tol);
    if (!feasible)
      throw_numeric("LP_CHECK_FAILED", "constraint " + std::to_string(i) + " violated at reported optimum");
    if (std::abs(sol.duals[i] * (lhs - con.rhs)) > opt.slackness_tol)
      throw_numeric("LP_CHECK_FAILED", "complementary slackness fails on constraint " + std::to_string(i));
    dual_value += sol.duals[i] * con.rhs;
  }
  if (std::abs(dual_value - sol.value) > opt.slackness_tol * (1.0 + std::abs(sol.value)))
    throw_numeric("LP_CHECK_FAILED", "primal and dual objective values disagree");
  return sol;
}

}  // namespace kbound
