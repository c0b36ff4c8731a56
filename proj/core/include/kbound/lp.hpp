#pragma once

#include <vector>

namespace kbound {

enum class Sense { Maximize, Minimize };
enum class Relation { LessEqual, GreaterEqual, Equal };
enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LinearConstraint {
  std::vector<double> coeffs;
  Relation relation = Relation::LessEqual;
  double rhs = 0.0;
};

/// Dense LP. Variables are free unless `nonnegative` is non-empty, in which
/// case nonnegative[j] restricts variable j to x_j >= 0.
struct LinearProgram {
  Sense sense = Sense::Maximize;
  std::vector<double> objective;
  std::vector<LinearConstraint> constraints;
  std::vector<bool> nonnegative;
};

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  std::vector<double> point;
  double value = 0.0;
  /// One multiplier per constraint with objective = sum_i duals[i] * a_i on
  /// the free variables and value = sum_i duals[i] * rhs_i.
  std::vector<double> duals;
  int pivots = 0;
};

struct LpOptions {
  double pivot_tol = 1e-9;
  double feasibility_tol = 1e-8;
  double slackness_tol = 1e-7;
  int max_pivots = 100000;
};

/// Two-phase dense simplex with Bland's rule. Free variables are split into
/// nonnegative differences and rows are normalised by their max-norm.
/// Throws Input DIMENSION_MISMATCH for malformed programs and Numeric
/// SINGULAR_BASIS / LP_CHECK_FAILED when the optimal basis cannot be verified.
LpSolution solve_lp(const LinearProgram& lp, const LpOptions& options = {});

}  // namespace kbound
