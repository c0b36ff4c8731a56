#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "kbound/graph.hpp"
#include "kbound/lp.hpp"
#include "kbound/spectral.hpp"

namespace kbound {

/// Numerical tolerances shared by the bound computations.
struct Tolerances {
  double psd = 1e-9;            // relative, against max(1, max |eigenvalue|)
  double cluster = 1e-6;        // absolute gap for distinct eigenvalues
  double floor = 1e-9;          // added before flooring a bound
  double rank_cutoff = 1e-9;    // group-inverse zero threshold, relative
  double range = 1e-8;          // ||(I - M M#) x|| <= range * ||x||
  double total_nonzero = 1e-10; // min |y_u| > total_nonzero * ||y||
  double walk_regular = 1e-9;
  double certificate = 1e-7;    // slack allowed when re-checking an inequality
};

struct PairValidation {
  bool psd_ok = false;
  bool pattern_ok = false;
  bool range_ok = false;
  bool nonzero_ok = false;
  bool all() const { return psd_ok && pattern_ok && range_ok && nonzero_ok; }
};

/// A candidate member (M, x) of M_k(G): M PSD, M_ij = 0 whenever
/// d(i,j) > k, and x a vector in R(M) with no zero entry. Build with
/// make_matrix_vector_pair, which fills `validation` and caches M#.
struct MatrixVectorPair {
  SymMatrix M;
  std::vector<double> x;
  int k = 1;
  PairValidation validation;
  SymMatrix group_inverse;  // meaningful only when validation.psd_ok
};

MatrixVectorPair make_matrix_vector_pair(const Graph& g, SymMatrix M, std::vector<double> x, int k,
                                         const Tolerances& tol = {});

struct AssumptionCheck {
  std::string name;
  bool passed = false;
};

using Certificate = std::variant<std::monostate, Polynomial, MatrixVectorPair, std::vector<Polynomial>>;

/// alpha_k(G) <= value. integer_bound = max(1, floor(value + tol.floor)).
struct BoundReport {
  std::string method;
  double value = 0.0;
  std::int64_t integer_bound = 0;
  Certificate certificate;
  std::vector<AssumptionCheck> assumptions;
};

enum class ThetaTarget { Theta, ThetaPrime };

/// Lower bound on theta (or Schrijver's theta') of the complement of G^k.
struct ThetaLowerReport {
  ThetaTarget target = ThetaTarget::Theta;
  std::string graph_description;
  double value = 0.0;
  Polynomial certificate;
};

// ---------------------------------------------------------------------------
// Matrix-vector-pair framework

/// x^T M# x and the per-vertex ratios M_uu / x_u^2 of a valid pair.
struct PairEvaluation {
  double quadratic = 0.0;
  std::vector<double> ratios;
};

PairEvaluation evaluate_pair(const MatrixVectorPair& pair);

/// alpha_k <= x^T M# x * max_u M_uu / x_u^2. Throws Precondition PAIR_* when
/// a validation flag is false.
BoundReport framework_bound(const Graph& g, const MatrixVectorPair& pair, const Tolerances& tol = {});

/// x^T M# x * sum_{u in S} M_uu / x_u^2 for a k-independent S. Throws
/// Numeric CERTIFICATE_VIOLATED if |S|^2 exceeds it.
double set_certificate_bound(const Graph& g, const MatrixVectorPair& pair, std::span<const Vertex> set,
                             const Tolerances& tol = {});

struct ColoringCheck {
  std::int64_t lhs = 0;  // sum |V_i|^2
  double rhs = 0.0;      // x^T M# x * sum_u M_uu / x_u^2
  bool holds = false;
};

ColoringCheck coloring_sum_squares_check(const Graph& g, const MatrixVectorPair& pair,
                                         const ColoringPartition& partition, const Tolerances& tol = {});
/// Same check against a precomputed evaluation; the partition must already
/// validate for the pair's k.
ColoringCheck coloring_sum_squares_check(const PairEvaluation& eval, const ColoringPartition& partition,
                                         const Tolerances& tol = {});

/// Valid pairs for (g, k) built from the identity, the polynomial presets,
/// and the Laplacian. Used to exercise the framework inequalities.
struct NamedPair {
  std::string name;
  MatrixVectorPair pair;
};
std::vector<NamedPair> catalogue_pairs(const Graph& g, int k, const Tolerances& tol = {});

// ---------------------------------------------------------------------------
// Polynomial eigenvalue bounds

/// Bound from an eigenpair (lambda, y) of a weight matrix supported on the
/// edges and diagonal: (y^T y / p(lambda)) * max_u p(W)_uu / y_u^2.
/// lambda_index counts from the largest eigenvalue (0 = top).
BoundReport eigenvector_polynomial_bound(const Graph& g, const SymMatrix& weight, int lambda_index,
                                         const Polynomial& p, const Tolerances& tol = {});

struct OptimalPolynomialOptions {
  /// Report 1 directly when g is connected and k >= diameter.
  bool diameter_shortcut = true;
};

/// Best polynomial for the principal-eigenvector bound, found by linear
/// programming over the coefficients. Disconnected graphs are bounded per
/// component and summed.
BoundReport optimal_polynomial_bound(const Graph& g, int k, const Tolerances& tol = {},
                                     const OptimalPolynomialOptions& options = {});

/// The coefficient LP itself (for a connected graph with an edge):
/// maximise p(rho) s.t. p(A)_uu <= y_u^2 and p >= 0 on the distinct spectrum.
LinearProgram coefficient_program(const Graph& g, int k, const Tolerances& tol = {});

BoundReport ratio_type_bound(const Graph& g, int k, const Polynomial& p, const Tolerances& tol = {});

BoundReport minor_polynomial_bound(const Graph& g, int k, const Tolerances& tol = {});

struct LaplacianSetCheck {
  double rhs = 0.0;  // n (mu^k - d_k(S)) / mu^k
  bool holds = false;
};
BoundReport laplacian_kpower_bound(const Graph& g, int k, const Tolerances& tol = {});
LaplacianSetCheck laplacian_set_predicate(const Graph& g, int k, std::span<const Vertex> set,
                                          const Tolerances& tol = {});

// ---------------------------------------------------------------------------
// Theta lower bounds

ThetaLowerReport theta_lower_bound(const Graph& g, int k, const Polynomial& p, const Tolerances& tol = {});
/// w_{2k}(G) / c_{2k}(G) from exact walk counts; bounds theta' of the
/// complement of G^{2k}.
ThetaLowerReport walk_ratio_bound(const Graph& g, int k);

// ---------------------------------------------------------------------------
// Colouring lower bounds

struct ChiLowerBound {
  double value = 0.0;             // n p(d) / tr p(A)
  std::int64_t integer_bound = 0; // ceil(value - tol.floor)
  double via_alpha = 0.0;         // n / (alpha_k upper bound from the same p)
};

ChiLowerBound chi_k_lower_bound(const Graph& g, int k, const Polynomial& p, const Tolerances& tol = {});
ChiLowerBound chi_k_prime_lower_bound(const Graph& g, int k, const Polynomial& p, const Tolerances& tol = {});

// ---------------------------------------------------------------------------
// Finite-field minimum rank

/// rank over GF(field_char) of p(A), where A is the adjacency matrix with
/// `diag` on its diagonal. Throws Precondition ZERO_DIAGONAL when some
/// (p(A))_uu vanishes and Input NOT_PRIME for a composite modulus.
std::int64_t min_rank_bound(const Graph& g, int k, std::int64_t field_char, std::span<const std::int64_t> diag,
                            std::span<const std::int64_t> p);

/// floor(value + tol) clamped to at least 1.
std::int64_t floor_bound(double value, double tol);

}  // namespace kbound
