#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "kbound/graph.hpp"

namespace kbound {

/// Dense real symmetric matrix, row-major. Symmetry is exact: the
/// constructor rejects input with a[i][j] != a[j][i] and set() writes both
/// mirrored entries.
class SymMatrix {
public:
  SymMatrix() = default;
  explicit SymMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0.0) {}
  SymMatrix(int n, std::vector<double> row_major);

  static SymMatrix identity(int n);
  static SymMatrix diagonal(std::span<const double> d);

  int order() const noexcept { return n_; }
  double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  void set(int i, int j, double v) {
    a_[static_cast<std::size_t>(i) * n_ + j] = v;
    a_[static_cast<std::size_t>(j) * n_ + i] = v;
  }
  const std::vector<double>& data() const noexcept { return a_; }

  double max_abs() const;
  double trace() const;
  /// e^T M e.
  double total_sum() const;
  std::vector<double> apply(std::span<const double> x) const;
  std::vector<double> diagonal_entries() const;

  SymMatrix operator+(const SymMatrix& o) const;
  SymMatrix operator-(const SymMatrix& o) const;
  SymMatrix operator*(double s) const;
  /// Product of two symmetric matrices, symmetrised by averaging with its
  /// transpose. Exact for commuting factors such as powers of one matrix.
  SymMatrix symmetric_product(const SymMatrix& o) const;

  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

private:
  int n_ = 0;
  std::vector<double> a_;
};

/// Row-major text, one row per line. Debug output only.
std::ostream& operator<<(std::ostream& os, const SymMatrix& m);

/// Real polynomial c0 + c1 x + ... + ck x^k. The degree bound is
/// coeffs.size()-1; trailing zeros are kept.
class Polynomial {
public:
  Polynomial() : c_{0.0} {}
  explicit Polynomial(std::vector<double> coeffs);

  static Polynomial constant(double c) { return Polynomial({c}); }
  static Polynomial monomial(int degree, double c = 1.0);

  const std::vector<double>& coeffs() const noexcept { return c_; }
  int degree_bound() const noexcept { return static_cast<int>(c_.size()) - 1; }
  /// Highest index with a nonzero coefficient; 0 for the zero polynomial.
  int degree() const;
  double operator()(double x) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(double s) const;
  Polynomial operator-(double s) const { return *this - constant(s); }
  Polynomial operator+(double s) const { return *this + constant(s); }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
  std::vector<double> c_;
};

struct SpectralDecomposition {
  std::vector<double> eigenvalues;  // descending
  /// Row-major n x n; column i is the unit eigenvector of eigenvalues[i].
  std::vector<double> eigenvectors;
  int n = 0;

  double vector_entry(int row, int col) const { return eigenvectors[static_cast<std::size_t>(row) * n + col]; }
  std::vector<double> column(int col) const;
};

struct EigenvalueCluster {
  double value = 0.0;
  int multiplicity = 0;
};

/// Distinct eigenvalues, strictly decreasing.
struct EigenvalueProfile {
  std::vector<EigenvalueCluster> distinct;
  int total_multiplicity() const;
};

struct JacobiOptions {
  int max_sweeps = 100;
};

/// Cyclic Jacobi eigensolver. Deterministic; throws Numeric
/// EIGEN_NO_CONVERGENCE after max_sweeps sweeps.
SpectralDecomposition eigendecompose(const SymMatrix& m, const JacobiOptions& options = {});

/// U diag(f(lambda)) U^T for a scalar function f.
SymMatrix reconstruct(const SpectralDecomposition& s, std::span<const double> values);

/// sum c_i m^i by Horner's rule.
SymMatrix matrix_polynomial(const SymMatrix& m, const Polynomial& p);

/// Smallest eigenvalue >= -tol * max(1, max |eigenvalue|).
bool is_psd(const SymMatrix& m, double tol = 1e-9);
bool is_psd(const SpectralDecomposition& s, double tol = 1e-9);

/// Group inverse of a PSD matrix: eigenvalues at or below
/// rank_cutoff * largest eigenvalue are treated as zero. Throws
/// Precondition NOT_PSD otherwise.
SymMatrix group_inverse_psd(const SymMatrix& m, double psd_tol = 1e-9, double rank_cutoff = 1e-9);

struct PrincipalEigenpair {
  double rho = 0.0;
  std::vector<double> y;  // unit 2-norm, entrywise positive
};

/// Spectral radius and Perron vector of a connected graph with an edge.
PrincipalEigenpair principal_eigenpair(const Graph& g);

/// Greedy clustering of the sorted spectrum; a new cluster starts when the
/// gap to the previous eigenvalue exceeds tol. Cluster value is the mean.
EigenvalueProfile cluster_spectrum(const SpectralDecomposition& s, double tol = 1e-6);

SymMatrix adjacency_matrix(const Graph& g);
SymMatrix laplacian(const Graph& g);

}  // namespace kbound
