#include "kbound/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>

#include "kbound/error.hpp"

namespace kbound {

SymMatrix::SymMatrix(int n, std::vector<double> row_major) : n_(n), a_(std::move(row_major)) {
  if (a_.size() != static_cast<std::size_t>(n) * n)
    throw_input("DIMENSION_MISMATCH", "matrix data does not have n*n entries");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if ((*this)(i, j) != (*this)(j, i))
        throw_input("NOT_SYMMETRIC", "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                         ") differs from its mirror");
}

SymMatrix SymMatrix::identity(int n) {
  SymMatrix m(n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1.0);
  return m;
}

SymMatrix SymMatrix::diagonal(std::span<const double> d) {
  SymMatrix m(static_cast<int>(d.size()));
  for (int i = 0; i < m.order(); ++i) m.set(i, i, d[i]);
  return m;
}

double SymMatrix::max_abs() const {
  double best = 0.0;
  for (double v : a_) best = std::max(best, std::abs(v));
  return best;
}

double SymMatrix::trace() const {
  double t = 0.0;
  for (int i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

double SymMatrix::total_sum() const { return std::accumulate(a_.begin(), a_.end(), 0.0); }

std::vector<double> SymMatrix::apply(std::span<const double> x) const {
  std::vector<double> y(n_, 0.0);
  for (int i = 0; i < n_; ++i) {
    double s = 0.0;
    for (int j = 0; j < n_; ++j) s += (*this)(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

std::vector<double> SymMatrix::diagonal_entries() const {
  std::vector<double> d(n_);
  for (int i = 0; i < n_; ++i) d[i] = (*this)(i, i);
  return d;
}

SymMatrix SymMatrix::operator+(const SymMatrix& o) const {
  SymMatrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

SymMatrix SymMatrix::operator-(const SymMatrix& o) const {
  SymMatrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
  return r;
}

SymMatrix SymMatrix::operator*(double s) const {
  SymMatrix r = *this;
  for (double& v : r.a_) v *= s;
  return r;
}

SymMatrix SymMatrix::symmetric_product(const SymMatrix& o) const {
  const int n = n_;
  std::vector<double> p(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < n; ++l) {
      const double a = (*this)(i, l);
      if (a == 0.0) continue;
      for (int j = 0; j < n; ++j) p[static_cast<std::size_t>(i) * n + j] += a * o(l, j);
    }
  SymMatrix r(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      r.set(i, j, 0.5 * (p[static_cast<std::size_t>(i) * n + j] + p[static_cast<std::size_t>(j) * n + i]));
  return r;
}

std::ostream& operator<<(std::ostream& os, const SymMatrix& m) {
  for (int i = 0; i < m.order(); ++i) {
    for (int j = 0; j < m.order(); ++j) os << (j ? " " : "") << m(i, j);
    os << '\n';
  }
  return os;
}

Polynomial::Polynomial(std::vector<double> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) c_.push_back(0.0);
}

Polynomial Polynomial::monomial(int degree, double c) {
  std::vector<double> v(static_cast<std::size_t>(degree) + 1, 0.0);
  v.back() = c;
  return Polynomial(std::move(v));
}

int Polynomial::degree() const {
  for (int i = degree_bound(); i > 0; --i)
    if (c_[i] != 0.0) return i;
  return 0;
}

double Polynomial::operator()(double x) const {
  double r = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<double> r(std::max(c_.size(), o.c_.size()), 0.0);
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return Polynomial(std::move(r));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + o * -1.0; }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  std::vector<double> r(c_.size() + o.c_.size() - 1, 0.0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return Polynomial(std::move(r));
}

Polynomial Polynomial::operator*(double s) const {
  auto r = c_;
  for (double& v : r) v *= s;
  return Polynomial(std::move(r));
}

std::vector<double> SpectralDecomposition::column(int col) const {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = vector_entry(i, col);
  return v;
}

int EigenvalueProfile::total_multiplicity() const {
  int t = 0;
  for (const auto& c : distinct) t += c.multiplicity;
  return t;
}

SpectralDecomposition eigendecompose(const SymMatrix& m, const JacobiOptions& options) {
  const int n = m.order();
  std::vector<double> a = m.data();
  std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i) * n + i] = 1.0;
  auto A = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };
  auto V = [&](int i, int j) -> double& { return v[static_cast<std::size_t>(i) * n + j]; };

  for (int sweep = 0;; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += std::abs(A(p, q));
    if (off == 0.0) break;
    if (sweep >= options.max_sweeps)
      throw_numeric("EIGEN_NO_CONVERGENCE",
                    "Jacobi did not converge in " + std::to_string(options.max_sweeps) + " sweeps");
    // Skip small rotations during the first sweeps.
    const double threshold = sweep < 3 ? 0.2 * off / (static_cast<double>(n) * n) : 0.0;

    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = A(p, q);
        const double g = 100.0 * std::abs(apq);
        if (sweep > 3 && std::abs(A(p, p)) + g == std::abs(A(p, p)) &&
            std::abs(A(q, q)) + g == std::abs(A(q, q))) {
          A(p, q) = A(q, p) = 0.0;
          continue;
        }
        if (std::abs(apq) <= threshold || apq == 0.0) continue;

        const double diff = A(q, q) - A(p, p);
        double t;
        if (std::abs(diff) + g == std::abs(diff)) {
          t = apq / diff;
        } else {
          const double theta = 0.5 * diff / apq;
          t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (int k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = A(k, p);
          const double akq = A(k, q);
          A(k, p) = A(p, k) = c * akp - s * akq;
          A(k, q) = A(q, k) = s * akp + c * akq;
        }
        A(p, p) -= t * apq;
        A(q, q) += t * apq;
        A(p, q) = A(q, p) = 0.0;
        for (int k = 0; k < n; ++k) {
          const double vkp = V(k, p);
          const double vkq = V(k, q);
          V(k, p) = c * vkp - s * vkq;
          V(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return A(i, i) > A(j, j); });

  SpectralDecomposition out;
  out.n = n;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(static_cast<std::size_t>(n) * n);
  for (int c = 0; c < n; ++c) {
    out.eigenvalues[c] = A(order[c], order[c]);
    for (int r = 0; r < n; ++r) out.eigenvectors[static_cast<std::size_t>(r) * n + c] = V(r, order[c]);
  }
  return out;
}

SymMatrix reconstruct(const SpectralDecomposition& s, std::span<const double> values) {
  const int n = s.n;
  SymMatrix r(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      double acc = 0.0;
      for (int c = 0; c < n; ++c) acc += s.vector_entry(i, c) * values[c] * s.vector_entry(j, c);
      r.set(i, j, acc);
    }
  return r;
}

SymMatrix matrix_polynomial(const SymMatrix& m, const Polynomial& p) {
  const auto& c = p.coeffs();
  const int n = m.order();
  SymMatrix r = SymMatrix::identity(n) * c.back();
  for (int i = static_cast<int>(c.size()) - 2; i >= 0; --i) {
    r = r.symmetric_product(m);
    for (int d = 0; d < n; ++d) r.set(d, d, r(d, d) + c[i]);
  }
  return r;
}

namespace {

double spectral_scale(const std::vector<double>& eig) {
  double s = 1.0;
  for (double l : eig) s = std::max(s, std::abs(l));
  return s;
}

}  // namespace

bool is_psd(const SpectralDecomposition& s, double tol) {
  if (s.n == 0) return true;
  return s.eigenvalues.back() >= -tol * spectral_scale(s.eigenvalues);
}

bool is_psd(const SymMatrix& m, double tol) { return is_psd(eigendecompose(m), tol); }

SymMatrix group_inverse_psd(const SymMatrix& m, double psd_tol, double rank_cutoff) {
  const auto s = eigendecompose(m);
  if (!is_psd(s, psd_tol))
    throw_precondition("NOT_PSD", "group_inverse_psd requires a positive semidefinite matrix");
  const double top = s.n ? s.eigenvalues.front() : 0.0;
  std::vector<double> inv(s.n, 0.0);
  for (int i = 0; i < s.n; ++i)
    if (top > 0.0 && s.eigenvalues[i] > rank_cutoff * top) inv[i] = 1.0 / s.eigenvalues[i];
  return reconstruct(s, inv);
}

SymMatrix adjacency_matrix(const Graph& g) {
  SymMatrix a(g.order());
  for (auto [u, v] : g.edges()) a.set(u, v, 1.0);
  return a;
}

SymMatrix laplacian(const Graph& g) {
  SymMatrix l = adjacency_matrix(g) * -1.0;
  for (int v = 0; v < g.order(); ++v) l.set(v, v, g.degree(v));
  return l;
}

PrincipalEigenpair principal_eigenpair(const Graph& g) {
  if (g.size() == 0) throw_precondition("EDGELESS", "principal eigenpair needs at least one edge");
  if (!g.is_connected()) throw_precondition("DISCONNECTED", "principal eigenpair needs a connected graph");
  const auto s = eigendecompose(adjacency_matrix(g));
  PrincipalEigenpair out;
  out.rho = s.eigenvalues.front();
  out.y = s.column(0);
  if (std::accumulate(out.y.begin(), out.y.end(), 0.0) < 0.0)
    for (double& v : out.y) v = -v;
  for (double v : out.y)
    if (!(v > 0.0)) throw_numeric("PERRON_SIGN", "principal eigenvector has a nonpositive entry");
  return out;
}

EigenvalueProfile cluster_spectrum(const SpectralDecomposition& s, double tol) {
  EigenvalueProfile out;
  double sum = 0.0;
  int count = 0;
  for (int i = 0; i < s.n; ++i) {
    const double l = s.eigenvalues[i];
    if (count > 0 && s.eigenvalues[i - 1] - l > tol) {
      out.distinct.push_back({sum / count, count});
      sum = 0.0;
      count = 0;
    }
    sum += l;
    ++count;
  }
  if (count > 0) out.distinct.push_back({sum / count, count});
  return out;
}

}  // namespace kbound
