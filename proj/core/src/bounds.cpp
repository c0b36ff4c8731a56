#include "kbound/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "kbound/error.hpp"
#include "kbound/exact.hpp"
#include "kbound/lp.hpp"
#include "kbound/presets.hpp"

namespace kbound {
namespace {

double norm2(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void require_k(int k) {
  if (k < 1) throw_input("BAD_K", "k must be >= 1");
}

void require_degree(const Polynomial& p, int k) {
  if (p.degree() > k)
    throw_precondition("DEGREE_EXCEEDS_K", "polynomial degree " + std::to_string(p.degree()) +
                                               " exceeds k=" + std::to_string(k));
}

void require_regular(const Graph& g) {
  if (!g.is_regular()) throw_precondition("NOT_REGULAR", "bound requires a regular graph");
}

double spectral_scale(const SpectralDecomposition& s) {
  double m = 1.0;
  for (double l : s.eigenvalues) m = std::max(m, std::abs(l));
  return m;
}

double max_diagonal(const SymMatrix& m) {
  double best = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < m.order(); ++i) best = std::max(best, m(i, i));
  return best;
}

BoundReport make_report(std::string method, double value, Certificate cert,
                        std::vector<AssumptionCheck> checks, const Tolerances& tol) {
  if (!std::isfinite(value)) throw_numeric("NONFINITE_BOUND", method + " produced a non-finite value");
  BoundReport r;
  r.method = std::move(method);
  r.value = value;
  r.integer_bound = floor_bound(value, tol.floor);
  r.certificate = std::move(cert);
  r.assumptions = std::move(checks);
  return r;
}

struct AdjacencySpectrum {
  SymMatrix A;
  SpectralDecomposition decomposition;
  EigenvalueProfile profile;
};

AdjacencySpectrum adjacency_spectrum(const Graph& g, const Tolerances& tol) {
  AdjacencySpectrum s;
  s.A = adjacency_matrix(g);
  s.decomposition = eigendecompose(s.A);
  s.profile = cluster_spectrum(s.decomposition, tol.cluster);
  return s;
}

}  // namespace

std::int64_t floor_bound(double value, double tol) {
  return std::max<std::int64_t>(1, static_cast<std::int64_t>(std::floor(value + tol)));
}

MatrixVectorPair make_matrix_vector_pair(const Graph& g, SymMatrix M, std::vector<double> x, int k,
                                         const Tolerances& tol) {
  require_k(k);
  const int n = g.order();
  if (M.order() != n || static_cast<int>(x.size()) != n)
    throw_input("DIMENSION_MISMATCH", "pair dimensions do not match the graph order");
  MatrixVectorPair pair;
  pair.k = k;

  const auto& d = g.distances();
  pair.validation.pattern_ok = true;
  for (int i = 0; i < n && pair.validation.pattern_ok; ++i)
    for (int j = i + 1; j < n; ++j)
      if (d.farther_than(i, j, k) && M(i, j) != 0.0) {
        pair.validation.pattern_ok = false;
        break;
      }

  pair.validation.nonzero_ok = std::all_of(x.begin(), x.end(), [](double v) { return v != 0.0; });

  const auto s = eigendecompose(M);
  pair.validation.psd_ok = is_psd(s, tol.psd);
  if (pair.validation.psd_ok) {
    const double top = n ? s.eigenvalues.front() : 0.0;
    std::vector<double> inv(n, 0.0);
    for (int i = 0; i < n; ++i)
      if (top > 0.0 && s.eigenvalues[i] > tol.rank_cutoff * top) inv[i] = 1.0 / s.eigenvalues[i];
    pair.group_inverse = reconstruct(s, inv);
    // x in R(M)  <=>  (I - M M#) x = 0.
    const auto mx = M.apply(pair.group_inverse.apply(x));
    std::vector<double> residual(n);
    for (int i = 0; i < n; ++i) residual[i] = x[i] - mx[i];
    pair.validation.range_ok = norm2(residual) <= tol.range * norm2(x);
  }
  pair.M = std::move(M);
  pair.x = std::move(x);
  return pair;
}

PairEvaluation evaluate_pair(const MatrixVectorPair& pair) {
  PairEvaluation e;
  e.quadratic = dot(pair.x, pair.group_inverse.apply(pair.x));
  e.ratios.resize(pair.x.size());
  for (std::size_t u = 0; u < pair.x.size(); ++u)
    e.ratios[u] = pair.M(static_cast<int>(u), static_cast<int>(u)) / (pair.x[u] * pair.x[u]);
  return e;
}

namespace {

void require_valid(const Graph& g, const MatrixVectorPair& pair) {
  if (pair.M.order() != g.order()) throw_input("DIMENSION_MISMATCH", "pair order differs from graph order");
  const auto& v = pair.validation;
  if (!v.psd_ok) throw_precondition("PAIR_NOT_PSD", "psd_ok failed: M is not positive semidefinite");
  if (!v.pattern_ok) throw_precondition("PAIR_PATTERN", "pattern_ok failed: M_ij != 0 for some d(i,j) > k");
  if (!v.range_ok) throw_precondition("PAIR_RANGE", "range_ok failed: x is not in the range of M");
  if (!v.nonzero_ok) throw_precondition("PAIR_ZERO_ENTRY", "nonzero_ok failed: x has a zero entry");
}

std::vector<AssumptionCheck> pair_checks(const MatrixVectorPair& pair) {
  return {{"psd_ok", pair.validation.psd_ok},
          {"pattern_ok", pair.validation.pattern_ok},
          {"range_ok", pair.validation.range_ok},
          {"nonzero_ok", pair.validation.nonzero_ok}};
}

}  // namespace

BoundReport framework_bound(const Graph& g, const MatrixVectorPair& pair, const Tolerances& tol) {
  require_valid(g, pair);
  const auto e = evaluate_pair(pair);
  const double value = e.quadratic * *std::max_element(e.ratios.begin(), e.ratios.end());
  return make_report("framework", value, pair, pair_checks(pair), tol);
}

double set_certificate_bound(const Graph& g, const MatrixVectorPair& pair, std::span<const Vertex> set,
                             const Tolerances& tol) {
  require_valid(g, pair);
  if (!is_k_independent(g, set, pair.k))
    throw_precondition("NOT_K_INDEPENDENT", "set is not " + std::to_string(pair.k) + "-independent");
  const auto e = evaluate_pair(pair);
  double sum = 0.0;
  for (Vertex u : set) sum += e.ratios[u];
  const double value = e.quadratic * sum;
  const double size = static_cast<double>(set.size());
  if (size * size > value + tol.certificate)
    throw_numeric("CERTIFICATE_VIOLATED", "|S|^2 exceeds the framework certificate");
  return value;
}

ColoringCheck coloring_sum_squares_check(const PairEvaluation& eval, const ColoringPartition& partition,
                                         const Tolerances& tol) {
  ColoringCheck c;
  for (const auto& cls : partition.classes)
    c.lhs += static_cast<std::int64_t>(cls.size()) * static_cast<std::int64_t>(cls.size());
  c.rhs = eval.quadratic * std::accumulate(eval.ratios.begin(), eval.ratios.end(), 0.0);
  c.holds = static_cast<double>(c.lhs) <= c.rhs + tol.certificate;
  return c;
}

ColoringCheck coloring_sum_squares_check(const Graph& g, const MatrixVectorPair& pair,
                                         const ColoringPartition& partition, const Tolerances& tol) {
  require_valid(g, pair);
  if (partition.k != pair.k)
    throw_input("K_MISMATCH", "partition radius differs from the pair radius");
  if (!validate_coloring(g, partition))
    throw_precondition("INVALID_COLORING", "a colour class is not k-independent");
  return coloring_sum_squares_check(evaluate_pair(pair), partition, tol);
}

std::vector<NamedPair> catalogue_pairs(const Graph& g, int k, const Tolerances& tol) {
  require_k(k);
  const int n = g.order();
  std::vector<NamedPair> out;
  auto add = [&](std::string name, SymMatrix M, std::vector<double> x) {
    auto pair = make_matrix_vector_pair(g, std::move(M), std::move(x), k, tol);
    if (pair.validation.all()) out.push_back({std::move(name), std::move(pair)});
  };
  const std::vector<double> ones(n, 1.0);
  add("identity", SymMatrix::identity(n), ones);
  if (g.size() == 0) return out;

  const auto spec = adjacency_spectrum(g, tol);
  const bool connected = g.is_connected();
  std::vector<double> y = ones;
  if (connected) y = principal_eigenpair(g).y;
  if (spec.profile.distinct.size() >= 2) {
    for (auto preset : kAllPresets) {
      const Polynomial p = make_preset(preset, k, spec.profile);
      double low = std::numeric_limits<double>::infinity();
      for (std::size_t j = 1; j < spec.profile.distinct.size(); ++j)
        low = std::min(low, p(spec.profile.distinct[j].value));
      if (!(p(spec.profile.distinct.front().value) > low)) continue;
      SymMatrix M = matrix_polynomial(spec.A, p);
      for (int i = 0; i < n; ++i) M.set(i, i, M(i, i) - low);
      const std::string name = std::string(preset_name(preset));
      if (g.is_regular()) add("shifted-" + name + "/ones", M, ones);
      if (connected) add("shifted-" + name + "/perron", M, y);
    }
  }
  const auto L = laplacian(g);
  const double mu = eigendecompose(L).eigenvalues.front();
  SymMatrix M = matrix_polynomial(L, Polynomial::monomial(k)) * -1.0;
  for (int i = 0; i < n; ++i) M.set(i, i, M(i, i) + std::pow(mu, k));
  add("laplacian", M, ones);
  return out;
}

BoundReport eigenvector_polynomial_bound(const Graph& g, const SymMatrix& weight, int lambda_index,
                                         const Polynomial& p, const Tolerances& tol) {
  const int n = g.order();
  if (weight.order() != n) throw_input("DIMENSION_MISMATCH", "weight order differs from graph order");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!g.adjacent(i, j) && weight(i, j) != 0.0)
        throw_precondition("WEIGHT_PATTERN", "weight has a nonzero entry on a non-edge");
  if (lambda_index < 0 || lambda_index >= n) throw_input("BAD_INDEX", "eigenpair index out of range");

  const auto s = eigendecompose(weight);
  const double lambda = s.eigenvalues[lambda_index];
  auto y = s.column(lambda_index);
  if (std::accumulate(y.begin(), y.end(), 0.0) < 0.0)
    for (double& v : y) v = -v;
  const double ynorm = norm2(y);
  for (double v : y)
    if (std::abs(v) <= tol.total_nonzero * ynorm)
      throw_precondition("TOTAL_NONZERO_VIOLATION", "chosen eigenvector has a zero entry");

  const double p_lambda = p(lambda);
  if (!(p_lambda > 0.0)) throw_precondition("P_LAMBDA_NONPOSITIVE", "p(lambda) must be positive");
  const SymMatrix pw = matrix_polynomial(weight, p);
  if (!is_psd(pw, tol.psd)) throw_precondition("NOT_PSD", "p(W) is not positive semidefinite");

  double best = -std::numeric_limits<double>::infinity();
  for (int u = 0; u < n; ++u) best = std::max(best, pw(u, u) / (y[u] * y[u]));
  const double value = dot(y, y) / p_lambda * best;
  return make_report("eigenpoly", value, p,
                     {{"weight_pattern", true}, {"total_nonzero", true}, {"psd", true}, {"p_lambda_positive", true}},
                     tol);
}

LinearProgram coefficient_program(const Graph& g, int k, const Tolerances& tol) {
  require_k(k);
  const auto pe = principal_eigenpair(g);
  const auto spec = adjacency_spectrum(g, tol);
  const int n = g.order();

  LinearProgram lp;
  lp.sense = Sense::Maximize;
  lp.objective.resize(k + 1);
  for (int i = 0; i <= k; ++i) lp.objective[i] = std::pow(pe.rho, i);

  std::vector<std::vector<std::uint64_t>> diag(k + 1);
  for (int i = 0; i <= k; ++i) diag[i] = closed_walks(g, i);
  for (int u = 0; u < n; ++u) {
    LinearConstraint c;
    c.coeffs.resize(k + 1);
    for (int i = 0; i <= k; ++i) c.coeffs[i] = static_cast<double>(diag[i][u]);
    c.relation = Relation::LessEqual;
    c.rhs = pe.y[u] * pe.y[u];
    lp.constraints.push_back(std::move(c));
  }
  for (const auto& cl : spec.profile.distinct) {
    LinearConstraint c;
    c.coeffs.resize(k + 1);
    for (int i = 0; i <= k; ++i) c.coeffs[i] = std::pow(cl.value, i);
    c.relation = Relation::GreaterEqual;
    c.rhs = 0.0;
    lp.constraints.push_back(std::move(c));
  }
  return lp;
}

namespace {

struct ComponentBound {
  double value;
  Polynomial certificate;
  bool shortcut;
};

ComponentBound optimal_connected(const Graph& g, int k, const Tolerances& tol,
                                 const OptimalPolynomialOptions& options) {
  if (g.order() == 1) return {1.0, Polynomial::constant(1.0), true};
  if (options.diameter_shortcut && k >= g.diameter()) return {1.0, Polynomial::constant(1.0), true};

  const auto pe = principal_eigenpair(g);
  const auto lp = coefficient_program(g, k, tol);
  const auto sol = solve_lp(lp);
  if (sol.status != LpStatus::Optimal)
    throw_numeric("LP_FAILED", "coefficient program did not reach an optimum");
  // The constant min_u y_u^2 is feasible, so the optimum is positive, and
  // p(rho) <= tr p(A) <= sum y_u^2 = 1 bounds it above.
  const double min_y2 = std::pow(*std::min_element(pe.y.begin(), pe.y.end()), 2);
  if (sol.value < min_y2 * (1.0 - 1e-9) || sol.value > 1.0 + 1e-9)
    throw_numeric("LP_OUT_OF_RANGE", "coefficient program optimum outside (0, 1]");

  // Certify: re-evaluate the bound from the polynomial itself. The LP only
  // constrains p at clustered eigenvalues, so lift p by any residual negative
  // eigenvalue of p(A) before evaluating.
  Polynomial p(sol.point);
  const SymMatrix A = adjacency_matrix(g);
  SymMatrix pa = matrix_polynomial(A, p);
  const auto s = eigendecompose(pa);
  const double lift = std::max(0.0, -s.eigenvalues.back());
  if (lift > 0.0) {
    p = p + lift;
    pa = matrix_polynomial(A, p);
  }
  const double p_rho = p(pe.rho);
  double ratio = -std::numeric_limits<double>::infinity();
  for (int u = 0; u < g.order(); ++u) ratio = std::max(ratio, pa(u, u) / (pe.y[u] * pe.y[u]));
  const double value = ratio / p_rho;
  if (std::abs(value - 1.0 / sol.value) > 1e-6 * value)
    throw_numeric("LP_CERTIFICATE_MISMATCH", "certified value disagrees with the LP optimum");
  return {value, p, false};
}

}  // namespace

BoundReport optimal_polynomial_bound(const Graph& g, int k, const Tolerances& tol,
                                     const OptimalPolynomialOptions& options) {
  require_k(k);
  if (g.order() == 0) throw_precondition("EMPTY_GRAPH", "graph has no vertices");
  if (g.is_connected()) {
    auto cb = optimal_connected(g, k, tol, options);
    return make_report(cb.shortcut ? "diameter" : "optlp", cb.value, cb.certificate,
                       {{"connected", true}, {"diameter_shortcut", cb.shortcut}}, tol);
  }
  double total = 0.0;
  std::vector<Polynomial> certs;
  for (const auto& comp : g.components()) {
    auto cb = optimal_connected(g.induced_subgraph(comp), k, tol, options);
    total += cb.value;
    certs.push_back(cb.certificate);
  }
  return make_report("optlp", total, certs, {{"connected", false}, {"component_sum", true}}, tol);
}

BoundReport ratio_type_bound(const Graph& g, int k, const Polynomial& p, const Tolerances& tol) {
  require_k(k);
  require_degree(p, k);
  require_regular(g);
  const auto spec = adjacency_spectrum(g, tol);
  const auto& distinct = spec.profile.distinct;
  if (distinct.size() < 2) throw_precondition("SINGLE_EIGENVALUE", "spectrum has one distinct eigenvalue");
  if (distinct.front().multiplicity > 1)
    throw_precondition("MULTIPLICITY_AT_TOP", "largest eigenvalue is not simple");
  double low = std::numeric_limits<double>::infinity();
  for (std::size_t j = 1; j < distinct.size(); ++j) low = std::min(low, p(distinct[j].value));
  const double top = p(distinct.front().value);
  if (!(top > low)) throw_precondition("RATIO_INADMISSIBLE", "need p(lambda_1) > min_{i>=2} p(lambda_i)");
  const double diag = max_diagonal(matrix_polynomial(spec.A, p));
  const double value = g.order() * (diag - low) / (top - low);
  return make_report("ratio", value, p, {{"regular", true}, {"simple_top", true}, {"admissible", true}}, tol);
}

BoundReport minor_polynomial_bound(const Graph& g, int k, const Tolerances& tol) {
  require_k(k);
  require_regular(g);
  const int n = g.order();
  for (int l = 1; l <= k; ++l) {
    const auto w = closed_walks(g, l);
    for (int u = 1; u < n; ++u)
      if (std::abs(static_cast<double>(w[u]) - static_cast<double>(w[0])) > tol.walk_regular)
        throw_precondition("NOT_WALK_REGULAR", "vertices 0 and " + std::to_string(u) +
                                                   " differ in closed walks of length " + std::to_string(l));
  }
  const auto spec = adjacency_spectrum(g, tol);
  const auto& distinct = spec.profile.distinct;

  LinearProgram lp;
  lp.sense = Sense::Minimize;
  lp.objective.assign(k + 1, 0.0);
  for (const auto& cl : distinct)
    for (int i = 0; i <= k; ++i) lp.objective[i] += cl.multiplicity * std::pow(cl.value, i);
  for (std::size_t j = 0; j < distinct.size(); ++j) {
    LinearConstraint c;
    c.coeffs.resize(k + 1);
    for (int i = 0; i <= k; ++i) c.coeffs[i] = std::pow(distinct[j].value, i);
    c.relation = j == 0 ? Relation::Equal : Relation::GreaterEqual;
    c.rhs = j == 0 ? 1.0 : 0.0;
    lp.constraints.push_back(std::move(c));
  }
  const auto sol = solve_lp(lp);
  if (sol.status != LpStatus::Optimal) throw_numeric("LP_FAILED", "minor-polynomial program failed");

  const Polynomial f(sol.point);
  const SymMatrix fa = matrix_polynomial(spec.A, f);
  const double trace = fa.trace();
  bool constant_diag = true;
  for (int u = 0; u < n; ++u)
    if (std::abs(n * fa(u, u) - trace) > tol.certificate * std::max(1.0, std::abs(trace))) constant_diag = false;
  return make_report("minor", sol.value, f,
                     {{"regular", true},
                      {"walk_regular", true},
                      {"psd", is_psd(fa, tol.psd)},
                      {"trace_equals_n_diag", constant_diag}},
                     tol);
}

namespace {

struct LaplacianPowers {
  double mu_k = 0.0;
  std::vector<double> diag;  // (L^k)_uu
};

LaplacianPowers laplacian_powers(const Graph& g, int k) {
  require_k(k);
  if (g.size() == 0) throw_precondition("EDGELESS", "Laplacian bound needs at least one edge");
  const auto L = laplacian(g);
  const double mu = eigendecompose(L).eigenvalues.front();
  return {std::pow(mu, k), matrix_polynomial(L, Polynomial::monomial(k)).diagonal_entries()};
}

}  // namespace

BoundReport laplacian_kpower_bound(const Graph& g, int k, const Tolerances& tol) {
  auto lp = laplacian_powers(g, k);
  const int n = g.order();
  std::sort(lp.diag.begin(), lp.diag.end());
  // The average of the s smallest diagonal entries lower-bounds d_k(S) over
  // all |S| = s, and the admissible s form a prefix of 1..n.
  int best = 0;
  double prefix = 0.0;
  for (int s = 1; s <= n; ++s) {
    prefix += lp.diag[s - 1];
    const double rhs = n * (lp.mu_k - prefix / s) / lp.mu_k;
    if (s <= rhs + tol.floor) best = s;
    else break;
  }
  return make_report("laplacian", best, std::monostate{}, {{"has_edge", true}}, tol);
}

LaplacianSetCheck laplacian_set_predicate(const Graph& g, int k, std::span<const Vertex> set,
                                          const Tolerances& tol) {
  if (set.empty()) throw_input("EMPTY_SET", "d_k(S) is undefined for the empty set");
  if (!is_k_independent(g, set, k)) throw_precondition("NOT_K_INDEPENDENT", "set is not k-independent");
  const auto lp = laplacian_powers(g, k);
  double sum = 0.0;
  for (Vertex u : set) sum += lp.diag[u];
  LaplacianSetCheck c;
  c.rhs = g.order() * (lp.mu_k - sum / set.size()) / lp.mu_k;
  c.holds = static_cast<double>(set.size()) <= c.rhs + tol.certificate;
  return c;
}

ThetaLowerReport theta_lower_bound(const Graph& g, int k, const Polynomial& p, const Tolerances& tol) {
  require_k(k);
  require_degree(p, k);
  const SymMatrix pa = matrix_polynomial(adjacency_matrix(g), p);
  const auto s = eigendecompose(pa);
  if (!is_psd(s, tol.psd)) throw_precondition("NOT_PSD", "p(A) is not positive semidefinite");
  const double trace = pa.trace();
  if (!(trace > 0.0)) throw_precondition("TRACE_NONPOSITIVE", "tr p(A) must be positive");
  const double scale = spectral_scale(s);
  const bool nonnegative =
      std::all_of(pa.data().begin(), pa.data().end(), [&](double v) { return v >= -1e-9 * scale; });
  ThetaLowerReport r;
  r.target = nonnegative ? ThetaTarget::ThetaPrime : ThetaTarget::Theta;
  r.graph_description = "complement of G^" + std::to_string(k);
  r.value = pa.total_sum() / trace;
  r.certificate = p;
  return r;
}

ThetaLowerReport walk_ratio_bound(const Graph& g, int k) {
  require_k(k);
  if (g.size() == 0) throw_precondition("EDGELESS", "walk ratio needs at least one edge");
  const auto wc = walk_counts(g, 2 * k);
  ThetaLowerReport r;
  r.target = ThetaTarget::ThetaPrime;
  r.graph_description = "complement of G^" + std::to_string(2 * k);
  r.value = static_cast<double>(static_cast<long double>(wc.total) / static_cast<long double>(wc.closed));
  r.certificate = Polynomial::monomial(2 * k);
  return r;
}

ChiLowerBound chi_k_lower_bound(const Graph& g, int k, const Polynomial& p, const Tolerances& tol) {
  require_k(k);
  require_degree(p, k);
  require_regular(g);
  if (g.order() == 0) throw_precondition("EMPTY_GRAPH", "graph has no vertices");
  const double d = g.degree(0);
  const double pd = p(d);
  if (!(pd > 0.0)) throw_precondition("P_D_NONPOSITIVE", "p(d) must be positive");
  const SymMatrix pa = matrix_polynomial(adjacency_matrix(g), p);
  if (!is_psd(pa, tol.psd)) throw_precondition("NOT_PSD", "p(A) is not positive semidefinite");
  const double n = g.order();
  ChiLowerBound r;
  r.value = n * pd / pa.trace();
  r.integer_bound = static_cast<std::int64_t>(std::ceil(r.value - tol.floor));
  r.via_alpha = pd / max_diagonal(pa);
  return r;
}

ChiLowerBound chi_k_prime_lower_bound(const Graph& g, int k, const Polynomial& p, const Tolerances& tol) {
  const Graph lg = line_graph(g);
  if (!lg.is_regular()) throw_precondition("NOT_REGULAR", "line graph is not regular");
  return chi_k_lower_bound(lg, k, p, tol);
}

std::int64_t min_rank_bound(const Graph& g, int k, std::int64_t field_char, std::span<const std::int64_t> diag,
                            std::span<const std::int64_t> p) {
  require_k(k);
  if (field_char >= (std::int64_t{1} << 31) || !is_prime(field_char))
    throw_input("NOT_PRIME", "field characteristic " + std::to_string(field_char) + " is not prime");
  const int n = g.order();
  if (static_cast<int>(diag.size()) != n) throw_input("DIMENSION_MISMATCH", "diag length differs from n");
  if (p.empty()) throw_input("EMPTY_POLYNOMIAL", "polynomial has no coefficients");
  const std::int64_t q = field_char;
  auto red = [q](std::int64_t v) { return ((v % q) + q) % q; };
  int degree = 0;
  for (int i = static_cast<int>(p.size()) - 1; i > 0; --i)
    if (red(p[i]) != 0) {
      degree = i;
      break;
    }
  if (degree > k) throw_precondition("DEGREE_EXCEEDS_K", "polynomial degree exceeds k");

  const std::size_t N = static_cast<std::size_t>(n);
  std::vector<std::int64_t> A(N * N, 0);
  for (auto [u, v] : g.edges()) A[u * N + v] = A[v * N + u] = 1 % q;
  for (std::size_t u = 0; u < N; ++u) A[u * N + u] = red(diag[u]);

  // Horner over GF(q).
  std::vector<std::int64_t> R(N * N, 0), T(N * N);
  for (std::size_t u = 0; u < N; ++u) R[u * N + u] = red(p[degree]);
  for (int i = degree - 1; i >= 0; --i) {
    std::fill(T.begin(), T.end(), 0);
    for (std::size_t a = 0; a < N; ++a)
      for (std::size_t l = 0; l < N; ++l) {
        const std::int64_t r = R[a * N + l];
        if (!r) continue;
        for (std::size_t b = 0; b < N; ++b) T[a * N + b] = (T[a * N + b] + r * A[l * N + b]) % q;
      }
    for (std::size_t u = 0; u < N; ++u) T[u * N + u] = (T[u * N + u] + red(p[i])) % q;
    R.swap(T);
  }
  std::string zeros;
  for (std::size_t u = 0; u < N; ++u)
    if (R[u * N + u] == 0) zeros += (zeros.empty() ? "" : ",") + std::to_string(u);
  if (!zeros.empty())
    throw_precondition("ZERO_DIAGONAL", "(p(A))_uu vanishes over GF(" + std::to_string(q) + ") at vertices " + zeros);
  return gfp_rank(IntMatrix{n, n, std::move(R)}, q);
}

}  // namespace kbound
