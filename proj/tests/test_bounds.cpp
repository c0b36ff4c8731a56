#include <cmath>
#include <numeric>

#include "doctest.h"
#include "kbound/bounds.hpp"
#include "kbound/error.hpp"
#include "kbound/exact.hpp"
#include "kbound/named_graphs.hpp"
#include "kbound/presets.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace kbound;
using doctest::Approx;

namespace {

std::vector<double> ones(int n) { return std::vector<double>(n, 1.0); }

SymMatrix poly_of(const Graph& g, std::vector<double> c) {
  return matrix_polynomial(adjacency_matrix(g), Polynomial(std::move(c)));
}

std::string error_code(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return std::string(e.code());
  }
  return "";
}

}  // namespace

TEST_SUITE("framework") {
  TEST_CASE("Petersen k=1 with A + 2I") {
    const Graph g = graphs::petersen();
    const auto pair = make_matrix_vector_pair(g, poly_of(g, {2.0, 1.0}), ones(10), 1);
    CHECK(pair.validation.all());
    const auto r = framework_bound(g, pair);
    CHECK(r.value == Approx(4.0).epsilon(1e-10));
    CHECK(r.integer_bound == 4);
    CHECK(r.method == "framework");
    CHECK(std::holds_alternative<MatrixVectorPair>(r.certificate));
    CHECK(r.assumptions.size() == 4);
  }

  TEST_CASE("identity gives the trivial bound") {
    for (const auto& [id, g] : testing::named_corpus()) {
      const auto pair = make_matrix_vector_pair(g, SymMatrix::identity(g.order()), ones(g.order()), 2);
      CHECK(framework_bound(g, pair).value == Approx(g.order()));
    }
  }

  TEST_CASE("C6 k=2 with A^2 + A") {
    const Graph g = graphs::cycle(6);
    const auto pair = make_matrix_vector_pair(g, poly_of(g, {0.0, 1.0, 1.0}), ones(6), 2);
    CHECK(pair.validation.all());
    CHECK(framework_bound(g, pair).value == Approx(2.0).epsilon(1e-10));
    // The same matrix breaks the k=1 support pattern.
    const auto bad = make_matrix_vector_pair(g, poly_of(g, {0.0, 1.0, 1.0}), ones(6), 1);
    CHECK_FALSE(bad.validation.pattern_ok);
    CHECK(error_code([&] { framework_bound(g, bad); }) == "PAIR_PATTERN");
  }

  TEST_CASE("validation flags name the failure") {
    const Graph g = graphs::cycle(4);
    const auto not_psd = make_matrix_vector_pair(g, adjacency_matrix(g), ones(4), 1);
    CHECK_FALSE(not_psd.validation.psd_ok);
    CHECK(error_code([&] { framework_bound(g, not_psd); }) == "PAIR_NOT_PSD");

    std::vector<double> x = ones(4);
    x[2] = 0.0;
    const auto zero = make_matrix_vector_pair(g, SymMatrix::identity(4), x, 1);
    CHECK_FALSE(zero.validation.nonzero_ok);
    CHECK(error_code([&] { framework_bound(g, zero); }) == "PAIR_ZERO_ENTRY");

    // A + 2I on C4 has kernel (1,-1,1,-1); x = e + that is outside the range.
    const auto off = make_matrix_vector_pair(g, poly_of(g, {2.0, 1.0}), {2.0, 0.5, 2.0, 0.5}, 1);
    CHECK(off.validation.psd_ok);
    CHECK_FALSE(off.validation.range_ok);
    CHECK(error_code([&] { framework_bound(g, off); }) == "PAIR_RANGE");
  }

  TEST_CASE("set certificate") {
    const Graph p = graphs::petersen();
    const auto pair = make_matrix_vector_pair(p, poly_of(p, {2.0, 1.0}), ones(10), 1);
    CHECK(set_certificate_bound(p, pair, std::span<const Vertex>{}) == 0.0);
    const auto mis = exact_alpha_k(p, 1).witness_set;
    REQUIRE(mis.size() == 4);
    CHECK(set_certificate_bound(p, pair, mis) == Approx(16.0));

    const Graph c6 = graphs::cycle(6);
    const auto pc = make_matrix_vector_pair(c6, poly_of(c6, {0.0, 1.0, 1.0}), ones(6), 2);
    const Vertex s[] = {0, 3};
    CHECK(set_certificate_bound(c6, pc, s) == Approx(4.0));
    const Vertex bad[] = {0, 2};
    CHECK(error_code([&] { set_certificate_bound(c6, pc, bad); }) == "NOT_K_INDEPENDENT");
  }

  TEST_CASE("colouring sum of squares") {
    const Graph c4 = graphs::cycle(4);
    const auto pair = make_matrix_vector_pair(c4, poly_of(c4, {2.0, 1.0}), ones(4), 1);
    const auto c = coloring_sum_squares_check(c4, pair, {{{0, 2}, {1, 3}}, 1});
    CHECK(c.lhs == 8);
    CHECK(c.rhs == Approx(8.0));
    CHECK(c.holds);
    const auto single = coloring_sum_squares_check(c4, pair, {{{0}, {1}, {2}, {3}}, 1});
    CHECK(single.lhs == 4);
    CHECK(single.holds);

    const Graph p = graphs::petersen();
    const auto pp = make_matrix_vector_pair(p, poly_of(p, {2.0, 1.0}), ones(10), 1);
    const auto col = exact_chi_k(p, 1).witness_coloring;
    REQUIRE(col.classes.size() == 3);
    const auto pc = coloring_sum_squares_check(p, pp, col);
    CHECK(pc.rhs == Approx(40.0));
    CHECK(pc.holds);
    // A 4-3-3 split gives exactly 34.
    std::vector<std::size_t> sizes;
    for (const auto& cls : col.classes) sizes.push_back(cls.size());
    std::sort(sizes.begin(), sizes.end());
    if (sizes == std::vector<std::size_t>{3, 3, 4}) CHECK(pc.lhs == 34);

    CHECK(error_code([&] { coloring_sum_squares_check(c4, pair, {{{0, 1}, {2, 3}}, 1}); }) == "INVALID_COLORING");
  }

  TEST_CASE("catalogue pairs are valid and contain the presets for regular graphs") {
    const auto cat = catalogue_pairs(graphs::petersen(), 1);
    CHECK(cat.size() >= 4);
    for (const auto& np : cat) CHECK(np.pair.validation.all());
    bool has_shifted = false;
    for (const auto& np : cat) has_shifted |= np.name.rfind("shifted-", 0) == 0;
    CHECK(has_shifted);
  }
}

TEST_SUITE("eigenvector polynomial") {
  TEST_CASE("Petersen top eigenpair with x + 2") {
    const Graph g = graphs::petersen();
    const auto r = eigenvector_polynomial_bound(g, adjacency_matrix(g), 0, Polynomial({2.0, 1.0}));
    CHECK(r.value == Approx(4.0).epsilon(1e-10));
  }

  TEST_CASE("P3 with x + sqrt 2") {
    const Graph g = graphs::path(3);
    const auto r = eigenvector_polynomial_bound(g, adjacency_matrix(g), 0, Polynomial({std::sqrt(2.0), 1.0}));
    CHECK(r.value == Approx(2.0).epsilon(1e-10));
    CHECK(r.integer_bound == 2);
  }

  TEST_CASE("regular graphs reproduce the constant row sum bound") {
    for (const auto& [id, g] : testing::named_corpus()) {
      if (!g.is_regular() || g.size() == 0) continue;
      const auto prof = cluster_spectrum(eigendecompose(adjacency_matrix(g)));
      for (int k = 1; k <= 3; ++k) {
        const Polynomial p = make_preset(PolynomialPreset::Shifted, k, prof);
        const double d = g.degree(0);
        if (p(d) <= 0.0) continue;
        const auto pa = matrix_polynomial(adjacency_matrix(g), p);
        double md = 0.0;
        for (double v : pa.diagonal_entries()) md = std::max(md, v);
        const auto r = eigenvector_polynomial_bound(g, adjacency_matrix(g), 0, p);
        CHECK(r.value == Approx(g.order() * md / p(d)).epsilon(1e-9));
      }
    }
  }

  TEST_CASE("preconditions") {
    const Graph g = graphs::cycle(4);
    CHECK(error_code([&] { eigenvector_polynomial_bound(g, adjacency_matrix(g), 0, Polynomial({0.0, 1.0})); }) ==
          "NOT_PSD");
    CHECK(error_code([&] { eigenvector_polynomial_bound(g, adjacency_matrix(g), 0, Polynomial({-5.0, 1.0})); }) ==
          "P_LAMBDA_NONPOSITIVE");
    CHECK(error_code([&] { eigenvector_polynomial_bound(g, adjacency_matrix(g), 7, Polynomial({2.0, 1.0})); }) ==
          "BAD_INDEX");
    SymMatrix w = adjacency_matrix(g);
    w.set(0, 2, 1.0);
    CHECK(error_code([&] { eigenvector_polynomial_bound(g, w, 0, Polynomial({2.0, 1.0})); }) == "WEIGHT_PATTERN");
    // The middle eigenvector of P3 is (1, 0, -1)/sqrt2.
    const Graph p3 = graphs::path(3);
    CHECK(error_code([&] { eigenvector_polynomial_bound(p3, adjacency_matrix(p3), 1, Polynomial({2.0, 1.0})); }) ==
          "TOTAL_NONZERO_VIOLATION");
  }
}

TEST_SUITE("optimal polynomial") {
  TEST_CASE("Petersen k=2 solves the LP without the shortcut") {
    const Graph g = graphs::petersen();
    const auto r = optimal_polynomial_bound(g, 2, {}, {.diameter_shortcut = false});
    CHECK(r.method == "optlp");
    CHECK(r.value == Approx(1.0).epsilon(1e-6));
    CHECK(r.integer_bound == 1);
    const auto sc = optimal_polynomial_bound(g, 2);
    CHECK(sc.method == "diameter");
    CHECK(sc.value == 1.0);
  }

  TEST_CASE("Petersen k=1 and K2") {
    CHECK(optimal_polynomial_bound(graphs::petersen(), 1).value == Approx(4.0).epsilon(1e-6));
    CHECK(optimal_polynomial_bound(graphs::complete(2), 1, {}, {.diameter_shortcut = false}).value ==
          Approx(1.0).epsilon(1e-6));
  }

  TEST_CASE("coefficient program for Petersen k=2 matches the hand instance") {
    const auto lp = coefficient_program(graphs::petersen(), 2);
    CHECK(lp.objective[0] == Approx(1.0));
    CHECK(lp.objective[1] == Approx(3.0));
    CHECK(lp.objective[2] == Approx(9.0));
    const auto sol = solve_lp(lp);
    CHECK(sol.value == Approx(1.0).epsilon(1e-9));
    CHECK(testing::lp_vertex_enumeration(lp).value() == Approx(1.0).epsilon(1e-9));
  }

  TEST_CASE("disconnected graphs sum their components") {
    const Graph g(7, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {5, 6}, {6, 3}});
    const auto r = optimal_polynomial_bound(g, 1);
    CHECK(std::holds_alternative<std::vector<Polynomial>>(r.certificate));
    const double sum = optimal_polynomial_bound(graphs::path(3), 1).value +
                       optimal_polynomial_bound(graphs::cycle(4), 1).value;
    CHECK(r.value == Approx(sum));
    CHECK(r.integer_bound >= exact_alpha_k(g, 1).value);
  }

  TEST_CASE("dominates the eigenvector bound for presets") {
    for (const auto& [id, g] : testing::random_corpus(25, 77)) {
      const auto prof = cluster_spectrum(eigendecompose(adjacency_matrix(g)));
      for (int k = 1; k <= 3; ++k) {
        const double opt = optimal_polynomial_bound(g, k, {}, {.diameter_shortcut = false}).value;
        const Polynomial p = make_preset(PolynomialPreset::Shifted, k, prof);
        const auto ev = eigenvector_polynomial_bound(g, adjacency_matrix(g), 0, p);
        CHECK(opt <= ev.value * (1.0 + 1e-6));
        CHECK(floor_bound(opt, 1e-9) >= exact_alpha_k(g, k).value);
      }
    }
  }
}

TEST_SUITE("ratio type") {
  TEST_CASE("examples") {
    const Graph p = graphs::petersen();
    CHECK(ratio_type_bound(p, 1, Polynomial({0.0, 1.0})).value == Approx(4.0).epsilon(1e-10));
    CHECK(ratio_type_bound(p, 2, Polynomial({0.0, 1.0, 1.0})).value == Approx(1.0).epsilon(1e-10));
    CHECK(ratio_type_bound(graphs::cycle(6), 2, Polynomial({0.0, 1.0, 1.0})).value == Approx(2.0).epsilon(1e-10));
    CHECK(ratio_type_bound(graphs::complete(2), 1, Polynomial({0.0, 1.0})).value == Approx(1.0));
  }

  TEST_CASE("preconditions") {
    CHECK(error_code([] { ratio_type_bound(graphs::path(3), 1, Polynomial({0.0, 1.0})); }) == "NOT_REGULAR");
    CHECK(error_code([] { ratio_type_bound(graphs::petersen(), 1, Polynomial({0.0, -1.0})); }) == "RATIO_INADMISSIBLE");
    CHECK(error_code([] { ratio_type_bound(Graph(4, {{0, 1}, {2, 3}}), 1, Polynomial({0.0, 1.0})); }) ==
          "MULTIPLICITY_AT_TOP");
    CHECK(error_code([] { ratio_type_bound(graphs::petersen(), 1, Polynomial({0.0, 0.0, 1.0})); }) ==
          "DEGREE_EXCEEDS_K");
    CHECK(error_code([] { ratio_type_bound(graphs::empty(3), 1, Polynomial({0.0, 1.0})); }) == "SINGLE_EIGENVALUE");
  }

  TEST_CASE("agrees with the framework pair (p(A) - lambda(p) I, e)") {
    for (const auto& [id, g] : testing::named_corpus()) {
      if (!g.is_regular()) continue;
      const auto prof = cluster_spectrum(eigendecompose(adjacency_matrix(g)));
      for (int k = 1; k <= 3; ++k)
        for (auto preset : kAllPresets) {
          const Polynomial p = make_preset(preset, k, prof);
          double low = 1e300;
          for (std::size_t j = 1; j < prof.distinct.size(); ++j) low = std::min(low, p(prof.distinct[j].value));
          if (prof.distinct.size() < 2 || !(p(prof.distinct[0].value) > low)) continue;
          const double ratio = ratio_type_bound(g, k, p).value;
          SymMatrix M = matrix_polynomial(adjacency_matrix(g), p) - SymMatrix::identity(g.order()) * low;
          const auto pair = make_matrix_vector_pair(g, M, ones(g.order()), k);
          REQUIRE(pair.validation.all());
          CHECK(framework_bound(g, pair).value == Approx(ratio).epsilon(1e-7));
        }
    }
  }
}

TEST_SUITE("minor polynomial") {
  TEST_CASE("examples") {
    const auto p1 = minor_polynomial_bound(graphs::petersen(), 1);
    CHECK(p1.value == Approx(4.0).epsilon(1e-9));
    const auto& f = std::get<Polynomial>(p1.certificate);
    CHECK(f(3.0) == Approx(1.0));
    CHECK(f(-2.0) == Approx(0.0).scale(1.0));
    CHECK(minor_polynomial_bound(graphs::petersen(), 2).value == Approx(1.0).epsilon(1e-9));
    CHECK(minor_polynomial_bound(graphs::complete(2), 1).value == Approx(1.0).epsilon(1e-9));
    for (const auto& a : p1.assumptions) CHECK(a.passed);
  }

  TEST_CASE("trace equals n times the diagonal on walk-regular graphs") {
    for (Graph g : {graphs::petersen(), graphs::hypercube(3), graphs::cycle(7), graphs::complete(5)}) {
      for (int k = 1; k <= 3; ++k) {
        const auto r = minor_polynomial_bound(g, k);
        const auto fa = matrix_polynomial(adjacency_matrix(g), std::get<Polynomial>(r.certificate));
        for (double d : fa.diagonal_entries()) CHECK(g.order() * d == Approx(r.value).epsilon(1e-7));
        CHECK(r.integer_bound >= exact_alpha_k(g, k).value);
      }
    }
  }

  TEST_CASE("regular but not walk-regular is refused") {
    // 3-regular on 8 vertices with both triangles and triangle-free vertices.
    const auto g = Graph(8, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 6}, {3, 7},
                             {4, 6}, {4, 7}, {5, 6}, {5, 7}});
    REQUIRE(g.is_regular());
    CHECK(minor_polynomial_bound(g, 1).value > 0.0);
    CHECK(error_code([&] { minor_polynomial_bound(g, 3); }) == "NOT_WALK_REGULAR");
    CHECK(error_code([] { minor_polynomial_bound(graphs::path(4), 1); }) == "NOT_REGULAR");
  }
}

TEST_SUITE("laplacian") {
  TEST_CASE("examples") {
    CHECK(laplacian_kpower_bound(graphs::petersen(), 1).value == 4.0);
    CHECK(laplacian_kpower_bound(graphs::complete(2), 1).value == 1.0);
    CHECK(laplacian_kpower_bound(graphs::cycle(6), 2).value == 3.0);
    CHECK(error_code([] { laplacian_kpower_bound(graphs::empty(3), 1); }) == "EDGELESS");
  }

  TEST_CASE("per-set predicate") {
    const Graph c6 = graphs::cycle(6);
    const Vertex s[] = {0, 3};
    const auto c = laplacian_set_predicate(c6, 2, s);
    CHECK(c.rhs == Approx(3.75));
    CHECK(c.holds);
  }

  TEST_CASE("scan is sound on random graphs") {
    for (const auto& [id, g] : testing::random_corpus(40, 4)) {
      for (int k = 1; k <= 3; ++k) {
        const auto ex = exact_alpha_k(g, k);
        CHECK(laplacian_kpower_bound(g, k).integer_bound >= ex.value);
        CHECK(laplacian_set_predicate(g, k, ex.witness_set).holds);
      }
    }
  }
}

TEST_SUITE("theta") {
  TEST_CASE("examples") {
    const auto c4 = theta_lower_bound(graphs::cycle(4), 2, Polynomial({0.0, 0.0, 1.0}));
    CHECK(c4.value == Approx(2.0));
    CHECK(c4.target == ThetaTarget::ThetaPrime);
    CHECK(theta_lower_bound(graphs::petersen(), 1, Polynomial::constant(1.0)).value == Approx(1.0));
    // e^T (A+2I)^2 e = 250 and tr (A+2I)^2 = 25 + 5*9 + 4*0 = 70.
    const auto p = theta_lower_bound(graphs::petersen(), 2, Polynomial({4.0, 4.0, 1.0}));
    CHECK(p.value == Approx(250.0 / 70.0).epsilon(1e-12));
  }

  TEST_CASE("target falls back to theta on negative entries") {
    const auto r = theta_lower_bound(graphs::cycle(4), 1, Polynomial({2.0, -1.0}));
    CHECK(r.target == ThetaTarget::Theta);
    CHECK(error_code([] { theta_lower_bound(graphs::cycle(4), 1, Polynomial({0.0, 1.0})); }) == "NOT_PSD");
    CHECK(error_code([] { theta_lower_bound(graphs::cycle(4), 1, Polynomial({0.0, 0.0})); }) == "TRACE_NONPOSITIVE");
  }

  TEST_CASE("walk ratio examples and reconciliation") {
    CHECK(walk_ratio_bound(graphs::cycle(4), 1).value == 2.0);
    CHECK(walk_ratio_bound(graphs::complete(2), 1).value == 1.0);
    CHECK(walk_ratio_bound(graphs::petersen(), 1).value == 3.0);
    for (const auto& [id, g] : testing::random_corpus(30, 13))
      for (int k = 1; k <= 2; ++k) {
        const double w = walk_ratio_bound(g, k).value;
        const double t = theta_lower_bound(g, 2 * k, Polynomial::monomial(2 * k)).value;
        CHECK(std::abs(w - t) <= 1e-9 * w);
      }
  }

  TEST_CASE("regular graphs: theta expression equals n p(d) / tr p(A)") {
    for (Graph g : {graphs::petersen(), graphs::cycle(6), graphs::hypercube(3)}) {
      const Polynomial p({3.0, 1.0});
      const double d = g.degree(0);
      const auto pa = matrix_polynomial(adjacency_matrix(g), p);
      CHECK(theta_lower_bound(g, 1, p).value == Approx(g.order() * p(d) / pa.trace()).epsilon(1e-9));
    }
  }
}

TEST_SUITE("colouring lower bounds") {
  TEST_CASE("chi_k examples") {
    const auto p = chi_k_lower_bound(graphs::petersen(), 1, Polynomial({2.0, 1.0}));
    CHECK(p.value == Approx(2.5));
    CHECK(p.integer_bound == 3);
    CHECK(chi_k_lower_bound(graphs::complete(2), 1, Polynomial({1.0, 1.0})).value == Approx(2.0));
    const auto c6 = chi_k_lower_bound(graphs::cycle(6), 2, Polynomial({0.0, 1.0, 1.0}));
    CHECK(c6.value == Approx(3.0));
    CHECK(c6.integer_bound == 3);
    CHECK(error_code([] { chi_k_lower_bound(graphs::path(3), 1, Polynomial({2.0, 1.0})); }) == "NOT_REGULAR");
  }

  TEST_CASE("chi'_k examples") {
    CHECK(chi_k_prime_lower_bound(graphs::complete(3), 1, Polynomial({1.0, 1.0})).value == Approx(3.0));
    CHECK(chi_k_prime_lower_bound(graphs::cycle(4), 1, Polynomial({2.0, 1.0})).value == Approx(2.0));
    CHECK(chi_k_prime_lower_bound(graphs::complete(2), 1, Polynomial::constant(1.0)).integer_bound == 1);
  }

  TEST_CASE("never exceeds the exact chromatic number") {
    for (const auto& [id, g] : testing::named_corpus()) {
      if (!g.is_regular() || g.size() == 0) continue;
      const auto prof = cluster_spectrum(eigendecompose(adjacency_matrix(g)));
      for (int k = 1; k <= 3; ++k) {
        const auto r = chi_k_lower_bound(g, k, make_preset(PolynomialPreset::Shifted, k, prof));
        CHECK(r.integer_bound <= exact_chi_k(g, k).value);
      }
    }
  }
}

TEST_SUITE("min rank") {
  TEST_CASE("examples") {
    const std::int64_t x[] = {0, 1};
    const std::vector<std::int64_t> d5(5, 1), d2(2, 1), d6(6, 1);
    CHECK(min_rank_bound(graphs::cycle(5), 1, 2, d5, x) == 5);
    CHECK(min_rank_bound(graphs::complete(2), 1, 2, d2, x) == 1);
    const std::int64_t q[] = {1, 1, 1};
    const auto r = min_rank_bound(graphs::cycle(6), 2, 2, d6, q);
    CHECK(r == 6);
    CHECK(r >= 2);
  }

  TEST_CASE("errors") {
    const std::int64_t x[] = {0, 1};
    const std::vector<std::int64_t> zero(4, 0), one(4, 1);
    CHECK(error_code([&] { min_rank_bound(graphs::cycle(4), 1, 4, one, x); }) == "NOT_PRIME");
    CHECK(error_code([&] { min_rank_bound(graphs::cycle(4), 1, 2, zero, x); }) == "ZERO_DIAGONAL");
    const std::int64_t x2[] = {0, 0, 1};
    CHECK(error_code([&] { min_rank_bound(graphs::cycle(4), 1, 2, one, x2); }) == "DEGREE_EXCEEDS_K");
  }

  TEST_CASE("invariant under relabelling and agrees with GF(2) oracle") {
    const std::int64_t x[] = {0, 1};
    for (const auto& [id, g] : testing::random_corpus(20, 31)) {
      const int n = g.order();
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::reverse(perm.begin(), perm.end());
      std::rotate(perm.begin(), perm.begin() + 1, perm.end());
      std::vector<Edge> e;
      for (auto [u, v] : g.edges()) e.emplace_back(perm[u], perm[v]);
      const Graph h(n, e);
      const std::vector<std::int64_t> diag(n, 1);
      const auto r = min_rank_bound(g, 1, 2, diag, x);
      CHECK(r == min_rank_bound(h, 1, 2, diag, x));
      CHECK(min_rank_bound(g, 1, 3, diag, x) == min_rank_bound(h, 1, 3, diag, x));
      std::vector<std::vector<int>> rows(n, std::vector<int>(n, 0));
      for (int u = 0; u < n; ++u) {
        rows[u][u] = 1;
        for (int v : g.neighbours(u)) rows[u][v] = 1;
      }
      CHECK(r == testing::gf2_rank(rows));
    }
  }
}

TEST_CASE("floor_bound clamps and absorbs rounding") {
  CHECK(floor_bound(3.9999999999, 1e-9) == 4);
  CHECK(floor_bound(0.3, 1e-9) == 1);
  CHECK(floor_bound(2.5, 1e-9) == 2);
}
