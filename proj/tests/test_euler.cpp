#include <doctest.h>

#include "oracles.hpp"
#include "sturm/campaign.hpp"
#include "sturm/errors.hpp"
#include "sturm/euler.hpp"
#include "sturm/jacobi.hpp"
#include "sturm/normalized.hpp"

using namespace sturm;

namespace {

Rational Q(long p, long q = 1) { return Rational(p) / Rational(q); }

std::vector<Rational> even_coeffs(const Polynomial& e) {
  std::vector<Rational> out;
  for (int k = 0; k <= e.degree(); k += 2) {
    out.push_back(e.coeff(k));
    if (k + 1 <= e.degree()) CHECK(e.coeff(k + 1).is_zero());
  }
  return out;
}

}  // namespace

TEST_CASE("Euler polynomials") {
  CHECK(even_coeffs(euler_poly(1)) == std::vector<Rational>{Q(1), Q(-1, 4)});
  CHECK(even_coeffs(euler_poly(2)) == std::vector<Rational>{Q(1), Q(-3, 8), Q(1, 256)});
  CHECK(even_coeffs(euler_poly(3)) == std::vector<Rational>{Q(1), Q(-5, 12), Q(5, 432), Q(-1, 46656)});
  CHECK(even_coeffs(euler_poly(4)) ==
        std::vector<Rational>{Q(1), Q(-7, 16), Q(35, 2048), Q(-7, 65536), Q(1, 16777216)});
  CHECK(euler_poly(3).degree() == 6);
  CHECK(f_n_poly(2) == Polynomial::from_descending(std::vector<Rational>{Q(1, 256), Q(-3, 8), Q(1)}));
  CHECK(f_n_poly(3).coeff(3) == Q(-1, 46656));
  CHECK_THROWS_AS(euler_poly(0), BadIndex);

  for (int n = 1; n <= 10; ++n) {
    const Polynomial f = f_n_poly(n);
    for (int k = 0; k <= n; ++k) {
      const Rational expect =
          Rational(k % 2 == 0 ? 1 : -1) * binomial(2u * n, 2u * k) / Rational(2 * n).pow(2 * k);
      CHECK(f.coeff(k) == expect);
    }
  }
}

TEST_CASE("hypergeometric coefficients") {
  CHECK(hypergeom_coeff({Q(1), Q(1), Q(1)}, 3) == Q(1));
  CHECK(hypergeom_coeff({Q(-2), Q(3), Q(1, 2)}, 0) == Q(1));
  CHECK(hypergeom_coeff({Q(-2), Q(3), Q(1, 2)}, 1) == Q(-12));
  CHECK(hypergeom_coeff({Q(-2), Q(3), Q(1, 2)}, 3) == Q(0));
  CHECK(hypergeom_coeff({Q(1), Q(1), Q(-2)}, 2) == Q(1));
  CHECK_THROWS_AS(hypergeom_coeff({Q(1), Q(1), Q(-2)}, 3), PoleInGamma);

  for (int n : {1, 4, 12}) CHECK(check_gauss_even(n).passed());
  for (int n = 1; n <= 12; ++n) {
    CHECK(check_gauss_even(n).passed());
    CHECK(check_euler_hypergeom(n).passed());
  }
}

TEST_CASE("coefficients of E_n approach the cosine series") {
  const std::vector<int> ns{1, 2, 4, 8, 16, 32};
  const CosLimitReport k0 = cos_limit_check(0, ns);
  CHECK(k0.limit == Q(1));
  CHECK(k0.passed());
  for (const auto& row : k0.rows) CHECK(row.deviation.is_zero());

  const CosLimitReport k1 = cos_limit_check(1, ns);
  CHECK(k1.limit == Q(-1, 2));
  CHECK(k1.passed());
  CHECK(k1.rows.front().e == Q(-1, 4));
  CHECK(k1.rows.front().deviation == Q(1, 4));

  const CosLimitReport k2 = cos_limit_check(2, {2, 4, 8, 16, 32});
  CHECK(k2.limit == Q(1, 24));
  CHECK(k2.passed());
  CHECK(k2.rows.front().e == Q(1, 256));
}

TEST_CASE("limits of the normalized quantities") {
  CHECK(r_limit(0) == Q(1, 6));
  CHECK(r_limit(1) == Q(2, 5));
  CHECK((r_finite(100, 0) - r_limit(0)).abs() < Q(3, 100));
  for (int n : {4, 7, 12, 20}) {
    const NormalizedTable t(f_n_poly(n), 1, 2);
    for (int i = 0; i <= n - 2; ++i) CHECK(t.r(n - i) == r_finite(n, i));
  }
  CHECK_THROWS_AS(r_finite(5, 4), BadIndex);

  CHECK(beta_limit(1, 2) == Q(-2, 3));
  CHECK(beta_limit(2, 4) == Q(-8, 7));
  CHECK(beta_limit(1, 3) == Q(-4, 5));
  CHECK(beta_limit(1, 4) == Q(-6, 7));
  CHECK(beta_limit(2, 5) == Q(-12, 9));
  CHECK(beta_limit(3, 6) == Q(-18, 11));
  for (int j = 1; j < 6; ++j) CHECK(beta_limit(j, j).is_zero());
  for (int j = 1; j < 5; ++j)
    for (int i = j; i < 10; ++i) CHECK(b_shifted_limit(j, i) == beta_limit(j, i) + Rational(j));
  CHECK_THROWS_AS(beta_limit(3, 2), BadIndex);
}

TEST_CASE("limit determinants") {
  CHECK(c_inf_det(1) == Q(-2, 3));
  CHECK(c_inf_det(2) == Q(64, 525));
  CHECK(c_inf_det(3) == Q(-8192, 2546775));
  for (int m = 1; m <= 5; ++m) {
    oracle::Grid g(static_cast<std::size_t>(m), oracle::Row(static_cast<std::size_t>(m)));
    oracle::Grid h = g;
    for (int p = 1; p <= m; ++p)
      for (int q = 1; q <= m; ++q) {
        g[p - 1][q - 1] = Rational(-2 * std::min(p, q) * std::max(p, q)) / Rational(2 * (p + q) - 1);
        h[p - 1][q - 1] = Rational(1) / Rational(2 * (p + q) - 1);
      }
    CHECK(c_inf_det(m) == oracle::leibniz(g));
    CHECK(hilbert_variant_brute(m) == oracle::leibniz(h));
    CHECK(c_inf_factored(m) == c_inf_det(m));
    Rational scale = Rational(m % 2 == 0 ? 1 : -1) * Rational(2).pow(m) * Rational(factorial(static_cast<unsigned>(m))).pow(2);
    CHECK(c_inf_det(m) == scale * oracle::leibniz(h));
  }

  const oracle::Grid shown{{Q(-2, 3), Q(-4, 5), Q(-6, 7)}, {Q(-4, 5), Q(-8, 7), Q(-12, 9)}, {Q(-6, 7), Q(-12, 9), Q(-18, 11)}};
  const oracle::Grid scaled{{Q(1, 3), Q(2, 5), Q(3, 7)}, {Q(1, 5), Q(2, 7), Q(3, 9)}, {Q(1, 7), Q(2, 9), Q(3, 11)}};
  CHECK(oracle::leibniz(shown) == c_inf_det(3));
  CHECK(oracle::leibniz(shown) == Q(-48) * oracle::leibniz(scaled));
  CHECK(oracle::leibniz(shown) == Q(-288) * hilbert_variant_brute(3));
}

TEST_CASE("Cauchy determinants") {
  CHECK(hilbert_variant_closed(1) == Q(1, 3));
  CHECK(hilbert_variant_closed(2) == Q(4, 525));
  CHECK(hilbert_variant_closed(3) == Q(256, 22920975));
  for (int m = 1; m <= 6; ++m) CHECK(hilbert_variant_closed(m) == hilbert_variant_brute(m));

  Rng rng(41);
  for (int t = 0; t < 50; ++t) {
    const auto m = static_cast<std::size_t>(uniform_int(rng, 1, 6));
    CauchySpec s{random_distinct_rationals(rng, m, 20, 3), random_distinct_rationals(rng, m, 20, 3)};
    bool singular = false;
    for (const auto& x : s.x)
      for (const auto& y : s.y) singular = singular || (x + y).is_zero();
    if (singular) {
      CHECK_THROWS_AS(cauchy_closed_form(s), SingularPair);
      continue;
    }
    oracle::Grid g(m, oracle::Row(m));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) g[i][j] = Rational(1) / (s.x[i] + s.y[j]);
    CHECK(cauchy_closed_form(s) == oracle::leibniz(g));
    CHECK(cauchy_brute(s) == oracle::leibniz(g));
  }
  CHECK_THROWS_AS(cauchy_closed_form({{Q(1), Q(2)}, {Q(-1), Q(5)}}), SingularPair);
  CHECK_THROWS_AS(cauchy_closed_form({{Q(1), Q(2)}, {Q(5)}}), ShapeError);
  CHECK(cauchy_closed_form({{Q(1), Q(1)}, {Q(2), Q(3)}}).is_zero());
}

TEST_CASE("convergence toward the limits") {
  const std::vector<int> ns{10, 20, 40, 80};
  for (auto [j, i] : std::vector<std::pair<int, int>>{{1, 2}, {2, 4}, {1, 3}, {2, 5}, {3, 6}}) {
    const ConvergenceReport r = beta_convergence(j, i, ns);
    CHECK(r.limit == beta_limit(j, i));
    CHECK(r.rows.size() == ns.size());
    CHECK(r.passed());
    for (const auto& row : r.rows) CHECK(row.deviation == row.value - r.limit);
  }
  const NormalizedTable t(f_n_poly(10), 2, 4);
  CHECK(beta_convergence(2, 4, {10}).rows.front().value == *t.beta(2, 4));

  for (int m = 1; m <= 2; ++m) {
    const ConvergenceReport r = asymptotic_check(m, ns);
    CHECK(r.limit == c_inf_det(m));
    CHECK(r.passed());
  }
  const ConvergenceReport m3 = asymptotic_check(3, ns);
  CHECK(m3.passed());

  const Polynomial f = f_n_poly(10);
  const BTable b = BTable::from_polynomial(f);
  const Rational prod = f.coeff(9);
  CHECK(asymptotic_check(1, {10}).rows.front().value == b.c(2) / (prod * prod) / Rational(10));
  CHECK_THROWS_AS(asymptotic_check(3, {3}), BadIndex);

  ConvergenceReport bad = beta_convergence(1, 2, {10, 11});
  CHECK_FALSE(bad.passed());
}
