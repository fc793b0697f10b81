#include "sturm/euler.hpp"

#include <algorithm>

#include "sturm/errors.hpp"
#include "sturm/jacobi.hpp"
#include "sturm/matrix.hpp"
#include "sturm/normalized.hpp"

namespace sturm {

namespace {

Rational euler_coeff(int n, int k) {
  const Rational c = binomial(static_cast<unsigned>(2 * n), static_cast<unsigned>(2 * k)) / Rational(2 * n).pow(2 * k);
  return k % 2 == 0 ? c : -c;
}

void require_positive(int n, const char* what) {
  if (n < 1) throw BadIndex(std::string(what) + " needs n >= 1");
}

Rational abs_diff_sum(const Polynomial& a, const Polynomial& b) {
  Rational acc;
  const int d = std::max(a.degree(), b.degree());
  for (int k = 0; k <= d; ++k) acc += (a.coeff(k) - b.coeff(k)).abs();
  return acc;
}

}  // namespace

Polynomial euler_poly(int n) {
  require_positive(n, "euler_poly");
  std::vector<Rational> asc(static_cast<std::size_t>(2 * n) + 1);
  for (int k = 0; k <= n; ++k) asc[static_cast<std::size_t>(2 * k)] = euler_coeff(n, k);
  return Polynomial(std::move(asc));
}

Polynomial f_n_poly(int n) {
  require_positive(n, "f_n_poly");
  std::vector<Rational> asc;
  for (int k = 0; k <= n; ++k) asc.push_back(euler_coeff(n, k));
  return Polynomial(std::move(asc));
}

Rational hypergeom_coeff(const HypergeomParams& p, int i) {
  if (i < 0) throw BadIndex("hypergeometric coefficient needs i >= 0");
  Rational acc(1);
  for (int t = 0; t < i; ++t) {
    const Rational g = p.gamma + Rational(t);
    if (g.is_zero()) throw PoleInGamma("gamma + " + std::to_string(t) + " vanishes");
    acc *= (p.alpha + Rational(t)) * (p.beta + Rational(t)) / (g * Rational(t + 1));
  }
  return acc;
}

IdentityReport check_gauss_even(int n) {
  require_positive(n, "check_gauss_even");
  const HypergeomParams p{Rational(-n, 2), Rational(-n + 1, 2), Rational(1, 2)};
  std::vector<Rational> lhs(static_cast<std::size_t>(2 * n) + 1);
  for (int i = 0; i <= n; ++i) lhs[static_cast<std::size_t>(2 * i)] = hypergeom_coeff(p, i);

  const Polynomial one_plus({Rational(1), Rational(1)});
  const Polynomial one_minus({Rational(1), Rational(-1)});
  Polynomial a = Polynomial::constant(1);
  Polynomial b = Polynomial::constant(1);
  for (int k = 0; k < n; ++k) {
    a = a * one_plus;
    b = b * one_minus;
  }
  IdentityReport r;
  r.identity = "gauss_even";
  r.params = {{"n", n}};
  r.residual = abs_diff_sum(Polynomial(std::move(lhs)), (a + b) * Rational(1, 2));
  return r;
}

IdentityReport check_euler_hypergeom(int n) {
  require_positive(n, "check_euler_hypergeom");
  const HypergeomParams p{Rational(-n), Rational(-2 * n + 1, 2), Rational(1, 2)};
  const Rational z = -Rational(1, 4 * n * n);
  std::vector<Rational> rhs(static_cast<std::size_t>(2 * n) + 1);
  for (int k = 0; k <= n; ++k) rhs[static_cast<std::size_t>(2 * k)] = hypergeom_coeff(p, k) * z.pow(k);
  IdentityReport r;
  r.identity = "euler_hypergeom";
  r.params = {{"n", n}};
  r.residual = abs_diff_sum(euler_poly(n), Polynomial(std::move(rhs)));
  return r;
}

CosLimitReport cos_limit_check(int k, const std::vector<int>& ns) {
  if (k < 0) throw BadIndex("cos_limit_check needs k >= 0");
  CosLimitReport out;
  out.k = k;
  out.limit = Rational(factorial(static_cast<unsigned>(2 * k))).inverse();
  if (k % 2 == 1) out.limit = -out.limit;
  for (int n : ns) {
    if (n < k) throw BadIndex("cos_limit_check needs n >= k");
    CosLimitRow row;
    row.n = n;
    row.e = euler_poly(n).coeff(2 * k);
    Rational prod = out.limit;
    for (int t = 1; t <= 2 * k - 1; ++t) prod *= Rational(1) - Rational(t, 2 * n);
    if (prod != row.e) out.product_form_matches = false;
    row.deviation = (row.e - out.limit).abs();
    if (!out.rows.empty()) {
      const Rational& prev = out.rows.back().deviation;
      if (!(row.deviation < prev || (prev.is_zero() && row.deviation.is_zero()))) out.shrinking = false;
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

Rational r_limit(int i) {
  if (i < 0) throw BadIndex("r_limit needs i >= 0");
  return Rational((2 * i + 1) * (2 * i + 2), (2 * i + 3) * (2 * i + 4));
}

Rational r_finite(int n, int i) {
  if (i < 0 || i > n - 2) throw BadIndex("r_finite needs 0 <= i <= n-2");
  const int t = 2 * n - 2 * i;
  return r_limit(i) * Rational((t - 2) * (t - 3), t * (t - 1));
}

Rational beta_limit(int j, int i) {
  if (j < 1 || i < j) throw BadIndex("beta_limit needs 1 <= j <= i");
  return Rational(-2 * j * (i - j), 2 * i - 1);
}

Rational b_shifted_limit(int j, int i) {
  if (j < 1 || i < j) throw BadIndex("b_shifted_limit needs 1 <= j <= i");
  return Rational(j * (2 * j - 1), 2 * i - 1);
}

Rational c_inf_det(int m) {
  if (m < 1) throw BadIndex("c_inf_det needs m >= 1");
  RationalMatrix a(static_cast<std::size_t>(m), static_cast<std::size_t>(m));
  for (int p = 1; p <= m; ++p)
    for (int q = 1; q <= m; ++q)
      a(static_cast<std::size_t>(p - 1), static_cast<std::size_t>(q - 1)) = beta_limit(std::min(p, q), p + q);
  return determinant(a);
}

Rational c_inf_factored(int m) {
  if (m < 1) throw BadIndex("c_inf_factored needs m >= 1");
  const Integer f = factorial(static_cast<unsigned>(m));
  Rational out = Rational(Integer(f * f)) * Rational(2).pow(m) * hilbert_variant_closed(m);
  return m % 2 == 1 ? -out : out;
}

Rational cauchy_closed_form(const CauchySpec& s) {
  if (s.x.size() != s.y.size()) throw ShapeError("Cauchy determinant needs equally long sequences");
  const std::size_t m = s.x.size();
  Rational den(1);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const Rational v = s.x[i] + s.y[j];
      if (v.is_zero()) throw SingularPair("x_" + std::to_string(i + 1) + " + y_" + std::to_string(j + 1) + " = 0");
      den *= v;
    }
  }
  Rational num(1);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) num *= (s.x[j] - s.x[i]) * (s.y[j] - s.y[i]);
  return num / den;
}

Rational cauchy_brute(const CauchySpec& s) {
  if (s.x.size() != s.y.size()) throw ShapeError("Cauchy determinant needs equally long sequences");
  const std::size_t m = s.x.size();
  RationalMatrix a(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const Rational v = s.x[i] + s.y[j];
      if (v.is_zero()) throw SingularPair("x_" + std::to_string(i + 1) + " + y_" + std::to_string(j + 1) + " = 0");
      a(i, j) = v.inverse();
    }
  }
  return determinant(a);
}

Rational hilbert_variant_brute(int m) {
  if (m < 1) throw BadIndex("hilbert variant needs m >= 1");
  RationalMatrix a(static_cast<std::size_t>(m), static_cast<std::size_t>(m));
  for (int p = 1; p <= m; ++p)
    for (int q = 1; q <= m; ++q)
      a(static_cast<std::size_t>(p - 1), static_cast<std::size_t>(q - 1)) = Rational(1, 2 * (p + q) - 1);
  return determinant(a);
}

Rational hilbert_variant_closed(int m) {
  if (m < 1) throw BadIndex("hilbert variant needs m >= 1");
  Rational num(1);
  Rational den(1);
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= m; ++j) {
      den *= Rational(2 * i + 2 * j - 1);
      if (i < j) num *= Rational((2 * j - 2 * i) * (2 * j - 2 * i));
    }
  }
  return num / den;
}

bool ConvergenceReport::passed() const {
  if (rows.size() < 2) return false;
  for (std::size_t k = 1; k < rows.size(); ++k)
    if (rows[k].ratio < band_lo || rows[k].ratio > band_hi) return false;
  return true;
}

namespace {

void push_row(ConvergenceReport& rep, int n, Rational value) {
  ConvergenceRow row;
  row.n = n;
  row.deviation = value - rep.limit;
  row.value = std::move(value);
  if (!rep.rows.empty()) {
    const Rational& prev = rep.rows.back().deviation;
    row.ratio = prev.is_zero() ? Rational(0) : row.deviation.abs() / prev.abs();
  }
  rep.rows.push_back(std::move(row));
}

}  // namespace

ConvergenceReport asymptotic_check(int m, const std::vector<int>& ns) {
  if (m < 1) throw BadIndex("asymptotic_check needs m >= 1");
  ConvergenceReport rep;
  rep.quantity = "s(" + std::to_string(m + 1) + ")";
  rep.limit = c_inf_det(m);
  for (int n : ns) {
    if (n <= m) throw BadIndex("asymptotic_check needs n > m");
    const Polynomial f = f_n_poly(n);
    Rational prefactor(1);
    for (int i = 1; i <= m; ++i) prefactor *= f.coeff(n - i);
    const Rational c = BTable::from_polynomial(f).c(m + 1);
    push_row(rep, n, c / (prefactor * prefactor) / Rational(n).pow(m));
  }
  return rep;
}

ConvergenceReport beta_convergence(int j, int i, const std::vector<int>& ns) {
  ConvergenceReport rep;
  rep.quantity = "beta(" + std::to_string(j) + ")_" + std::to_string(i);
  rep.limit = beta_limit(j, i);
  for (int n : ns) {
    const NormalizedTable t(f_n_poly(n), j, i);
    auto v = t.beta(j, i);
    if (!v) throw UndefinedEntry("beta entry undefined at n = " + std::to_string(n));
    push_row(rep, n, *v);
  }
  return rep;
}

}  // namespace sturm
