#pragma once

#include <vector>

#include "sturm/polynomial.hpp"
#include "sturm/rational.hpp"
#include "sturm/report.hpp"

namespace sturm {

// E_n(x) = sum_{k=0}^n (-1)^k binom(2n,2k) x^{2k} / (2n)^{2k}
Polynomial euler_poly(int n);
// f_n(x) with f_n(x^2) = E_n(x)
Polynomial f_n_poly(int n);

struct HypergeomParams {
  Rational alpha;
  Rational beta;
  Rational gamma;
};

// (alpha)_i (beta)_i / (i! (gamma)_i) with rising factorials.
// Throws PoleInGamma when some gamma + t vanishes, t < i.
Rational hypergeom_coeff(const HypergeomParams& p, int i);

// F(-n/2, -n/2 + 1/2, 1/2, x^2) against ((1+x)^n + (1-x)^n) / 2; the
// residual is the sum of absolute coefficient differences.
IdentityReport check_gauss_even(int n);
// E_n(x) against F(-n, -n + 1/2, 1/2, -x^2/(4n^2)), coefficientwise.
IdentityReport check_euler_hypergeom(int n);

struct CosLimitRow {
  int n = 0;
  Rational e;          // coefficient of x^{2k} in E_n
  Rational deviation;  // |e - (-1)^k / (2k)!|
};

struct CosLimitReport {
  int k = 0;
  Rational limit;
  std::vector<CosLimitRow> rows;
  bool product_form_matches = true;  // e = (-1)^k/(2k)! prod_{t<2k} (1 - t/2n)
  bool shrinking = true;             // deviations strictly decrease (or all vanish)

  bool passed() const noexcept { return product_form_matches && shrinking; }
};

CosLimitReport cos_limit_check(int k, const std::vector<int>& ns);

// (2i+1)(2i+2) / ((2i+3)(2i+4))
Rational r_limit(int i);
// r_{n-i} for f_n in closed form; requires 0 <= i <= n-2.
Rational r_finite(int n, int i);
// -2j(i-j)/(2i-1), for 1 <= j <= i
Rational beta_limit(int j, int i);
// j(2j-1)/(2i-1), the shifted limit beta + j
Rational b_shifted_limit(int j, int i);

// det (beta_limit(min(p,q), p+q))_{p,q=1..m}
Rational c_inf_det(int m);
// (-1)^m 2^m (m!)^2 hilbert_variant_closed(m)
Rational c_inf_factored(int m);

struct CauchySpec {
  std::vector<Rational> x;
  std::vector<Rational> y;
};

// prod_{i<j} (x_j - x_i)(y_j - y_i) / prod_{i,j} (x_i + y_j).
// Throws SingularPair when some x_i + y_j = 0, ShapeError on length mismatch.
Rational cauchy_closed_form(const CauchySpec& s);
// det (1 / (x_i + y_j)) by elimination.
Rational cauchy_brute(const CauchySpec& s);

// det (1/(2p+2q-1))_{p,q=1..m}, the Hankel matrix 1/3, 1/5, ..., 1/(4m-1)
Rational hilbert_variant_brute(int m);
// prod_{i<j} (2j-2i)^2 / prod_{i,j} (2i+2j-1)
Rational hilbert_variant_closed(int m);

struct ConvergenceRow {
  int n = 0;
  Rational value;
  Rational deviation;  // value - limit
  Rational ratio;      // |deviation| / |previous deviation|; 0 on the first row
};

struct ConvergenceReport {
  std::string quantity;
  Rational limit;
  std::vector<ConvergenceRow> rows;
  Rational band_lo{3, 10};
  Rational band_hi{8, 10};

  // Every ratio after the first row lies in [band_lo, band_hi].
  bool passed() const;
};

// s(n) = (prod_{i=1}^m a_{n-i})^{-2} c(m+1) / n^m on f_n against c_inf_det(m).
ConvergenceReport asymptotic_check(int m, const std::vector<int>& ns);
// beta(j)_i of f_n against beta_limit(j, i).
ConvergenceReport beta_convergence(int j, int i, const std::vector<int>& ns);

}  // namespace sturm
