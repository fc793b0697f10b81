#pragma once

#include <memory>
#include <vector>

#include "sturm/matrix.hpp"
#include "sturm/polynomial.hpp"
#include "sturm/rational.hpp"

namespace sturm {

enum class SchemeMode {
  Derivative,  // seeded from f alone: the scheme (f, f', ...)
  Pair,        // seeded from an arbitrary pair (f1, f2) of degrees n-1, n-2
};

/// Quadratic quantities b(j)_i together with c(1)_i and the determinants
/// c(m)_i built from them.
///
/// Derivative mode evaluates the closed formula
///   b(j)_i = n * sum_{p<j} (i-2p) a_{n-p} a_{n-i+p} - j (n-i+j) a_{n-j} a_{n+j-i}
/// with a_k = 0 outside [0, n]. Pair mode seeds b(1)_{i+2} from the
/// coefficients of f2 and c(1)_i from those of f1, then extends to j >= 2 with
///   b(k)_i = b(k-1)_i + c(1)_{k-1} b(1)_{i-k+1} - c(1)_{i-k} b(1)_k.
/// Both are defined for every j >= 0 and every integer i (b(0)_i = 0).
///
/// Values are memoized in a shared cache; a table may be read from several
/// threads at once and copies share the cache.
class BTable {
 public:
  static BTable from_polynomial(const Polynomial& f);
  static BTable from_pair(const Polynomial& f1, const Polynomial& f2);

  SchemeMode mode() const noexcept { return mode_; }
  int n() const noexcept { return n_; }
  const Polynomial& first() const noexcept { return first_; }
  // f2 in pair mode; the zero polynomial in derivative mode.
  const Polynomial& second() const noexcept { return second_; }

  Rational b(int j, int i) const;
  Rational c1(int i) const;

  // (m-1)x(m-1) matrix with entries b(min(p,q))_{p+q} (1-based p, q) whose
  // last row is replaced by b(q)_{m+shift+q-1}. Requires m >= 2.
  RationalMatrix c_matrix(int m, int shift) const;
  // c(1)_shift for m = 1, det c_matrix(m, shift) otherwise.
  Rational c(int m, int shift = 0) const;

 private:
  struct Cache;

  BTable(SchemeMode mode, int n, Polynomial first, Polynomial second);
  Rational compute_b(int j, int i) const;
  Rational b1_pair(int i) const;

  SchemeMode mode_;
  int n_;
  Polynomial first_;
  Polynomial second_;
  std::shared_ptr<Cache> cache_;
};

struct CMatrix {
  int m = 2;
  int shift = 0;
  RationalMatrix entries;
};

// Derivative-mode b(j)_i straight from the closed formula (no caching).
Rational b_coeff(const Polynomial& f, int j, int i);
// (n-i) a_{n-i} / (n a_n); equals 1 at i = 0.
Rational c1_coeff(const Polynomial& f, int i);
CMatrix c_matrix(const Polynomial& f, int m, int shift);
Rational c_det(const Polynomial& f, int m, int shift);

/// Normalizers g_1, g_2, ... turning c(i)_p into member coefficients.
struct GammaSeq {
  std::vector<Rational> values;  // values[0] is the first normalizer
  SchemeMode mode = SchemeMode::Derivative;

  // 1-based access.
  const Rational& at(int j) const { return values.at(static_cast<std::size_t>(j - 1)); }
};

// Recursion g_{j+1} = g_{j-1} c(j-1)^2 / c(j)^2 from g_1 = n a_n,
// g_2 = -1/(n^2 a_n) (derivative) or g_1 = alpha_0, g_2 = 1 (pair).
// Throws DegenerateChain(k) when some c(k), 2 <= k < upto, vanishes. In
// derivative mode the result is cross-checked against the product form and
// RouteMismatch is thrown on disagreement.
GammaSeq gamma_seq(const BTable& table, int upto);
GammaSeq gamma_seq(const Polynomial& f, int upto);

// Derivative-mode product form
//   g_j = (-1)^{j+1} e_j prod_{i=1}^{j-2} c(j-i)^{2(-1)^i},
// e_j = n a_n for odd j and 1/(n^2 a_n) for even j.
Rational gamma_product_form(const BTable& table, int j);

// g_i * sum_{p=0}^{n-i} c(i)_p x^{n-i-p}; requires c(k) != 0 for 2 <= k <= i
// (DegenerateChain otherwise) and 1 <= i <= n.
Polynomial member_jacobi(const BTable& table, int i);
// Members 1..upto sharing one normalizer sequence.
std::vector<Polynomial> members_jacobi(const BTable& table, int upto);

Polynomial sturm_member_jacobi(const Polynomial& f, int i);
Polynomial pair_member_jacobi(const Polynomial& f1, const Polynomial& f2, int i);

BTable pair_b_table(const Polynomial& f1, const Polynomial& f2);

// Q(j)_i = c(j-1)_i c(j)^2 - c(j-1) c(j) c(j)_i - c(j-1)_1 c(j)_{i-1} c(j)
//          + c(j-1) c(j)_1 c(j)_{i-1}.
// Requires j >= 2, i >= 2 and c(k) != 0 for 2 <= k <= j.
Rational q_quantity(const BTable& table, int j, int i);
Rational q_quantity(const Polynomial& f, int j, int i);

}  // namespace sturm
