#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "sturm/polynomial.hpp"
#include "sturm/rational.hpp"

namespace sturm {

/// Coefficient ratios of f and the normalized quadratic quantities
///   q_i = a_{i-1} / a_i,   r_i = q_{i-1} / q_i = a_i a_{i-2} / a_{i-1}^2,
///   beta(j)_i = b(j)_i / ((n-i+j) a_{n-j} a_{n+j-i}).
/// Entries whose denominator vanishes are std::nullopt.
class NormalizedTable {
 public:
  NormalizedTable(const Polynomial& f, int max_j, int max_i);

  int n() const noexcept { return n_; }
  int max_j() const noexcept { return max_j_; }
  int max_i() const noexcept { return max_i_; }

  // 1 <= i <= n
  std::optional<Rational> q(int i) const;
  // 2 <= i <= n
  std::optional<Rational> r(int i) const;
  // 1 <= j <= max_j, 2j <= i <= max_i
  std::optional<Rational> beta(int j, int i) const;

  // prod_{p=lo}^{hi} r_p; 1 when lo > hi.
  std::optional<Rational> psi(int lo, int hi) const;
  // a_N a_{N-I} / (a_{N-J} a_{N-I+J}) evaluated as prod_{q<J} psi(N-I+2+q, N-q).
  std::optional<Rational> phi(int big_n, int j, int i) const;
  // The same ratio straight from the coefficients.
  std::optional<Rational> phi_direct(int big_n, int j, int i) const;
  // sum_{p<j} n(i-2p)/(n-i+j) * phi(n-p, j-p, i-2p) - j. Undefined whenever
  // some r_p it needs is, in particular for every i > n.
  std::optional<Rational> beta_from_phi(int j, int i) const;

 private:
  Polynomial f_;
  int n_;
  int max_j_;
  int max_i_;
  std::vector<std::optional<Rational>> q_;
  std::vector<std::optional<Rational>> r_;
  std::map<std::pair<int, int>, std::optional<Rational>> beta_;
};

NormalizedTable normalized_table(const Polynomial& f, int max_j, int max_i);

// (prod_{i=1}^m a_{n-i})^2 * det((n - max(p,q)) beta(min(p,q))_{p+q}), p, q in
// 1..m. Throws UndefinedEntry when a prefactor coefficient vanishes or m >= n.
Rational factored_c_det(const Polynomial& f, int m);

}  // namespace sturm
