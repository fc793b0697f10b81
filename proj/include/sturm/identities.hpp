#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "sturm/jacobi.hpp"
#include "sturm/matrix.hpp"
#include "sturm/polynomial.hpp"
#include "sturm/rational.hpp"
#include "sturm/report.hpp"

namespace sturm {

/// Numeric values for the letters b(j)_i.
///
/// Lookups go to explicit overrides first, then to the backing b-table (for
/// assignments built from a polynomial or a pair), then to the fallback
/// value. A letter with none of these raises MissingGenerator.
class GeneratorAssignment {
 public:
  enum class Origin { FromPolynomial, FromPair, Explicit };

  static GeneratorAssignment from_polynomial(const Polynomial& f);
  static GeneratorAssignment from_pair(const Polynomial& f1, const Polynomial& f2);
  static GeneratorAssignment from_table(const BTable& table);
  static GeneratorAssignment from_values(std::map<std::pair<int, int>, Rational> values,
                                         std::optional<Rational> fallback = std::nullopt);

  Origin origin() const noexcept { return origin_; }
  const std::optional<BTable>& table() const noexcept { return table_; }

  Rational operator()(int j, int i) const;

  // Any override demotes the assignment to Explicit.
  GeneratorAssignment& set(int j, int i, Rational v);

 private:
  Origin origin_ = Origin::Explicit;
  std::optional<BTable> table_;
  std::map<std::pair<int, int>, Rational> values_;
  std::optional<Rational> fallback_;
};

std::string_view to_string(GeneratorAssignment::Origin o);

// Delta - Delta' + Delta'' for the letters
//   Delta   = det [[b(1)_j, b(1)_k], [b(j-1)_{i+j-k}, b(k-1)_i]]
//   Delta'  = det [[b(1)_j, b(j-1)_{j+k-1}], [b(1)_{i-k+1}, b(k)_i]]
//   Delta'' = det [[b(1)_k, b(j)_{j+k-1}], [b(1)_{i-k+1}, b(j)_{i+j-k}]]
IdentityReport check_quadratic_relation(const GeneratorAssignment& g, int k, int j, int i);

// w_1 .. w_{n+1} and v_1 .. v_{n+1} for the index tuple m = (m_1..m_n).
// Element [j-1] holds the j-th vector.
std::vector<std::vector<Rational>> build_w_vectors(const std::vector<int>& m, int i, const GeneratorAssignment& g);
std::vector<std::vector<Rational>> build_v_vectors(const std::vector<int>& m, int i, const GeneratorAssignment& g);

// D_1 = rows (w_1; M without column n+1; v_1), and for j >= 2 the matrix with
// columns (w_j, columns of M without column n+2-j transposed, v_j). M is
// (n-2) x (n+1); for n = 2 it may be empty.
RationalMatrix d_matrix(int j, const std::vector<int>& m, const RationalMatrix& M, int i,
                        const GeneratorAssignment& g);

// sum_{j=1}^{n+1} (-1)^{j+1} det D_j. Throws ShapeError for a badly shaped M.
IdentityReport r_alternating_sum(const std::vector<int>& m, const RationalMatrix& M, int i,
                                 const GeneratorAssignment& g);

struct PrimedDeterminants {
  Rational c;               // det D_1, equal to c(n)_i
  Rational c_prime;         // det D_2
  Rational c_double_prime;  // det D_3
  std::vector<Rational> tail;  // det D_4 .. det D_n, all zero
};

// The primed determinants of c(n)_i: the alternating sum of size N = n-1 for
// m = (2..n) with the b-filled matrix M, evaluated at index i + 2N. Both
// primed values are cross-checked against minors of C(n+1)_{i-2} and
// RouteMismatch is raised on disagreement. Requires n >= 3.
PrimedDeterminants c_primed(const BTable& table, int n, int i);
PrimedDeterminants c_primed(const Polynomial& f, int n, int i);

// c(n)_i - c(n)'_i + c(n)''_i
IdentityReport check_primed_three_term(const Polynomial& f, int n, int i);

// W is n x (n-1). W_k drops row k, V_{kl} drops rows k, l and the last column:
//   V_{n-2,n-1} W_n - V_{n-2,n} W_{n-1} + V_{n-1,n} W_{n-2}.
IdentityReport plucker_a(const RationalMatrix& W);
// V is n x (n-2), 1 <= i < n-2:
//   V_{n-2,n-1} V_{i,n} - V_{n-2,n} V_{i,n-1} + V_{n-1,n} V_{i,n-2}.
IdentityReport plucker_b(const RationalMatrix& V, int i);

// c(n-1)_i c(n) - c(n-1)_1 c(n)_{i-1} + c(n-1) c(n)''_i
IdentityReport check_formula_a(const Polynomial& f, int n, int i);
// (c(n)_i + c(n)''_i) c(n) - c(n)_1 c(n)_{i-1} - c(n-1) c(n+1)_{i-2}
IdentityReport check_formula_b(const Polynomial& f, int n, int i);
// Q(n)_i + c(n-1)^2 c(n+1)_{i-2}, with the four-term Q expanded directly so
// no regularity is needed.
IdentityReport check_formula_f(const Polynomial& f, int n, int i);

// q_quantity(f, j, i) + c(j-1)^2 c(j+1)_{i-2}; DegenerateChain for
// irregular f.
IdentityReport check_q_identity(const Polynomial& f, int j, int i);

}  // namespace sturm
