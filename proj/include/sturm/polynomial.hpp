#pragma once

#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "sturm/rational.hpp"

namespace sturm {

/// Dense univariate polynomial over the rationals.
///
/// Coefficients are stored by ascending power with no trailing zeros, so the
/// zero polynomial has an empty coefficient list and degree -1. Reads outside
/// [0, degree] return zero.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> ascending);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, int power);
  // Coefficients listed from the highest power down to the constant term.
  static Polynomial from_descending(std::span<const Rational> descending);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  // Coefficient of x^k; zero for k < 0 or k > degree.
  const Rational& coeff(int k) const;
  const Rational& leading() const;
  std::span<const Rational> coefficients() const noexcept { return coeffs_; }
  std::vector<Rational> descending() const;

  Polynomial derivative() const;
  Rational operator()(const Rational& x) const;
  int sign_at(const Rational& x) const { return (*this)(x).sign(); }

  // Largest bit length over all coefficients.
  std::size_t max_bit_length() const;
  std::string str() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& s);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

// Euclidean division: a = quotient * b + remainder, deg remainder < deg b.
DivMod divmod(const Polynomial& a, const Polynomial& b);

// Monic greatest common divisor (zero only when both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

// f / gcd(f, f'), made monic.
Polynomial squarefree_part(const Polynomial& f);

}  // namespace sturm
