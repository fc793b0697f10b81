#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace sturm {

using Integer = mpz_class;

/// Exact rational number backed by GMP.
///
/// The stored value is always canonical: the denominator is positive and
/// coprime to the numerator, so equality is structural.
class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T v) : value_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)

  Rational(const Integer& v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& num, const Integer& den);
  explicit Rational(mpq_class v);

  // Accepts "p", "-p", "p/q" with decimal digits; throws ParseError.
  static Rational parse(std::string_view text);

  const mpq_class& value() const noexcept { return value_; }
  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }

  int sign() const noexcept { return sgn(value_); }
  bool is_zero() const noexcept { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  Rational abs() const;
  Rational inverse() const;
  Rational pow(int e) const;

  // max(bits(numerator), bits(denominator))
  std::size_t bit_length() const;
  double to_double() const { return value_.get_d(); }
  std::string str() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class value_;
};

Rational binomial(unsigned n, unsigned k);
Integer factorial(unsigned n);

}  // namespace sturm

template <>
struct std::hash<sturm::Rational> {
  std::size_t operator()(const sturm::Rational& r) const noexcept;
};
