#include "sturm/rational.hpp"

#include <algorithm>
#include <cctype>

#include "sturm/errors.hpp"

namespace sturm {

namespace {

bool is_decimal_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

Integer parse_integer(std::string_view s) {
  if (!is_decimal_integer(s)) throw ParseError("not a decimal integer: '" + std::string(s) + "'");
  if (s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw ZeroDivisor("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class v) : value_(std::move(v)) {
  if (value_.get_den() == 0) throw ZeroDivisor("rational with zero denominator");
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+'))
    throw ParseError("denominator must be unsigned: '" + std::string(text) + "'");
  const Integer den = parse_integer(den_text);
  if (den == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  return Rational(parse_integer(text.substr(0, slash)), den);
}

Rational Rational::abs() const {
  Rational r;
  r.value_ = ::abs(value_);
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) throw ZeroDivisor("inverse of zero");
  return Rational(value_.get_den(), value_.get_num());
}

Rational Rational::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  Integer num;
  Integer den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(num, den);
}

std::size_t Rational::bit_length() const {
  const std::size_t n = is_zero() ? 0 : mpz_sizeinbase(value_.get_num_mpz_t(), 2);
  const std::size_t d = mpz_sizeinbase(value_.get_den_mpz_t(), 2);
  return std::max(n, d);
}

std::string Rational::str() const { return value_.get_str(10); }

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw ZeroDivisor("division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

Rational binomial(unsigned n, unsigned k) {
  if (k > n) return Rational(0);
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return Rational(r);
}

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace sturm

std::size_t std::hash<sturm::Rational>::operator()(const sturm::Rational& r) const noexcept {
  return std::hash<std::string>{}(r.str());
}
