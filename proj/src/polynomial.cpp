#include "sturm/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "sturm/errors.hpp"

namespace sturm {

namespace {

const Rational& zero() {
  static const Rational z;
  return z;
}

}  // namespace

Polynomial::Polynomial(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::monomial(const Rational& c, int power) {
  if (power < 0) throw BadIndex("negative monomial power");
  std::vector<Rational> v(static_cast<std::size_t>(power) + 1);
  v.back() = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::from_descending(std::span<const Rational> descending) {
  return Polynomial(std::vector<Rational>(descending.rbegin(), descending.rend()));
}

const Rational& Polynomial::coeff(int k) const {
  if (k < 0 || k > degree()) return zero();
  return coeffs_[static_cast<std::size_t>(k)];
}

const Rational& Polynomial::leading() const { return is_zero() ? zero() : coeffs_.back(); }

std::vector<Rational> Polynomial::descending() const { return {coeffs_.rbegin(), coeffs_.rend()}; }

Polynomial Polynomial::derivative() const {
  if (degree() < 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * Rational(static_cast<long>(k));
  return Polynomial(std::move(d));
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

std::size_t Polynomial::max_bit_length() const {
  std::size_t bits = 0;
  for (const auto& c : coeffs_) bits = std::max(bits, c.bit_length());
  return bits;
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeff(k);
    if (c.is_zero()) continue;
    const Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == Rational(1);
    if (k == 0 || !unit) {
      os << mag;
      if (k > 0) os << '*';
    }
    if (k >= 1) os << 'x';
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (s.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= s;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

DivMod divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw ZeroDivisor("polynomial division by zero");
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial{}, a};

  std::vector<Rational> rem(a.coefficients().begin(), a.coefficients().end());
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db) + 1);
  const Rational lead_inv = b.leading().inverse();
  for (int k = a.degree(); k >= db; --k) {
    const Rational t = rem[static_cast<std::size_t>(k)] * lead_inv;
    if (t.is_zero()) continue;
    quot[static_cast<std::size_t>(k - db)] = t;
    for (int p = 0; p <= db; ++p) rem[static_cast<std::size_t>(k - db + p)] -= t * b.coeff(p);
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a;
  Polynomial y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return x * x.leading().inverse();
}

Polynomial squarefree_part(const Polynomial& f) {
  if (f.degree() < 1) return f.is_zero() ? f : Polynomial::constant(1);
  const Polynomial g = gcd(f, f.derivative());
  Polynomial q = divmod(f, g).quotient;
  return q * q.leading().inverse();
}

}  // namespace sturm
