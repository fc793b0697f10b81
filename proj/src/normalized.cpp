#include "sturm/normalized.hpp"

#include <algorithm>

#include "sturm/errors.hpp"
#include "sturm/jacobi.hpp"
#include "sturm/matrix.hpp"

namespace sturm {

NormalizedTable::NormalizedTable(const Polynomial& f, int max_j, int max_i)
    : f_(f), n_(f.degree()), max_j_(max_j), max_i_(max_i) {
  if (n_ < 1) throw DegreeTooSmall("normalized table needs deg f >= 1");
  auto a = [&](int k) -> const Rational& { return f_.coeff(k); };

  q_.resize(static_cast<std::size_t>(n_) + 1);
  for (int i = 1; i <= n_; ++i)
    if (!a(i).is_zero()) q_[static_cast<std::size_t>(i)] = a(i - 1) / a(i);

  r_.resize(static_cast<std::size_t>(n_) + 1);
  for (int i = 2; i <= n_; ++i)
    if (!a(i - 1).is_zero()) r_[static_cast<std::size_t>(i)] = a(i) * a(i - 2) / (a(i - 1) * a(i - 1));

  const BTable table = BTable::from_polynomial(f_);
  for (int j = 1; j <= max_j_; ++j) {
    for (int i = 2 * j; i <= max_i_; ++i) {
      const Rational den = Rational(n_ - i + j) * a(n_ - j) * a(n_ + j - i);
      std::optional<Rational> v;
      if (!den.is_zero()) v = table.b(j, i) / den;
      beta_.emplace(std::pair{j, i}, std::move(v));
    }
  }
}

std::optional<Rational> NormalizedTable::q(int i) const {
  if (i < 1 || i > n_) return std::nullopt;
  return q_[static_cast<std::size_t>(i)];
}

std::optional<Rational> NormalizedTable::r(int i) const {
  if (i < 2 || i > n_) return std::nullopt;
  return r_[static_cast<std::size_t>(i)];
}

std::optional<Rational> NormalizedTable::beta(int j, int i) const {
  auto it = beta_.find({j, i});
  if (it == beta_.end()) throw BadIndex("beta(" + std::to_string(j) + ")_" + std::to_string(i) + " outside the table");
  return it->second;
}

std::optional<Rational> NormalizedTable::psi(int lo, int hi) const {
  Rational acc(1);
  for (int p = lo; p <= hi; ++p) {
    auto v = r(p);
    if (!v) return std::nullopt;
    acc *= *v;
  }
  return acc;
}

std::optional<Rational> NormalizedTable::phi(int big_n, int j, int i) const {
  Rational acc(1);
  for (int q = 0; q < j; ++q) {
    auto v = psi(big_n - i + 2 + q, big_n - q);
    if (!v) return std::nullopt;
    acc *= *v;
  }
  return acc;
}

std::optional<Rational> NormalizedTable::phi_direct(int big_n, int j, int i) const {
  const Rational den = f_.coeff(big_n - j) * f_.coeff(big_n - i + j);
  if (den.is_zero()) return std::nullopt;
  return f_.coeff(big_n) * f_.coeff(big_n - i) / den;
}

std::optional<Rational> NormalizedTable::beta_from_phi(int j, int i) const {
  if (n_ - i + j == 0) return std::nullopt;
  Rational acc(-j);
  for (int p = 0; p < j; ++p) {
    auto v = phi(n_ - p, j - p, i - 2 * p);
    if (!v) return std::nullopt;
    acc += Rational(n_ * (i - 2 * p)) / Rational(n_ - i + j) * *v;
  }
  return acc;
}

NormalizedTable normalized_table(const Polynomial& f, int max_j, int max_i) {
  return NormalizedTable(f, max_j, max_i);
}

Rational factored_c_det(const Polynomial& f, int m) {
  const int n = f.degree();
  if (m < 1) throw BadIndex("factored_c_det needs m >= 1");
  if (m >= n) throw UndefinedEntry("factored form needs m < deg f");
  Rational prefactor(1);
  for (int i = 1; i <= m; ++i) {
    const Rational& a = f.coeff(n - i);
    if (a.is_zero()) throw UndefinedEntry("coefficient a_" + std::to_string(n - i) + " vanishes");
    prefactor *= a;
  }
  const NormalizedTable table(f, m, 2 * m);
  RationalMatrix mat(static_cast<std::size_t>(m), static_cast<std::size_t>(m));
  for (int p = 1; p <= m; ++p) {
    for (int q = 1; q <= m; ++q) {
      auto beta = table.beta(std::min(p, q), p + q);
      if (!beta) throw UndefinedEntry("beta entry undefined");
      mat(static_cast<std::size_t>(p - 1), static_cast<std::size_t>(q - 1)) = Rational(n - std::max(p, q)) * *beta;
    }
  }
  return prefactor * prefactor * determinant(mat);
}

}  // namespace sturm
