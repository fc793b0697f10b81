#include "sturm/jacobi.hpp"

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <unordered_map>

#include "sturm/errors.hpp"

namespace sturm {

namespace {

std::uint64_t pack(int a, int b) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) | static_cast<std::uint32_t>(b);
}

void require_nonzero_c(const BTable& table, int k) {
  const Rational v = table.c(k);
  if (v.is_zero()) throw DegenerateChain(k, v.str());
}

}  // namespace

struct BTable::Cache {
  std::shared_mutex mu;
  std::unordered_map<std::uint64_t, Rational> b;
  std::unordered_map<std::uint64_t, Rational> c;

  std::optional<Rational> find(const std::unordered_map<std::uint64_t, Rational>& map, std::uint64_t key) {
    std::shared_lock lock(mu);
    if (auto it = map.find(key); it != map.end()) return it->second;
    return std::nullopt;
  }

  void store(std::unordered_map<std::uint64_t, Rational>& map, std::uint64_t key, const Rational& v) {
    std::unique_lock lock(mu);
    map.emplace(key, v);
  }
};

BTable::BTable(SchemeMode mode, int n, Polynomial first, Polynomial second)
    : mode_(mode), n_(n), first_(std::move(first)), second_(std::move(second)), cache_(std::make_shared<Cache>()) {}

BTable BTable::from_polynomial(const Polynomial& f) {
  if (f.degree() < 1) throw DegreeTooSmall("b-table needs deg f >= 1");
  return BTable(SchemeMode::Derivative, f.degree(), f, Polynomial{});
}

BTable BTable::from_pair(const Polynomial& f1, const Polynomial& f2) {
  if (f1.degree() < 1) throw DegreeTooSmall("pair scheme needs deg f1 >= 1");
  if (f1.degree() != f2.degree() + 1)
    throw DegreeMismatch("pair scheme needs deg f1 = deg f2 + 1, got " + std::to_string(f1.degree()) + " and " +
                         std::to_string(f2.degree()));
  return BTable(SchemeMode::Pair, f1.degree() + 1, f1, f2);
}

Rational BTable::c1(int i) const {
  if (mode_ == SchemeMode::Derivative) {
    const Rational& a = first_.coeff(n_ - i);
    if (a.is_zero()) return {};
    return Rational(n_ - i) * a / (Rational(n_) * first_.leading());
  }
  return first_.coeff(n_ - 1 - i) / first_.leading();
}

Rational BTable::b1_pair(int i) const { return second_.coeff(n_ - i); }

Rational BTable::compute_b(int j, int i) const {
  if (j == 0) return {};
  if (mode_ == SchemeMode::Derivative) {
    auto a = [this](int k) -> const Rational& { return first_.coeff(k); };
    Rational sum;
    for (int p = 0; p < j; ++p) {
      const Rational& x = a(n_ - p);
      const Rational& y = a(n_ - i + p);
      if (x.is_zero() || y.is_zero()) continue;
      sum += Rational(i - 2 * p) * x * y;
    }
    sum *= Rational(n_);
    const Rational& u = a(n_ - j);
    const Rational& v = a(n_ + j - i);
    if (!u.is_zero() && !v.is_zero()) sum -= Rational(j) * Rational(n_ - i + j) * u * v;
    return sum;
  }
  Rational acc = b1_pair(i);
  for (int t = 2; t <= j; ++t) acc += c1(t - 1) * b1_pair(i - t + 1) - c1(i - t) * b1_pair(t);
  return acc;
}

Rational BTable::b(int j, int i) const {
  if (j < 0) throw BadIndex("b(j)_i needs j >= 0, got j = " + std::to_string(j));
  const auto key = pack(j, i);
  if (auto hit = cache_->find(cache_->b, key)) return *hit;
  Rational v = compute_b(j, i);
  cache_->store(cache_->b, key, v);
  return v;
}

RationalMatrix BTable::c_matrix(int m, int shift) const {
  if (m < 2) throw BadIndex("c_matrix needs m >= 2");
  const auto size = static_cast<std::size_t>(m - 1);
  RationalMatrix out(size, size);
  for (int p = 1; p <= m - 1; ++p) {
    for (int q = 1; q <= m - 1; ++q) {
      out(static_cast<std::size_t>(p - 1), static_cast<std::size_t>(q - 1)) =
          p < m - 1 ? b(std::min(p, q), p + q) : b(q, m + shift + q - 1);
    }
  }
  return out;
}

Rational BTable::c(int m, int shift) const {
  if (m < 1) throw BadIndex("c(m)_i needs m >= 1");
  if (m == 1) return c1(shift);
  const auto key = pack(m, shift);
  if (auto hit = cache_->find(cache_->c, key)) return *hit;
  Rational v = determinant(c_matrix(m, shift));
  cache_->store(cache_->c, key, v);
  return v;
}

Rational b_coeff(const Polynomial& f, int j, int i) {
  if (f.degree() < 1) throw DegreeTooSmall("b_coeff needs deg f >= 1");
  if (j < 1) throw BadIndex("b_coeff needs j >= 1");
  return BTable::from_polynomial(f).b(j, i);
}

Rational c1_coeff(const Polynomial& f, int i) { return BTable::from_polynomial(f).c1(i); }

CMatrix c_matrix(const Polynomial& f, int m, int shift) {
  return {m, shift, BTable::from_polynomial(f).c_matrix(m, shift)};
}

Rational c_det(const Polynomial& f, int m, int shift) { return BTable::from_polynomial(f).c(m, shift); }

Rational gamma_product_form(const BTable& table, int j) {
  if (table.mode() != SchemeMode::Derivative) throw BadIndex("product form applies to the derivative scheme");
  if (j < 1) throw BadIndex("normalizer index starts at 1");
  const Rational n(table.n());
  const Rational& lead = table.first().leading();
  Rational g = j % 2 == 1 ? n * lead : (n * n * lead).inverse();
  if (j % 2 == 0) g = -g;
  for (int i = 1; i <= j - 2; ++i) {
    const Rational cv = table.c(j - i);
    if (cv.is_zero()) throw DegenerateChain(j - i, cv.str());
    g *= (i % 2 == 0) ? cv * cv : (cv * cv).inverse();
  }
  return g;
}

GammaSeq gamma_seq(const BTable& table, int upto) {
  if (upto < 1) throw BadIndex("gamma_seq needs upto >= 1");
  GammaSeq out;
  out.mode = table.mode();
  const Rational n(table.n());
  const Rational& lead = table.first().leading();
  if (table.mode() == SchemeMode::Derivative) {
    out.values.push_back(n * lead);
    if (upto >= 2) out.values.push_back(-(n * n * lead).inverse());
  } else {
    out.values.push_back(lead);
    if (upto >= 2) out.values.emplace_back(1);
  }
  for (int j = 2; j < upto; ++j) {
    const Rational cj = table.c(j);
    if (cj.is_zero()) throw DegenerateChain(j, cj.str());
    const Rational cprev = table.c(j - 1);
    out.values.push_back(out.values[static_cast<std::size_t>(j - 2)] * cprev * cprev / (cj * cj));
  }
  if (table.mode() == SchemeMode::Derivative) {
    for (int j = 1; j <= upto; ++j) {
      if (gamma_product_form(table, j) != out.at(j))
        throw RouteMismatch("normalizer " + std::to_string(j) + ": recursion and product form disagree");
    }
  }
  return out;
}

GammaSeq gamma_seq(const Polynomial& f, int upto) { return gamma_seq(BTable::from_polynomial(f), upto); }

namespace {

Polynomial assemble_member(const BTable& table, int i, const Rational& g) {
  const int deg = table.n() - i;
  std::vector<Rational> asc(static_cast<std::size_t>(deg) + 1);
  for (int p = 0; p <= deg; ++p) asc[static_cast<std::size_t>(deg - p)] = g * table.c(i, p);
  return Polynomial(std::move(asc));
}

void check_member_index(const BTable& table, int i) {
  if (i < 1 || i > table.n())
    throw BadIndex("member index " + std::to_string(i) + " outside [1, " + std::to_string(table.n()) + "]");
}

}  // namespace

Polynomial member_jacobi(const BTable& table, int i) {
  check_member_index(table, i);
  for (int k = 2; k <= i; ++k) require_nonzero_c(table, k);
  const GammaSeq g = gamma_seq(table, i);
  return assemble_member(table, i, g.at(i));
}

std::vector<Polynomial> members_jacobi(const BTable& table, int upto) {
  check_member_index(table, upto);
  for (int k = 2; k <= upto; ++k) require_nonzero_c(table, k);
  const GammaSeq g = gamma_seq(table, upto);
  std::vector<Polynomial> out;
  out.reserve(static_cast<std::size_t>(upto));
  for (int i = 1; i <= upto; ++i) out.push_back(assemble_member(table, i, g.at(i)));
  return out;
}

Polynomial sturm_member_jacobi(const Polynomial& f, int i) { return member_jacobi(BTable::from_polynomial(f), i); }

Polynomial pair_member_jacobi(const Polynomial& f1, const Polynomial& f2, int i) {
  return member_jacobi(BTable::from_pair(f1, f2), i);
}

BTable pair_b_table(const Polynomial& f1, const Polynomial& f2) { return BTable::from_pair(f1, f2); }

Rational q_quantity(const BTable& table, int j, int i) {
  if (j < 2 || i < 2) throw BadIndex("Q(j)_i needs j >= 2 and i >= 2");
  for (int k = 2; k <= j; ++k) require_nonzero_c(table, k);
  const Rational cp = table.c(j - 1);
  const Rational cj = table.c(j);
  return table.c(j - 1, i) * cj * cj - cp * cj * table.c(j, i) - table.c(j - 1, 1) * table.c(j, i - 1) * cj +
         cp * table.c(j, 1) * table.c(j, i - 1);
}

Rational q_quantity(const Polynomial& f, int j, int i) { return q_quantity(BTable::from_polynomial(f), j, i); }

}  // namespace sturm
