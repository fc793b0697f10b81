#include "sturm/matrix.hpp"

#include <algorithm>

#include "sturm/errors.hpp"

namespace sturm {

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ShapeError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  RationalMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw ShapeError("ragged row list");
    std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(r * m.cols_));
  }
  return m;
}

std::vector<Rational> RationalMatrix::row(std::size_t r) const {
  const auto first = data_.begin() + static_cast<std::ptrdiff_t>(r * cols_);
  return {first, first + static_cast<std::ptrdiff_t>(cols_)};
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RationalMatrix RationalMatrix::without(const std::vector<std::size_t>& drop_rows,
                                       const std::vector<std::size_t>& drop_cols) const {
  auto dropped = [](const std::vector<std::size_t>& v, std::size_t k) {
    return std::find(v.begin(), v.end(), k) != v.end();
  };
  std::vector<std::size_t> keep_r;
  std::vector<std::size_t> keep_c;
  for (std::size_t r = 0; r < rows_; ++r)
    if (!dropped(drop_rows, r)) keep_r.push_back(r);
  for (std::size_t c = 0; c < cols_; ++c)
    if (!dropped(drop_cols, c)) keep_c.push_back(c);
  RationalMatrix out(keep_r.size(), keep_c.size());
  for (std::size_t r = 0; r < keep_r.size(); ++r)
    for (std::size_t c = 0; c < keep_c.size(); ++c) out(r, c) = (*this)(keep_r[r], keep_c[c]);
  return out;
}

bool RationalMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

std::ostream& operator<<(std::ostream& os, const RationalMatrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r == 0 ? "[" : ", [");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c == 0 ? "" : ", ") << m(r, c);
    os << ']';
  }
  return os << ']';
}

Rational determinant(const RationalMatrix& m) {
  if (!m.is_square()) throw ShapeError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Rational(1);

  std::vector<Integer> a(n * n);
  Integer scale = 1;
  for (std::size_t r = 0; r < n; ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < n; ++c) l = lcm(l, m(r, c).denominator());
    scale *= l;
    for (std::size_t c = 0; c < n; ++c) {
      const mpq_class& v = m(r, c).value();
      a[r * n + c] = v.get_num() * (l / v.get_den());
    }
  }
  auto at = [&](std::size_t r, std::size_t c) -> Integer& { return a[r * n + c]; };

  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && at(p, k) == 0) ++p;
      if (p == n) return Rational(0);
      for (std::size_t c = k; c < n; ++c) std::swap(at(k, c), at(p, c));
      sign = -sign;
    }
    for (std::size_t r = k + 1; r < n; ++r) {
      for (std::size_t c = k + 1; c < n; ++c) {
        Integer t = at(k, k) * at(r, c) - at(r, k) * at(k, c);
        mpz_divexact(at(r, c).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      at(r, k) = 0;
    }
    prev = at(k, k);
  }
  Integer det = at(n - 1, n - 1);
  if (sign < 0) det = -det;
  return Rational(det, scale);
}

Rational cofactor_determinant(const RationalMatrix& m) {
  if (!m.is_square()) throw ShapeError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Rational(1);
  if (n == 1) return m(0, 0);
  Rational acc;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c).is_zero()) continue;
    const Rational minor = cofactor_determinant(m.without({0}, {c}));
    acc += (c % 2 == 0 ? m(0, c) : -m(0, c)) * minor;
  }
  return acc;
}

}  // namespace sturm
