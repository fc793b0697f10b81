#include "sturm/identities.hpp"

#include <algorithm>

#include "sturm/errors.hpp"

namespace sturm {

namespace {

using Vec = std::vector<Rational>;

Rational det2(const Rational& a, const Rational& b, const Rational& c, const Rational& d) { return a * d - b * c; }

nlohmann::json matrix_json(const RationalMatrix& m) {
  auto out = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    out.push_back(std::move(row));
  }
  return out;
}

std::size_t sz(int k) { return static_cast<std::size_t>(k); }

}  // namespace

GeneratorAssignment GeneratorAssignment::from_polynomial(const Polynomial& f) {
  GeneratorAssignment g;
  g.origin_ = Origin::FromPolynomial;
  g.table_ = BTable::from_polynomial(f);
  return g;
}

GeneratorAssignment GeneratorAssignment::from_pair(const Polynomial& f1, const Polynomial& f2) {
  GeneratorAssignment g;
  g.origin_ = Origin::FromPair;
  g.table_ = BTable::from_pair(f1, f2);
  return g;
}

GeneratorAssignment GeneratorAssignment::from_table(const BTable& table) {
  GeneratorAssignment g;
  g.origin_ = table.mode() == SchemeMode::Derivative ? Origin::FromPolynomial : Origin::FromPair;
  g.table_ = table;
  return g;
}

GeneratorAssignment GeneratorAssignment::from_values(std::map<std::pair<int, int>, Rational> values,
                                                     std::optional<Rational> fallback) {
  GeneratorAssignment g;
  g.values_ = std::move(values);
  g.fallback_ = std::move(fallback);
  return g;
}

Rational GeneratorAssignment::operator()(int j, int i) const {
  if (auto it = values_.find({j, i}); it != values_.end()) return it->second;
  if (table_ && j >= 0) return table_->b(j, i);
  if (fallback_) return *fallback_;
  throw MissingGenerator(j, i);
}

GeneratorAssignment& GeneratorAssignment::set(int j, int i, Rational v) {
  values_[{j, i}] = std::move(v);
  origin_ = Origin::Explicit;
  return *this;
}

std::string_view to_string(GeneratorAssignment::Origin o) {
  switch (o) {
    case GeneratorAssignment::Origin::FromPolynomial:
      return "polynomial";
    case GeneratorAssignment::Origin::FromPair:
      return "pair";
    case GeneratorAssignment::Origin::Explicit:
      return "explicit";
  }
  return "?";
}

IdentityReport check_quadratic_relation(const GeneratorAssignment& b, int k, int j, int i) {
  const Rational d0 = det2(b(1, j), b(1, k), b(j - 1, i + j - k), b(k - 1, i));
  const Rational d1 = det2(b(1, j), b(j - 1, j + k - 1), b(1, i - k + 1), b(k, i));
  const Rational d2 = det2(b(1, k), b(j, j + k - 1), b(1, i - k + 1), b(j, i + j - k));
  IdentityReport r;
  r.identity = "quadratic_relation";
  r.params = {{"k", k}, {"j", j}, {"i", i}, {"origin", to_string(b.origin())}};
  r.residual = d0 - d1 + d2;
  return r;
}

std::vector<Vec> build_w_vectors(const std::vector<int>& m, int i, const GeneratorAssignment& b) {
  const int n = static_cast<int>(m.size());
  if (n < 2) throw ShapeError("index tuple needs n >= 2 entries");
  Vec base;
  for (int mk : m) base.push_back(b(1, mk));
  std::vector<Vec> out{base};
  const Rational tail = b(1, i - m.back() + 1);
  for (int j = 1; j <= n; ++j) {
    Vec w = base;
    w.erase(w.begin() + (n - j));
    w.push_back(tail);
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<Vec> build_v_vectors(const std::vector<int>& m, int i, const GeneratorAssignment& b) {
  const int n = static_cast<int>(m.size());
  if (n < 2) throw ShapeError("index tuple needs n >= 2 entries");
  auto mk = [&](int k) { return m[sz(k - 1)]; };
  std::vector<Vec> out;
  Vec v1;
  for (int k = 1; k <= n; ++k) v1.push_back(b(mk(k) - 1, i + mk(k) - mk(n)));
  out.push_back(std::move(v1));
  for (int j = 2; j <= n + 1; ++j) {
    const int s = n + 2 - j;
    Vec v;
    for (int k = 1; k < s; ++k) v.push_back(b(mk(k) - 1, mk(k) + mk(s) - 1));
    for (int k = s; k < n; ++k) v.push_back(b(mk(s), mk(s) + mk(k + 1) - 1));
    v.push_back(b(mk(s), i + mk(s) - mk(n)));
    out.push_back(std::move(v));
  }
  return out;
}

namespace {

void check_block(int n, const RationalMatrix& M) {
  if (n < 2) throw ShapeError("alternating sum needs n >= 2");
  if (n == 2 && M.rows() == 0) return;
  if (M.rows() != sz(n - 2) || M.cols() != sz(n + 1))
    throw ShapeError("M must be " + std::to_string(n - 2) + "x" + std::to_string(n + 1) + ", got " +
                     std::to_string(M.rows()) + "x" + std::to_string(M.cols()));
}

// Rows (w; M without column drop; v).
RationalMatrix stacked(const Vec& w, const RationalMatrix& M, std::size_t drop, const Vec& v) {
  const std::size_t n = w.size();
  RationalMatrix out(n, n);
  for (std::size_t c = 0; c < n; ++c) out(0, c) = w[c];
  if (M.rows() > 0) {
    const RationalMatrix minor = M.without({}, {drop});
    for (std::size_t r = 0; r < minor.rows(); ++r)
      for (std::size_t c = 0; c < n; ++c) out(r + 1, c) = minor(r, c);
  }
  for (std::size_t c = 0; c < n; ++c) out(n - 1, c) = v[c];
  return out;
}

}  // namespace

RationalMatrix d_matrix(int j, const std::vector<int>& m, const RationalMatrix& M, int i,
                        const GeneratorAssignment& g) {
  const int n = static_cast<int>(m.size());
  check_block(n, M);
  if (j < 1 || j > n + 1) throw BadIndex("D_j needs 1 <= j <= n+1");
  const auto w = build_w_vectors(m, i, g);
  const auto v = build_v_vectors(m, i, g);
  RationalMatrix rows = stacked(w[sz(j - 1)], M, sz(n + 1 - j), v[sz(j - 1)]);
  return j == 1 ? rows : rows.transpose();
}

IdentityReport r_alternating_sum(const std::vector<int>& m, const RationalMatrix& M, int i,
                                 const GeneratorAssignment& g) {
  const int n = static_cast<int>(m.size());
  check_block(n, M);
  const auto w = build_w_vectors(m, i, g);
  const auto v = build_v_vectors(m, i, g);
  Rational acc;
  for (int j = 1; j <= n + 1; ++j) {
    const Rational d = determinant(stacked(w[sz(j - 1)], M, sz(n + 1 - j), v[sz(j - 1)]));
    acc += j % 2 == 1 ? d : -d;
  }
  IdentityReport r;
  r.identity = "alternating_sum";
  r.params = {{"n", n}, {"m", m}, {"i", i}, {"M", matrix_json(M)}, {"origin", to_string(g.origin())}};
  r.residual = acc;
  return r;
}

PrimedDeterminants c_primed(const BTable& table, int n, int i) {
  if (n < 3) throw BadIndex("primed determinants need n >= 3");
  const int N = n - 1;
  const GeneratorAssignment g = GeneratorAssignment::from_table(table);
  std::vector<int> mu(sz(N));
  for (int k = 0; k < N; ++k) mu[sz(k)] = k + 2;
  RationalMatrix M(sz(N - 2), sz(N + 1));
  for (int r = 1; r <= N - 2; ++r) {
    for (int q = 1; q <= N; ++q) M(sz(r - 1), sz(q - 1)) = table.b(std::min(r + 1, q), r + 1 + q);
    M(sz(r - 1), sz(N)) = table.b(r + 1, i + N + r);
  }
  const int I = i + 2 * N;
  const auto w = build_w_vectors(mu, I, g);
  const auto v = build_v_vectors(mu, I, g);
  std::vector<Rational> dets;
  for (int j = 1; j <= N + 1; ++j) dets.push_back(determinant(stacked(w[sz(j - 1)], M, sz(N + 1 - j), v[sz(j - 1)])));

  PrimedDeterminants out{dets[0], dets[1], dets[2], {dets.begin() + 3, dets.end()}};

  const RationalMatrix big = table.c_matrix(n + 1, i - 2);
  const Rational cpp = determinant(big.without({sz(n - 3)}, {sz(n - 1)}));
  const Rational cp = determinant(big.without({sz(n - 2)}, {sz(n - 2)}));
  if (cpp != out.c_double_prime || cp != out.c_prime)
    throw RouteMismatch("primed determinants of c(" + std::to_string(n) + ")_" + std::to_string(i) +
                        ": alternating-sum and minor routes disagree");
  return out;
}

PrimedDeterminants c_primed(const Polynomial& f, int n, int i) { return c_primed(BTable::from_polynomial(f), n, i); }

IdentityReport check_primed_three_term(const Polynomial& f, int n, int i) {
  const BTable t = BTable::from_polynomial(f);
  const PrimedDeterminants p = c_primed(t, n, i);
  IdentityReport r;
  r.identity = "primed_three_term";
  r.params = {{"n", n}, {"i", i}, {"f", f.str()}};
  r.residual = t.c(n, i) - p.c_prime + p.c_double_prime;
  return r;
}

namespace {

// Determinant of the first `cols` columns after dropping the given
// (zero-based) rows.
Rational minor(const RationalMatrix& A, std::vector<std::size_t> drop_rows, std::size_t cols) {
  std::vector<std::size_t> drop_cols;
  for (std::size_t c = cols; c < A.cols(); ++c) drop_cols.push_back(c);
  return determinant(A.without(drop_rows, drop_cols));
}

}  // namespace

IdentityReport plucker_a(const RationalMatrix& W) {
  const std::size_t n = W.rows();
  if (n < 3 || W.cols() + 1 != n) throw ShapeError("plucker_a needs an n x (n-1) matrix with n >= 3");
  auto Wk = [&](std::size_t k) { return minor(W, {k - 1}, n - 1); };
  auto V = [&](std::size_t k, std::size_t l) { return minor(W, {k - 1, l - 1}, n - 2); };
  IdentityReport r;
  r.identity = "plucker_a";
  r.params = {{"n", n}, {"W", matrix_json(W)}};
  r.residual = V(n - 2, n - 1) * Wk(n) - V(n - 2, n) * Wk(n - 1) + V(n - 1, n) * Wk(n - 2);
  return r;
}

IdentityReport plucker_b(const RationalMatrix& Vm, int i) {
  const std::size_t n = Vm.rows();
  if (n < 4 || Vm.cols() + 2 != n) throw ShapeError("plucker_b needs an n x (n-2) matrix with n >= 4");
  if (i < 1 || static_cast<std::size_t>(i) >= n - 2) throw BadIndex("plucker_b needs 1 <= i < n-2");
  auto V = [&](std::size_t k, std::size_t l) { return minor(Vm, {k - 1, l - 1}, n - 2); };
  const auto ii = static_cast<std::size_t>(i);
  IdentityReport r;
  r.identity = "plucker_b";
  r.params = {{"n", n}, {"i", i}, {"V", matrix_json(Vm)}};
  r.residual = V(n - 2, n - 1) * V(ii, n) - V(n - 2, n) * V(ii, n - 1) + V(n - 1, n) * V(ii, n - 2);
  return r;
}

namespace {

IdentityReport formula_report(const char* name, const Polynomial& f, int n, int i, Rational residual) {
  IdentityReport r;
  r.identity = name;
  r.params = {{"n", n}, {"i", i}, {"f", f.str()}};
  r.residual = std::move(residual);
  return r;
}

void require_formula_n(int n) {
  if (n < 3) throw BadIndex("formula needs n >= 3");
}

}  // namespace

IdentityReport check_formula_a(const Polynomial& f, int n, int i) {
  require_formula_n(n);
  const BTable t = BTable::from_polynomial(f);
  const Rational cpp = c_primed(t, n, i).c_double_prime;
  return formula_report("formula_a", f, n, i,
                        t.c(n - 1, i) * t.c(n) - t.c(n - 1, 1) * t.c(n, i - 1) + t.c(n - 1) * cpp);
}

IdentityReport check_formula_b(const Polynomial& f, int n, int i) {
  require_formula_n(n);
  const BTable t = BTable::from_polynomial(f);
  const Rational cpp = c_primed(t, n, i).c_double_prime;
  return formula_report("formula_b", f, n, i,
                        (t.c(n, i) + cpp) * t.c(n) - t.c(n, 1) * t.c(n, i - 1) - t.c(n - 1) * t.c(n + 1, i - 2));
}

IdentityReport check_formula_f(const Polynomial& f, int n, int i) {
  require_formula_n(n);
  const BTable t = BTable::from_polynomial(f);
  const Rational cp = t.c(n - 1);
  const Rational cn = t.c(n);
  const Rational q = t.c(n - 1, i) * cn * cn - cp * cn * t.c(n, i) - t.c(n - 1, 1) * t.c(n, i - 1) * cn +
                     cp * t.c(n, 1) * t.c(n, i - 1);
  return formula_report("formula_f", f, n, i, q + cp * cp * t.c(n + 1, i - 2));
}

IdentityReport check_q_identity(const Polynomial& f, int j, int i) {
  const BTable t = BTable::from_polynomial(f);
  const Rational q = q_quantity(t, j, i);
  const Rational cp = t.c(j - 1);
  IdentityReport r;
  r.identity = "q_identity";
  r.params = {{"j", j}, {"i", i}, {"f", f.str()}};
  r.residual = q + cp * cp * t.c(j + 1, i - 2);
  return r;
}

}  // namespace sturm
