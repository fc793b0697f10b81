#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sturm/campaign.hpp"
#include "sturm/errors.hpp"
#include "sturm/euler.hpp"
#include "sturm/identities.hpp"
#include "sturm/jacobi.hpp"
#include "sturm/sturm_chain.hpp"

using namespace sturm;

namespace {

constexpr std::uint64_t kSeed = 20240601;

Polynomial P(std::vector<Rational> desc) { return Polynomial::from_descending(desc); }

Rational Q(long p, long q = 1) { return Rational(p) / Rational(q); }

bool derivative_members() {
  for (std::uint64_t t = 0; t < 200; ++t) {
    Rng rng(trial_seed(kSeed, t));
    const Polynomial f = random_regular_polynomial(rng, 3, 8);
    const auto ref = oracle::remainder_chain(oracle::desc(f), oracle::derivative(oracle::desc(f)));
    if (static_cast<int>(ref.size()) != f.degree() + 1) return false;
    const BTable b = BTable::from_polynomial(f);
    for (int i = 1; i <= f.degree(); ++i)
      if (member_jacobi(b, i).descending() != ref[static_cast<std::size_t>(i)]) return false;
  }
  return true;
}

bool pair_members() {
  for (std::uint64_t t = 0; t < 200; ++t) {
    Rng rng(trial_seed(kSeed + 1, t));
    const auto [f1, f2] = random_regular_pair(rng, 3, 8);
    const auto ref = oracle::remainder_chain(oracle::desc(f1), oracle::desc(f2));
    const BTable b = BTable::from_pair(f1, f2);
    if (static_cast<int>(ref.size()) != b.n()) return false;
    for (int i = 1; i <= b.n(); ++i)
      if (member_jacobi(b, i).descending() != ref[static_cast<std::size_t>(i - 1)]) return false;
  }
  return true;
}

bool worked_fixtures() {
  const std::vector<std::pair<Polynomial, std::vector<Polynomial>>> fixtures{
      {P({Q(1), Q(0), Q(-1)}), {P({Q(1), Q(0), Q(-1)}), P({Q(2), Q(0)}), P({Q(1)})}},
      {P({Q(1), Q(0), Q(-3), Q(1)}),
       {P({Q(1), Q(0), Q(-3), Q(1)}), P({Q(3), Q(0), Q(-3)}), P({Q(2), Q(-1)}), P({Q(9, 4)})}},
  };
  for (const auto& [f, chain] : fixtures) {
    if (sturm_chain_euclid(f).members != chain) return false;
    for (std::size_t i = 1; i < chain.size(); ++i)
      if (sturm_member_jacobi(f, static_cast<int>(i)) != chain[i]) return false;
  }
  return true;
}

bool identity_suite() {
  Rng rng(kSeed + 2);
  for (int t = 0; t < 100; ++t) {
    const auto g = GeneratorAssignment::from_polynomial(random_polynomial(rng, uniform_int(rng, 2, 8)));
    if (!check_quadratic_relation(g, uniform_int(rng, 1, 6), uniform_int(rng, 1, 6), uniform_int(rng, -2, 14))
             .passed())
      return false;
  }
  for (int n = 2; n <= 4; ++n) {
    for (int t = 0; t < 50; ++t) {
      const auto g = GeneratorAssignment::from_polynomial(random_polynomial(rng, uniform_int(rng, 3, 8)));
      std::vector<int> m;
      for (int k = 0; k < n; ++k) m.push_back(uniform_int(rng, 1, 7));
      const RationalMatrix M =
          random_matrix(rng, static_cast<std::size_t>(n - 2), static_cast<std::size_t>(n + 1), 9, 4);
      if (!r_alternating_sum(m, M, uniform_int(rng, -2, 14), g).passed()) return false;
    }
  }
  for (int n = 3; n <= 5; ++n)
    for (int t = 0; t < 10; ++t)
      if (!check_primed_three_term(random_polynomial(rng, uniform_int(rng, n, 8)), n, uniform_int(rng, -1, 5)).passed())
        return false;
  for (int n = 3; n <= 4; ++n)
    for (int t = 0; t < 10; ++t) {
      const Polynomial f = random_polynomial(rng, uniform_int(rng, n, 8));
      const int i = uniform_int(rng, 2, 6);
      if (!check_formula_a(f, n, i).passed() || !check_formula_b(f, n, i).passed() ||
          !check_formula_f(f, n, i).passed())
        return false;
    }
  for (int t = 0; t < 100; ++t) {
    const int n = uniform_int(rng, 4, 6);
    const auto un = static_cast<std::size_t>(n);
    const auto ua = static_cast<std::size_t>(uniform_int(rng, 3, 6));
    if (!plucker_a(random_matrix(rng, ua, ua - 1, 9, 5)).passed()) return false;
    if (!plucker_b(random_matrix(rng, un, un - 2, 9, 5), uniform_int(rng, 1, n - 3)).passed()) return false;
  }
  return true;
}

bool q_identity() {
  if (q_quantity(P({Q(1), Q(0), Q(-3), Q(1)}), 2, 2) != Q(-243)) return false;
  Rng rng(kSeed + 3);
  for (int t = 0; t < 100; ++t) {
    const Polynomial f = random_regular_polynomial(rng, 3, 8);
    const BTable b = BTable::from_polynomial(f);
    const int j = uniform_int(rng, 2, f.degree() - 1);
    const int i = uniform_int(rng, 2, f.degree() - j + 1);
    if (q_quantity(b, j, i) != -b.c(j - 1).pow(2) * b.c(j + 1, i - 2)) return false;
  }
  return true;
}

bool euler_hypergeometric() {
  const std::vector<std::vector<Rational>> shown{
      {Q(1), Q(-1, 4)},
      {Q(1), Q(-3, 8), Q(1, 256)},
      {Q(1), Q(-5, 12), Q(5, 432), Q(-1, 46656)},
      {Q(1), Q(-7, 16), Q(35, 2048), Q(-7, 65536), Q(1, 16777216)},
  };
  for (std::size_t n = 1; n <= shown.size(); ++n) {
    const Polynomial e = euler_poly(static_cast<int>(n));
    if (e.degree() != static_cast<int>(2 * n)) return false;
    for (int k = 0; k <= e.degree(); ++k) {
      const Rational expect = k % 2 == 0 ? shown[n - 1][static_cast<std::size_t>(k / 2)] : Q(0);
      if (e.coeff(k) != expect) return false;
    }
  }
  for (int n = 1; n <= 12; ++n)
    if (!check_gauss_even(n).passed() || !check_euler_hypergeom(n).passed()) return false;
  return true;
}

bool cauchy() {
  Rng rng(kSeed + 4);
  int checked = 0;
  while (checked < 50) {
    const auto m = static_cast<std::size_t>(uniform_int(rng, 1, 6));
    const CauchySpec s{random_distinct_rationals(rng, m, 20, 4), random_distinct_rationals(rng, m, 20, 4)};
    try {
      if (cauchy_closed_form(s) != cauchy_brute(s)) return false;
      ++checked;
    } catch (const SingularPair&) {
    }
  }
  if (hilbert_variant_closed(1) != Q(1, 3) || hilbert_variant_closed(2) != Q(4, 525)) return false;
  for (int m = 1; m <= 5; ++m) {
    const Rational scale =
        Rational(m % 2 == 0 ? 1 : -1) * Rational(2).pow(m) * Rational(factorial(static_cast<unsigned>(m))).pow(2);
    if (c_inf_det(m) != scale * hilbert_variant_brute(m)) return false;
    if (hilbert_variant_brute(m) != hilbert_variant_closed(m)) return false;
  }
  const oracle::Grid shown{
      {Q(-2, 3), Q(-4, 5), Q(-6, 7)}, {Q(-4, 5), Q(-8, 7), Q(-12, 9)}, {Q(-6, 7), Q(-12, 9), Q(-18, 11)}};
  const oracle::Grid middle{{Q(1, 3), Q(2, 5), Q(3, 7)}, {Q(1, 5), Q(2, 7), Q(3, 9)}, {Q(1, 7), Q(2, 9), Q(3, 11)}};
  const oracle::Grid hankel{{Q(1, 3), Q(1, 5), Q(1, 7)}, {Q(1, 5), Q(1, 7), Q(1, 9)}, {Q(1, 7), Q(1, 9), Q(1, 11)}};
  const Rational d = oracle::leibniz(shown);
  return d == c_inf_det(3) && d == Q(-48) * oracle::leibniz(middle) && d == Q(-288) * oracle::leibniz(hankel);
}

bool limits() {
  if (beta_limit(1, 2) != Q(-2, 3) || beta_limit(2, 4) != Q(-8, 7)) return false;
  for (auto [j, i] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 4}, {2, 5}, {3, 6}})
    if (!beta_convergence(j, i, {10, 20, 40, 80}).passed()) return false;
  return true;
}

bool asymptotic_law() {
  for (int m = 1; m <= 2; ++m)
    if (!asymptotic_check(m, {10, 20, 40, 80}).passed()) return false;
  return true;
}

bool root_counting() {
  Rng rng(kSeed + 5);
  for (int t = 0; t < 50; ++t) {
    const auto k = static_cast<std::size_t>(uniform_int(rng, 1, 7));
    const auto roots = random_distinct_rationals(rng, k, 9, 4);
    Polynomial f = Polynomial::constant(Rational(uniform_int(rng, 1, 5)));
    for (const auto& r : roots) f = f * P({Q(1), -r});
    if (count_real_roots(sturm_chain_euclid(f), Q(-10), Q(10)) != static_cast<int>(k)) return false;
  }
  const Polynomial cubic = P({Q(1), Q(0), Q(-3), Q(1)});
  const auto bound = cauchy_root_bound(cubic);
  const auto iv = isolate_roots(cubic, -bound, bound);
  if (iv.size() != 3) return false;
  for (const auto& a : iv)
    if (count_real_roots(sturm_chain_euclid(cubic), a.lo, a.hi) != 1) return false;
  return true;
}

struct Criterion {
  const char* name;
  double limit_seconds;
  std::function<bool()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"determinantal members equal Euclidean members (200 regular polynomials)", 30, derivative_members},
      {"determinantal members equal remainder sequence (200 regular pairs)", 30, pair_members},
      {"worked chains for x^2-1 and x^3-3x+1 by both routes", 5, worked_fixtures},
      {"identity suite has exact zero residuals", 60, identity_suite},
      {"Q identity on 100 regular instances and Q(2)_2 = -243", 30, q_identity},
      {"Euler polynomial coefficients and hypergeometric identities up to n = 12", 10, euler_hypergeometric},
      {"Cauchy closed form, Hilbert-type values and limit factorization", 10, cauchy},
      {"beta limits and contraction under degree doubling", 30, limits},
      {"asymptotic law for m = 1, 2 up to n = 80", 120, asymptotic_law},
      {"Sturm root counts on 50 products of linear factors", 30, root_counting},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
      ok = c.run();
    } catch (const std::exception& e) {
      note = std::string(" exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && secs > c.limit_seconds) {
      ok = false;
      note = " over time limit";
    }
    failures += ok ? 0 : 1;
    std::printf("%s  %s (%.2fs)%s\n", ok ? "PASS" : "FAIL", c.name, secs, note.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
