#include "sturm/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <thread>

#include "sturm/errors.hpp"
#include "sturm/identities.hpp"
#include "sturm/jacobi.hpp"
#include "sturm/sturm_chain.hpp"

namespace sturm {

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Polynomial random_polynomial(Rng& rng, int degree, int bound) {
  std::vector<Rational> desc;
  int lead = 0;
  while (lead == 0) lead = uniform_int(rng, -bound, bound);
  desc.emplace_back(lead);
  for (int k = 0; k < degree; ++k) desc.emplace_back(uniform_int(rng, -bound, bound));
  return Polynomial::from_descending(desc);
}

namespace {

bool regular_down_to_constant(const SturmChain& c, int top) {
  if (c.termination != Termination::ConstantReached) return false;
  for (std::size_t k = 0; k < c.members.size(); ++k)
    if (c.members[k].degree() != top - static_cast<int>(k)) return false;
  return c.members.back().degree() == 0;
}

}  // namespace

Polynomial random_regular_polynomial(Rng& rng, int deg_min, int deg_max, int bound) {
  while (true) {
    Polynomial f = random_polynomial(rng, uniform_int(rng, deg_min, deg_max), bound);
    if (regular_down_to_constant(sturm_chain_euclid(f), f.degree())) return f;
  }
}

PolynomialPair random_regular_pair(Rng& rng, int deg_min, int deg_max, int bound) {
  while (true) {
    const int n = uniform_int(rng, deg_min, deg_max);
    Polynomial f1 = random_polynomial(rng, n - 1, bound);
    Polynomial f2 = random_polynomial(rng, n - 2, bound);
    if (regular_down_to_constant(remainder_sequence(f1, f2), n - 1)) return {std::move(f1), std::move(f2)};
  }
}

namespace {

Rational random_rational(Rng& rng, int bound, int max_den) {
  return Rational(Integer(uniform_int(rng, -bound, bound)), Integer(uniform_int(rng, 1, max_den)));
}

}  // namespace

RationalMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int bound, int max_den) {
  RationalMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_rational(rng, bound, max_den);
  return m;
}

std::vector<Rational> random_distinct_rationals(Rng& rng, std::size_t count, int bound, int max_den) {
  std::vector<Rational> out;
  while (out.size() < count) {
    Rational v = random_rational(rng, bound, max_den);
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(std::move(v));
  }
  return out;
}

namespace {

using Trial = std::function<IdentityReport(Rng&, const CampaignConfig&)>;

Rational member_distance(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
  Rational acc;
  for (std::size_t k = 0; k < std::max(a.size(), b.size()); ++k) {
    const Polynomial& p = k < a.size() ? a[k] : Polynomial{};
    const Polynomial& q = k < b.size() ? b[k] : Polynomial{};
    for (int e = 0; e <= std::max(p.degree(), q.degree()); ++e) acc += (p.coeff(e) - q.coeff(e)).abs();
  }
  return acc;
}

IdentityReport members_derivative(Rng& rng, const CampaignConfig& cfg) {
  const Polynomial f = random_regular_polynomial(rng, cfg.deg_min, cfg.deg_max);
  const SturmChain chain = sturm_chain_euclid(f);
  const BTable t = BTable::from_polynomial(f);
  std::vector<Polynomial> jac{f};
  for (auto& p : members_jacobi(t, f.degree())) jac.push_back(std::move(p));
  IdentityReport r;
  r.identity = "members_derivative";
  r.params = {{"f", f.str()}};
  r.residual = member_distance(chain.members, jac);
  return r;
}

IdentityReport members_pair(Rng& rng, const CampaignConfig& cfg) {
  const auto [f1, f2] = random_regular_pair(rng, std::max(cfg.deg_min, 3), cfg.deg_max);
  const SturmChain chain = remainder_sequence(f1, f2);
  const BTable t = BTable::from_pair(f1, f2);
  const std::vector<Polynomial> jac = members_jacobi(t, t.n());
  IdentityReport r;
  r.identity = "members_pair";
  r.params = {{"f1", f1.str()}, {"f2", f2.str()}};
  r.residual = member_distance(chain.members, jac);
  return r;
}

GeneratorAssignment random_assignment(Rng& rng, const CampaignConfig& cfg, nlohmann::json& params) {
  if (uniform_int(rng, 0, 1) == 0) {
    const Polynomial f = random_polynomial(rng, uniform_int(rng, cfg.deg_min, cfg.deg_max));
    params["f"] = f.str();
    return GeneratorAssignment::from_polynomial(f);
  }
  const int n = uniform_int(rng, std::max(cfg.deg_min, 2), cfg.deg_max);
  Polynomial f1 = random_polynomial(rng, n - 1);
  Polynomial f2 = random_polynomial(rng, n - 2);
  params["f1"] = f1.str();
  params["f2"] = f2.str();
  return GeneratorAssignment::from_pair(f1, f2);
}

IdentityReport quadratic_relation(Rng& rng, const CampaignConfig& cfg) {
  nlohmann::json extra;
  const GeneratorAssignment g = random_assignment(rng, cfg, extra);
  const int k = uniform_int(rng, 1, 6);
  const int j = uniform_int(rng, 1, 6);
  const int i = uniform_int(rng, -2, 14);
  IdentityReport r = check_quadratic_relation(g, k, j, i);
  r.params.update(extra);
  return r;
}

Trial alternating_sum(int n) {
  return [n](Rng& rng, const CampaignConfig& cfg) {
    nlohmann::json extra;
    const GeneratorAssignment g = random_assignment(rng, cfg, extra);
    std::vector<int> m;
    for (int k = 0; k < n; ++k) m.push_back(uniform_int(rng, 1, 7));
    const int i = uniform_int(rng, -2, 14);
    const RationalMatrix M = random_matrix(rng, static_cast<std::size_t>(n - 2), static_cast<std::size_t>(n + 1));
    IdentityReport r = r_alternating_sum(m, M, i, g);
    r.params.update(extra);
    return r;
  };
}

IdentityReport primed_three_term(Rng& rng, const CampaignConfig& cfg) {
  const Polynomial f = random_polynomial(rng, uniform_int(rng, cfg.deg_min, cfg.deg_max));
  return check_primed_three_term(f, uniform_int(rng, 3, 5), uniform_int(rng, 0, 4));
}

Trial formula(IdentityReport (*check)(const Polynomial&, int, int)) {
  return [check](Rng& rng, const CampaignConfig& cfg) {
    const Polynomial f = random_polynomial(rng, uniform_int(rng, cfg.deg_min, cfg.deg_max));
    return check(f, uniform_int(rng, 3, 4), uniform_int(rng, 2, 4));
  };
}

IdentityReport plucker_a_trial(Rng& rng, const CampaignConfig&) {
  const int n = uniform_int(rng, 3, 6);
  return plucker_a(random_matrix(rng, static_cast<std::size_t>(n), static_cast<std::size_t>(n - 1), 9, 5));
}

IdentityReport plucker_b_trial(Rng& rng, const CampaignConfig&) {
  const int n = uniform_int(rng, 4, 6);
  const RationalMatrix V = random_matrix(rng, static_cast<std::size_t>(n), static_cast<std::size_t>(n - 2), 9, 5);
  return plucker_b(V, uniform_int(rng, 1, n - 3));
}

IdentityReport q_identity(Rng& rng, const CampaignConfig& cfg) {
  const Polynomial f = random_regular_polynomial(rng, std::max(cfg.deg_min, 3), cfg.deg_max);
  const int n = f.degree();
  const int j = uniform_int(rng, 2, n - 1);
  return check_q_identity(f, j, uniform_int(rng, 2, n - j + 1));
}

const std::map<std::string, Trial, std::less<>>& suites() {
  static const std::map<std::string, Trial, std::less<>> table{
      {"members_derivative", members_derivative},
      {"members_pair", members_pair},
      {"quadratic_relation", quadratic_relation},
      {"alternating_sum_2", alternating_sum(2)},
      {"alternating_sum_3", alternating_sum(3)},
      {"alternating_sum_4", alternating_sum(4)},
      {"primed_three_term", primed_three_term},
      {"formula_a", formula(check_formula_a)},
      {"formula_b", formula(check_formula_b)},
      {"formula_f", formula(check_formula_f)},
      {"plucker_a", plucker_a_trial},
      {"plucker_b", plucker_b_trial},
      {"q_identity", q_identity},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "members_derivative", "members_pair",      "quadratic_relation", "alternating_sum_2", "alternating_sum_3",
      "alternating_sum_4",  "primed_three_term", "formula_a",          "formula_b",         "formula_f",
      "plucker_a",          "plucker_b",         "q_identity",
  };
  return names;
}

std::vector<IdentityReport> run_suite(std::string_view name, const CampaignConfig& config) {
  const auto& table = suites();
  const auto it = table.find(name);
  if (it == table.end()) throw BadIndex("unknown suite '" + std::string(name) + "'");
  if (config.trials < 1) throw BadIndex("campaign needs trials >= 1");
  std::uint64_t suite_salt = 0xcbf29ce484222325ULL;
  for (unsigned char ch : name) suite_salt = (suite_salt ^ ch) * 0x100000001b3ULL;
  const std::uint64_t master = trial_seed(config.seed, suite_salt);

  std::vector<IdentityReport> out(static_cast<std::size_t>(config.trials));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next++; t < out.size(); t = next++) {
      const std::uint64_t seed = trial_seed(master, t);
      Rng rng(seed);
      out[t] = it->second(rng, config);
      out[t].seed = seed;
    }
  };
  unsigned threads = config.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : config.threads;
  threads = std::min<unsigned>(threads, static_cast<unsigned>(out.size()));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < threads; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return out;
}

IdentityReport injected_violation(std::uint64_t seed) {
  GeneratorAssignment g = GeneratorAssignment::from_values({}, Rational(1));
  g.set(2, 5, Rational(2));
  IdentityReport r = check_quadratic_relation(g, 2, 3, 4);
  r.identity = "injected_violation";
  r.seed = seed;
  return r;
}

}  // namespace sturm
