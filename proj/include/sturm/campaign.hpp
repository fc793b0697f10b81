#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "sturm/matrix.hpp"
#include "sturm/polynomial.hpp"
#include "sturm/report.hpp"

namespace sturm {

using Rng = std::mt19937_64;

// splitmix64 finalizer of (master, index); seeds trial `index` of a campaign
// independently of scheduling.
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index);

int uniform_int(Rng& rng, int lo, int hi);

// Integer coefficients in [-bound, bound] with a nonzero leading one.
Polynomial random_polynomial(Rng& rng, int degree, int bound = 9);
// Rejection-sampled until the Euclidean chain of f is regular.
Polynomial random_regular_polynomial(Rng& rng, int deg_min, int deg_max, int bound = 9);

struct PolynomialPair {
  Polynomial first;
  Polynomial second;
};

// deg first = n-1, deg second = n-2, n in [deg_min, deg_max], with a regular
// remainder sequence down to a nonzero constant.
PolynomialPair random_regular_pair(Rng& rng, int deg_min, int deg_max, int bound = 9);

// Entries p/q with |p| <= bound, 1 <= q <= max_den.
RationalMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int bound = 9, int max_den = 1);

// `count` distinct rationals p/q with |p| <= bound, 1 <= q <= max_den.
std::vector<Rational> random_distinct_rationals(Rng& rng, std::size_t count, int bound, int max_den);

struct CampaignConfig {
  std::uint64_t seed = 1;
  int trials = 100;
  int deg_min = 3;
  int deg_max = 8;
  unsigned threads = 0;  // 0: hardware concurrency
};

// Names accepted by run_suite, in a fixed order.
const std::vector<std::string>& suite_names();

// `trials` seeded reports for the named suite. Results are ordered by trial
// index and do not depend on the thread count. Throws BadIndex for an
// unknown suite.
std::vector<IdentityReport> run_suite(std::string_view name, const CampaignConfig& config);

// A perturbed all-ones assignment fed to the quadratic relation; its residual
// is nonzero by construction.
IdentityReport injected_violation(std::uint64_t seed);

}  // namespace sturm
