#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include "sturm/campaign.hpp"
#include "sturm/errors.hpp"
#include "sturm/poly_io.hpp"
#include "sturm/sturm_chain.hpp"

using namespace sturm;

TEST_CASE("coefficient lists") {
  CHECK(parse_coeff_list("1, 0, -3, 1").str() == "x^3 - 3*x + 1");
  CHECK(parse_coeff_list("1/2,-3/4").coeff(0) == Rational(-3) / Rational(4));
  CHECK(parse_coeff_list("5").degree() == 0);
  CHECK_THROWS_AS(parse_coeff_list(""), ParseError);
  CHECK_THROWS_AS(parse_coeff_list("1,,2"), ParseError);
  CHECK_THROWS_AS(parse_coeff_list("0, 1"), ParseError);
  CHECK_THROWS_AS(parse_coeff_list("1, x"), ParseError);
  CHECK_THROWS_AS(parse_coeff_list("1, 2/0"), ParseError);
}

TEST_CASE("JSON polynomials") {
  const auto j = nlohmann::json::parse(R"({"coeffs": ["1", 0, "-3", 1]})");
  const Polynomial p = polynomial_from_json(j);
  CHECK(p.str() == "x^3 - 3*x + 1");
  CHECK(polynomial_from_json(polynomial_to_json(p)) == p);
  CHECK(polynomial_to_json(p)["coeffs"][2] == "-3");
  CHECK_THROWS_AS(polynomial_from_json(nlohmann::json::parse(R"({"coeffs": [1.5, 2]})")), ParseError);
  CHECK_THROWS_AS(polynomial_from_json(nlohmann::json::parse(R"({"c": [1]})")), ParseError);
  CHECK_THROWS_AS(polynomial_from_json(nlohmann::json::parse(R"({"coeffs": []})")), ParseError);

  const auto path = std::filesystem::temp_directory_path() / "sturm_poly_io_test.json";
  {
    std::ofstream out(path);
    out << R"({"coeffs": ["1", "0", "-1"]})";
  }
  CHECK(read_polynomial_file(path).str() == "x^2 - 1");
  {
    std::ofstream out(path);
    out << "{not json";
  }
  CHECK_THROWS_AS(read_polynomial_file(path), ParseError);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(read_polynomial_file(path), ParseError);
}

TEST_CASE("seeds and random inputs") {
  CHECK(trial_seed(1, 0) == trial_seed(1, 0));
  CHECK(trial_seed(1, 0) != trial_seed(1, 1));
  CHECK(trial_seed(1, 0) != trial_seed(2, 0));
  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < 1000; ++i) seen.insert(trial_seed(7, i));
  CHECK(seen.size() == 1000);

  Rng a(5);
  Rng b(5);
  for (int t = 0; t < 20; ++t) CHECK(random_polynomial(a, 6) == random_polynomial(b, 6));

  Rng rng(6);
  for (int t = 0; t < 30; ++t) {
    const Polynomial f = random_regular_polynomial(rng, 3, 8);
    const SturmChain c = sturm_chain_euclid(f);
    CHECK(c.termination == Termination::ConstantReached);
    for (std::size_t k = 0; k < c.members.size(); ++k) CHECK(c.members[k].degree() == f.degree() - static_cast<int>(k));

    const auto [f1, f2] = random_regular_pair(rng, 3, 8);
    CHECK(f2.degree() == f1.degree() - 1);
    const auto v = random_distinct_rationals(rng, 6, 9, 3);
    CHECK(std::set<Rational>(v.begin(), v.end()).size() == 6);
    const RationalMatrix m = random_matrix(rng, 3, 4, 9, 1);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t col = 0; col < 4; ++col) CHECK(m(r, col).abs() <= Rational(9));
  }
}

TEST_CASE("campaigns are reproducible and thread independent") {
  CHECK(suite_names().size() == 13);
  for (const auto& name : suite_names()) {
    CampaignConfig one{.seed = 3, .trials = 12, .deg_min = 3, .deg_max = 7, .threads = 1};
    CampaignConfig many = one;
    many.threads = 4;
    const auto r1 = run_suite(name, one);
    const auto r4 = run_suite(name, many);
    REQUIRE(r1.size() == 12);
    REQUIRE(r4.size() == 12);
    for (std::size_t t = 0; t < r1.size(); ++t) {
      CHECK(to_json(r1[t]).dump() == to_json(r4[t]).dump());
      CHECK(r1[t].passed());
    }
  }
  CHECK_THROWS_AS(run_suite("no_such_suite", {}), BadIndex);

  const IdentityReport v = injected_violation(1);
  CHECK_FALSE(v.passed());
  CHECK(v.residual == Rational(-1));
  CHECK(v.identity == "injected_violation");
}
