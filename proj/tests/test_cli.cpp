#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "sturm/cli.hpp"
#include "sturm/poly_io.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "sturm");
  std::ostringstream out;
  std::ostringstream err;
  const int code = sturm::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("chain command") {
  const Run r = run({"sturm", "--coeffs", "1,0,-1", "--json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["euclid"] == nlohmann::json::array({"x^2 - 1", "2*x", "1"}));
  CHECK(j["all_equal"] == true);
  CHECK(j["members"][0]["jacobi"] == "2*x");
  CHECK(j["members"][1]["jacobi"] == "1");
  CHECK(j["termination"] == "constant_reached");

  const Run cubic = run({"sturm", "--coeffs", "1,0,-3,1", "--json"});
  CHECK(cubic.code == 0);
  const auto c = nlohmann::json::parse(cubic.out);
  CHECK(c["euclid"] == nlohmann::json::array({"x^3 - 3*x + 1", "3*x^2 - 3", "2*x - 1", "9/4"}));
  CHECK(c["gamma"] == nlohmann::json::array({"3", "-1/9", "1/108"}));
  CHECK(c["c"] == nlohmann::json::array({"1", "-18", "243"}));

  const Run degenerate = run({"sturm", "--coeffs", "1,0,0"});
  CHECK(degenerate.code == 2);
  CHECK(degenerate.out.find("c(2) = 0") != std::string::npos);
  CHECK(run({"sturm", "--coeffs", "1,0,0", "--second", "1,0"}).code == 2);
  CHECK(run({"sturm", "--coeffs", "1,x"}).code == 3);
  CHECK(run({"sturm"}).code == 3);
  CHECK(run({}).code == 3);
  CHECK(run({"frobnicate"}).code == 3);

  const Run pair = run({"sturm", "--coeffs", "1,0,-3,1", "--second", "3,0,-3", "--json"});
  CHECK(pair.code == 0);
  CHECK(nlohmann::json::parse(pair.out)["mode"] == "pair");

  const auto path = std::filesystem::temp_directory_path() / "sturm_cli_test.json";
  {
    std::ofstream out(path);
    out << R"({"coeffs": ["1", "0", "-1"]})";
  }
  CHECK(run({"sturm", "--input", path.string()}).code == 0);
  std::filesystem::remove(path);
  CHECK(run({"sturm", "--input", path.string()}).code == 3);
}

TEST_CASE("verify command") {
  const Run a = run({"verify", "--seed", "9", "--trials", "20", "--json", "--threads", "1"});
  const Run b = run({"verify", "--seed", "9", "--trials", "20", "--json", "--threads", "4"});
  const Run c = run({"verify", "--seed", "9", "--trials", "20", "--json"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
  CHECK(a.out != run({"verify", "--seed", "10", "--trials", "20", "--json"}).out);
  const auto summary = nlohmann::json::parse(lines(a.out).back());
  CHECK(summary["all_passed"] == true);
  CHECK(summary["trials"] == 20);

  const Run bad = run({"verify", "--seed", "9", "--trials", "5", "--inject-violation", "--json"});
  CHECK(bad.code == 1);
  CHECK(nlohmann::json::parse(lines(bad.out).back())["all_passed"] == false);
  CHECK(run({"verify", "--degrees", "8..3"}).code == 3);
  CHECK(run({"verify", "--degrees", "1..5"}).code == 3);
  CHECK(run({"verify", "--trials", "0"}).code == 3);
}

TEST_CASE("roots command") {
  const Run r = run({"roots", "--coeffs", "1,0,-1", "--json"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["count"] == 2);
  CHECK(nlohmann::json::parse(run({"roots", "--coeffs", "1,0,1", "--json"}).out)["count"] == 0);
  const auto cubic = nlohmann::json::parse(run({"roots", "--coeffs", "1,0,-3,1", "--json"}).out);
  CHECK(cubic["count"] == 3);
  CHECK(cubic["intervals"].size() == 3);
  CHECK(nlohmann::json::parse(run({"roots", "--coeffs", "1,0,-3,1", "--interval", "0..2", "--json"}).out)["count"] ==
        2);
  const auto repeated = nlohmann::json::parse(run({"roots", "--coeffs", "1,-2,1", "--json"}).out);
  CHECK(repeated["count"] == 1);
  CHECK(repeated["squarefree"] == false);
  CHECK(run({"roots", "--coeffs", "1,0,-1", "--interval", "1..2"}).code == 3);
}

TEST_CASE("euler and bench commands") {
  const Run e = run({"euler", "--m", "1", "--trials", "10", "--json"});
  CHECK(e.code == 0);
  const auto j = nlohmann::json::parse(e.out);
  CHECK(j["all_passed"] == true);
  CHECK(j["asymptotic"]["limit"] == "-2/3");

  const Run b = run({"bench"});
  CHECK(b.code == 0);
  const auto rows = lines(b.out);
  REQUIRE(rows.size() == 1 + 2 * 9 * 10);
  CHECK(rows.front() == "degree,route,rep,nanos,max_bits,correct");
  int euclid = 0;
  int jacobi = 0;
  for (std::size_t k = 1; k < rows.size(); ++k) {
    CHECK(rows[k].ends_with(",true"));
    euclid += rows[k].find(",euclid,") != std::string::npos;
    jacobi += rows[k].find(",jacobi,") != std::string::npos;
  }
  CHECK(euclid == 90);
  CHECK(jacobi == 90);
}
