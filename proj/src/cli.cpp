#include "sturm/cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sturm/campaign.hpp"
#include "sturm/errors.hpp"
#include "sturm/euler.hpp"
#include "sturm/identities.hpp"
#include "sturm/jacobi.hpp"
#include "sturm/poly_io.hpp"
#include "sturm/sturm_chain.hpp"

namespace sturm::cli {

namespace {

using nlohmann::json;

struct RunConfig {
  std::string input_path;
  std::string coeffs;
  std::string second;
  std::uint64_t seed = 1;
  std::optional<int> trials;
  std::string degrees;
  int m = 2;
  std::string n_list = "10,20,40,80";
  std::string interval;
  bool json = false;
  std::string out_path;
  bool inject_violation = false;
  unsigned threads = 0;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::pair<std::string, std::string> split_range(const std::string& text, const char* what) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw UsageError(std::string(what) + " must look like A..B, got '" + text + "'");
  return {text.substr(0, dots), text.substr(dots + 2)};
}

int parse_int(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::logic_error&) {
    throw UsageError(std::string(what) + ": not an integer: '" + s + "'");
  }
}

std::pair<int, int> degree_range(const RunConfig& c, int lo, int hi) {
  if (c.degrees.empty()) return {lo, hi};
  const auto [a, b] = split_range(c.degrees, "--degrees");
  const int dmin = parse_int(a, "--degrees");
  const int dmax = parse_int(b, "--degrees");
  if (dmin < 2 || dmax < dmin) throw UsageError("--degrees needs 2 <= MIN <= MAX");
  return {dmin, dmax};
}

std::vector<int> int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_int(item, what));
  if (out.empty()) throw UsageError(std::string(what) + " is empty");
  return out;
}

int trials_or(const RunConfig& c, int fallback) {
  if (!c.trials) return fallback;
  if (*c.trials < 1) throw UsageError("--trials must be >= 1");
  return *c.trials;
}

Polynomial input_polynomial(const RunConfig& c) {
  if (!c.input_path.empty() && !c.coeffs.empty()) throw UsageError("give either --input or --coeffs, not both");
  if (!c.input_path.empty()) return read_polynomial_file(c.input_path);
  if (!c.coeffs.empty()) return parse_coeff_list(c.coeffs);
  throw UsageError("a polynomial is required (--input PATH or --coeffs LIST)");
}

json poly_list(const std::vector<Polynomial>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(p.str());
  return out;
}

int cmd_sturm(const RunConfig& c, std::ostream& out) {
  const Polynomial f = input_polynomial(c);
  const bool pair = !c.second.empty();
  const Polynomial g = pair ? parse_coeff_list(c.second) : Polynomial{};
  const SturmChain chain = pair ? remainder_sequence(f, g) : sturm_chain_euclid(f);
  const BTable table = pair ? BTable::from_pair(f, g) : BTable::from_polynomial(f);

  json report;
  report["mode"] = pair ? "pair" : "derivative";
  report["f"] = polynomial_to_json(f);
  if (pair) report["second"] = polynomial_to_json(g);
  report["euclid"] = poly_list(chain.members);
  report["termination"] = std::string(to_string(chain.termination));

  std::vector<Polynomial> jac;
  try {
    jac = members_jacobi(table, table.n());
  } catch (const DegenerateChain& e) {
    report["degenerate"] = {{"index", e.index()}, {"witness", e.witness()}};
    if (c.json) {
      out << report.dump() << '\n';
    } else {
      out << "euclid chain:\n";
      for (const auto& p : chain.members) out << "  " << p << '\n';
      out << "determinantal route: c(" << e.index() << ") = " << e.witness() << ", chain is degenerate\n";
    }
    return kDegenerate;
  }

  std::vector<Polynomial> ref(chain.members.begin() + (pair ? 0 : 1), chain.members.end());
  bool all = ref.size() == jac.size();
  json members = json::array();
  for (std::size_t k = 0; k < std::max(ref.size(), jac.size()); ++k) {
    const int idx = static_cast<int>(k) + 1;
    const bool eq = k < ref.size() && k < jac.size() && ref[k] == jac[k];
    all = all && eq;
    json m{{"index", idx}, {"equal", eq}};
    if (k < ref.size()) m["euclid"] = ref[k].str();
    if (k < jac.size()) m["jacobi"] = jac[k].str();
    if (k < jac.size()) m["leading"] = jac[k].leading().str();
    members.push_back(std::move(m));
  }
  const GammaSeq gamma = gamma_seq(table, std::max<int>(1, static_cast<int>(jac.size())));
  json gammas = json::array();
  json cs = json::array();
  for (std::size_t k = 0; k < jac.size(); ++k) {
    gammas.push_back(gamma.values[k].str());
    cs.push_back(table.c(static_cast<int>(k) + 1).str());
  }
  report["members"] = members;
  report["gamma"] = gammas;
  report["c"] = cs;
  report["all_equal"] = all;

  if (c.json) {
    out << report.dump() << '\n';
  } else {
    out << (pair ? "pair " : "f = ") << f << (pair ? ", " + g.str() : std::string()) << '\n';
    out << "termination: " << to_string(chain.termination) << '\n';
    for (const auto& m : members) {
      out << "  f_" << m["index"].get<int>() << ": " << m.value("euclid", std::string("-")) << "  ["
          << (m["equal"].get<bool>() ? "match" : "MISMATCH") << "]\n";
    }
    for (std::size_t k = 0; k < jac.size(); ++k)
      out << "  gamma_" << k + 1 << " = " << gammas[k].get<std::string>() << ", c(" << k + 1
          << ") = " << cs[k].get<std::string>() << '\n';
  }
  return all ? kPass : kViolation;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
  CampaignConfig cfg;
  cfg.seed = c.seed;
  cfg.trials = trials_or(c, 200);
  std::tie(cfg.deg_min, cfg.deg_max) = degree_range(c, 3, 8);
  cfg.threads = c.threads;

  json summary = json::object();
  bool all = true;
  auto record = [&](const IdentityReport& r) {
    auto& s = summary[r.identity];
    if (s.is_null()) s = {{"passed", 0}, {"failed", 0}};
    s[r.passed() ? "passed" : "failed"] = s[r.passed() ? "passed" : "failed"].get<int>() + 1;
    all = all && r.passed();
    if (c.json) out << to_json(r).dump() << '\n';
  };
  for (const auto& name : suite_names())
    for (const auto& r : run_suite(name, cfg)) record(r);
  if (c.inject_violation) record(injected_violation(c.seed));

  if (c.json) {
    out << json{{"summary", summary}, {"all_passed", all}, {"seed", c.seed}, {"trials", cfg.trials}}.dump() << '\n';
  } else {
    for (const auto& [name, s] : summary.items())
      out << name << ": " << s["passed"].get<int>() << " passed, " << s["failed"].get<int>() << " failed\n";
    out << (all ? "all identities hold" : "VIOLATION") << '\n';
  }
  return all ? kPass : kViolation;
}

int cmd_roots(const RunConfig& c, std::ostream& out) {
  const Polynomial f = input_polynomial(c);
  if (f.degree() < 1) throw UsageError("roots needs deg f >= 1");
  Rational a;
  Rational b;
  if (c.interval.empty()) {
    b = cauchy_root_bound(f);
    a = -b;
  } else {
    const auto [lo, hi] = split_range(c.interval, "--interval");
    a = Rational::parse(lo);
    b = Rational::parse(hi);
  }
  const SturmChain chain = sturm_chain_euclid(f);
  const int count = count_real_roots(chain, a, b);
  const Polynomial sf = squarefree_part(f);
  const auto intervals = sf.degree() >= 1 ? isolate_roots(sf, a, b) : std::vector<RootInterval>{};
  json iv = json::array();
  for (const auto& r : intervals) iv.push_back({r.lo.str(), r.hi.str()});
  if (c.json) {
    out << json{{"f", polynomial_to_json(f)},
                {"interval", {a.str(), b.str()}},
                {"count", count},
                {"squarefree", sf.degree() == f.degree()},
                {"intervals", iv}}
               .dump()
        << '\n';
  } else {
    out << "f = " << f << '\n' << "distinct real roots in (" << a << ", " << b << "]: " << count << '\n';
    for (const auto& r : intervals) out << "  (" << r.lo << ", " << r.hi << "]\n";
  }
  return kPass;
}

int cmd_euler(const RunConfig& c, std::ostream& out) {
  if (c.m < 1) throw UsageError("--m must be >= 1");
  const std::vector<int> ns = int_list(c.n_list, "--n-list");
  for (int n : ns)
    if (n <= c.m) throw UsageError("--n-list entries must exceed --m");
  bool all = true;
  json report;

  json sweep = json::array();
  for (int n = 1; n <= 12; ++n) {
    const bool ok = check_euler_hypergeom(n).passed() && check_gauss_even(n).passed();
    all = all && ok;
    sweep.push_back({{"n", n}, {"passed", ok}});
  }
  report["euler_hypergeom"] = sweep;

  Rng rng(trial_seed(c.seed, 0));
  const int specs = trials_or(c, 50);
  int cauchy_ok = 0;
  for (int t = 0; t < specs; ++t) {
    const auto m = static_cast<std::size_t>(uniform_int(rng, 1, 6));
    CauchySpec s{random_distinct_rationals(rng, m, 20, 4), random_distinct_rationals(rng, m, 20, 4)};
    try {
      if (cauchy_closed_form(s) == cauchy_brute(s)) ++cauchy_ok;
    } catch (const SingularPair&) {
      --t;
      continue;
    }
  }
  all = all && cauchy_ok == specs;
  report["cauchy"] = {{"specs", specs}, {"matching", cauchy_ok}};

  json table = json::array();
  for (int m = 1; m <= 4; ++m) {
    const Rational brute = hilbert_variant_brute(m);
    const Rational closed = hilbert_variant_closed(m);
    const Rational cinf = c_inf_det(m);
    const bool ok = brute == closed && cinf == c_inf_factored(m);
    all = all && ok;
    table.push_back({{"m", m}, {"hilbert_variant", closed.str()}, {"c_inf", cinf.str()}, {"exact", ok}});
  }
  report["factorization"] = table;

  const ConvergenceReport conv = asymptotic_check(c.m, ns);
  all = all && conv.passed();
  json rows = json::array();
  for (const auto& r : conv.rows)
    rows.push_back({{"n", r.n}, {"s", r.value.str()}, {"deviation", r.deviation.str()}, {"ratio", r.ratio.str()}});
  report["asymptotic"] = {{"m", c.m}, {"limit", conv.limit.str()}, {"rows", rows}, {"passed", conv.passed()}};
  report["all_passed"] = all;

  if (c.json) {
    out << report.dump() << '\n';
  } else {
    out << "E_n = F(-n, -n+1/2, 1/2, -x^2/4n^2) for n <= 12: " << (sweep.size() == 12 ? "checked" : "") << '\n';
    out << "Cauchy closed form vs elimination: " << cauchy_ok << "/" << specs << '\n';
    for (const auto& row : table)
      out << "  m=" << row["m"].get<int>() << "  hilbert variant " << row["hilbert_variant"].get<std::string>()
          << "  c_inf " << row["c_inf"].get<std::string>() << (row["exact"].get<bool>() ? "" : "  MISMATCH") << '\n';
    out << "s(n) for m=" << c.m << " -> " << conv.limit << '\n';
    for (const auto& r : conv.rows)
      out << "  n=" << r.n << "  s=" << r.value.to_double() << "  dev=" << r.deviation.to_double()
          << "  ratio=" << r.ratio.to_double() << '\n';
    out << (all ? "all checks pass" : "CHECK FAILED") << '\n';
  }
  return all ? kPass : kViolation;
}

int cmd_bench(const RunConfig& c, std::ostream& out) {
  const auto [dmin, dmax] = degree_range(c, 4, 12);
  const int reps = trials_or(c, 10);
  using clock = std::chrono::steady_clock;
  out << "degree,route,rep,nanos,max_bits,correct\n";
  bool all = true;
  for (int d = dmin; d <= dmax; ++d) {
    const Polynomial f = f_n_poly(d);
    const SturmChain ref = sturm_chain_euclid(f);
    std::vector<Polynomial> jac{f};
    for (auto& p : members_jacobi(BTable::from_polynomial(f), d)) jac.push_back(std::move(p));
    const bool correct = ref.members == jac;
    all = all && correct;
    std::size_t bits = 0;
    for (const auto& p : ref.members) bits = std::max(bits, p.max_bit_length());

    for (const char* route : {"euclid", "jacobi"}) {
      const bool euclid = route[0] == 'e';
      for (int rep = 0; rep < reps; ++rep) {
        const auto t0 = clock::now();
        if (euclid) {
          (void)sturm_chain_euclid(f);
        } else {
          (void)members_jacobi(BTable::from_polynomial(f), d);
        }
        const auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(clock::now() - t0).count();
        out << d << ',' << route << ',' << rep << ',' << ns << ',' << bits << ',' << (correct ? "true" : "false")
            << '\n';
      }
    }
  }
  return all ? kPass : kViolation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sturm sequences by Euclid and by determinants, with exact identity checks"};
  app.require_subcommand(1);
  RunConfig c;

  auto add_input = [&](CLI::App* s) {
    s->add_option("--input", c.input_path, "JSON file {\"coeffs\": [...]} in descending order");
    s->add_option("--coeffs", c.coeffs, "comma-separated coefficients, highest degree first");
  };
  auto add_common = [&](CLI::App* s) {
    s->add_flag("--json", c.json, "emit JSON instead of text");
    s->add_option("--out", c.out_path, "write the report to PATH");
  };

  auto* sturm = app.add_subcommand("sturm", "build the chain by both routes and compare");
  add_input(sturm);
  sturm->add_option("--second", c.second, "second polynomial of a general pair (coefficients)");
  add_common(sturm);

  auto* verify = app.add_subcommand("verify", "seeded identity campaigns");
  verify->add_option("--seed", c.seed);
  verify->add_option("--trials", c.trials, "trials per suite (default 200)");
  verify->add_option("--degrees", c.degrees, "MIN..MAX degree range (default 3..8)");
  verify->add_option("--threads", c.threads, "worker threads (0: all cores)");
  verify->add_flag("--inject-violation", c.inject_violation, "append a known failing instance");
  add_common(verify);

  auto* roots = app.add_subcommand("roots", "count and isolate real roots");
  add_input(roots);
  roots->add_option("--interval", c.interval, "A..B (default: Cauchy bound)");
  add_common(roots);

  auto* euler = app.add_subcommand("euler", "Euler polynomials, Cauchy determinants, asymptotics");
  euler->add_option("--m", c.m, "order of the asymptotic check (default 2)");
  euler->add_option("--n-list", c.n_list, "comma-separated degrees (default 10,20,40,80)");
  euler->add_option("--seed", c.seed);
  euler->add_option("--trials", c.trials, "random Cauchy specs (default 50)");
  add_common(euler);

  auto* bench = app.add_subcommand("bench", "time Euclid against the determinantal route");
  bench->add_option("--degrees", c.degrees, "MIN..MAX (default 4..12)");
  bench->add_option("--trials", c.trials, "repetitions per degree and route (default 10)");
  bench->add_option("--out", c.out_path, "write the CSV to PATH");

  std::vector<std::string> rev(args.rbegin(), args.rend() - 1);
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsage;
  }

  std::ofstream file;
  if (!c.out_path.empty()) {
    file.open(c.out_path);
    if (!file) {
      err << "cannot write " << c.out_path << '\n';
      return kUsage;
    }
  }
  std::ostream& sink = c.out_path.empty() ? out : file;

  const std::map<CLI::App*, std::function<int(const RunConfig&, std::ostream&)>> commands{
      {sturm, cmd_sturm}, {verify, cmd_verify}, {roots, cmd_roots}, {euler, cmd_euler}, {bench, cmd_bench}};
  try {
    for (const auto& [sub, fn] : commands)
      if (sub->parsed()) return fn(c, sink);
  } catch (const UsageError& e) {
    err << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const DegenerateChain& e) {
    err << e.what() << '\n';
    return kDegenerate;
  } catch (const NotSquarefree& e) {
    err << e.what() << '\n';
    return kDegenerate;
  } catch (const DegreeTooSmall& e) {
    err << e.what() << '\n';
    return kDegenerate;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace sturm::cli
