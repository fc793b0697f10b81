#include "sturm/sturm_chain.hpp"

#include <algorithm>
#include <utility>

#include "sturm/errors.hpp"

namespace sturm {

std::string_view to_string(Termination t) {
  switch (t) {
    case Termination::ZeroRemainder:
      return "zero_remainder";
    case Termination::ConstantReached:
      return "constant_reached";
  }
  return "unknown";
}

bool SturmChain::is_regular() const {
  for (std::size_t j = 1; j < members.size(); ++j)
    if (members[j].degree() != members[j - 1].degree() - 1) return false;
  return true;
}

EuclidStep euclid_step(const Polynomial& f_prev, const Polynomial& f_cur) {
  if (f_cur.is_zero()) throw ZeroDivisor("euclid_step: divisor is the zero polynomial");
  auto [q, r] = divmod(f_prev, f_cur);
  return {std::move(q), -r};
}

SturmChain remainder_sequence(const Polynomial& first, const Polynomial& second) {
  SturmChain chain;
  chain.members.push_back(first);
  if (second.is_zero()) {
    chain.termination = first.degree() == 0 ? Termination::ConstantReached : Termination::ZeroRemainder;
    return chain;
  }
  chain.members.push_back(second);
  while (true) {
    const auto& prev = chain.members[chain.members.size() - 2];
    const auto& cur = chain.members.back();
    auto [q, next] = euclid_step(prev, cur);
    chain.quotients.push_back(std::move(q));
    if (next.is_zero()) break;
    chain.members.push_back(std::move(next));
  }
  chain.termination =
      chain.members.back().degree() == 0 ? Termination::ConstantReached : Termination::ZeroRemainder;
  return chain;
}

SturmChain sturm_chain_euclid(const Polynomial& f) {
  if (f.degree() < 1) throw DegreeTooSmall("Sturm chain needs deg f >= 1");
  return remainder_sequence(f, f.derivative());
}

int sign_variations(const SturmChain& chain, const Rational& x) {
  int variations = 0;
  int last = 0;
  for (const auto& member : chain.members) {
    const int s = member.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

int count_real_roots(const SturmChain& chain, const Rational& a, const Rational& b) {
  if (!(a < b)) throw BadInterval("count_real_roots: need a < b, got (" + a.str() + ", " + b.str() + ")");
  const Polynomial& f = chain.front();
  if (f.sign_at(a) == 0) throw EndpointIsRoot("left endpoint " + a.str() + " is a root");
  if (f.sign_at(b) == 0) throw EndpointIsRoot("right endpoint " + b.str() + " is a root");
  return sign_variations(chain, a) - sign_variations(chain, b);
}

std::vector<RootInterval> isolate_roots(const Polynomial& f, const Rational& a, const Rational& b) {
  const SturmChain chain = sturm_chain_euclid(f);
  if (chain.termination == Termination::ZeroRemainder)
    throw NotSquarefree("isolate_roots: f shares a factor with f'; divide by gcd(f, f') first");
  const int total = count_real_roots(chain, a, b);

  // V(c) = V(c+) for the chain of a squarefree f, so V(lo) - V(hi) counts the
  // roots in (lo, hi] even when an interior midpoint is itself a root.
  struct Pending {
    Rational lo, hi;
    int v_lo, v_hi;
  };
  std::vector<RootInterval> out;
  std::vector<Pending> stack;
  if (total > 0) stack.push_back({a, b, sign_variations(chain, a), sign_variations(chain, b)});
  while (!stack.empty()) {
    Pending cur = std::move(stack.back());
    stack.pop_back();
    const int count = cur.v_lo - cur.v_hi;
    if (count == 0) continue;
    if (count == 1) {
      out.push_back({std::move(cur.lo), std::move(cur.hi)});
      continue;
    }
    Rational mid = (cur.lo + cur.hi) / Rational(2);
    const int v_mid = sign_variations(chain, mid);
    // Right half first so the left half is processed next.
    stack.push_back({mid, cur.hi, v_mid, cur.v_hi});
    stack.push_back({std::move(cur.lo), std::move(mid), cur.v_lo, v_mid});
  }
  std::sort(out.begin(), out.end(), [](const RootInterval& x, const RootInterval& y) { return x.lo < y.lo; });
  return out;
}

Rational cauchy_root_bound(const Polynomial& f) {
  if (f.degree() < 1) throw DegreeTooSmall("root bound needs deg f >= 1");
  Rational m;
  for (int k = 0; k < f.degree(); ++k) m = std::max(m, (f.coeff(k) / f.leading()).abs());
  return m + Rational(1);
}

}  // namespace sturm
