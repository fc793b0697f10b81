#pragma once

#include <string_view>
#include <vector>

#include "sturm/polynomial.hpp"
#include "sturm/rational.hpp"

namespace sturm {

enum class Termination {
  ZeroRemainder,    // the last member is a nontrivial gcd factor
  ConstantReached,  // the last member is a nonzero constant
};

std::string_view to_string(Termination t);

/// Signed remainder sequence f_0, f_1, ... with
///   members[j-1] = quotients[j-1] * members[j] - members[j+1]
/// where the member after the last one is zero. There is one quotient per
/// division performed, so quotients.size() == members.size() - 1.
struct SturmChain {
  std::vector<Polynomial> members;
  std::vector<Polynomial> quotients;
  Termination termination = Termination::ConstantReached;

  const Polynomial& front() const { return members.front(); }
  // True when every degree drops by exactly one.
  bool is_regular() const;
};

struct EuclidStep {
  Polynomial quotient;
  Polynomial next;
};

// f_prev = quotient * f_cur - next, deg next < deg f_cur. Throws ZeroDivisor.
EuclidStep euclid_step(const Polynomial& f_prev, const Polynomial& f_cur);

// The scheme started from an arbitrary pair (first, second); second may be zero.
SturmChain remainder_sequence(const Polynomial& first, const Polynomial& second);

// f, f', then the signed remainders. Throws DegreeTooSmall when deg f < 1.
SturmChain sturm_chain_euclid(const Polynomial& f);

// Sign changes in (members[k](x)) after deleting zeros.
int sign_variations(const SturmChain& chain, const Rational& x);

// Distinct real roots of chain.front() in (a, b]. Throws BadInterval when
// a >= b and EndpointIsRoot when f(a) = 0 or f(b) = 0.
int count_real_roots(const SturmChain& chain, const Rational& a, const Rational& b);

/// Half-open isolating interval (lo, hi] holding exactly one root.
struct RootInterval {
  Rational lo;
  Rational hi;

  bool contains(const Rational& x) const { return lo < x && x <= hi; }
  friend bool operator==(const RootInterval&, const RootInterval&) = default;
};

// Midpoint bisection down to intervals with variation difference one.
// f must be squarefree (NotSquarefree otherwise); errors otherwise as
// count_real_roots.
std::vector<RootInterval> isolate_roots(const Polynomial& f, const Rational& a, const Rational& b);

// B = 1 + max |a_k / a_n|: every real root lies strictly inside (-B, B).
Rational cauchy_root_bound(const Polynomial& f);

}  // namespace sturm
