#pragma once

#include "tutte/params.hpp"
#include "tutte/walk.hpp"

#include <string>

namespace tutte {

/// Least k with |1+alpha2|^k < delta, realized by k-thickening. alpha2 in (-2,0).
Implementation implement_beta(const Gadget& alpha2, const Rational& q, const Rational& delta);
Implementation implement_beta(const Rational& alpha2, const Rational& q, const Rational& delta);

/// q + eps < f(a) <= q + 2 eps, with f(a) = a^3 + 3a^2.
bool a_accepted(const Rational& a, const Rational& q, const Rational& epsilon);

/// Rational sub-interval of {a : q+eps < f(a) <= q+2eps} on the branch used by the case
/// (a > 0 for q > 0, a < -3 for q < 0), found by dyadic bisection.
Interval a_acceptance_interval(const Rational& q, const Rational& epsilon);

/// Dyadic bracket [lo, hi] of the root of f(t) = v on the case branch, width below `width`.
Interval f_root(const Rational& q, const Rational& v, const Rational& width);

struct Synthesis {
  Implementation impl;
  WalkPlan plan;
  Interval window;  // weights the walk was allowed to land on
};

/// Weight a with q+eps < f(a) <= q+2eps and the A-, A+, eta bounds of the ledger.
Synthesis implement_a(const ParamSet& params, const BasePoints& base, WalkStyle style = WalkStyle::Chain);

/// (B-, B+) for the sign of q.
std::pair<Rational, Rational> b_bounds(const Rational& q);

/// Weight b with -c-delta <= b <= -c+delta, c = a^2 + 3a + q.
Synthesis implement_b(const Rational& q, const Rational& a, const Rational& delta, const BasePoints& base,
                      WalkStyle style = WalkStyle::Chain);

/// Gadgets over one edge of weight y-1 reaching y1 outside [-1,1], y2 in (-1,1), y3 < 0.
struct ShiftCertificate {
  Rational x, y, q;
  std::string region;
  bool dual = false;  // gadgets act on the plane dual, at (y, x)
  Implementation first, second, third;
  BasePoints base() const;
};

ShiftCertificate shift_certificate(const Rational& x, const Rational& y);

}  // namespace tutte
