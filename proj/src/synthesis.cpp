#include "tutte/synthesis.hpp"

#include <algorithm>

namespace tutte {

Implementation implement_beta(const Gadget& alpha2, const Rational& q, const Rational& delta) {
  if (delta <= 0) throw Error("delta must be positive");
  Rational a2 = alpha2.closed_form(q).weight;
  if (!(a2 > -2 && a2 < 0)) throw Error("alpha2 = " + to_string(a2) + " is not in (-2,0)");
  Rational base = abs(1 + a2);
  long k = least_power(base, 1, 1'000'000, [&](const Rational& p) { return p < delta; });
  Implementation impl = make_implementation(Gadget::thicken(alpha2, k), q, Rational(-1));
  if (!(abs(impl.error.lo) < delta)) throw Error("thickening missed |1+beta| < delta");
  impl.error = {-delta, delta};
  return impl;
}

Implementation implement_beta(const Rational& alpha2, const Rational& q, const Rational& delta) {
  return implement_beta(Gadget::edge(alpha2), q, delta);
}

bool a_accepted(const Rational& a, const Rational& q, const Rational& epsilon) {
  Rational v = f_poly(a);
  return q + epsilon < v && v <= q + 2 * epsilon;
}

namespace {

// Bracket with f(lo) <= v < f(hi) on the increasing branch of f for the sign of q.
Interval initial_bracket(const Rational& q, const Rational& v) {
  if (q > 0) {
    if (v <= 0) throw Error("f(t) = v needs v > 0 on the positive branch");
    Rational hi = 1;
    while (f_poly(hi) <= v) hi *= 2;
    return {Rational(0), hi};
  }
  if (v >= 0) throw Error("f(t) = v needs v < 0 on the branch below -3");
  Rational span = 1;
  while (f_poly(-3 - span) > v) span *= 2;
  return {-3 - span, Rational(-3)};
}

void bisect(Interval& r, const Rational& v) {
  Rational mid = (r.lo + r.hi) / 2;
  if (f_poly(mid) <= v) r.lo = mid;
  else r.hi = mid;
}

}  // namespace

Interval f_root(const Rational& q, const Rational& v, const Rational& width) {
  Interval r = initial_bracket(q, v);
  while (r.width() >= width) bisect(r, v);
  return r;
}

Interval a_acceptance_interval(const Rational& q, const Rational& epsilon) {
  if (epsilon <= 0) throw Error("epsilon must be positive");
  const Rational v1 = q + epsilon, v2 = q + 2 * epsilon;
  Interval r1 = initial_bracket(q, v1), r2 = initial_bracket(q, v2);
  for (int step = 0; step < 100'000; ++step) {
    // f(r1.hi) > q+eps and f(r2.lo) <= q+2eps, so [r1.hi, r2.lo] is accepted throughout.
    Rational gap = r2.lo - r1.hi;
    if (gap > 0 && 16 * (r1.width() + r2.width()) <= gap) return {r1.hi, r2.lo};
    bisect(r1, v1);
    bisect(r2, v2);
  }
  throw Error("acceptance interval for a did not separate");
}

Synthesis implement_a(const ParamSet& params, const BasePoints& base, WalkStyle style) {
  const Rational& q = params.q;
  if (base.q != q) throw Error("base points use a different q");
  const Rational& eps = params.epsilon.safe();
  Synthesis out;
  out.window = a_acceptance_interval(q, eps);
  Rational pi = std::min(out.window.width(), Rational(1));
  Rational target = q > 0 ? 1 + out.window.hi : 1 + out.window.lo;
  out.plan = hyperbola_walk(base, target, pi, style);
  out.impl = out.plan.result;
  const Rational& a = out.impl.effective_weight;
  if (!a_accepted(a, q, eps)) throw Error("implemented a = " + to_string(a) + " fails q+eps < f(a) <= q+2eps");
  if (abs(a) < params.a_lo.safe() || abs(a) > params.a_hi.safe()) throw Error("implemented a violates A- <= |a| <= A+");
  if (abs(a * a * (a + 3)) < params.eta.safe()) throw Error("implemented a violates |a^2(a+3)| >= eta");
  return out;
}

std::pair<Rational, Rational> b_bounds(const Rational& q) {
  if (q > 0) return {q, 10 * q * q * q};
  return {abs(q) / 3, 4 * abs(q) / 3 + 2};
}

Synthesis implement_b(const Rational& q, const Rational& a, const Rational& delta, const BasePoints& base,
                      WalkStyle style) {
  if (base.q != q) throw Error("base points use a different q");
  if (delta <= 0) throw Error("delta must be positive");
  Rational c = a * a + 3 * a + q;
  Rational target = 1 - c;  // y-coordinate of b = -c
  if (q > 0 && target >= -1) throw Error("c = " + to_string(c) + " is too small for a negative target");
  if (q < 0 && target <= 1) throw Error("c = " + to_string(c) + " is not negative");
  Synthesis out;
  out.window = {-c - delta, -c + delta};
  out.plan = hyperbola_walk(base, target, std::min(delta, Rational(1)), style);
  out.impl = out.plan.result;
  const Rational& b = out.impl.effective_weight;
  if (!out.window.contains(b)) throw Error("implemented b misses [-c-delta, -c+delta]");
  auto [lo, hi] = b_bounds(q);
  if (abs(b) < lo || abs(b) > hi) throw Error("implemented b violates B- <= |b| <= B+");
  return out;
}

BasePoints ShiftCertificate::base() const {
  BasePoints b;
  b.q = q;
  b.first = first.gadget;
  b.second = second.gadget;
  b.third = third.gadget;
  return b;
}

namespace {

bool inside_unit(const Rational& y) { return y > -1 && y < 1; }

// Least k (odd only when requested) whose k-stretch of g lands strictly inside (-1,1).
Gadget stretch_into_unit(const Gadget& g, const Rational& q, bool odd_only) {
  Rational x = g.closed_form(q).weight;
  x = q / x + 1;
  Rational p = x;
  for (long k = 1; k < 100'000; ++k, p *= x) {
    if (odd_only && k % 2 == 0) continue;
    if (p == 1) continue;
    if (inside_unit(q / (p - 1) + 1)) return Gadget::stretch(g, k);
  }
  throw Error("no stretch reaches (-1,1)");
}

ShiftCertificate direct_certificate(const Rational& x, const Rational& y) {
  ShiftCertificate c;
  c.x = x;
  c.y = y;
  c.q = (x - 1) * (y - 1);
  const Rational& q = c.q;
  Gadget e = Gadget::edge(y - 1);
  Gadget second = e;
  if (x < 0 && y < 0 && q > 5) {
    if (x < -1) {
      c.region = "x<-1&y<-1";
      second = stretch_into_unit(e, q, true);
    } else {
      // Series with a walked gadget moves x into (1-q/2, -1), where y < -1 as well.
      c.region = "-1<=x<0";
      Rational ax = abs(x);
      Rational low_y = 1 + q / ((q / 2 - 1) / ax - 1);
      Rational high_y = ax == 1 ? Rational(low_y + 2) : Rational(1 + q / (1 / ax - 1));
      Rational target = (low_y + high_y) / 2;
      Rational pi = std::min(Rational((high_y - low_y) / 4), Rational(1));
      WalkPlan plan = hyperbola_walk(BasePoints{q, e, std::nullopt, std::nullopt}, target, pi);
      Gadget both = Gadget::series(e, plan.result.gadget);
      Rational yb = both.closed_form(q).weight + 1;
      Rational xb = q / (yb - 1) + 1;
      if (!(xb < -1 && yb < -1)) throw Error("series step did not reach x < -1, y < -1");
      second = stretch_into_unit(both, q, true);
    }
  } else if (x > 1 && y < -1) {
    c.region = "x>1&y<-1";
    second = stretch_into_unit(e, q, false);
  } else {
    throw Error("no certificate (open or exact-easy point)");
  }
  c.first = make_implementation(e, q, y - 1);
  c.third = c.first;
  c.second = make_implementation(second, q, second.closed_form(q).weight);
  if (abs(c.first.y()) <= 1 || !inside_unit(c.second.y()) || c.third.y() >= 0) {
    throw Error("certificate points fall outside their ranges");
  }
  return c;
}

}  // namespace

ShiftCertificate shift_certificate(const Rational& x, const Rational& y) {
  const Rational q = (x - 1) * (y - 1);
  if (q >= 0 && q <= 5) throw Error("no certificate (open or exact-easy point)");
  bool swap = false;
  if (x < 0 && y < 0 && q > 5) swap = !(x < -1 && y < -1) && !(x >= -1);
  else if (y > 1 && x < -1) swap = true;
  if (!swap) return direct_certificate(x, y);
  ShiftCertificate c = direct_certificate(y, x);
  c.dual = true;
  c.x = x;
  c.y = y;
  return c;
}

}  // namespace tutte
