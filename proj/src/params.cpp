#include "tutte/params.hpp"

#include <algorithm>

namespace tutte {

Rational f_poly(const Rational& a) { return a * a * a + 3 * a * a; }
Rational g_poly(const Rational& y) { return -y * (y + 3) * (y + 3); }

Enclosure g_root(const Rational& v, int bits) {
  if (v >= 0) throw Error("g(y) = v needs v < 0");
  Rational lo = 0, hi = 1;
  while (g_poly(hi) > v) hi *= 2;
  Rational width = pow(Rational(1, 2), bits);
  while (hi - lo >= width) {
    Rational mid = (lo + hi) / 2;
    if (g_poly(mid) > v) lo = mid;
    else hi = mid;
  }
  if (g_poly(hi) == v) lo = hi;
  return {lo, hi, Enclosure::Safe::Exact};
}

namespace {

using Safe = Enclosure::Safe;

constexpr int kRootBits = 48;

Enclosure directed(const Rational& a, const Rational& b, Safe dir) {
  return {std::min(a, b), std::max(a, b), a == b ? Safe::Exact : dir};
}

Rational a_star_of(const Rational& ap, const Rational& q) {
  return 1 + 3 * pow(ap, 4) + 9 * pow(ap, 3) + 3 * ap * ap + 3 * ap * (1 + abs(q));
}

void base_constants(ParamSet& p) {
  const Rational& q = p.q;
  if (q >= 0 && q <= 5) throw Error("q = " + to_string(q) + " lies in [0,5]; no constant ledger");
  if (q > 5) {
    p.param_case = 1;
    p.chi = Enclosure::exact(std::min(Rational(1), Rational((q - 5) / 6)));
    p.eta = Enclosure::exact(Rational(3, 4));
    p.a_lo = Enclosure::exact(Rational(1, 2));
    p.a_hi = Enclosure::exact(q);
    p.b_lo = Enclosure::exact(q);
    p.b_hi = Enclosure::exact(10 * q * q * q);
  } else {
    p.param_case = 2;
    p.chi = Enclosure::exact(std::min(Rational(1), abs(q)));
    p.eta = g_root(q / 2, kRootBits);
    p.eta.direction = p.eta.is_exact() ? Safe::Exact : Safe::Low;
    p.y_star = g_root(q, kRootBits);
    p.y_star.direction = p.y_star.is_exact() ? Safe::Exact : Safe::High;
    p.a_lo = directed(3 + p.eta.lo, 3 + p.eta.hi, Safe::Low);
    p.a_hi = directed(3 + p.y_star.lo, 3 + p.y_star.hi, Safe::High);
    p.b_lo = Enclosure::exact(abs(q) / 3);
    p.b_hi = Enclosure::exact(4 * abs(q) / 3 + 2);
  }
  p.a_star = directed(a_star_of(p.a_hi.lo, q), a_star_of(p.a_hi.hi, q), Safe::High);
  p.big_q = Enclosure::exact(std::max(Rational(1), abs(q)));
  auto mu_of = [&](const Rational& ap) -> Rational { return q * q * ap * p.b_hi.lo * p.b_hi.lo; };
  auto tau_of = [&](const Rational& ap) -> Rational { return abs(q) * ap * ap * (ap + 3) * pow(p.b_hi.lo, 3); };
  p.mu = directed(mu_of(p.a_hi.lo), mu_of(p.a_hi.hi), Safe::High);
  p.tau = directed(tau_of(p.a_hi.lo), tau_of(p.a_hi.hi), Safe::High);
  auto m_of = [&](const Rational& ap) -> Rational { return std::max(Rational(1), std::max(mu_of(ap), tau_of(ap))); };
  p.big_m = directed(m_of(p.a_hi.lo), m_of(p.a_hi.hi), Safe::High);
  p.nu = 3 * p.n - p.m - 2 * p.K;
  if (p.nu < 1) throw Error("nu = 3n - m - 2K = " + std::to_string(p.nu) + " is below 1");
}

void derived_bounds(ParamSet& p) {
  const Rational& q = p.q;
  const Rational& eps = p.epsilon.lo;
  auto l_of = [&](const Rational& eta) -> Rational { return pow(abs(q), 3) * eta * eps / 2; };
  p.small_l = directed(l_of(p.eta.lo), l_of(p.eta.hi), Safe::Low);
  p.big_r = Enclosure::exact(pow(p.b_lo.lo, 3) / (3 * eps));
}

void check_invariants(const ParamSet& p) {
  const Rational& d = p.delta.safe();
  const Rational& e = p.epsilon.safe();
  if (!(d > 0 && d < e && e < p.chi.safe() && p.chi.safe() <= 1)) {
    throw Error("constants violate 0 < delta < epsilon < chi <= 1");
  }
  if (d > e * p.eta.safe() / (6 * p.a_star.safe())) throw Error("delta exceeds epsilon*eta/(6 A*)");
}

}  // namespace

ParamSet param_set(const Rational& q, long n, long m, long K) {
  if (n < 1 || m < 0 || K < 0) throw Error("instance sizes must be positive");
  ParamSet p;
  p.q = q;
  p.n = n;
  p.m = m;
  p.K = K;
  base_constants(p);
  const Rational& qq = p.big_q.lo;
  const Rational chi_nu = pow(p.chi.lo, p.nu);
  p.epsilon = Enclosure::exact(pow(p.b_lo.lo, 3) / 3 * chi_nu * pow(Rational(1, 2), n + 2 * m + 4) *
                               pow(qq, -3 * n + m));
  derived_bounds(p);
  auto delta_of = [&](const Rational& l, const Rational& as, const Rational& mm) -> Rational {
    Rational num = pow(l, n) * pow(qq, -3 * n) * chi_nu;
    Rational den = 16 * as * pow(Rational(3), n) * pow(Rational(2), 6 * n) * pow(mm, n) * pow(Rational(2), 2 * m);
    return num / den * pow(abs(q), 6 * n) / pow(qq, 6 * n);
  };
  p.delta = directed(delta_of(p.small_l.lo, p.a_star.hi, p.big_m.hi), delta_of(p.small_l.hi, p.a_star.lo, p.big_m.lo),
                     Safe::Low);
  check_invariants(p);
  return p;
}

ParamSet param_set_relaxed(const Rational& q, long n, long m, long K, const Rational& epsilon,
                           const Rational& delta) {
  ParamSet p;
  p.q = q;
  p.n = n;
  p.m = m;
  p.K = K;
  p.relaxed = true;
  base_constants(p);
  p.epsilon = Enclosure::exact(epsilon);
  p.delta = Enclosure::exact(delta);
  derived_bounds(p);
  check_invariants(p);
  return p;
}

std::vector<std::pair<std::string, std::string>> ParamSet::table() const {
  auto show = [](const Enclosure& e) {
    if (e.is_exact()) return to_string(e.lo);
    std::string dir = e.direction == Enclosure::Safe::Low ? "low" : "high";
    return "[" + to_string(e.lo) + ", " + to_string(e.hi) + "] safe=" + dir;
  };
  std::vector<std::pair<std::string, std::string>> rows = {
      {"case", param_case == 1 ? "q>5" : "q<0"},
      {"q", to_string(q)},
      {"n", std::to_string(n)},
      {"m", std::to_string(m)},
      {"K", std::to_string(K)},
      {"relaxed", relaxed ? "yes" : "no"},
      {"chi", show(chi)},
      {"eta", show(eta)},
      {"A-", show(a_lo)},
      {"A+", show(a_hi)},
      {"B-", show(b_lo)},
      {"B+", show(b_hi)},
      {"A*", show(a_star)},
      {"Q", show(big_q)},
      {"mu", show(mu)},
      {"tau", show(tau)},
      {"M", show(big_m)},
      {"nu", std::to_string(nu)},
      {"epsilon", show(epsilon)},
      {"L", show(small_l)},
      {"R", show(big_r)},
      {"delta", show(delta)},
  };
  if (param_case == 2) rows.insert(rows.begin() + 8, {"y*", show(y_star)});
  return rows;
}

}  // namespace tutte
