#pragma once

#include "tutte/rational.hpp"

#include <string>
#include <vector>

namespace tutte {

/// A constant known exactly (lo == hi) or enclosed; safe() is the end every
/// downstream inequality tolerates.
struct Enclosure {
  enum class Safe { Exact, Low, High };
  Rational lo, hi;
  Safe direction = Safe::Exact;

  static Enclosure exact(Rational v) { return {v, v, Safe::Exact}; }
  const Rational& safe() const { return direction == Safe::High ? hi : lo; }
  bool is_exact() const { return lo == hi; }
};

/// Constants of the independent-set reduction for one (q, n, m, K).
struct ParamSet {
  int param_case = 1;  // 1: q > 5, 2: q < 0
  Rational q;
  long n = 0, m = 0, K = 0;
  bool relaxed = false;

  Enclosure chi, eta, a_lo, a_hi, b_lo, b_hi;  // chi, eta, A-, A+, B-, B+
  Enclosure y_star;                            // q < 0 only: g(y*) = q
  Enclosure a_star, big_q, mu, tau, big_m;     // A*, Q, mu, tau, M
  long nu = 0;
  Enclosure epsilon, small_l, big_r, delta;    // epsilon, L, R, delta

  bool l_at_most_one() const { return small_l.safe() <= 1; }
  bool r_at_least_one() const { return big_r.safe() >= 1; }

  /// Name/value lines for the CLI and reports.
  std::vector<std::pair<std::string, std::string>> table() const;
};

/// Full constant ledger; q outside [0,5], nu = 3n - m - 2K >= 1.
ParamSet param_set(const Rational& q, long n, long m, long K);

/// Same ledger with caller-chosen epsilon and delta; requires delta <= epsilon*eta/(6 A*)
/// and 0 < delta < epsilon < chi.
ParamSet param_set_relaxed(const Rational& q, long n, long m, long K, const Rational& epsilon,
                           const Rational& delta);

/// g(y) = f(-3-y) = -y (y+3)^2.
Rational g_poly(const Rational& y);
/// f(a) = a^3 + 3 a^2.
Rational f_poly(const Rational& a);

/// Encloses the positive root of g(y) = v (v < 0) to width below 2^-bits.
Enclosure g_root(const Rational& v, int bits);

}  // namespace tutte
