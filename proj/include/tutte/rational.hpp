#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tutte {

/// Exact rational in canonical lowest terms with a positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an exact evaluation would exceed its configured work budget.
/// Never signals a wrong value, only a refusal to continue.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Parses "p/q" or "p" (q > 0 required). Throws Error on malformed input;
/// a zero denominator reports "zero denominator".
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form; integers are printed as "p/1".
std::string to_string(const Rational& r);

Rational pow(const Rational& base, long exponent);
Rational abs(const Rational& r);
int sign(const Rational& r);

bool is_integer(const Rational& r);

/// Smallest integer k >= lo with base^k satisfying pred; base^k evaluated exactly.
/// Used wherever a ceiling-of-logarithm would otherwise be taken.
template <class Pred>
long least_power(const Rational& base, long lo, long hi, Pred pred) {
  Rational p = pow(base, lo);
  for (long k = lo; k <= hi; ++k) {
    if (pred(p)) return k;
    p *= base;
  }
  throw Error("least_power: no exponent up to " + std::to_string(hi));
}

/// Product of all entries, multiplied pairwise in a balanced tree.
Integer product_tree(std::vector<Integer> xs);

/// Floor of log2(|r|) for r != 0, exact.
long floor_log2(const Rational& r);

}  // namespace tutte
