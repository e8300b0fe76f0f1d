#include "tutte/rational.hpp"

#include <cctype>

namespace tutte {

namespace {

bool valid_integer(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer(num, true)) throw Error("malformed rational '" + std::string(text) + "'");
  if (!valid_integer(den, false)) throw Error("malformed rational '" + std::string(text) + "'");
  Integer n(std::string(num[0] == '+' ? num.substr(1) : num));
  Integer d{std::string(den)};
  if (d == 0) throw Error("zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw Error("pow: zero to a negative power");
    return pow(Rational(1) / base, -exponent);
  }
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return out;  // powers of coprime parts stay coprime
}

Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

int sign(const Rational& r) { return sgn(r); }

bool is_integer(const Rational& r) { return r.get_den() == 1; }

long floor_log2(const Rational& r) {
  if (r == 0) throw Error("floor_log2 of zero");
  Rational a = abs(r);
  long e = static_cast<long>(mpz_sizeinbase(a.get_num_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(a.get_den_mpz_t(), 2));
  // 2^(e-1) < a < 2^(e+1); settle the remaining bit exactly
  Rational p = pow(Rational(2), e);
  while (p > a) {
    --e;
    p /= 2;
  }
  while (p * 2 <= a) {
    ++e;
    p *= 2;
  }
  return e;
}

Integer product_tree(std::vector<Integer> xs) {
  if (xs.empty()) return 1;
  while (xs.size() > 1) {
    std::vector<Integer> next;
    for (std::size_t i = 0; i + 1 < xs.size(); i += 2) next.push_back(xs[i] * xs[i + 1]);
    if (xs.size() % 2) next.push_back(std::move(xs.back()));
    xs = std::move(next);
  }
  return xs.front();
}

}  // namespace tutte
