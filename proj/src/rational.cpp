#include "fracchern/rational.hpp"

#include "fracchern/errors.hpp"

namespace fracchern {

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

std::string to_string(const Rational& q) {
  // mpq canonical form already prints "p" for integers and "p/q" otherwise.
  return q.get_str();
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0) throw ParseError("not a rational number: '" + text + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

Rational ratio(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

}  // namespace fracchern
