#pragma once

#include <gmpxx.h>

#include <string>

#include "tropipath/errors.hpp"

namespace tropipath {

/// Exact arbitrary-precision rational. All tropical scalars, Puiseux
/// exponents/coefficients and path parameters are of this type.
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
  if (den == 0) throw precondition_error("rational: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// 2^k for any integer k (negative k gives 1/2^|k|).
inline Rational pow2(long k) {
  mpz_class p = mpz_class(1) << static_cast<unsigned long>(k < 0 ? -k : k);
  return k >= 0 ? Rational(p) : Rational(mpz_class(1), p);
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline mpz_class rational_floor(const Rational& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

inline double to_double(const Rational& r) { return r.get_d(); }

/// Parses "p", "-p", or "p/q". Throws on malformed input or q == 0.
inline Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(mpz_class(s));
    }
    mpz_class num(s.substr(0, slash));
    mpz_class den(s.substr(slash + 1));
    if (den == 0) throw io_error("parse_rational: zero denominator in '" + s + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw io_error("parse_rational: malformed rational '" + s + "'");
  }
}

/// "p" when the denominator is 1, "p/q" otherwise.
inline std::string to_string(const Rational& r) {
  if (is_integer(r)) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace tropipath
