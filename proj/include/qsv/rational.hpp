#pragma once

// Exact arithmetic used everywhere in the library.  All coefficients,
// evaluations and linear algebra are over Q; no floating point anywhere.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qsv {

using Integer = mpz_class;
using Rational = mpq_class;

// Canonical rendering: "p" for integers, "p/q" otherwise (q > 0).
inline std::string to_string(const Rational& q) {
  return q.get_str();
}

inline Rational rational_from_string(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) {
  return q.get_den() == 1;
}

// num/den in lowest terms.  mpq_class's two-argument constructor does not
// canonicalize on its own, so route every fraction literal through here.
inline Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// base^exp for integer base, exp >= 0.
inline Integer int_pow(long base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), Integer(base).get_mpz_t(), exp);
  return r;
}

}  // namespace qsv
