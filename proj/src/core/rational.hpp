#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hkl {

using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

// mpq_class(num, den) does not canonicalize; always go through this.
inline Rational frac(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

inline Rational pow(const Rational& base, unsigned exponent) {
  Rational out(1);
  for (unsigned i = 0; i < exponent; ++i) out *= base;
  return out;
}

// Accepts "p" or "p/q"; throws hkl::Error(Parse) on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

}  // namespace hkl
