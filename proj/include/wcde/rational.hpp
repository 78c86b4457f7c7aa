#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace wcde {

using Rational = mpq_class;
using BigInt = mpz_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const BigInt& z) { return z.get_str(); }

inline Rational make_rational(long p, long q = 1) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

}  // namespace wcde
