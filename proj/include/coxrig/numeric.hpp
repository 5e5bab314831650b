#pragma once

#include <gmpxx.h>

#include <string>

namespace coxrig {

// Exact arithmetic used everywhere below: arbitrary-precision integers and
// rationals.  No floating point enters any computation in this library.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

/// Canonical textual form: "p" for integers, "p/q" otherwise.
std::string rat_string(const Rat& q);

/// Parse "p" or "p/q" (arbitrary precision).  Throws std::invalid_argument
/// on malformed input or zero denominator.
Rat parse_rat(const std::string& s);

inline long gcd_long(long a, long b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace coxrig
