#pragma once

#include <gmpxx.h>

#include <string>

namespace simpdim {

// All counting is exact. Int is an arbitrary-precision integer, Rat an
// arbitrary-precision rational kept in canonical reduced form by GMP.
using Int = mpz_class;
using Rat = mpq_class;

// "p/q" for non-integers, plain "p" otherwise.
std::string rat_str(const Rat& r);

// Accepts "p", "p/q", and decimal literals like "0.25" (parsed exactly).
Rat rat_parse(const std::string& s);

// Fixed-point decimal rendering with `digits` digits after the point,
// rounded half away from zero. digits == 0 emits a plain integer.
std::string decimal_str(const Rat& r, int digits);

// Number of decimal digits of |n|; 0 has one digit.
int digit_count(const Int& n);

// Natural logarithm of |r|; r must be nonzero. Exact-range safe for the
// astronomically small/large rationals the refinement trajectories produce.
double log_abs(const Rat& r);

}  // namespace simpdim
