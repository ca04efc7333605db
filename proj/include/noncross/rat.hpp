#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace noncross {

// Arbitrary-precision rational. All coordinates, thresholds and exact
// comparisons in this library run on Rat; GMP keeps values canonical
// (positive denominator, reduced) through arithmetic.
using Rat = mpq_class;

// Builds a canonical rational from a possibly unreduced num/den pair.
Rat rat_make(const mpz_class& num, const mpz_class& den);

// Parses "num/den" or the integer shorthand "num". Throws std::invalid_argument
// on malformed input or zero denominator.
Rat rat_from_string(const std::string& s);

// Serializes as "num/den" (always with the slash, e.g. "0/1", "-1/24").
std::string rat_to_string(const Rat& v);

// Scientific-notation approximation with `digits` significant digits,
// e.g. "2.90212e-5". Display only; exactness stays in rat_to_string.
std::string rat_to_sci(const Rat& v, int digits = 6);

// Largest dyadic m/2^e <= v whose mantissa fits in `mantissa_bits` bits.
// Requires v > 0; the result is > v/2, so positivity is preserved. Used to
// keep the bit-length of chained thresholds proportional to their magnitude.
Rat dyadic_floor(const Rat& v, unsigned mantissa_bits);

// floor(log2(|v|)) for v != 0.
long rat_log2_floor(const Rat& v);

inline int rat_sign(const Rat& v) { return sgn(v); }

}  // namespace noncross
