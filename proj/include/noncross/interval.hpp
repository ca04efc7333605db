#pragma once

#include "noncross/rat.hpp"

namespace noncross {

// Certified enclosure of a real value: lo <= r <= hi with
// hi - lo <= 2^-precision_bits * max(1, |hi|).
struct Interval {
  Rat lo;
  Rat hi;
  unsigned precision_bits = 0;

  Rat width() const { return hi - lo; }
  bool contains(const Rat& v) const { return lo <= v && v <= hi; }
};

// Enclosure of sqrt(q) at the requested precision. The returned interval is
// exact ([s,s]) when q is the square of a rational representable at this
// scaling. Throws std::domain_error for q < 0.
Interval sqrt_interval(const Rat& q, unsigned precision_bits);

// Certified one-sided rational bounds.
inline const Rat& rat_lower_bound(const Interval& v) { return v.lo; }
inline const Rat& rat_upper_bound(const Interval& v) { return v.hi; }

inline Interval interval_add(const Interval& a, const Interval& b) {
  return Interval{a.lo + b.lo, a.hi + b.hi,
                  a.precision_bits < b.precision_bits ? a.precision_bits : b.precision_bits};
}

inline Interval interval_sub(const Interval& a, const Interval& b) {
  return Interval{a.lo - b.hi, a.hi - b.lo,
                  a.precision_bits < b.precision_bits ? a.precision_bits : b.precision_bits};
}

inline Interval interval_exact(const Rat& v, unsigned precision_bits) {
  return Interval{v, v, precision_bits};
}

// Scale by a nonnegative rational.
inline Interval interval_scale(const Interval& a, const Rat& c) {
  if (c >= 0) return Interval{a.lo * c, a.hi * c, a.precision_bits};
  return Interval{a.hi * c, a.lo * c, a.precision_bits};
}

}  // namespace noncross
