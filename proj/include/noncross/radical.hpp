#pragma once

#include "noncross/interval.hpp"
#include "noncross/rat.hpp"

#include <utility>
#include <vector>

namespace noncross {

enum class Ordering { Less, Greater, Equal, Unresolved };

// One term coeff * sqrt(radicand) of a radical sum. Both parts must be >= 0.
struct RadicalTerm {
  Rat coeff;
  Rat radicand;
};

using RadicalSum = std::vector<RadicalTerm>;

// Escalation cap in bits for all radical comparisons. Defaults to 16384;
// the environment variable NONCROSS_PRECISION_CAP overrides it.
unsigned default_precision_cap();

// Compares sum(a) with sum(b). Equality is decided by canonicalization
// (square part extracted from every radicand, like squarefree kernels
// merged), never by numeric coincidence. Otherwise interval evaluation with
// doubling precision separates the sums, or Unresolved is returned once the
// cap is reached. Deterministic.
Ordering compare_radical_sums(const RadicalSum& a, const RadicalSum& b,
                              unsigned cap_bits = 0 /* 0 = default cap */);

// Enclosure of sum(a) at the given precision (obeys the Interval width bound).
Interval eval_radical_sum(const RadicalSum& a, unsigned precision_bits);

// Writes N = f^2 * k with k the squarefree kernel found by trial division up
// to 10^6 (a remainder that is not a perfect square stays as its own kernel;
// that can only make two equal sums compare Unresolved, never unequal ones
// compare Equal). Requires N >= 1. Memoized.
std::pair<mpz_class, mpz_class> extract_square_part(const mpz_class& n);

// Canonical form of a radical sum: sorted (kernel, merged coefficient) pairs
// with zero terms dropped. Equal multisets <=> provably equal sums.
std::vector<std::pair<mpz_class, Rat>> canonical_radical_form(const RadicalSum& a);

inline Ordering flip(Ordering o) {
  if (o == Ordering::Less) return Ordering::Greater;
  if (o == Ordering::Greater) return Ordering::Less;
  return o;
}

}  // namespace noncross
