#include "noncross/interval.hpp"

#include <stdexcept>

namespace noncross {

Interval sqrt_interval(const Rat& q, unsigned precision_bits) {
  if (precision_bits == 0) throw std::invalid_argument("sqrt_interval: precision_bits must be positive");
  if (q < 0) throw std::domain_error("sqrt_interval: negative radicand");
  if (q == 0) return Interval{Rat(0), Rat(0), precision_bits};

  // sqrt(n/d) = sqrt(n*d)/d. With M = n*d*4^p and s = floor(sqrt(M)),
  //   s/(d*2^p) <= sqrt(q) <= (s+1)/(d*2^p),
  // an enclosure of width 1/(d*2^p) <= 2^-p.
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  mpz_class m = n * d;
  m <<= 2 * precision_bits;
  mpz_class s, r;
  mpz_sqrtrem(s.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
  mpz_class den = d;
  den <<= precision_bits;
  Rat lo = rat_make(s, den);
  if (r == 0) return Interval{lo, lo, precision_bits};
  return Interval{lo, rat_make(s + 1, den), precision_bits};
}

}  // namespace noncross
