#include "noncross/rat.hpp"

#include <cctype>
#include <cstdlib>

namespace noncross {

Rat rat_make(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::invalid_argument("rat_make: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("rat_from_string: empty string");
  auto slash = s.find('/');
  mpz_class num, den;
  try {
    if (slash == std::string::npos) {
      num = mpz_class(s);
      den = 1;
    } else {
      num = mpz_class(s.substr(0, slash));
      den = mpz_class(s.substr(slash + 1));
    }
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("rat_from_string: malformed rational '" + s + "'");
  }
  if (den == 0) throw std::invalid_argument("rat_from_string: zero denominator in '" + s + "'");
  return rat_make(num, den);
}

std::string rat_to_string(const Rat& v) {
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

long rat_log2_floor(const Rat& v) {
  if (v == 0) throw std::invalid_argument("rat_log2_floor: zero");
  mpz_class n = abs(v.get_num());
  mpz_class d = v.get_den();
  long bn = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2));
  long bd = static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 2));
  // 2^(bn-1) <= n < 2^bn, so the true value is within 1 of bn-bd; fix up.
  long e = bn - bd;
  mpz_class num = n, den = d;
  if (e >= 0)
    den <<= e;
  else
    num <<= -e;
  if (num >= den) {
    // v >= 2^e; check whether v >= 2^(e+1)
    if (num >= 2 * den) return e + 1;
    return e;
  }
  return e - 1;
}

Rat dyadic_floor(const Rat& v, unsigned mantissa_bits) {
  if (v <= 0) throw std::invalid_argument("dyadic_floor: requires positive value");
  long e = rat_log2_floor(v);
  long shift = static_cast<long>(mantissa_bits) - 1 - e;
  mpz_class num = v.get_num(), den = v.get_den(), m;
  if (shift >= 0)
    num <<= shift;
  else
    den <<= -shift;
  mpz_fdiv_q(m.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  mpz_class unit = 1;
  if (shift >= 0) {
    unit <<= shift;
    return rat_make(m, unit);
  }
  unit <<= -shift;
  return rat_make(m * unit, 1);
}

std::string rat_to_sci(const Rat& v, int digits) {
  if (digits < 1) digits = 1;
  if (v == 0) return "0";
  std::string sign = v < 0 ? "-" : "";
  Rat a = abs(v);
  // Decimal exponent: |v| = m * 10^k with m in [1,10).
  long e2 = rat_log2_floor(a);
  long k = static_cast<long>(e2 * 0.30102999566398119521);
  auto pow10 = [](long p) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(p >= 0 ? p : -p));
    return r;
  };
  auto cmp_pow10 = [&](long p) {
    // sign of a - 10^p
    Rat t = p >= 0 ? Rat(pow10(p)) : rat_make(1, pow10(p));
    return cmp(a, t);
  };
  while (cmp_pow10(k) < 0) --k;
  while (cmp_pow10(k + 1) >= 0) ++k;
  // mantissa digits: round(a / 10^k * 10^(digits-1))
  Rat scaled = a;
  long p = digits - 1 - k;
  if (p >= 0)
    scaled *= Rat(pow10(p));
  else
    scaled *= rat_make(1, pow10(p));
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), scaled.get_num().get_mpz_t(), scaled.get_den().get_mpz_t());
  if (2 * r >= scaled.get_den()) ++q;
  std::string ds = q.get_str();
  if (static_cast<int>(ds.size()) > digits) {  // rounding carried over, e.g. 999->1000
    ds = ds.substr(0, digits);
    ++k;
  }
  std::string mant = ds.substr(0, 1);
  if (digits > 1) mant += "." + ds.substr(1);
  return sign + mant + "e" + (k >= 0 ? "+" : "") + std::to_string(k);
}

}  // namespace noncross
