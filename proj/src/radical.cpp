#include "noncross/radical.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <map>
#include <mutex>
#include <stdexcept>

namespace noncross {

unsigned default_precision_cap() {
  static unsigned cap = [] {
    if (const char* env = std::getenv("NONCROSS_PRECISION_CAP")) {
      long v = std::atol(env);
      if (v >= 64) return static_cast<unsigned>(v);
    }
    return 16384u;
  }();
  return cap;
}

namespace {

const std::vector<unsigned long>& primes_to_1e6() {
  static const std::vector<unsigned long> primes = [] {
    constexpr unsigned long limit = 1000000;
    std::vector<bool> comp(limit + 1, false);
    std::vector<unsigned long> ps;
    for (unsigned long i = 2; i <= limit; ++i) {
      if (comp[i]) continue;
      ps.push_back(i);
      for (unsigned long j = i * i; j <= limit; j += i) comp[j] = true;
    }
    return ps;
  }();
  return primes;
}

}  // namespace

std::pair<mpz_class, mpz_class> extract_square_part(const mpz_class& n) {
  if (n < 1) throw std::invalid_argument("extract_square_part: requires n >= 1");
  static std::map<mpz_class, std::pair<mpz_class, mpz_class>> memo;
  static std::mutex memo_mutex;
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
  }

  mpz_class f = 1, k = 1, rest = n;
  if (mpz_perfect_square_p(rest.get_mpz_t())) {
    mpz_class s;
    mpz_sqrt(s.get_mpz_t(), rest.get_mpz_t());
    f = s;
    rest = 1;
  } else {
    for (unsigned long p : primes_to_1e6()) {
      if (rest == 1) break;
      if (!mpz_divisible_ui_p(rest.get_mpz_t(), p)) continue;
      unsigned long e = 0;
      do {
        mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
        ++e;
      } while (mpz_divisible_ui_p(rest.get_mpz_t(), p));
      if (e >= 2) {
        mpz_class pe;
        mpz_ui_pow_ui(pe.get_mpz_t(), p, e / 2);
        f *= pe;
      }
      if (e % 2) k *= p;
    }
    if (rest != 1) {
      if (mpz_perfect_square_p(rest.get_mpz_t())) {
        mpz_class s;
        mpz_sqrt(s.get_mpz_t(), rest.get_mpz_t());
        f *= s;
      } else {
        k *= rest;  // unfactored remainder kept as its own kernel
      }
    }
  }

  auto result = std::make_pair(f, k);
  std::lock_guard<std::mutex> lock(memo_mutex);
  memo.emplace(n, result);
  return result;
}

std::vector<std::pair<mpz_class, Rat>> canonical_radical_form(const RadicalSum& a) {
  std::map<mpz_class, Rat> merged;
  for (const auto& t : a) {
    if (t.coeff == 0 || t.radicand == 0) continue;
    // coeff * sqrt(n/d) = (coeff/d) * sqrt(n*d) = (coeff*f/d) * sqrt(kernel)
    mpz_class nd = t.radicand.get_num() * t.radicand.get_den();
    auto [f, kernel] = extract_square_part(nd);
    Rat c = t.coeff * rat_make(f, t.radicand.get_den());
    merged[kernel] += c;
  }
  std::vector<std::pair<mpz_class, Rat>> out;
  for (auto& [kernel, c] : merged)
    if (c != 0) out.emplace_back(kernel, c);
  return out;
}

Interval eval_radical_sum(const RadicalSum& a, unsigned precision_bits) {
  size_t terms = 0;
  for (const auto& t : a)
    if (t.coeff != 0 && t.radicand != 0) ++terms;
  if (terms == 0) return interval_exact(Rat(0), precision_bits);
  unsigned guard = std::bit_width(terms) + 1;
  // Coefficients widen the enclosure; absorb them into the guard bits.
  Rat cmax(1);
  for (const auto& t : a)
    if (t.coeff > cmax) cmax = t.coeff;
  guard += static_cast<unsigned>(std::max<long>(0, rat_log2_floor(cmax) + 1));
  Interval acc = interval_exact(Rat(0), precision_bits);
  for (const auto& t : a) {
    if (t.coeff == 0 || t.radicand == 0) continue;
    Interval s = sqrt_interval(t.radicand, precision_bits + guard);
    acc = interval_add(acc, interval_scale(s, t.coeff));
  }
  acc.precision_bits = precision_bits;
  return acc;
}

Ordering compare_radical_sums(const RadicalSum& a, const RadicalSum& b, unsigned cap_bits) {
  for (const auto* sum : {&a, &b})
    for (const auto& t : *sum) {
      if (t.coeff < 0) throw std::invalid_argument("compare_radical_sums: negative coefficient");
      if (t.radicand < 0) throw std::invalid_argument("compare_radical_sums: negative radicand");
    }
  if (cap_bits == 0) cap_bits = default_precision_cap();

  bool checked_canonical = false;
  for (unsigned p = 64;; p *= 2) {
    if (p > cap_bits) break;
    Interval ia = eval_radical_sum(a, p);
    Interval ib = eval_radical_sum(b, p);
    if (ia.lo > ib.hi) return Ordering::Greater;
    if (ia.hi < ib.lo) return Ordering::Less;
    if (!checked_canonical) {
      if (canonical_radical_form(a) == canonical_radical_form(b)) return Ordering::Equal;
      checked_canonical = true;
    }
  }
  return Ordering::Unresolved;
}

}  // namespace noncross
