#include "doctest.h"

#include "noncross/line1d.hpp"

#include <algorithm>
#include <random>

using namespace noncross;

namespace {

Rat path_len(const std::vector<Rat>& o) {
  Rat s(0);
  for (size_t i = 0; i + 1 < o.size(); ++i) s += abs(o[i + 1] - o[i]);
  return s;
}

Rat cycle_len(const std::vector<Rat>& o) {
  Rat s = path_len(o);
  s += abs(o.front() - o.back());
  return s;
}

// Brute-force 1-D oracles: enumerate canonical visit orders with exact
// rational arithmetic, independent of the solver module.
template <class LenFn>
std::pair<Rat, std::vector<std::vector<Rat>>> brute_best(const std::vector<Rat>& vals, bool cycle,
                                                         LenFn&& len) {
  std::vector<Rat> perm = vals;
  std::sort(perm.begin(), perm.end());
  Rat best(-1);
  std::vector<std::vector<Rat>> argbest;
  do {
    if (cycle) {
      if (perm.front() != *std::min_element(perm.begin(), perm.end())) continue;
      if (perm.size() > 2 && perm[1] > perm.back()) continue;
    } else {
      if (perm.front() > perm.back()) continue;
    }
    Rat l = len(perm);
    if (l > best) {
      best = l;
      argbest = {perm};
    } else if (l == best) {
      argbest.push_back(perm);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {best, argbest};
}

std::vector<Rat> rats(std::initializer_list<long> xs) {
  std::vector<Rat> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

std::vector<Rat> random_distinct(std::mt19937_64& rng, size_t n) {
  std::vector<Rat> v;
  while (v.size() < n) {
    Rat c = rat_make(mpz_class(static_cast<long>(rng() % 41) - 20), mpz_class(1 + rng() % 4));
    if (std::find(v.begin(), v.end(), c) == v.end()) v.push_back(c);
  }
  return v;
}

}  // namespace

TEST_CASE("median") {
  CHECK(LineSet(rats({1, 2, 3})).median() == 2);
  CHECK(LineSet(rats({1, 2, 3, 4})).median() == rat_from_string("5/2"));
  CHECK(LineSet(rats({-3, -2, -1, 0, 2, 3})).median() == rat_from_string("-1/2"));
  CHECK_THROWS_AS(LineSet(rats({1, 1})), std::invalid_argument);
}

TEST_CASE("is_longest_path_1d examples") {
  LineSet ls(rats({1, 2, 3, 4}));
  CHECK(is_longest_path_1d(rats({2, 4, 1, 3}), ls));
  CHECK_FALSE(is_longest_path_1d(rats({1, 4, 2, 3}), ls));  // endpoint 1 not middle
  CHECK_FALSE(is_longest_path_1d(rats({2, 1, 4, 3}), ls));  // edge 2-1 misses median
  CHECK_THROWS_AS(is_longest_path_1d(rats({1, 2, 3}), LineSet(rats({1, 2, 3}))),
                  std::invalid_argument);
}

TEST_CASE("is_longest_cycle_1d examples") {
  LineSet ls(rats({1, 2, 3, 4}));
  CHECK(is_longest_cycle_1d(rats({1, 3, 2, 4}), ls));
  CHECK_FALSE(is_longest_cycle_1d(rats({1, 2, 3, 4}), ls));
  LineSet odd(rats({-2, -1, 0, 1, 2}));
  CHECK_FALSE(is_longest_cycle_1d(rats({0, 1, -1, -2, 2}), odd));
}

TEST_CASE("longest_path_length_1d closed form") {
  CHECK(longest_path_length_1d(LineSet(rats({1, 2, 3, 4}))) == 7);
  auto [best, arg] = brute_best(rats({1, 2, 3, 4}), false, path_len);
  CHECK(best == 7);
  CHECK(longest_path_length_1d(LineSet(rats({-1, 1}))) == 2);
  auto vals = rats({0, 1, 2, 3, 4, 5});
  auto [b6, a6] = brute_best(vals, false, path_len);
  CHECK(longest_path_length_1d(LineSet(vals)) == b6);
}

TEST_CASE("longest_cycle_length_1d closed form") {
  CHECK(longest_cycle_length_1d(LineSet(rats({1, 2, 3, 4}))) == 8);
  CHECK(longest_cycle_length_1d(LineSet(rats({-1, 0, 1}))) == 4);
  auto vals = rats({-2, -1, 0, 1, 2});
  auto [b, a] = brute_best(vals, true, cycle_len);
  CHECK(longest_cycle_length_1d(LineSet(vals)) == b);
  CHECK_THROWS_AS(longest_cycle_length_1d(LineSet(rats({1, 2}))), std::invalid_argument);
}

TEST_CASE("cycle_deficit_lemma_check examples") {
  // Odd-cycle flat optimum on {-2, -1/100, 0, 1, 2} has 2k = 4 edges through I.
  std::vector<Rat> vals = {Rat(-2), rat_from_string("-1/100"), Rat(0), Rat(1), Rat(2)};
  LineSet ls(vals);
  std::vector<Rat> opt = {Rat(-2), Rat(0), Rat(2), rat_from_string("-1/100"), Rat(1)};
  auto chk = cycle_deficit_lemma_check(ls, opt);
  CHECK(chk.bound == 0);
  CHECK(chk.edges_through == 4);

  LineSet tri(rats({-1, 0, 1}));
  CHECK(cycle_deficit_lemma_check(tri, rats({-1, 0, 1})).bound == 0);

  LineSet five(rats({-2, -1, 0, 1, 2}));
  auto hull = cycle_deficit_lemma_check(five, rats({-2, -1, 0, 1, 2}));
  CHECK(hull.bound == 2);
  CHECK(hull.h == 1);
  CHECK(hull.edges_through == 2);
}

TEST_CASE("endpoint lemma on brute-force optima") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 25; ++trial) {
    size_t n = 4 + 2 * (rng() % 3);  // 4, 6, 8
    auto vals = random_distinct(rng, n);
    LineSet ls(vals);
    Rat m = ls.median();
    auto [best, optima] = brute_best(vals, false, path_len);
    for (const auto& o : optima) {
      bool front_left = o.front() < m;
      bool back_left = o.back() < m;
      CHECK(front_left != back_left);
    }
  }
}

TEST_CASE("characterization matches brute force exactly (paths, even)") {
  std::mt19937_64 rng(102);
  for (int trial = 0; trial < 20; ++trial) {
    size_t n = 4 + 2 * (rng() % 3);
    auto vals = random_distinct(rng, n);
    LineSet ls(vals);
    auto [best, optima] = brute_best(vals, false, path_len);
    CHECK(longest_path_length_1d(ls) == best);
    std::vector<Rat> perm = vals;
    std::sort(perm.begin(), perm.end());
    do {
      if (perm.front() > perm.back()) continue;
      bool is_opt = path_len(perm) == best;
      CHECK(is_longest_path_1d(perm, ls) == is_opt);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST_CASE("characterization matches brute force exactly (odd paths, validated checker)") {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 16; ++trial) {
    size_t n = 3 + 2 * (rng() % 3);  // 3, 5, 7
    auto vals = random_distinct(rng, n);
    LineSet ls(vals);
    auto [best, optima] = brute_best(vals, false, path_len);
    std::vector<Rat> perm = vals;
    std::sort(perm.begin(), perm.end());
    do {
      if (perm.front() > perm.back()) continue;
      bool is_opt = path_len(perm) == best;
      CHECK(is_longest_path_1d_odd(perm, ls) == is_opt);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST_CASE("characterization matches brute force exactly (cycles, both parities)") {
  std::mt19937_64 rng(104);
  for (int trial = 0; trial < 16; ++trial) {
    size_t n = 4 + rng() % 5;  // 4..8
    auto vals = random_distinct(rng, n);
    LineSet ls(vals);
    auto [best, optima] = brute_best(vals, true, cycle_len);
    CHECK(longest_cycle_length_1d(ls) == best);
    std::vector<Rat> perm = vals;
    std::sort(perm.begin(), perm.end());
    do {
      if (perm.front() != *std::min_element(perm.begin(), perm.end())) continue;
      if (perm[1] > perm.back()) continue;
      bool is_opt = cycle_len(perm) == best;
      CHECK(is_longest_cycle_1d(perm, ls) == is_opt);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST_CASE("deficit bound is sound on all odd cycles up to 7 points") {
  std::mt19937_64 rng(105);
  for (int trial = 0; trial < 10; ++trial) {
    size_t n = 5 + 2 * (rng() % 2);  // 5 or 7
    auto vals = random_distinct(rng, n);
    LineSet ls(vals);
    auto [best, optima] = brute_best(vals, true, cycle_len);
    std::vector<Rat> perm = vals;
    std::sort(perm.begin(), perm.end());
    do {
      if (perm[1] > perm.back()) continue;
      auto chk = cycle_deficit_lemma_check(ls, perm);
      if (chk.bound > 0) CHECK(best - cycle_len(perm) >= chk.bound);
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
  }
}
