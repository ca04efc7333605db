#include "doctest.h"

#include "noncross/line1d.hpp"
#include "noncross/solve.hpp"

#include <random>

using namespace noncross;

namespace {

Point pt(const std::string& l, long x, long y) { return Point{l, Rat(x), Rat(y)}; }

PointSet collinear(std::initializer_list<long> xs) {
  std::vector<Point> pts;
  int i = 0;
  for (long x : xs) pts.push_back(Point{"v" + std::to_string(i++), Rat(x), Rat(0)});
  return PointSet(pts);
}

PointSet random_points(std::mt19937_64& rng, size_t n, long range = 200) {
  std::vector<Point> pts;
  while (pts.size() < n) {
    Rat x = rat_make(mpz_class(static_cast<long>(rng() % (2 * range)) - range),
                     mpz_class(1 + rng() % 4));
    Rat y = rat_make(mpz_class(static_cast<long>(rng() % (2 * range)) - range),
                     mpz_class(1 + rng() % 4));
    bool dup = false;
    for (const auto& p : pts)
      if (p.x == x && p.y == y) dup = true;
    if (!dup) pts.push_back(Point{"p" + std::to_string(pts.size()), x, y});
  }
  return PointSet(pts);
}

}  // namespace

TEST_CASE("max_path on collinear {1,2,3,4}") {
  PointSet ps = collinear({1, 2, 3, 4});
  SolveResult r = max_path(ps);
  CHECK(r.best_length.lo == 7);
  CHECK(r.best_length.hi == 7);
  CHECK(r.unique == Uniqueness::Proven);
  CHECK(r.best == Structure::path({"v1", "v3", "v0", "v2"}));
  CHECK(r.stats.structures_examined == 12);

  // Co-optimal set is exactly the set passing the 1-D characterization.
  auto optima = enumerate_optima(ps, StructureKind::Path, Rat(0));
  CHECK(optima.unresolved.empty());
  REQUIRE(optima.optima.size() == 1);
  LineSet ls({Rat(1), Rat(2), Rat(3), Rat(4)});
  for (const auto& o : optima.optima) CHECK(is_longest_path_1d(order_values(o, ps), ls));
}

TEST_CASE("max_path on two points") {
  PointSet ps({pt("a", 0, 0), pt("b", 3, 4)});
  SolveResult r = max_path(ps);
  CHECK(r.unique == Uniqueness::Proven);
  CHECK(r.best_length.contains(Rat(5)));
  CHECK(r.second_best_length.hi == 0);
}

TEST_CASE("max_cycle on collinear {1,2,3,4} and a triangle") {
  PointSet ps = collinear({1, 2, 3, 4});
  SolveResult r = max_cycle(ps);
  CHECK(r.best_length.lo == 8);
  CHECK(r.best_length.hi == 8);
  CHECK(r.unique == Uniqueness::Proven);
  CHECK(r.best == Structure::cycle({"v0", "v2", "v1", "v3"}));
  CHECK(r.stats.structures_examined == 3);

  PointSet tri({pt("a", 0, 0), pt("b", 4, 0), pt("c", 1, 3)});
  SolveResult t = max_cycle(tri);
  CHECK(t.unique == Uniqueness::Proven);
  CHECK(t.stats.structures_examined == 1);
}

TEST_CASE("max_matching basics and refuted uniqueness") {
  PointSet two({pt("a", -1, 0), pt("b", 1, 0)});
  SolveResult r2 = max_matching(two);
  CHECK(r2.unique == Uniqueness::Proven);
  CHECK(r2.best_length.contains(Rat(2)));

  PointSet ps = collinear({-2, -1, 1, 2});
  SolveResult r = max_matching(ps);
  CHECK(r.unique == Uniqueness::Refuted);
  CHECK(r.best_length.lo == 6);
  REQUIRE(r.co_optima.size() == 2);
  // Exactly the two all-crossing matchings.
  Structure m1 = Structure::matching({{"v0", "v2"}, {"v1", "v3"}});
  Structure m2 = Structure::matching({{"v0", "v3"}, {"v1", "v2"}});
  CHECK(((r.co_optima[0] == m1 && r.co_optima[1] == m2) ||
         (r.co_optima[0] == m2 && r.co_optima[1] == m1)));
}

TEST_CASE("enumerate_optima on flat instances") {
  PointSet tri({pt("a", 0, 0), pt("b", 4, 0), pt("c", 1, 3)});
  auto t = enumerate_optima(tri, StructureKind::Cycle, Rat(0));
  CHECK(t.optima.size() == 1);

  // Flat even-path x-set {-3,-2,-1,0,2,3} (k=3): the longest-path class has
  // ((k-1)!)^2 = 4 members, all passing the 1-D characterization.
  PointSet flat = collinear({-3, -2, -1, 0, 2, 3});
  auto h = enumerate_optima(flat, StructureKind::Path, Rat(0));
  CHECK(h.unresolved.empty());
  CHECK(h.optima.size() == 4);
  LineSet ls({Rat(-3), Rat(-2), Rat(-1), Rat(0), Rat(2), Rat(3)});
  for (const auto& o : h.optima) CHECK(is_longest_path_1d(order_values(o, flat), ls));
}

TEST_CASE("enumerate_optima respects slack") {
  PointSet ps = collinear({1, 2, 3, 4});
  // Path lengths on this set: 7 (best), then 6.
  auto within1 = enumerate_optima(ps, StructureKind::Path, Rat(1));
  auto exact = enumerate_optima(ps, StructureKind::Path, Rat(0));
  CHECK(exact.optima.size() == 1);
  CHECK(within1.optima.size() > exact.optima.size());
  for (const auto& o : exact.optima)
    CHECK(std::find(within1.optima.begin(), within1.optima.end(), o) != within1.optima.end());
}

TEST_CASE("1-D agreement: solver equals closed forms on collinear inputs") {
  std::mt19937_64 rng(207);
  for (int trial = 0; trial < 10; ++trial) {
    size_t n = 4 + 2 * (rng() % 2);  // 4 or 6
    std::vector<Rat> vals;
    while (vals.size() < n) {
      Rat v = rat_make(mpz_class(static_cast<long>(rng() % 30) - 15), mpz_class(1 + rng() % 3));
      if (std::find(vals.begin(), vals.end(), v) == vals.end()) vals.push_back(v);
    }
    std::vector<Point> pts;
    for (size_t i = 0; i < n; ++i) pts.push_back(Point{"p" + std::to_string(i), vals[i], Rat(0)});
    PointSet ps(pts);
    LineSet ls(vals);
    SolveResult rp = max_path(ps);
    CHECK(rp.best_length.lo == longest_path_length_1d(ls));
    CHECK(rp.best_length.hi == rp.best_length.lo);
    SolveResult rc = max_cycle(ps);
    CHECK(rc.best_length.lo == longest_cycle_length_1d(ls));
  }
}

TEST_CASE("subset DP matches brute force on random instances") {
  std::mt19937_64 rng(211);
  SolveOptions brute;
  brute.method = SolveMethod::BruteForce;
  SolveOptions dp;
  dp.method = SolveMethod::SubsetDP;
  for (int trial = 0; trial < 12; ++trial) {
    size_t n = 5 + rng() % 4;  // 5..8
    PointSet ps = random_points(rng, n);
    for (StructureKind kind : {StructureKind::Path, StructureKind::Cycle}) {
      SolveResult rb = kind == StructureKind::Path ? max_path(ps, brute) : max_cycle(ps, brute);
      SolveResult rd = kind == StructureKind::Path ? max_path(ps, dp) : max_cycle(ps, dp);
      CHECK(rb.best_length.lo == rd.best_length.lo);
      CHECK(rb.best_length.hi == rd.best_length.hi);
      if (rb.unique == Uniqueness::Proven && rd.unique == Uniqueness::Proven)
        CHECK(rb.best == rd.best);
    }
    if (n % 2 == 0) {
      SolveResult rb = max_matching(ps, brute);
      SolveResult rd = max_matching(ps, dp);
      CHECK(rb.best_length.lo == rd.best_length.lo);
      if (rb.unique == Uniqueness::Proven && rd.unique == Uniqueness::Proven)
        CHECK(rb.best == rd.best);
    }
  }
}

TEST_CASE("gap soundness: no co-optimum within the certified gap") {
  std::mt19937_64 rng(213);
  for (int trial = 0; trial < 6; ++trial) {
    PointSet ps = random_points(rng, 6);
    SolveResult r = max_path(ps);
    if (r.unique != Uniqueness::Proven) continue;
    Rat gap = r.best_length.lo - r.second_best_length.hi;
    REQUIRE(gap > 0);
    auto opt = enumerate_optima(ps, StructureKind::Path, gap / 2);
    CHECK(opt.optima.size() == 1);
    CHECK(opt.optima.front() == r.best);
  }
}

TEST_CASE("capacity errors") {
  std::mt19937_64 rng(217);
  PointSet big = random_points(rng, 11);
  SolveOptions brute;
  brute.method = SolveMethod::BruteForce;
  CHECK_THROWS_AS(max_path(big, brute), CapacityError);
  PointSet huge = random_points(rng, 21);
  SolveOptions dp;
  dp.method = SolveMethod::SubsetDP;
  CHECK_THROWS_AS(max_path(huge, dp), CapacityError);
  CHECK_THROWS_AS(max_path(huge), CapacityError);  // Auto over both caps
}

TEST_CASE("perturbation stability sample (flat even-path set, k=3)") {
  PointSet flat = collinear({-3, -2, -1, 0, 2, 3});
  auto optima = enumerate_optima(flat, StructureKind::Path, Rat(0));
  std::mt19937_64 rng(219);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Point> pts;
    for (size_t i = 0; i < flat.size(); ++i) {
      // displacement <= 1/8k = 1/24 in each use: box of half-width 1/48
      Rat dx = rat_make(mpz_class(static_cast<long>(rng() % 97) - 48), mpz_class(48 * 97));
      Rat dy = rat_make(mpz_class(static_cast<long>(rng() % 97) - 48), mpz_class(48 * 97));
      pts.push_back(Point{flat[i].label, flat[i].x + dx, flat[i].y + dy});
    }
    PointSet pert(pts);
    SolveResult r = max_path(pert);
    bool found = false;
    for (const auto& o : optima.optima)
      if (o == r.best) found = true;
    CHECK(found);
  }
}
