#pragma once

#include "noncross/geometry.hpp"
#include "noncross/rat.hpp"

#include <vector>

namespace noncross {

// Distinct reals on a line, kept sorted increasing. The median is the middle
// value for odd counts and the mean of the two middle values for even counts.
class LineSet {
 public:
  explicit LineSet(std::vector<Rat> values);

  size_t size() const { return values_.size(); }
  const std::vector<Rat>& values() const { return values_; }
  const Rat& operator[](size_t i) const { return values_[i]; }
  Rat median() const;

 private:
  std::vector<Rat> values_;
};

// The characterizations below take the visit order as values. An edge
// "intersects the median" when its closed interval contains the median
// (an endpoint at the median counts).

// Longest-path test for even counts: every edge intersects the median and
// the endpoints are the two points closest to it. Throws for odd counts.
bool is_longest_path_1d(const std::vector<Rat>& path_order, const LineSet& ls);

// Odd-count variant (stated without proof in the source theory, validated
// against brute force): one endpoint is the median itself, the other is the
// point closest to it, and every edge intersects the median.
bool is_longest_path_1d_odd(const std::vector<Rat>& path_order, const LineSet& ls);

// Longest-cycle test, any parity: every edge intersects the median; for odd
// counts the two edges at the median additionally leave to opposite sides.
bool is_longest_cycle_1d(const std::vector<Rat>& cycle_order, const LineSet& ls);

// Closed-form optimum for even counts n = 2m:
//   (n-1) * central gap + sum_j 2(m-j) * (j-th gap on each side).
Rat longest_path_length_1d(const LineSet& ls);

// Closed-form optimum for cycles, n >= 3.
// Even n = 2m: n * central gap + sum_j 2(m-j) * (j-th gap on each side).
// Odd n = 2k+1: sum_j 2(k+1-j) * (j-th gap on each side of the median point);
// both gaps adjacent to the median carry multiplicity 2k.
Rat longest_cycle_length_1d(const LineSet& ls);

struct DeficitCheck {
  Rat bound;            // certified lower bound on optimum - |cycle|: 2h or 0
  size_t edges_through; // edges whose closed interval contains I
  Rat h;                // length of I
};

// For n = 2k+1 points, I is the gap between the leftmost k+1 and rightmost k
// points. A cycle with fewer than 2k edges containing I is at least 2h
// shorter than a longest cycle.
DeficitCheck cycle_deficit_lemma_check(const LineSet& ls, const std::vector<Rat>& cycle_order);

// Adapters between label-based structures over a collinear PointSet (or a
// labeled LineSet) and the value orders used above.
std::vector<Rat> order_values(const Structure& s, const PointSet& ps, bool use_x = true);

// PointSet on the x-axis with labels "v0".."v{n-1}" in sorted order.
PointSet lineset_to_pointset(const LineSet& ls);

}  // namespace noncross
