#include "noncross/line1d.hpp"

#include <algorithm>
#include <stdexcept>

namespace noncross {

LineSet::LineSet(std::vector<Rat> values) : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("LineSet: empty");
  std::sort(values_.begin(), values_.end());
  for (size_t i = 0; i + 1 < values_.size(); ++i)
    if (values_[i] == values_[i + 1])
      throw std::invalid_argument("LineSet: duplicate value " + rat_to_string(values_[i]));
}

Rat LineSet::median() const {
  size_t n = values_.size();
  if (n % 2 == 1) return values_[n / 2];
  return (values_[n / 2 - 1] + values_[n / 2]) / 2;
}

namespace {

void require_spans(const std::vector<Rat>& order, const LineSet& ls) {
  if (order.size() != ls.size()) throw std::invalid_argument("order does not span the LineSet");
  std::vector<Rat> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != ls.values()) throw std::invalid_argument("order does not span the LineSet");
}

bool edge_intersects(const Rat& a, const Rat& b, const Rat& m) {
  return std::min(a, b) <= m && m <= std::max(a, b);
}

}  // namespace

bool is_longest_path_1d(const std::vector<Rat>& order, const LineSet& ls) {
  if (ls.size() % 2 != 0)
    throw std::invalid_argument("is_longest_path_1d: stated for even counts only");
  require_spans(order, ls);
  Rat m = ls.median();
  for (size_t i = 0; i + 1 < order.size(); ++i)
    if (!edge_intersects(order[i], order[i + 1], m)) return false;
  // Endpoints must be the two points closest to the median, i.e. the middle pair.
  const Rat& lo = ls[ls.size() / 2 - 1];
  const Rat& hi = ls[ls.size() / 2];
  return (order.front() == lo && order.back() == hi) ||
         (order.front() == hi && order.back() == lo);
}

bool is_longest_path_1d_odd(const std::vector<Rat>& order, const LineSet& ls) {
  if (ls.size() % 2 != 1)
    throw std::invalid_argument("is_longest_path_1d_odd: stated for odd counts only");
  require_spans(order, ls);
  if (ls.size() == 1) return true;
  size_t k = ls.size() / 2;
  Rat m = ls.median();
  for (size_t i = 0; i + 1 < order.size(); ++i)
    if (!edge_intersects(order[i], order[i + 1], m)) return false;
  // One endpoint is the median point, the other the point closest to it
  // (either neighbor qualifies on a distance tie).
  Rat below = m - ls[k - 1];
  Rat above = ls[k + 1] - m;
  auto is_closest = [&](const Rat& v) {
    if (above < below) return v == ls[k + 1];
    if (below < above) return v == ls[k - 1];
    return v == ls[k - 1] || v == ls[k + 1];
  };
  return (order.front() == m && is_closest(order.back())) ||
         (order.back() == m && is_closest(order.front()));
}

bool is_longest_cycle_1d(const std::vector<Rat>& order, const LineSet& ls) {
  if (ls.size() < 3) throw std::invalid_argument("is_longest_cycle_1d: needs >= 3 points");
  require_spans(order, ls);
  Rat m = ls.median();
  size_t n = order.size();
  for (size_t i = 0; i < n; ++i)
    if (!edge_intersects(order[i], order[(i + 1) % n], m)) return false;
  if (n % 2 == 1) {
    // The two edges at the median point must leave to opposite sides.
    size_t at = n;
    for (size_t i = 0; i < n; ++i)
      if (order[i] == m) at = i;
    const Rat& prev = order[(at + n - 1) % n];
    const Rat& next = order[(at + 1) % n];
    if ((prev > m && next > m) || (prev < m && next < m)) return false;
  }
  return true;
}

Rat longest_path_length_1d(const LineSet& ls) {
  size_t n = ls.size();
  if (n % 2 != 0) throw std::invalid_argument("longest_path_length_1d: even counts only");
  size_t m = n / 2;
  Rat total = (ls[m] - ls[m - 1]) * static_cast<long>(n - 1);
  // Gap j away from the center is covered twice by each of the m-j points
  // beyond it (the two endpoints sit at the middle and have degree 1).
  for (size_t j = 1; j <= m - 1; ++j) {
    long mult = 2 * static_cast<long>(m - j);
    total += (ls[m + j] - ls[m + j - 1]) * mult;
    total += (ls[m - j] - ls[m - j - 1]) * mult;
  }
  return total;
}

Rat longest_cycle_length_1d(const LineSet& ls) {
  size_t n = ls.size();
  if (n < 3) throw std::invalid_argument("longest_cycle_length_1d: needs >= 3 points");
  Rat total(0);
  if (n % 2 == 0) {
    size_t m = n / 2;
    total += (ls[m] - ls[m - 1]) * static_cast<long>(n);
    for (size_t j = 1; j <= m - 1; ++j) {
      long mult = 2 * static_cast<long>(m - j);
      total += (ls[m + j] - ls[m + j - 1]) * mult;
      total += (ls[m - j] - ls[m - j - 1]) * mult;
    }
  } else {
    // Median is the point of rank k+1; every vertex has degree 2 and each
    // gap at distance j from the median is covered by 2(k+1-j) edge slots.
    size_t k = n / 2;
    for (size_t j = 1; j <= k; ++j) {
      long mult = 2 * static_cast<long>(k + 1 - j);
      total += (ls[k + j] - ls[k + j - 1]) * mult;
      total += (ls[k - j + 1] - ls[k - j]) * mult;
    }
  }
  return total;
}

DeficitCheck cycle_deficit_lemma_check(const LineSet& ls, const std::vector<Rat>& order) {
  size_t n = ls.size();
  if (n % 2 != 1) throw std::invalid_argument("cycle_deficit_lemma_check: odd counts only");
  require_spans(order, ls);
  size_t k = n / 2;
  // I = gap between the leftmost k+1 and the rightmost k points.
  const Rat& ilo = ls[k];
  const Rat& ihi = ls[k + 1];
  Rat h = ihi - ilo;
  size_t through = 0;
  for (size_t i = 0; i < n; ++i) {
    const Rat& a = order[i];
    const Rat& b = order[(i + 1) % n];
    if (std::min(a, b) <= ilo && ihi <= std::max(a, b)) ++through;
  }
  DeficitCheck out;
  out.edges_through = through;
  out.h = h;
  out.bound = through < 2 * k ? 2 * h : Rat(0);
  return out;
}

std::vector<Rat> order_values(const Structure& s, const PointSet& ps, bool use_x) {
  if (s.kind == StructureKind::Matching)
    throw std::invalid_argument("order_values: path or cycle expected");
  std::vector<Rat> vals;
  for (const auto& l : s.order) {
    const Point& p = ps.at(l);
    vals.push_back(use_x ? p.x : p.y);
  }
  return vals;
}

PointSet lineset_to_pointset(const LineSet& ls) {
  std::vector<Point> pts;
  for (size_t i = 0; i < ls.size(); ++i)
    pts.push_back(Point{"v" + std::to_string(i), ls[i], Rat(0)});
  return PointSet(std::move(pts));
}

}  // namespace noncross
