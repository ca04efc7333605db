#include "noncross/geometry.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace noncross {

PointSet::PointSet(std::vector<Point> points, std::map<std::string, std::string> metadata)
    : points_(std::move(points)), metadata_(std::move(metadata)) {
  for (size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].label.empty())
      throw std::invalid_argument("PointSet: empty label");
    if (!index_.emplace(points_[i].label, i).second)
      throw std::invalid_argument("PointSet: duplicate label '" + points_[i].label + "'");
  }
  for (size_t i = 0; i < points_.size(); ++i)
    for (size_t j = i + 1; j < points_.size(); ++j)
      if (points_[i].x == points_[j].x && points_[i].y == points_[j].y)
        throw std::invalid_argument("PointSet: coincident points '" + points_[i].label +
                                    "' and '" + points_[j].label + "'");
}

const Point& PointSet::at(const std::string& label) const {
  return points_[index_of(label)];
}

size_t PointSet::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw std::out_of_range("PointSet: unknown label '" + label + "'");
  return it->second;
}

namespace {

void require_distinct(const std::vector<std::string>& labels, const char* what) {
  std::set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size())
    throw std::invalid_argument(std::string(what) + ": repeated label");
}

}  // namespace

Structure Structure::path(std::vector<std::string> order) {
  if (order.empty()) throw std::invalid_argument("Structure::path: empty");
  require_distinct(order, "Structure::path");
  if (order.size() > 1 && order.back() < order.front())
    std::reverse(order.begin(), order.end());
  Structure s;
  s.kind = StructureKind::Path;
  s.order = std::move(order);
  return s;
}

Structure Structure::cycle(std::vector<std::string> order) {
  if (order.size() < 3) throw std::invalid_argument("Structure::cycle: needs >= 3 vertices");
  require_distinct(order, "Structure::cycle");
  size_t n = order.size();
  size_t m = 0;
  for (size_t i = 1; i < n; ++i)
    if (order[i] < order[m]) m = i;
  std::vector<std::string> fwd(n), bwd(n);
  for (size_t i = 0; i < n; ++i) {
    fwd[i] = order[(m + i) % n];
    bwd[i] = order[(m + n - i) % n];
  }
  Structure s;
  s.kind = StructureKind::Cycle;
  s.order = fwd <= bwd ? std::move(fwd) : std::move(bwd);
  return s;
}

Structure Structure::matching(std::vector<std::pair<std::string, std::string>> pairs) {
  std::vector<std::string> all;
  for (auto& [a, b] : pairs) {
    if (a == b) throw std::invalid_argument("Structure::matching: self-pair");
    if (b < a) std::swap(a, b);
    all.push_back(a);
    all.push_back(b);
  }
  require_distinct(all, "Structure::matching");
  std::sort(pairs.begin(), pairs.end());
  Structure s;
  s.kind = StructureKind::Matching;
  s.pairs = std::move(pairs);
  return s;
}

size_t Structure::vertex_count() const {
  return kind == StructureKind::Matching ? pairs.size() * 2 : order.size();
}

std::vector<std::pair<std::string, std::string>> Structure::edges() const {
  std::vector<std::pair<std::string, std::string>> es;
  switch (kind) {
    case StructureKind::Path:
      for (size_t i = 0; i + 1 < order.size(); ++i) es.emplace_back(order[i], order[i + 1]);
      break;
    case StructureKind::Cycle:
      for (size_t i = 0; i < order.size(); ++i)
        es.emplace_back(order[i], order[(i + 1) % order.size()]);
      break;
    case StructureKind::Matching:
      es = pairs;
      break;
  }
  return es;
}

bool Structure::operator<(const Structure& o) const {
  if (kind != o.kind) return kind < o.kind;
  if (order != o.order) return order < o.order;
  return pairs < o.pairs;
}

void require_spanning(const Structure& s, const PointSet& ps) {
  std::vector<std::string> labels;
  if (s.kind == StructureKind::Matching) {
    for (const auto& [a, b] : s.pairs) {
      labels.push_back(a);
      labels.push_back(b);
    }
  } else {
    labels = s.order;
  }
  if (labels.size() != ps.size())
    throw std::invalid_argument("structure does not span the point set");
  for (const auto& l : labels) ps.index_of(l);
}

int orientation_sign(const Point& a, const Point& b, const Point& c) {
  Rat cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return sgn(cross);
}

Orientation orientation(const Point& a, const Point& b, const Point& c) {
  int s = orientation_sign(a, b, c);
  if (s > 0) return Orientation::Counterclockwise;
  if (s < 0) return Orientation::Clockwise;
  return Orientation::Collinear;
}

namespace {

// Open-interval overlap of the 1-D projections [a1,a2] and [b1,b2].
bool open_overlap_1d(Rat a1, Rat a2, Rat b1, Rat b2) {
  if (a2 < a1) std::swap(a1, a2);
  if (b2 < b1) std::swap(b1, b2);
  return std::max(a1, b1) < std::min(a2, b2);
}

}  // namespace

bool segments_cross(const std::pair<Point, Point>& s1, const std::pair<Point, Point>& s2) {
  const Point &a = s1.first, &b = s1.second, &c = s2.first, &d = s2.second;
  if (a.x == b.x && a.y == b.y) throw std::invalid_argument("segments_cross: degenerate segment");
  if (c.x == d.x && c.y == d.y) throw std::invalid_argument("segments_cross: degenerate segment");

  int d1 = orientation_sign(c, d, a);
  int d2 = orientation_sign(c, d, b);
  int d3 = orientation_sign(a, b, c);
  int d4 = orientation_sign(a, b, d);

  if (d1 == 0 && d2 == 0) {
    // All four points on one line: interiors overlap iff the open 1-D
    // projections along that line do.
    if (a.x != b.x) return open_overlap_1d(a.x, b.x, c.x, d.x);
    return open_overlap_1d(a.y, b.y, c.y, d.y);
  }
  // Proper crossing: endpoints strictly on opposite sides, both ways.
  return d1 * d2 < 0 && d3 * d4 < 0;
}

std::vector<std::pair<Edge, Edge>> crossing_pairs(const Structure& s, const PointSet& ps) {
  require_spanning(s, ps);
  auto es = s.edges();
  std::vector<std::pair<Edge, Edge>> out;
  for (size_t i = 0; i < es.size(); ++i)
    for (size_t j = i + 1; j < es.size(); ++j) {
      const auto seg1 = std::make_pair(ps.at(es[i].first), ps.at(es[i].second));
      const auto seg2 = std::make_pair(ps.at(es[j].first), ps.at(es[j].second));
      if (segments_cross(seg1, seg2)) out.emplace_back(es[i], es[j]);
    }
  return out;
}

bool is_noncrossing(const Structure& s, const PointSet& ps) {
  return crossing_pairs(s, ps).empty();
}

bool is_y_monotone(const Structure& path, const PointSet& ps) {
  if (path.kind != StructureKind::Path)
    throw std::invalid_argument("is_y_monotone: path expected");
  require_spanning(path, ps);
  if (path.order.size() < 2) return true;
  bool inc = true, dec = true;
  for (size_t i = 0; i + 1 < path.order.size(); ++i) {
    const Rat& y0 = ps.at(path.order[i]).y;
    const Rat& y1 = ps.at(path.order[i + 1]).y;
    if (y1 <= y0) inc = false;
    if (y1 >= y0) dec = false;
  }
  return inc || dec;
}

Rat squared_distance(const Point& a, const Point& b) {
  Rat dx = a.x - b.x, dy = a.y - b.y;
  return dx * dx + dy * dy;
}

std::vector<Rat> structure_length_radicands(const Structure& s, const PointSet& ps) {
  require_spanning(s, ps);
  std::vector<Rat> rads;
  for (const auto& [u, v] : s.edges()) rads.push_back(squared_distance(ps.at(u), ps.at(v)));
  return rads;
}

Interval structure_length(const Structure& s, const PointSet& ps, unsigned precision_bits) {
  auto rads = structure_length_radicands(s, ps);
  if (rads.empty()) return interval_exact(Rat(0), precision_bits);
  unsigned guard = std::bit_width(rads.size()) + 1;
  Interval acc = interval_exact(Rat(0), precision_bits);
  for (const Rat& r : rads) acc = interval_add(acc, sqrt_interval(r, precision_bits + guard));
  acc.precision_bits = precision_bits;
  return acc;
}

bool convex_position_same_orientation(const std::pair<Point, Point>& e1,
                                      const std::pair<Point, Point>& e2) {
  const Point &a = e1.first, &b = e1.second, &c = e2.first, &d = e2.second;
  // The quadrilateral a,b,c,d (in this cyclic order) is strictly convex iff
  // all four turns agree; then ab and cd are hull edges traversed the same
  // way around the hull. Any collinear triple fails strictness.
  int s1 = orientation_sign(a, b, c);
  int s2 = orientation_sign(b, c, d);
  int s3 = orientation_sign(c, d, a);
  int s4 = orientation_sign(d, a, b);
  if (s1 == 0 || s2 == 0 || s3 == 0 || s4 == 0) return false;
  return s1 == s2 && s2 == s3 && s3 == s4;
}

bool ray_hits_segment(const Point& u, const Point& v, const Point& p, const Point& q) {
  // Ray: v + t(v-u), t >= 0. Segment: p + s(q-p), s in [0,1].
  Rat rx = v.x - u.x, ry = v.y - u.y;
  Rat wx = q.x - p.x, wy = q.y - p.y;
  Rat det = rx * wy - ry * wx;
  Rat px = p.x - v.x, py = p.y - v.y;
  if (det != 0) {
    Rat t = px * wy - py * wx;  // times det
    Rat s = px * ry - py * rx;  // times det
    if (det < 0) {
      t = -t;
      s = -s;
      det = -det;
    }
    return t >= 0 && s >= 0 && s <= det;
  }
  // Parallel. Collinear iff p lies on the ray's line.
  if (px * ry - py * rx != 0) return false;
  Rat tp = px * rx + py * ry;                    // t(p) scaled by |r|^2 > 0
  Rat tq = (q.x - v.x) * rx + (q.y - v.y) * ry;  // t(q) scaled likewise
  return std::max(tp, tq) >= 0;
}

}  // namespace noncross
