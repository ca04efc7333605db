#pragma once

#include "noncross/interval.hpp"
#include "noncross/rat.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace noncross {

struct Point {
  std::string label;
  Rat x;
  Rat y;
};

// Labeled planar point set. Labels are unique and no two points coincide.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::vector<Point> points,
                    std::map<std::string, std::string> metadata = {});

  size_t size() const { return points_.size(); }
  const Point& operator[](size_t i) const { return points_[i]; }
  const std::vector<Point>& points() const { return points_; }
  const Point& at(const std::string& label) const;
  size_t index_of(const std::string& label) const;
  bool has(const std::string& label) const { return index_.count(label) > 0; }

  const std::map<std::string, std::string>& metadata() const { return metadata_; }
  std::map<std::string, std::string>& metadata() { return metadata_; }

 private:
  std::vector<Point> points_;
  std::map<std::string, size_t> index_;
  std::map<std::string, std::string> metadata_;
};

enum class StructureKind { Path, Cycle, Matching };

// Spanning path (vertex order), spanning cycle (cyclic order) or perfect
// matching (pair set), stored in canonical form: paths lead with the
// lexicographically smaller endpoint, cycles start at the smallest label in
// the smaller of the two directions, matching pairs are sorted.
struct Structure {
  StructureKind kind = StructureKind::Path;
  std::vector<std::string> order;                            // path / cycle
  std::vector<std::pair<std::string, std::string>> pairs;    // matching

  static Structure path(std::vector<std::string> order);
  static Structure cycle(std::vector<std::string> order);
  static Structure matching(std::vector<std::pair<std::string, std::string>> pairs);

  size_t vertex_count() const;
  std::vector<std::pair<std::string, std::string>> edges() const;
  bool operator==(const Structure&) const = default;
  bool operator<(const Structure& o) const;
};

// Checks that s spans ps (every label exactly once). Throws otherwise.
void require_spanning(const Structure& s, const PointSet& ps);

enum class Orientation { Clockwise, Counterclockwise, Collinear };

// Exact sign of the cross product (b-a) x (c-a).
Orientation orientation(const Point& a, const Point& b, const Point& c);
int orientation_sign(const Point& a, const Point& b, const Point& c);

// True iff the open segments intersect: proper crossings and collinear
// interior overlap count, a shared endpoint alone does not.
bool segments_cross(const std::pair<Point, Point>& s1, const std::pair<Point, Point>& s2);

using Edge = std::pair<std::string, std::string>;

// All unordered pairs of distinct edges of s whose interiors cross.
std::vector<std::pair<Edge, Edge>> crossing_pairs(const Structure& s, const PointSet& ps);
bool is_noncrossing(const Structure& s, const PointSet& ps);

// Strict y-monotonicity along the path order (ties return false).
bool is_y_monotone(const Structure& path, const PointSet& ps);

Rat squared_distance(const Point& a, const Point& b);

// Certified enclosure of the total edge length.
Interval structure_length(const Structure& s, const PointSet& ps, unsigned precision_bits);

// Squared edge lengths of s, one radicand per edge (length = sum of roots).
std::vector<Rat> structure_length_radicands(const Structure& s, const PointSet& ps);

// True iff the four endpoints are in strictly convex position with e1 and e2
// as hull edges and both directed edges run the same way around that hull.
bool convex_position_same_orientation(const std::pair<Point, Point>& e1,
                                      const std::pair<Point, Point>& e2);

// True iff the extension of the directed edge (u,v) beyond v (the ray from v
// with direction v-u) meets the closed segment [p,q]. Exact.
bool ray_hits_segment(const Point& u, const Point& v, const Point& p, const Point& q);

}  // namespace noncross
