#pragma once

#include "noncross/errors.hpp"
#include "noncross/geometry.hpp"
#include "noncross/interval.hpp"
#include "noncross/radical.hpp"

#include <cstdint>
#include <vector>

namespace noncross {

enum class SolveMethod { BruteForce, SubsetDP, Auto };
enum class Uniqueness { Proven, Refuted, Unresolved };

struct SolveOptions {
  SolveMethod method = SolveMethod::Auto;
  unsigned precision_bits = 256;   // reported interval precision
  unsigned radical_cap_bits = 0;   // 0 = default escalation cap
  size_t brute_cap = 10;           // paths / cycles
  size_t brute_cap_matching = 12;
  size_t dp_cap = 20;
  size_t dp_cap_matching = 22;
};

struct SolveStats {
  std::uint64_t structures_examined = 0;
  size_t peak_table_entries = 0;
  double wall_ms = 0.0;
};

// Result of an exact maximum-structure solve. `unique == Proven` certifies a
// strict gap: best_length.lo > second_best_length.hi. Refuted carries the
// full co-optimal set (brute force) or a witness pair (subset DP).
struct SolveResult {
  Structure best;
  Interval best_length;
  Interval second_best_length;  // over canonical structures distinct from best
  Uniqueness unique = Uniqueness::Unresolved;
  std::vector<Structure> co_optima;
  SolveMethod method_used = SolveMethod::BruteForce;
  SolveStats stats;
};

SolveResult max_path(const PointSet& ps, const SolveOptions& opt = {});
SolveResult max_cycle(const PointSet& ps, const SolveOptions& opt = {});
SolveResult max_matching(const PointSet& ps, const SolveOptions& opt = {});

struct OptimaResult {
  std::vector<Structure> optima;      // length >= optimum - slack, certified
  std::vector<Structure> unresolved;  // comparisons that hit the precision cap
};

// All canonical structures within `slack` of the optimum (slack 0 = exact
// co-optima). Brute force only.
OptimaResult enumerate_optima(const PointSet& ps, StructureKind kind, const Rat& slack,
                              const SolveOptions& opt = {});

}  // namespace noncross
