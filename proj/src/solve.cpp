#include "noncross/solve.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <iterator>
#include <limits>
#include <map>
#include <numeric>
#include <optional>

namespace noncross {

namespace {

using Rep = std::vector<std::uint8_t>;  // path/cycle: visit order; matching: flat pairs

// Precomputed pairwise data: exact squared distances grouped into classes of
// equal radicands, double approximations with one certified per-edge error
// bound, and per-class sqrt intervals cached by precision.
class PairTable {
 public:
  PairTable(const PointSet& ps, unsigned cap_bits) : n_(ps.size()), cap_bits_(cap_bits) {
    cls_.assign(n_ * n_, -1);
    dist_.assign(n_ * n_, 0.0);
    err_edge_ = 0.0;
    max_dist_ = 0.0;
    for (size_t i = 0; i < n_; ++i)
      for (size_t j = i + 1; j < n_; ++j) {
        Rat sq = squared_distance(ps[i], ps[j]);
        int c = -1;
        for (size_t k = 0; k < radicands_.size(); ++k)
          if (radicands_[k] == sq) {
            c = static_cast<int>(k);
            break;
          }
        if (c < 0) {
          c = static_cast<int>(radicands_.size());
          radicands_.push_back(sq);
        }
        cls_[i * n_ + j] = cls_[j * n_ + i] = c;
        double d = std::sqrt(mpq_get_d(sq.get_mpq_t()));
        dist_[i * n_ + j] = dist_[j * n_ + i] = d;
        max_dist_ = std::max(max_dist_, d);
        Interval iv = sqrt_interval(sq, 64);
        Rat dr;
        mpq_set_d(dr.get_mpq_t(), d);
        Rat err = std::max(abs(dr - iv.lo), abs(iv.hi - dr)) + iv.width();
        err_edge_ = std::max(err_edge_, mpq_get_d(err.get_mpq_t()) * (1.0 + 1e-12) + 1e-300);
      }
  }

  size_t n() const { return n_; }
  unsigned cap_bits() const { return cap_bits_; }
  int cls(size_t i, size_t j) const { return cls_[i * n_ + j]; }
  double dist(size_t i, size_t j) const { return dist_[i * n_ + j]; }
  const Rat& radicand(int c) const { return radicands_[c]; }

  // Filter slack for sums of up to m edges: certified |double sum - true| bound.
  double sum_error(size_t m) const {
    double md = static_cast<double>(m);
    return md * err_edge_ + md * (md * max_dist_) * 2.3e-16 + 1e-300;
  }

  const Interval& cls_interval(int c, unsigned bits) {
    auto& level = cache_[bits];
    if (level.size() < radicands_.size()) level.resize(radicands_.size());
    auto& slot = level[c];
    if (!slot) slot = sqrt_interval(radicands_[c], bits);
    return *slot;
  }

  // (kernel, coefficient) with sqrt(radicand) = coeff * sqrt(kernel).
  const std::pair<mpz_class, Rat>& cls_canonical(int c) {
    if (canon_.size() < radicands_.size()) canon_.resize(radicands_.size());
    auto& slot = canon_[c];
    if (!slot) {
      const Rat& r = radicands_[c];
      auto [f, kernel] = extract_square_part(r.get_num() * r.get_den());
      slot = std::make_pair(kernel, rat_make(f, r.get_den()));
    }
    return *slot;
  }

 private:
  size_t n_;
  unsigned cap_bits_;
  std::vector<int> cls_;
  std::vector<double> dist_;
  std::vector<Rat> radicands_;
  double err_edge_, max_dist_;
  std::map<unsigned, std::vector<std::optional<Interval>>> cache_;
  std::vector<std::optional<std::pair<mpz_class, Rat>>> canon_;
};

std::vector<std::pair<std::uint8_t, std::uint8_t>> rep_edges(const Rep& rep, StructureKind kind) {
  std::vector<std::pair<std::uint8_t, std::uint8_t>> es;
  switch (kind) {
    case StructureKind::Path:
      for (size_t i = 0; i + 1 < rep.size(); ++i) es.emplace_back(rep[i], rep[i + 1]);
      break;
    case StructureKind::Cycle:
      for (size_t i = 0; i < rep.size(); ++i)
        es.emplace_back(rep[i], rep[(i + 1) % rep.size()]);
      break;
    case StructureKind::Matching:
      for (size_t i = 0; i + 1 < rep.size(); i += 2) es.emplace_back(rep[i], rep[i + 1]);
      break;
  }
  return es;
}

std::vector<int> cls_multiset(PairTable& tab, const Rep& rep, StructureKind kind) {
  std::vector<int> cls;
  for (auto [u, v] : rep_edges(rep, kind)) cls.push_back(tab.cls(u, v));
  std::sort(cls.begin(), cls.end());
  return cls;
}

// Exact comparison of two edge-length sums given as sorted class multisets.
// Shared classes cancel; intervals escalate; provable equality goes through
// squarefree kernels.
Ordering compare_edge_sets(PairTable& tab, const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> ra, rb;  // a \ b and b \ a as multisets
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(ra));
  std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(rb));
  if (ra.empty() && rb.empty()) return Ordering::Equal;

  bool kernels_checked = false;
  auto eval = [&](const std::vector<int>& cls, unsigned bits) {
    Interval acc = interval_exact(Rat(0), bits);
    for (int c : cls) acc = interval_add(acc, tab.cls_interval(c, bits + 6));
    return acc;
  };
  for (unsigned p = 64; p <= tab.cap_bits(); p *= 2) {
    Interval ia = eval(ra, p);
    Interval ib = eval(rb, p);
    if (ia.lo > ib.hi) return Ordering::Greater;
    if (ia.hi < ib.lo) return Ordering::Less;
    if (!kernels_checked && (p >= 1024 || p * 2 > tab.cap_bits())) {
      kernels_checked = true;
      auto merge = [&](const std::vector<int>& cls) {
        std::map<mpz_class, Rat> m;
        for (int c : cls) {
          const auto& [kernel, coeff] = tab.cls_canonical(c);
          m[kernel] += coeff;
        }
        for (auto it = m.begin(); it != m.end();)
          it = it->second == 0 ? m.erase(it) : std::next(it);
        return m;
      };
      if (merge(ra) == merge(rb)) return Ordering::Equal;
    }
  }
  return Ordering::Unresolved;
}

template <class F>
void for_each_path(size_t n, F&& f) {
  Rep perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  if (n == 1) {
    f(perm);
    return;
  }
  do {
    if (perm.front() < perm.back()) f(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

template <class F>
void for_each_cycle(size_t n, F&& f) {
  Rep rest(n - 1);
  std::iota(rest.begin(), rest.end(), 1);
  Rep full(n);
  full[0] = 0;
  do {
    if (rest.front() < rest.back()) {
      std::copy(rest.begin(), rest.end(), full.begin() + 1);
      f(full);
    }
  } while (std::next_permutation(rest.begin(), rest.end()));
}

template <class F>
void for_each_matching_rec(Rep& avail, Rep& cur, F&& f) {
  if (avail.empty()) {
    f(cur);
    return;
  }
  std::uint8_t first = avail.front();
  for (size_t i = 1; i < avail.size(); ++i) {
    std::uint8_t partner = avail[i];
    Rep rest;
    for (size_t j = 1; j < avail.size(); ++j)
      if (j != i) rest.push_back(avail[j]);
    cur.push_back(first);
    cur.push_back(partner);
    for_each_matching_rec(rest, cur, f);
    cur.pop_back();
    cur.pop_back();
  }
}

template <class F>
void for_each_matching(size_t n, F&& f) {
  Rep avail(n);
  std::iota(avail.begin(), avail.end(), 0);
  Rep cur;
  for_each_matching_rec(avail, cur, f);
}

template <class F>
void enumerate_kind(size_t n, StructureKind kind, F&& f) {
  switch (kind) {
    case StructureKind::Path: for_each_path(n, f); break;
    case StructureKind::Cycle: for_each_cycle(n, f); break;
    case StructureKind::Matching: for_each_matching(n, f); break;
  }
}

Structure rep_to_structure(const Rep& rep, StructureKind kind, const PointSet& ps) {
  if (kind == StructureKind::Matching) {
    std::vector<std::pair<std::string, std::string>> pairs;
    for (size_t i = 0; i + 1 < rep.size(); i += 2)
      pairs.emplace_back(ps[rep[i]].label, ps[rep[i + 1]].label);
    return Structure::matching(std::move(pairs));
  }
  std::vector<std::string> labels;
  for (auto v : rep) labels.push_back(ps[v].label);
  return kind == StructureKind::Path ? Structure::path(std::move(labels))
                                     : Structure::cycle(std::move(labels));
}

double rep_length_dbl(const PairTable& tab, const Rep& rep, StructureKind kind) {
  double s = 0.0;
  switch (kind) {
    case StructureKind::Path:
      for (size_t i = 0; i + 1 < rep.size(); ++i) s += tab.dist(rep[i], rep[i + 1]);
      break;
    case StructureKind::Cycle:
      for (size_t i = 0; i < rep.size(); ++i)
        s += tab.dist(rep[i], rep[(i + 1) % rep.size()]);
      break;
    case StructureKind::Matching:
      for (size_t i = 0; i + 1 < rep.size(); i += 2) s += tab.dist(rep[i], rep[i + 1]);
      break;
  }
  return s;
}

size_t edge_count(size_t n, StructureKind kind) {
  switch (kind) {
    case StructureKind::Path: return n - 1;
    case StructureKind::Cycle: return n;
    case StructureKind::Matching: return n / 2;
  }
  return 0;
}

struct ScanBest {
  Rep rep;
  std::vector<int> cls;
  double dbl = -std::numeric_limits<double>::infinity();
  bool found = false;
};

SolveResult solve_brute(const PointSet& ps, StructureKind kind, const SolveOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  size_t n = ps.size();
  unsigned cap = opt.radical_cap_bits ? opt.radical_cap_bits : default_precision_cap();
  PairTable tab(ps, cap);
  double slack = 2.0 * tab.sum_error(edge_count(n, kind));

  SolveResult out;
  out.method_used = SolveMethod::BruteForce;

  ScanBest best;
  std::vector<Rep> ties;
  std::vector<Rep> unresolved_near;
  std::uint64_t examined = 0;

  enumerate_kind(n, kind, [&](const Rep& rep) {
    ++examined;
    double len = rep_length_dbl(tab, rep, kind);
    if (best.found && len < best.dbl - slack) return;
    auto cls = cls_multiset(tab, rep, kind);
    if (!best.found) {
      best = ScanBest{rep, cls, len, true};
      return;
    }
    switch (compare_edge_sets(tab, cls, best.cls)) {
      case Ordering::Greater:
        best = ScanBest{rep, cls, len, true};
        ties.clear();  // exact ties with a strictly beaten best are gone for good
        break;
      case Ordering::Equal:
        ties.push_back(rep);
        break;
      case Ordering::Less:
        break;
      case Ordering::Unresolved:
        unresolved_near.push_back(rep);
        break;
    }
  });

  // Re-check candidates that evaded the cap against the final best; anything
  // still unresolved blocks a Proven verdict.
  {
    std::vector<Rep> still;
    for (const auto& rep : unresolved_near) {
      auto cls = cls_multiset(tab, rep, kind);
      Ordering ord = compare_edge_sets(tab, cls, best.cls);
      if (ord == Ordering::Equal) ties.push_back(rep);
      if (ord == Ordering::Unresolved) still.push_back(rep);
      // Greater is impossible here: the scan would have adopted it earlier
      // only if separation had succeeded; treat defensively as unresolved.
      if (ord == Ordering::Greater) still.push_back(rep);
    }
    unresolved_near = std::move(still);
  }

  out.stats.structures_examined = examined;
  out.stats.peak_table_entries = ties.size() + unresolved_near.size();
  out.best = rep_to_structure(best.rep, kind, ps);
  out.best_length = structure_length(out.best, ps, opt.precision_bits);

  if (!unresolved_near.empty()) {
    out.unique = Uniqueness::Unresolved;
    out.second_best_length = structure_length(rep_to_structure(unresolved_near.front(), kind, ps),
                                              ps, opt.precision_bits);
  } else if (!ties.empty()) {
    out.unique = Uniqueness::Refuted;
    out.second_best_length = out.best_length;
    out.co_optima.push_back(out.best);
    for (const auto& t : ties) out.co_optima.push_back(rep_to_structure(t, kind, ps));
    std::sort(out.co_optima.begin(), out.co_optima.end());
  } else {
    // Second pass over structures distinct from the best.
    ScanBest second;
    enumerate_kind(n, kind, [&](const Rep& rep) {
      if (rep == best.rep) return;
      double len = rep_length_dbl(tab, rep, kind);
      if (second.found && len < second.dbl - slack) return;
      auto cls = cls_multiset(tab, rep, kind);
      if (!second.found) {
        second = ScanBest{rep, cls, len, true};
        return;
      }
      if (compare_edge_sets(tab, cls, second.cls) == Ordering::Greater)
        second = ScanBest{rep, cls, len, true};
    });
    if (!second.found) {
      // Only one canonical structure exists (e.g. two points, a triangle).
      out.unique = Uniqueness::Proven;
      out.second_best_length = interval_exact(Rat(0), opt.precision_bits);
    } else {
      switch (compare_edge_sets(tab, best.cls, second.cls)) {
        case Ordering::Greater: {
          out.unique = Uniqueness::Proven;
          Structure s2 = rep_to_structure(second.rep, kind, ps);
          out.second_best_length = structure_length(s2, ps, opt.precision_bits);
          // Widen precision until the reported intervals certify the gap.
          unsigned bits = opt.precision_bits;
          while (!(out.best_length.lo > out.second_best_length.hi) && bits < cap) {
            bits *= 2;
            out.best_length = structure_length(out.best, ps, bits);
            out.second_best_length = structure_length(s2, ps, bits);
          }
          if (!(out.best_length.lo > out.second_best_length.hi)) out.unique = Uniqueness::Unresolved;
          break;
        }
        case Ordering::Equal:
          out.unique = Uniqueness::Refuted;
          out.co_optima = {out.best, rep_to_structure(second.rep, kind, ps)};
          std::sort(out.co_optima.begin(), out.co_optima.end());
          out.second_best_length = out.best_length;
          break;
        default:
          out.unique = Uniqueness::Unresolved;
          out.second_best_length =
              structure_length(rep_to_structure(second.rep, kind, ps), ps, opt.precision_bits);
          break;
      }
    }
  }

  out.stats.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

// ---------------------------------------------------------------------------
// Subset DP (Held-Karp style, maximization) at fixed double precision with a
// certified ambiguity flag. Any near-tie decision marks the whole solve
// ambiguous; uniqueness is then reported Unresolved rather than guessed.
// ---------------------------------------------------------------------------

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

struct DpRun {
  Rep order;       // best structure found (visit order / flat pairs)
  double value = kNegInf;
  bool feasible = false;
};

struct DpContext {
  PairTable& tab;
  size_t n;
  double margin;  // decisions closer than this are ambiguous
  bool ambiguous = false;
  int banned_u = -1, banned_v = -1;
  size_t peak_entries = 0;

  double d(size_t u, size_t v) const {
    if ((static_cast<int>(u) == banned_u && static_cast<int>(v) == banned_v) ||
        (static_cast<int>(u) == banned_v && static_cast<int>(v) == banned_u))
      return kNegInf;
    return tab.dist(u, v);
  }
  void note(double top, double second) {
    if (second != kNegInf && top - second <= margin) ambiguous = true;
  }
};

DpRun dp_path(DpContext& ctx) {
  size_t n = ctx.n;
  size_t full = size_t(1) << n;
  std::vector<double> dp(full * n, kNegInf);
  std::vector<std::uint8_t> parent(full * n, 0xff);
  ctx.peak_entries = std::max(ctx.peak_entries, full * n);
  for (size_t v = 0; v < n; ++v) dp[(size_t(1) << v) * n + v] = 0.0;
  for (size_t mask = 1; mask < full; ++mask) {
    for (size_t v = 0; v < n; ++v) {
      if (!(mask & (size_t(1) << v))) continue;
      size_t pm = mask ^ (size_t(1) << v);
      if (pm == 0) continue;
      double top = kNegInf, second = kNegInf;
      std::uint8_t arg = 0xff;
      for (size_t u = 0; u < n; ++u) {
        if (!(pm & (size_t(1) << u))) continue;
        double base = dp[pm * n + u];
        if (base == kNegInf) continue;
        double cand = base + ctx.d(u, v);
        if (cand > top) {
          second = top;
          top = cand;
          arg = static_cast<std::uint8_t>(u);
        } else if (cand > second) {
          second = cand;
        }
      }
      dp[mask * n + v] = top;
      parent[mask * n + v] = arg;
      if (top != kNegInf) ctx.note(top, second);
    }
  }
  double top = kNegInf, second = kNegInf;
  size_t arg = 0;
  for (size_t v = 0; v < n; ++v) {
    double cand = dp[(full - 1) * n + v];
    if (cand > top) {
      second = top;
      top = cand;
      arg = v;
    } else if (cand > second) {
      second = cand;
    }
  }
  DpRun run;
  if (top == kNegInf) return run;
  ctx.note(top, second);
  run.feasible = true;
  run.value = top;
  Rep rev;
  size_t mask = full - 1, v = arg;
  while (true) {
    rev.push_back(static_cast<std::uint8_t>(v));
    std::uint8_t p = parent[mask * n + v];
    if (p == 0xff) break;
    mask ^= size_t(1) << v;
    v = p;
  }
  std::reverse(rev.begin(), rev.end());
  if (rev.front() > rev.back()) std::reverse(rev.begin(), rev.end());
  run.order = rev;
  return run;
}

DpRun dp_cycle(DpContext& ctx) {
  size_t n = ctx.n;
  size_t full = size_t(1) << n;
  std::vector<double> dp(full * n, kNegInf);
  std::vector<std::uint8_t> parent(full * n, 0xff);
  ctx.peak_entries = std::max(ctx.peak_entries, full * n);
  dp[(size_t(1) << 0) * n + 0] = 0.0;
  for (size_t mask = 1; mask < full; ++mask) {
    if (!(mask & 1)) continue;
    for (size_t v = 0; v < n; ++v) {
      if (!(mask & (size_t(1) << v))) continue;
      size_t pm = mask ^ (size_t(1) << v);
      if (v == 0 || pm == 0) continue;
      double top = kNegInf, second = kNegInf;
      std::uint8_t arg = 0xff;
      for (size_t u = 0; u < n; ++u) {
        if (!(pm & (size_t(1) << u))) continue;
        double base = dp[pm * n + u];
        if (base == kNegInf) continue;
        double cand = base + ctx.d(u, v);
        if (cand > top) {
          second = top;
          top = cand;
          arg = static_cast<std::uint8_t>(u);
        } else if (cand > second) {
          second = cand;
        }
      }
      dp[mask * n + v] = top;
      parent[mask * n + v] = arg;
      if (top != kNegInf) ctx.note(top, second);
    }
  }
  double top = kNegInf, second = kNegInf;
  size_t arg = 0;
  for (size_t v = 1; v < n; ++v) {
    double base = dp[(full - 1) * n + v];
    if (base == kNegInf) continue;
    double cand = base + ctx.d(v, 0);
    if (cand > top) {
      second = top;
      top = cand;
      arg = v;
    } else if (cand > second) {
      second = cand;
    }
  }
  DpRun run;
  if (top == kNegInf) return run;
  ctx.note(top, second);
  run.feasible = true;
  run.value = top;
  Rep rev;
  size_t mask = full - 1, v = arg;
  while (v != 0) {
    rev.push_back(static_cast<std::uint8_t>(v));
    std::uint8_t p = parent[mask * n + v];
    mask ^= size_t(1) << v;
    v = p;
  }
  rev.push_back(0);
  std::reverse(rev.begin(), rev.end());  // starts at 0
  if (rev[1] > rev.back()) std::reverse(rev.begin() + 1, rev.end());
  run.order = rev;
  return run;
}

DpRun dp_matching(DpContext& ctx) {
  size_t n = ctx.n;
  size_t full = size_t(1) << n;
  std::vector<double> dp(full, kNegInf);
  std::vector<std::uint8_t> choice(full, 0xff);
  ctx.peak_entries = std::max(ctx.peak_entries, full);
  dp[0] = 0.0;
  for (size_t mask = 1; mask < full; ++mask) {
    size_t i = 0;
    while (!(mask & (size_t(1) << i))) ++i;
    double top = kNegInf, second = kNegInf;
    std::uint8_t arg = 0xff;
    for (size_t j = i + 1; j < n; ++j) {
      if (!(mask & (size_t(1) << j))) continue;
      size_t pm = mask ^ (size_t(1) << i) ^ (size_t(1) << j);
      if (dp[pm] == kNegInf) continue;
      double cand = dp[pm] + ctx.d(i, j);
      if (cand > top) {
        second = top;
        top = cand;
        arg = static_cast<std::uint8_t>(j);
      } else if (cand > second) {
        second = cand;
      }
    }
    dp[mask] = top;
    choice[mask] = arg;
    if (top != kNegInf && (std::popcount(mask) % 2 == 0)) ctx.note(top, second);
  }
  DpRun run;
  if (dp[full - 1] == kNegInf) return run;
  run.feasible = true;
  run.value = dp[full - 1];
  size_t mask = full - 1;
  while (mask) {
    size_t i = 0;
    while (!(mask & (size_t(1) << i))) ++i;
    std::uint8_t j = choice[mask];
    run.order.push_back(static_cast<std::uint8_t>(i));
    run.order.push_back(j);
    mask ^= (size_t(1) << i) ^ (size_t(1) << j);
  }
  return run;
}

DpRun run_dp(DpContext& ctx, StructureKind kind) {
  switch (kind) {
    case StructureKind::Path: return dp_path(ctx);
    case StructureKind::Cycle: return dp_cycle(ctx);
    case StructureKind::Matching: return dp_matching(ctx);
  }
  return {};
}

SolveResult solve_dp(const PointSet& ps, StructureKind kind, const SolveOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  size_t n = ps.size();
  unsigned cap = opt.radical_cap_bits ? opt.radical_cap_bits : default_precision_cap();
  PairTable tab(ps, cap);
  double margin = 2.0 * tab.sum_error(edge_count(n, kind));

  DpContext ctx{tab, n, margin};
  DpRun bestRun = run_dp(ctx, kind);
  if (!bestRun.feasible) throw std::invalid_argument("subset DP found no feasible structure");

  SolveResult out;
  out.method_used = SolveMethod::SubsetDP;
  out.stats.structures_examined = 0;
  out.best = rep_to_structure(bestRun.order, kind, ps);
  out.best_length = structure_length(out.best, ps, opt.precision_bits);
  auto best_cls = cls_multiset(tab, bestRun.order, kind);

  // Second best: rerun with each edge of the best structure banned; any
  // distinct canonical structure misses at least one of them.
  DpRun second;
  std::vector<int> second_cls;
  for (auto [u, v] : rep_edges(bestRun.order, kind)) {
    DpContext c2{tab, n, margin};
    c2.banned_u = u;
    c2.banned_v = v;
    DpRun r = run_dp(c2, kind);
    ctx.ambiguous = ctx.ambiguous || c2.ambiguous;
    ctx.peak_entries = std::max(ctx.peak_entries, c2.peak_entries);
    if (!r.feasible) continue;
    if (!second.feasible) {
      second = r;
      second_cls = cls_multiset(tab, r.order, kind);
      continue;
    }
    auto cls = cls_multiset(tab, r.order, kind);
    if (compare_edge_sets(tab, cls, second_cls) == Ordering::Greater) {
      second = r;
      second_cls = cls;
    }
  }
  out.stats.peak_table_entries = ctx.peak_entries;

  if (!second.feasible) {
    out.unique = ctx.ambiguous ? Uniqueness::Unresolved : Uniqueness::Proven;
    out.second_best_length = interval_exact(Rat(0), opt.precision_bits);
  } else {
    Structure s2 = rep_to_structure(second.order, kind, ps);
    out.second_best_length = structure_length(s2, ps, opt.precision_bits);
    if (ctx.ambiguous) {
      out.unique = Uniqueness::Unresolved;
    } else {
      switch (compare_edge_sets(tab, best_cls, second_cls)) {
        case Ordering::Greater: {
          out.unique = Uniqueness::Proven;
          unsigned bits = opt.precision_bits;
          while (!(out.best_length.lo > out.second_best_length.hi) && bits < cap) {
            bits *= 2;
            out.best_length = structure_length(out.best, ps, bits);
            out.second_best_length = structure_length(s2, ps, bits);
          }
          if (!(out.best_length.lo > out.second_best_length.hi))
            out.unique = Uniqueness::Unresolved;
          break;
        }
        case Ordering::Equal:
          out.unique = Uniqueness::Refuted;
          out.co_optima = {out.best, s2};
          std::sort(out.co_optima.begin(), out.co_optima.end());
          break;
        default:
          out.unique = Uniqueness::Unresolved;
          break;
      }
    }
  }
  out.stats.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

SolveResult solve(const PointSet& ps, StructureKind kind, const SolveOptions& opt) {
  size_t n = ps.size();
  size_t bcap = kind == StructureKind::Matching ? opt.brute_cap_matching : opt.brute_cap;
  size_t dcap = kind == StructureKind::Matching ? opt.dp_cap_matching : opt.dp_cap;
  switch (opt.method) {
    case SolveMethod::BruteForce:
      if (n > bcap) throw CapacityError("point count exceeds brute-force cap");
      return solve_brute(ps, kind, opt);
    case SolveMethod::SubsetDP:
      if (n > dcap) throw CapacityError("point count exceeds subset-DP cap");
      return solve_dp(ps, kind, opt);
    case SolveMethod::Auto:
      if (n <= bcap) return solve_brute(ps, kind, opt);
      if (n <= dcap) return solve_dp(ps, kind, opt);
      throw CapacityError("point count exceeds solver caps");
  }
  throw std::logic_error("unreachable");
}

}  // namespace

SolveResult max_path(const PointSet& ps, const SolveOptions& opt) {
  if (ps.size() < 2) throw std::invalid_argument("max_path: needs >= 2 points");
  return solve(ps, StructureKind::Path, opt);
}

SolveResult max_cycle(const PointSet& ps, const SolveOptions& opt) {
  if (ps.size() < 3) throw std::invalid_argument("max_cycle: needs >= 3 points");
  return solve(ps, StructureKind::Cycle, opt);
}

SolveResult max_matching(const PointSet& ps, const SolveOptions& opt) {
  if (ps.size() < 2 || ps.size() % 2 != 0)
    throw std::invalid_argument("max_matching: needs an even number >= 2 of points");
  return solve(ps, StructureKind::Matching, opt);
}

OptimaResult enumerate_optima(const PointSet& ps, StructureKind kind, const Rat& slack,
                              const SolveOptions& opt) {
  if (slack < 0) throw std::invalid_argument("enumerate_optima: negative slack");
  size_t n = ps.size();
  size_t bcap = kind == StructureKind::Matching ? opt.brute_cap_matching : opt.brute_cap;
  if (n > bcap) throw CapacityError("enumerate_optima: point count exceeds brute-force cap");

  SolveOptions bopt = opt;
  bopt.method = SolveMethod::BruteForce;
  SolveResult best = solve(ps, kind, bopt);
  RadicalSum best_terms;
  for (const Rat& r : structure_length_radicands(best.best, ps))
    best_terms.push_back({Rat(1), r});

  unsigned cap = opt.radical_cap_bits ? opt.radical_cap_bits : default_precision_cap();
  PairTable tab(ps, cap);
  double best_dbl = 0.0;
  {
    // Double view of the optimum for the bulk filter.
    Interval iv = best.best_length;
    best_dbl = mpq_get_d(iv.lo.get_mpq_t());
  }
  double slack_dbl = mpq_get_d(slack.get_mpq_t());
  double filter = 2.0 * tab.sum_error(edge_count(n, kind)) + 1e-12 * (1.0 + best_dbl);

  OptimaResult out;
  enumerate_kind(n, kind, [&](const Rep& rep) {
    double len = rep_length_dbl(tab, rep, kind);
    if (len + slack_dbl < best_dbl - filter) return;
    Structure s = rep_to_structure(rep, kind, ps);
    RadicalSum terms;
    for (const Rat& r : structure_length_radicands(s, ps)) terms.push_back({Rat(1), r});
    terms.push_back({slack, Rat(1)});
    switch (compare_radical_sums(terms, best_terms, cap)) {
      case Ordering::Greater:
      case Ordering::Equal:
        out.optima.push_back(std::move(s));
        break;
      case Ordering::Less:
        break;
      case Ordering::Unresolved:
        out.unresolved.push_back(std::move(s));
        break;
    }
  });
  std::sort(out.optima.begin(), out.optima.end());
  std::sort(out.unresolved.begin(), out.unresolved.end());
  return out;
}

}  // namespace noncross
