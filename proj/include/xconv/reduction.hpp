#pragma once

#include "xconv/disks.hpp"
#include "xconv/hull_cache.hpp"
#include "xconv/predicates.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <future>
#include <optional>
#include <sstream>
#include <vector>

namespace xconv {

/// A blocking point together with the touching pair it encodes.
struct Blocker {
  Point3 point;
  TangentPair pair;
};

/// The lifted point set P = L ⊎ B built from a disk instance: L holds the
/// lifted centers (index-aligned with the instance), B one blocking point per
/// touching pair, the midpoint of the pair's lifted centers.
struct ReductionOutput {
  DiskInstance instance;
  std::vector<Point3> lifted;     // L
  std::vector<Blocker> blockers;  // B, pair-lexicographic

  std::size_t total_points() const { return lifted.size() + blockers.size(); }

  /// P as one sequence: L first, then B. Index convention used by every
  /// mask-based routine in this header.
  std::vector<Point3> all_points() const {
    std::vector<Point3> pts = lifted;
    pts.reserve(total_points());
    for (const Blocker& b : blockers) pts.push_back(b.point);
    return pts;
  }

  std::optional<std::size_t> blocker_index(const TangentPair& pair) const {
    for (std::size_t k = 0; k < blockers.size(); ++k)
      if (blockers[k].pair == pair) return k;
    return std::nullopt;
  }
};

inline ReductionOutput build_reduction(const DiskInstance& d) {
  require_valid_instance(d);
  ReductionOutput r;
  r.instance = d;
  r.lifted.reserve(d.size());
  for (const Point2& c : d.centers) r.lifted.push_back(lift(c));
  for (const TangentPair& p : tangent_pairs(d))
    r.blockers.push_back({midpoint(r.lifted[p.i], r.lifted[p.j]), p});
  return r;
}

/// The separating plane of a touching pair: the lift of the unit circle
/// centered at the touch point. It passes through both lifted centers and
/// the pair's blocking point.
inline Plane3 witness_plane(const ReductionOutput& r, const TangentPair& pair) {
  if (!r.blocker_index(pair))
    throw std::invalid_argument("witness_plane: pair has no blocking point");
  const Point2 center = midpoint(project_xy(r.lifted[pair.i]), project_xy(r.lifted[pair.j]));
  return circle_lift_plane(center, Rational(1));
}

/// Checks the pair's witness plane: exactly Zero on the two lifted centers
/// and the blocking point, strictly Positive on every other point of P.
inline bool verify_witness_plane(const ReductionOutput& r, const TangentPair& pair) {
  const auto k = r.blocker_index(pair);
  if (!k) throw std::invalid_argument("verify_witness_plane: pair has no blocking point");
  const Plane3 h = witness_plane(r, pair);
  for (std::size_t i = 0; i < r.lifted.size(); ++i) {
    const Sign s = plane_side(h, r.lifted[i]);
    if (i == pair.i || i == pair.j) {
      if (s != Sign::Zero) return false;
    } else if (s != Sign::Positive) {
      return false;
    }
  }
  for (std::size_t b = 0; b < r.blockers.size(); ++b) {
    const Sign s = plane_side(h, r.blockers[b].point);
    if (b == *k) {
      if (s != Sign::Zero) return false;
    } else if (s != Sign::Positive) {
      return false;
    }
  }
  return true;
}

/// Encoding lemma for one choice Q ⊆ L, via the cover table: each blocking
/// point lies in conv(Q) iff both of its endpoints are chosen.
inline bool check_encoding_lemma_subset(const ReductionOutput& r, std::uint64_t lifted_mask,
                                        const CoverTable& cover) {
  const std::size_t n = r.lifted.size();
  for (std::size_t k = 0; k < r.blockers.size(); ++k) {
    const TangentPair& p = r.blockers[k].pair;
    const bool both = (lifted_mask >> p.i & 1) && (lifted_mask >> p.j & 1);
    if (cover.in_hull(n + k, lifted_mask) != both) return false;
  }
  return true;
}

/// Table suitable for encoding-lemma checks: blocking points as targets,
/// lifted centers as supports.
inline CoverTable encoding_cover_table(const ReductionOutput& r) {
  const std::size_t n = r.lifted.size();
  const std::uint64_t lmask = n == 0 ? 0 : (std::uint64_t{1} << n) - 1;
  std::uint64_t bmask = 0;
  for (std::size_t k = 0; k < r.blockers.size(); ++k)
    bmask |= std::uint64_t{1} << (n + k);
  return CoverTable::build(r.all_points(), bmask, lmask);
}

/// Encoding lemma for one choice Q ⊆ L, with fresh Caratheodory membership
/// tests (no cache). Q must consist of lifted centers of r.
inline bool check_encoding_lemma(const ReductionOutput& r, std::span<const Point3> chosen) {
  detail::require_distinct(chosen, "check_encoding_lemma");
  std::uint64_t mask = 0;
  for (const Point3& q : chosen) {
    const auto it = std::find(r.lifted.begin(), r.lifted.end(), q);
    if (it == r.lifted.end())
      throw std::invalid_argument("check_encoding_lemma: point not a lifted center");
    mask |= std::uint64_t{1} << (it - r.lifted.begin());
  }
  for (const Blocker& b : r.blockers) {
    const bool both = (mask >> b.pair.i & 1) && (mask >> b.pair.j & 1);
    const bool inside = !chosen.empty() && point_in_hull(b.point, chosen);
    if (inside != both) return false;
  }
  return true;
}

/// Encoding lemma over all 2^|L| subsets. Cost grows as 2^n; callers cap n.
/// Subset ranges may be fanned out over `threads` workers (the result is a
/// pure conjunction).
inline bool check_encoding_lemma_exhaustive(const ReductionOutput& r, unsigned threads = 1) {
  const std::size_t n = r.lifted.size();
  if (n > 30) throw std::invalid_argument("check_encoding_lemma_exhaustive: instance too large");
  const CoverTable cover = encoding_cover_table(r);
  const std::uint64_t count = std::uint64_t{1} << n;
  if (threads <= 1 || count < (std::uint64_t{1} << 12)) {
    for (std::uint64_t mask = 0; mask < count; ++mask)
      if (!check_encoding_lemma_subset(r, mask, cover)) return false;
    return true;
  }
  std::atomic<bool> failed{false};
  std::vector<std::future<void>> work;
  const std::uint64_t chunk = (count + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::uint64_t lo = t * chunk, hi = std::min(count, lo + chunk);
    if (lo >= hi) break;
    work.push_back(std::async(std::launch::async, [&, lo, hi] {
      for (std::uint64_t mask = lo; mask < hi && !failed.load(std::memory_order_relaxed);
           ++mask)
        if (!check_encoding_lemma_subset(r, mask, cover))
          failed.store(true, std::memory_order_relaxed);
    }));
  }
  for (auto& w : work) w.get();
  return !failed.load();
}

/// Encoding lemma on `samples` pseudo-random subsets (deterministic in
/// `seed`), for instances beyond the exhaustive cap.
inline bool check_encoding_lemma_sampled(const ReductionOutput& r, std::uint64_t samples,
                                         std::uint64_t seed) {
  const std::size_t n = r.lifted.size();
  if (r.total_points() > CoverTable::kMaxPoints)
    throw std::invalid_argument("check_encoding_lemma_sampled: instance too large");
  const CoverTable cover = encoding_cover_table(r);
  std::uint64_t state = seed ^ 0x9e3779b97f4a7c15ULL;
  const auto next = [&state] {  // splitmix64
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  for (std::uint64_t s = 0; s < samples; ++s)
    if (!check_encoding_lemma_subset(r, next() & all, cover)) return false;
  return true;
}

/// The convexity proposition, in its testable form: L and B are each in
/// convex position, every lifted center is a vertex of conv(L ∪ B), and
/// every blocking point lies in conv(L).
inline bool check_convex_proposition(const ReductionOutput& r) {
  std::vector<Point3> bpts;
  bpts.reserve(r.blockers.size());
  for (const Blocker& b : r.blockers) bpts.push_back(b.point);
  if (!is_convex_position(r.lifted)) return false;
  if (!is_convex_position(bpts)) return false;
  if (r.lifted.empty()) return bpts.empty();

  const auto all = r.all_points();
  std::vector<Point3> others;
  others.reserve(all.size() - 1);
  for (std::size_t i = 0; i < r.lifted.size(); ++i) {
    others.clear();
    for (std::size_t j = 0; j < all.size(); ++j)
      if (j != i) others.push_back(all[j]);
    if (!others.empty() && point_in_hull(r.lifted[i], others)) return false;
  }
  for (const Blocker& b : r.blockers)
    if (!point_in_hull(b.point, r.lifted)) return false;
  return true;
}

/// The section-2 corollary, exhaustively: a mixed choice L' ∪ B' is in convex
/// position iff no chosen blocking point lies in conv(L'). Costs 2^|P|.
inline bool check_convex_corollary_exhaustive(const ReductionOutput& r) {
  const std::size_t n = r.lifted.size(), nb = r.blockers.size();
  if (n + nb > 30)
    throw std::invalid_argument("check_convex_corollary_exhaustive: instance too large");
  const auto pts = r.all_points();
  const std::uint64_t full = (std::uint64_t{1} << pts.size()) - 1;
  const CoverTable cover = CoverTable::build(pts, full, full);
  const std::uint64_t lall = n == 0 ? 0 : (std::uint64_t{1} << n) - 1;
  for (std::uint64_t mask = 0; mask <= full; ++mask) {
    const std::uint64_t lmask = mask & lall;
    bool blocked = false;
    for (std::uint64_t rest = mask & ~lall; rest && !blocked;) {
      const int b = std::countr_zero(rest);
      rest &= rest - 1;
      if (cover.in_hull(static_cast<std::size_t>(b), lmask)) blocked = true;
    }
    if (cover.convex_position(mask) != !blocked) return false;
  }
  return true;
}

/// Thrown when a swap step contradicts the claimed invariants; reaching this
/// would falsify the convex-position swap argument, so it aborts loudly.
struct SwapProcedureError : std::logic_error {
  using std::logic_error::logic_error;
};

/// Extracts an independent set of m disks from a convex-position set S of
/// size m + |B|: while the chosen lifted centers contain a touching pair,
/// drop the pair's lower-index center and insert its (necessarily absent)
/// blocking point. Each swap must preserve convex position; violations abort.
inline std::vector<std::size_t> convex_set_to_independent_set(const ReductionOutput& r,
                                                              std::span<const Point3> chosen,
                                                              std::size_t m) {
  if (m == 0) throw std::invalid_argument("convex_set_to_independent_set: m must be positive");
  if (chosen.size() != m + r.blockers.size())
    throw std::invalid_argument("convex_set_to_independent_set: |S| must equal m + |B|");
  detail::require_distinct(chosen, "convex_set_to_independent_set");

  std::vector<bool> in_l(r.lifted.size(), false);
  std::vector<bool> in_b(r.blockers.size(), false);
  for (const Point3& p : chosen) {
    if (auto it = std::find(r.lifted.begin(), r.lifted.end(), p); it != r.lifted.end()) {
      in_l[it - r.lifted.begin()] = true;
      continue;
    }
    bool found = false;
    for (std::size_t k = 0; k < r.blockers.size() && !found; ++k)
      if (r.blockers[k].point == p) {
        in_b[k] = true;
        found = true;
      }
    if (!found)
      throw std::invalid_argument("convex_set_to_independent_set: point not in P");
  }

  const auto materialize = [&] {
    std::vector<Point3> pts;
    for (std::size_t i = 0; i < in_l.size(); ++i)
      if (in_l[i]) pts.push_back(r.lifted[i]);
    for (std::size_t k = 0; k < in_b.size(); ++k)
      if (in_b[k]) pts.push_back(r.blockers[k].point);
    return pts;
  };
  if (!is_convex_position(materialize()))
    throw std::invalid_argument("convex_set_to_independent_set: S not in convex position");

  for (;;) {
    // Lexicographically first touching pair among the chosen centers.
    std::size_t swap_k = r.blockers.size();
    for (std::size_t k = 0; k < r.blockers.size(); ++k) {
      const TangentPair& p = r.blockers[k].pair;
      if (in_l[p.i] && in_l[p.j]) {
        swap_k = k;
        break;
      }
    }
    if (swap_k == r.blockers.size()) break;
    const TangentPair& p = r.blockers[swap_k].pair;
    if (in_b[swap_k]) {
      std::ostringstream msg;
      msg << "swap invariant violated: blocking point of pair (" << p.i + 1 << ", "
          << p.j + 1 << ") already chosen alongside both endpoints";
      throw SwapProcedureError(msg.str());
    }
    in_l[p.i] = false;
    in_b[swap_k] = true;
    if (!is_convex_position(materialize())) {
      std::ostringstream msg;
      msg << "swap on pair (" << p.i + 1 << ", " << p.j + 1
          << ") broke convex position; this contradicts the swap lemma";
      throw SwapProcedureError(msg.str());
    }
  }

  std::vector<std::size_t> disks;
  for (std::size_t i = 0; i < in_l.size(); ++i)
    if (in_l[i]) disks.push_back(i);
  if (disks.size() < m)
    throw SwapProcedureError("swap procedure terminated with fewer than m centers");
  disks.resize(m);
  return disks;
}

}  // namespace xconv
