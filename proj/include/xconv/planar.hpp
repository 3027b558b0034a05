#pragma once

#include "xconv/predicates.hpp"
#include "xconv/solve_result.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace xconv {

/// Orthogonal projection of a 3D point set along `direction`, expressed in a
/// rational basis of the complementary plane. points[i] corresponds to the
/// input point i; pairs that collapse onto one image are reported.
struct ProjectionResult {
  std::vector<Point2> points;
  std::vector<std::pair<std::size_t, std::size_t>> collisions;
};

inline ProjectionResult project_points(std::span<const Point3> pts, const Point3& direction) {
  if (direction.x.is_zero() && direction.y.is_zero() && direction.z.is_zero())
    throw std::invalid_argument("project_points: zero direction");
  const auto cross3 = [](const Point3& a, const Point3& b) {
    return Point3{a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
  };
  const auto dot3 = [](const Point3& a, const Point3& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
  };
  // Axis-parallel directions drop the obvious coordinate; any other
  // direction gets a cross-product basis of its complementary plane.
  // Convexity is affine-invariant, so the basis choice only changes
  // coordinates, never answers.
  Point3 u, v;
  if (direction.y.is_zero() && direction.z.is_zero()) {
    u = Point3{Rational(0), Rational(1), Rational(0)};  // drop x
    v = Point3{Rational(0), Rational(0), Rational(1)};
  } else if (direction.x.is_zero() && direction.z.is_zero()) {
    u = Point3{Rational(1), Rational(0), Rational(0)};  // drop y
    v = Point3{Rational(0), Rational(0), Rational(1)};
  } else if (direction.x.is_zero() && direction.y.is_zero()) {
    u = Point3{Rational(1), Rational(0), Rational(0)};  // drop z
    v = Point3{Rational(0), Rational(1), Rational(0)};
  } else {
    const Point3 axis{Rational(0), Rational(0), Rational(1)};
    u = cross3(direction, axis);
    v = cross3(direction, u);
  }

  ProjectionResult out;
  out.points.reserve(pts.size());
  for (const Point3& p : pts) out.points.push_back(Point2{dot3(u, p), dot3(v, p)});

  std::vector<std::size_t> order(pts.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return out.points[a] < out.points[b];
  });
  for (std::size_t i = 1; i < order.size(); ++i)
    if (out.points[order[i - 1]] == out.points[order[i]])
      out.collisions.push_back({std::min(order[i - 1], order[i]),
                                std::max(order[i - 1], order[i])});
  return out;
}

/// Exact largest subset in planar convex position: for each anchor (the
/// polygon's bottom vertex), a longest-convex-chain dynamic program over
/// candidate points in angular order, with exact rational comparisons.
inline SolveResult planar_largest_convex_subset(std::span<const Point2> pts) {
  detail::require_distinct(pts, "planar_largest_convex_subset");
  const std::size_t n = pts.size();
  SolveResult result;
  if (n == 0) return result;

  const auto s = detail::scale_to_integers_2d(pts);
  const auto key_less = [&](std::size_t a, std::size_t b) {
    return std::tie(s[a][1], s[a][0]) < std::tie(s[b][1], s[b][0]);
  };
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), key_less);

  result.size = std::min<std::size_t>(n, 2);
  for (std::size_t i = 0; i < result.size; ++i) result.witness.push_back(order[i]);
  std::sort(result.witness.begin(), result.witness.end());
  if (n <= 2) return result;

  const auto cross_at = [&](std::size_t o, std::size_t a, std::size_t b) -> Int {
    // cross(a - o, b - o)
    return (s[a][0] - s[o][0]) * (s[b][1] - s[o][1]) -
           (s[a][1] - s[o][1]) * (s[b][0] - s[o][0]);
  };

  std::vector<std::size_t> cand;
  std::vector<std::size_t> rank;
  std::vector<int> chain;
  std::vector<int> parent;
  for (std::size_t anchor_pos = 0; anchor_pos < n; ++anchor_pos) {
    const std::size_t p0 = order[anchor_pos];
    cand.assign(order.begin() + anchor_pos + 1, order.end());
    const std::size_t m = cand.size();
    if (m + 1 <= result.size) break;  // later anchors only get fewer candidates

    // Angular order around p0; every candidate sits in the half-plane above
    // p0 (or level and to the right), so one cross sign orders the range.
    std::sort(cand.begin(), cand.end(), [&](std::size_t a, std::size_t b) {
      const Int c = cross_at(p0, a, b);
      if (!c.is_zero()) return c.sign() > 0;
      const Int da = (s[a][0] - s[p0][0]) * (s[a][0] - s[p0][0]) +
                     (s[a][1] - s[p0][1]) * (s[a][1] - s[p0][1]);
      const Int db = (s[b][0] - s[p0][0]) * (s[b][0] - s[p0][0]) +
                     (s[b][1] - s[p0][1]) * (s[b][1] - s[p0][1]);
      return da < db;
    });
    rank.assign(m, 0);
    for (std::size_t i = 1; i < m; ++i)
      rank[i] = rank[i - 1] + (cross_at(p0, cand[i - 1], cand[i]).is_zero() ? 0 : 1);

    // chain[i*m + j]: longest chain p0 ->* cand[i] -> cand[j], vertices
    // counted including p0; 0 marks an invalid state.
    chain.assign(m * m, 0);
    parent.assign(m * m, -1);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) {
        if (rank[i] == rank[j]) continue;
        if (cross_at(p0, cand[i], cand[j]).sign() <= 0) continue;  // not a left turn at cand[i]
        ++result.explored;
        chain[i * m + j] = 3;
      }
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t i = 0; i < j; ++i) {
        const int len = chain[i * m + j];
        if (len == 0) continue;
        for (std::size_t k = j + 1; k < m; ++k) {
          if (rank[k] == rank[j]) continue;
          ++result.explored;
          const Int turn = (s[cand[j]][0] - s[cand[i]][0]) * (s[cand[k]][1] - s[cand[j]][1]) -
                           (s[cand[j]][1] - s[cand[i]][1]) * (s[cand[k]][0] - s[cand[j]][0]);
          if (turn.sign() <= 0) continue;
          if (len + 1 > chain[j * m + k]) {
            chain[j * m + k] = len + 1;
            parent[j * m + k] = static_cast<int>(i);
          }
        }
      }

    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t i = 0; i < j; ++i) {
        const int len = chain[i * m + j];
        if (len == 0 || static_cast<std::size_t>(len) <= result.size) continue;
        const Int closing =
            (s[cand[j]][0] - s[cand[i]][0]) * (s[p0][1] - s[cand[j]][1]) -
            (s[cand[j]][1] - s[cand[i]][1]) * (s[p0][0] - s[cand[j]][0]);
        if (closing.sign() <= 0) continue;
        result.size = static_cast<std::size_t>(len);
        result.witness.clear();
        result.witness.push_back(p0);
        std::size_t a = i, b = j;
        result.witness.push_back(cand[b]);
        while (true) {
          result.witness.push_back(cand[a]);
          const int prev = parent[a * m + b];
          if (prev < 0) break;
          b = a;
          a = static_cast<std::size_t>(prev);
        }
        std::sort(result.witness.begin(), result.witness.end());
      }
  }
  return result;
}

/// Binomial coefficient, exact.
inline Int binomial(std::size_t n, std::size_t k) {
  if (k > n) return Int(0);
  k = std::min(k, n - k);
  Int num = 1;
  for (std::size_t i = 0; i < k; ++i) {
    num *= Int(n - i);
    num /= Int(i + 1);  // exact: prefix products are binomials
  }
  return num;
}

/// Smallest set size that forces k points in convex position in general
/// position (the classical Erdős–Szekeres upper bound C(2k-4, k-2) + 1).
inline Int es_threshold(std::size_t k) { return binomial(2 * k - 4, k - 2) + 1; }

/// Fixed-parameter decision for planar Erdős–Szekeres: answer yes outright
/// once |P| reaches es_threshold(k); otherwise brute-force all k-subsets.
/// Requires general position (the theorem's hypothesis) and k >= 3.
inline bool es_fpt_decide(std::span<const Point2> pts, std::size_t k) {
  if (k < 3) throw std::invalid_argument("es_fpt_decide: k must be at least 3");
  if (!general_position_2d(pts))
    throw std::invalid_argument("es_fpt_decide: points not in general position");
  const std::size_t n = pts.size();
  if (Int(n) >= es_threshold(k)) return true;
  if (n < k) return false;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::vector<Point2> subset(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) subset[i] = pts[idx[i]];
    if (is_convex_position_2d(subset)) return true;
    // next combination
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Projection-based approximation: project along `direction`, solve the
/// planar problem exactly, and return the preimage of its witness. A
/// supporting line in the projection lifts to a supporting plane containing
/// the direction, so the preimage is guaranteed to be in convex position.
inline SolveResult approx_convex_subset_3d(std::span<const Point3> pts,
                                           const Point3& direction) {
  const ProjectionResult proj = project_points(pts, direction);
  if (!proj.collisions.empty()) {
    const auto& c = proj.collisions.front();
    throw std::runtime_error("approx_convex_subset_3d: points " + std::to_string(c.first + 1) +
                             " and " + std::to_string(c.second + 1) +
                             " collide under this projection");
  }
  SolveResult planar = planar_largest_convex_subset(proj.points);
  std::vector<Point3> witness_points;
  witness_points.reserve(planar.witness.size());
  for (const std::size_t i : planar.witness) witness_points.push_back(pts[i]);
  if (!is_convex_position(witness_points))
    throw std::logic_error("approx_convex_subset_3d: projected witness not convex in 3D");
  return planar;
}

/// Deterministic direction sequence for retrying degenerate projections.
/// Each colliding pair rules out one direction line, so the quadratic moment
/// family below escapes any finite set of collisions.
inline std::vector<Point3> approx_direction_sequence(std::size_t count = 36) {
  std::vector<Point3> dirs = {Point3{Rational(0), Rational(0), Rational(1)},
                              Point3{Rational(1), Rational(0), Rational(0)},
                              Point3{Rational(0), Rational(1), Rational(0)},
                              Point3{Rational(1), Rational(1), Rational(1)}};
  for (long t = 2; dirs.size() < count; ++t)
    dirs.push_back(Point3{Rational(1), Rational(t), Rational(t * t)});
  return dirs;
}

/// Tries the deterministic direction sequence until one projects without
/// collisions; returns the result and the direction used.
inline std::pair<SolveResult, Point3> approx_convex_subset_3d_auto(
    std::span<const Point3> pts) {
  for (const Point3& d : approx_direction_sequence()) {
    if (!project_points(pts, d).collisions.empty()) continue;
    return {approx_convex_subset_3d(pts, d), d};
  }
  throw std::runtime_error("approx_convex_subset_3d_auto: no collision-free direction found");
}

}  // namespace xconv
