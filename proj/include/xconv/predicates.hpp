#pragma once

#include "xconv/geometry.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <span>
#include <vector>

namespace xconv {
namespace detail {

using IVec3 = std::array<Int, 3>;
using IVec2 = std::array<Int, 2>;

// Scales a batch of rational points onto a common integer grid. All sign
// predicates below are invariant under the uniform positive scaling, so they
// can run in division-free integer arithmetic.
inline std::vector<IVec3> scale_to_integers(std::span<const Point3> pts) {
  Int scale = 1;
  for (const Point3& p : pts) {
    scale = lcm(scale, denominator(p.x));
    scale = lcm(scale, denominator(p.y));
    scale = lcm(scale, denominator(p.z));
  }
  std::vector<IVec3> out;
  out.reserve(pts.size());
  for (const Point3& p : pts) {
    out.push_back({numerator(p.x) * (scale / denominator(p.x)),
                   numerator(p.y) * (scale / denominator(p.y)),
                   numerator(p.z) * (scale / denominator(p.z))});
  }
  return out;
}

inline std::vector<IVec2> scale_to_integers_2d(std::span<const Point2> pts) {
  Int scale = 1;
  for (const Point2& p : pts) {
    scale = lcm(scale, denominator(p.x));
    scale = lcm(scale, denominator(p.y));
  }
  std::vector<IVec2> out;
  out.reserve(pts.size());
  for (const Point2& p : pts) {
    out.push_back({numerator(p.x) * (scale / denominator(p.x)),
                   numerator(p.y) * (scale / denominator(p.y))});
  }
  return out;
}

inline IVec3 sub(const IVec3& a, const IVec3& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

inline IVec3 cross(const IVec3& u, const IVec3& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
          u[0] * v[1] - u[1] * v[0]};
}

inline Int dot(const IVec3& u, const IVec3& v) {
  return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
}

inline Int det3(const IVec3& u, const IVec3& v, const IVec3& w) {
  return dot(cross(u, v), w);
}

inline bool is_zero(const IVec3& v) {
  return v[0].is_zero() && v[1].is_zero() && v[2].is_zero();
}

inline Int cross_2d(const IVec2& u, const IVec2& v) { return u[0] * v[1] - u[1] * v[0]; }

// Membership tests against the hull of 1..4 points. Affinely dependent tuples
// report false: their hull is the union of the hulls of proper subtuples,
// which the Caratheodory enumeration visits anyway (this realizes the
// recurse-on-subsets contract without re-entering).
inline bool in_hull_1(const IVec3& p, const IVec3& a) {
  return p[0] == a[0] && p[1] == a[1] && p[2] == a[2];
}

inline bool in_hull_2(const IVec3& p, const IVec3& a, const IVec3& b) {
  const IVec3 u = sub(b, a);
  if (is_zero(u)) return false;
  const IVec3 w = sub(p, a);
  if (!is_zero(cross(w, u))) return false;
  const Int t = dot(w, u);
  return t.sign() >= 0 && t <= dot(u, u);
}

inline bool in_hull_3(const IVec3& p, const IVec3& a, const IVec3& b, const IVec3& c) {
  const IVec3 u = sub(b, a), v = sub(c, a);
  const IVec3 n = cross(u, v);
  if (is_zero(n)) return false;
  const IVec3 w = sub(p, a);
  if (!dot(w, n).is_zero()) return false;  // off the triangle's plane
  const Int beta = dot(cross(w, v), n);
  if (beta.sign() < 0) return false;
  const Int gamma = dot(cross(u, w), n);
  if (gamma.sign() < 0) return false;
  return beta + gamma <= dot(n, n);
}

inline bool in_hull_4(const IVec3& p, const IVec3& a, const IVec3& b, const IVec3& c,
                      const IVec3& d) {
  const IVec3 v1 = sub(b, a), v2 = sub(c, a), v3 = sub(d, a);
  Int det = det3(v1, v2, v3);
  if (det.is_zero()) return false;
  const IVec3 w = sub(p, a);
  Int n1 = det3(w, v2, v3), n2 = det3(v1, w, v3), n3 = det3(v1, v2, w);
  if (det.sign() < 0) {
    det.backend().negate();
    n1.backend().negate();
    n2.backend().negate();
    n3.backend().negate();
  }
  if (n1.sign() < 0 || n2.sign() < 0 || n3.sign() < 0) return false;
  return n1 + n2 + n3 <= det;
}

// Caratheodory in R^3: membership in conv of the candidate set holds iff some
// support of at most 4 candidates contains the target.
inline bool hull_membership(const std::vector<IVec3>& pts, std::size_t target,
                            std::span<const std::size_t> cand) {
  const IVec3& p = pts[target];
  const std::size_t n = cand.size();
  for (std::size_t i = 0; i < n; ++i)
    if (in_hull_1(p, pts[cand[i]])) return true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (in_hull_2(p, pts[cand[i]], pts[cand[j]])) return true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (in_hull_3(p, pts[cand[i]], pts[cand[j]], pts[cand[k]])) return true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        for (std::size_t l = k + 1; l < n; ++l)
          if (in_hull_4(p, pts[cand[i]], pts[cand[j]], pts[cand[k]], pts[cand[l]]))
            return true;
  return false;
}

inline bool in_hull_1_2d(const IVec2& p, const IVec2& a) {
  return p[0] == a[0] && p[1] == a[1];
}

inline bool in_hull_2_2d(const IVec2& p, const IVec2& a, const IVec2& b) {
  const IVec2 u{b[0] - a[0], b[1] - a[1]};
  if (u[0].is_zero() && u[1].is_zero()) return false;
  const IVec2 w{p[0] - a[0], p[1] - a[1]};
  if (!cross_2d(w, u).is_zero()) return false;
  const Int t = w[0] * u[0] + w[1] * u[1];
  return t.sign() >= 0 && t <= u[0] * u[0] + u[1] * u[1];
}

inline bool in_hull_3_2d(const IVec2& p, const IVec2& a, const IVec2& b, const IVec2& c) {
  const IVec2 u{b[0] - a[0], b[1] - a[1]}, v{c[0] - a[0], c[1] - a[1]};
  Int det = cross_2d(u, v);
  if (det.is_zero()) return false;
  const IVec2 w{p[0] - a[0], p[1] - a[1]};
  Int n1 = cross_2d(w, v), n2 = cross_2d(u, w);
  if (det.sign() < 0) {
    det.backend().negate();
    n1.backend().negate();
    n2.backend().negate();
  }
  if (n1.sign() < 0 || n2.sign() < 0) return false;
  return n1 + n2 <= det;
}

inline bool hull_membership_2d(const std::vector<IVec2>& pts, std::size_t target,
                               std::span<const std::size_t> cand) {
  const IVec2& p = pts[target];
  const std::size_t n = cand.size();
  for (std::size_t i = 0; i < n; ++i)
    if (in_hull_1_2d(p, pts[cand[i]])) return true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (in_hull_2_2d(p, pts[cand[i]], pts[cand[j]])) return true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (in_hull_3_2d(p, pts[cand[i]], pts[cand[j]], pts[cand[k]])) return true;
  return false;
}

template <typename PointT>
void require_distinct(std::span<const PointT> pts, const char* who) {
  std::vector<std::size_t> order(pts.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return pts[a] < pts[b]; });
  for (std::size_t i = 1; i < order.size(); ++i)
    if (pts[order[i - 1]] == pts[order[i]])
      throw std::invalid_argument(std::string(who) + ": duplicate points");
}

}  // namespace detail

/// Exact hull membership: p in conv(Q), by Caratheodory enumeration over
/// supports of at most 4 points of Q. Rejects an empty Q.
inline bool point_in_hull(const Point3& p, std::span<const Point3> hull_of) {
  if (hull_of.empty()) throw std::invalid_argument("point_in_hull: empty point set");
  std::vector<Point3> all(hull_of.begin(), hull_of.end());
  all.push_back(p);
  const auto scaled = detail::scale_to_integers(all);
  std::vector<std::size_t> cand(hull_of.size());
  std::iota(cand.begin(), cand.end(), std::size_t{0});
  return detail::hull_membership(scaled, hull_of.size(), cand);
}

/// Every point of the set is a vertex of the set's convex hull. Sets of size
/// at most 2 are in convex position; rejects duplicate points.
inline bool is_convex_position(std::span<const Point3> pts) {
  detail::require_distinct(pts, "is_convex_position");
  if (pts.size() <= 2) return true;
  const auto scaled = detail::scale_to_integers(pts);
  std::vector<std::size_t> cand(pts.size() - 1);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::size_t w = 0;
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (j != i) cand[w++] = j;
    if (detail::hull_membership(scaled, i, cand)) return false;
  }
  return true;
}

/// Convex position and no ambient point inside: S in convex position with
/// conv(S) containing no point of P \ S. Rejects S that is not a subset of P.
inline bool is_empty_convex_position(std::span<const Point3> subset,
                                     std::span<const Point3> ambient) {
  detail::require_distinct(subset, "is_empty_convex_position");
  std::vector<std::size_t> position(subset.size());
  std::vector<bool> taken(ambient.size(), false);
  for (std::size_t i = 0; i < subset.size(); ++i) {
    bool found = false;
    for (std::size_t j = 0; j < ambient.size(); ++j) {
      if (!taken[j] && subset[i] == ambient[j]) {
        position[i] = j;
        taken[j] = true;
        found = true;
        break;
      }
    }
    if (!found)
      throw std::invalid_argument("is_empty_convex_position: subset not within ambient set");
  }
  if (!is_convex_position(subset)) return false;
  if (subset.empty()) return true;
  const auto scaled = detail::scale_to_integers(ambient);
  std::vector<std::size_t> cand(position.begin(), position.end());
  for (std::size_t j = 0; j < ambient.size(); ++j) {
    if (taken[j]) continue;
    if (detail::hull_membership(scaled, j, cand)) return false;
  }
  return true;
}

/// No three points collinear, by exact orientation tests over all triples.
inline bool general_position_2d(std::span<const Point2> pts) {
  if (pts.size() < 3) return true;
  const auto s = detail::scale_to_integers_2d(pts);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      const detail::IVec2 u{s[j][0] - s[i][0], s[j][1] - s[i][1]};
      for (std::size_t k = j + 1; k < s.size(); ++k) {
        const detail::IVec2 v{s[k][0] - s[i][0], s[k][1] - s[i][1]};
        if (detail::cross_2d(u, v).is_zero()) return false;
      }
    }
  return true;
}

/// Planar convex position: every point a vertex of the 2D hull.
inline bool is_convex_position_2d(std::span<const Point2> pts) {
  detail::require_distinct(pts, "is_convex_position_2d");
  if (pts.size() <= 2) return true;
  const auto scaled = detail::scale_to_integers_2d(pts);
  std::vector<std::size_t> cand(pts.size() - 1);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::size_t w = 0;
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (j != i) cand[w++] = j;
    if (detail::hull_membership_2d(scaled, i, cand)) return false;
  }
  return true;
}

}  // namespace xconv
