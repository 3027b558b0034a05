#include "xconv/hull_cache.hpp"
#include "xconv/predicates.hpp"

#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace xconv;

namespace {

Point3 p3(long x, long y, long z) { return Point3{Rational(x), Rational(y), Rational(z)}; }

}  // namespace

TEST_CASE("point_in_hull contract examples") {
  const std::vector<Point3> segment = {p3(0, 0, 0), p3(2, 0, 4)};
  CHECK(point_in_hull(p3(1, 0, 2), segment));
  CHECK_FALSE(point_in_hull(p3(0, 0, 1), segment));
  const std::vector<Point3> triangle = {p3(0, 0, 0), p3(2, 0, 4), p3(0, 2, 4)};
  CHECK(point_in_hull(p3(1, 0, 2), triangle));
  CHECK_THROWS_AS(point_in_hull(p3(0, 0, 0), std::vector<Point3>{}), std::invalid_argument);
}

TEST_CASE("point_in_hull handles degenerate supports") {
  // Collinear candidate sets: hulls decompose into segments.
  const std::vector<Point3> collinear = {p3(0, 0, 0), p3(1, 0, 2), p3(2, 0, 4), p3(3, 0, 6)};
  CHECK(point_in_hull(p3(2, 0, 4), collinear));
  CHECK_FALSE(point_in_hull(p3(4, 0, 8), collinear));
  // Coplanar quadruple: the 4-point support is dependent, triangles cover it.
  const std::vector<Point3> square = {p3(0, 0, 0), p3(2, 0, 0), p3(0, 2, 0), p3(2, 2, 0)};
  CHECK(point_in_hull(p3(1, 1, 0), square));
  CHECK_FALSE(point_in_hull(p3(1, 1, 1), square));
  CHECK_FALSE(point_in_hull(p3(3, 1, 0), square));
}

TEST_CASE("point_in_hull agrees with the support-enumeration oracle") {
  std::mt19937_64 rng(101);
  int inside_seen = 0;
  for (int iter = 0; iter < 120; ++iter) {
    const std::size_t n = 2 + iter % 7;  // |Q| <= 8
    const auto pts = oracle::random_int_points_3d(rng, n + 1, -3, 3);
    const std::vector<Point3> q(pts.begin() + 1, pts.end());
    const bool mine = point_in_hull(pts[0], q);
    const bool theirs = oracle::point_in_hull(pts[0], q);
    CHECK(mine == theirs);
    inside_seen += mine ? 1 : 0;
  }
  CHECK(inside_seen > 0);  // the battery exercises both outcomes
}

TEST_CASE("point_in_hull agrees with the oracle on rational coordinates") {
  std::mt19937_64 rng(102);
  for (int iter = 0; iter < 40; ++iter) {
    const auto vals = oracle::random_rationals(rng, 3 * 6, 6, 4);
    std::vector<Point3> pts;
    for (std::size_t i = 0; i < vals.size(); i += 3)
      pts.push_back(Point3{vals[i], vals[i + 1], vals[i + 2]});
    const std::vector<Point3> q(pts.begin() + 1, pts.end());
    CHECK(point_in_hull(pts[0], q) == oracle::point_in_hull(pts[0], q));
  }
}

TEST_CASE("is_convex_position examples and conventions") {
  CHECK(is_convex_position(std::vector<Point3>{p3(0, 0, 0), p3(2, 0, 4), p3(4, 0, 16)}));
  CHECK_FALSE(is_convex_position(std::vector<Point3>{p3(0, 0, 0), p3(1, 0, 2), p3(2, 0, 4)}));
  CHECK(is_convex_position(std::vector<Point3>{p3(0, 0, 0)}));
  CHECK(is_convex_position(std::vector<Point3>{}));
  CHECK(is_convex_position(std::vector<Point3>{p3(0, 0, 0), p3(1, 1, 1)}));
  CHECK_THROWS_AS(is_convex_position(std::vector<Point3>{p3(1, 1, 1), p3(1, 1, 1)}),
                  std::invalid_argument);
}

TEST_CASE("lifted point sets are always in convex position") {
  std::mt19937_64 rng(103);
  for (int iter = 0; iter < 60; ++iter) {
    const std::size_t n = 1 + iter % 10;
    const auto vals = oracle::random_rationals(rng, 2 * n, 10, 6);
    std::vector<Point3> lifted;
    for (std::size_t i = 0; i < n; ++i) {
      const Point3 p = lift(Point2{vals[2 * i], vals[2 * i + 1]});
      if (std::find(lifted.begin(), lifted.end(), p) == lifted.end()) lifted.push_back(p);
    }
    CHECK(is_convex_position(lifted));
  }
}

TEST_CASE("subsets of convex-position sets stay in convex position") {
  std::mt19937_64 rng(104);
  int convex_seen = 0;
  for (int iter = 0; iter < 80; ++iter) {
    const auto pts = oracle::random_int_points_3d(rng, 6 + iter % 3, -4, 4);
    if (!is_convex_position(pts)) continue;
    ++convex_seen;
    const std::uint64_t mask = detail::uniform_below(rng, std::uint64_t{1} << pts.size());
    std::vector<Point3> subset;
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (mask >> i & 1) subset.push_back(pts[i]);
    CHECK(is_convex_position(subset));
  }
  CHECK(convex_seen > 0);
}

TEST_CASE("is_empty_convex_position examples") {
  const std::vector<Point3> ambient = {p3(0, 0, 0), p3(1, 0, 2), p3(2, 0, 4)};
  CHECK(is_empty_convex_position(std::vector<Point3>{p3(0, 0, 0), p3(1, 0, 2)}, ambient));
  CHECK_FALSE(is_empty_convex_position(std::vector<Point3>{p3(0, 0, 0), p3(2, 0, 4)}, ambient));
  const std::vector<Point3> pair = {p3(0, 0, 0), p3(2, 0, 4)};
  CHECK(is_empty_convex_position(pair, pair));
  CHECK_THROWS_AS(is_empty_convex_position(std::vector<Point3>{p3(9, 9, 9)}, ambient),
                  std::invalid_argument);
}

TEST_CASE("general_position_2d examples") {
  using P = Point2;
  CHECK(general_position_2d(std::vector<P>{P{Rational(0), Rational(0)},
                                           P{Rational(1), Rational(0)},
                                           P{Rational(0), Rational(1)}}));
  CHECK_FALSE(general_position_2d(std::vector<P>{P{Rational(0), Rational(0)},
                                                 P{Rational(1), Rational(0)},
                                                 P{Rational(2), Rational(0)}}));
  CHECK(general_position_2d(std::vector<P>{}));
}

TEST_CASE("cover table agrees with fresh predicates") {
  std::mt19937_64 rng(105);
  for (int iter = 0; iter < 30; ++iter) {
    const auto pts = oracle::random_int_points_3d(rng, 8, -4, 4);
    const std::uint64_t full = (std::uint64_t{1} << pts.size()) - 1;
    const CoverTable cover = CoverTable::build(pts, full, full);
    for (int probe = 0; probe < 40; ++probe) {
      const std::size_t target = detail::uniform_below(rng, pts.size());
      const std::uint64_t mask =
          detail::uniform_below(rng, std::uint64_t{1} << pts.size()) & ~(std::uint64_t{1} << target);
      std::vector<Point3> subset;
      for (std::size_t i = 0; i < pts.size(); ++i)
        if (mask >> i & 1) subset.push_back(pts[i]);
      const bool cached = cover.in_hull(target, mask);
      const bool fresh = subset.empty() ? false : point_in_hull(pts[target], subset);
      CHECK(cached == fresh);
    }
    // convex_position over masks matches the public predicate
    for (int probe = 0; probe < 20; ++probe) {
      const std::uint64_t mask = detail::uniform_below(rng, std::uint64_t{1} << pts.size());
      std::vector<Point3> subset;
      for (std::size_t i = 0; i < pts.size(); ++i)
        if (mask >> i & 1) subset.push_back(pts[i]);
      CHECK(cover.convex_position(mask) == is_convex_position(subset));
    }
  }
}

TEST_CASE("predicates are deterministic") {
  std::mt19937_64 rng(106);
  const auto pts = oracle::random_int_points_3d(rng, 9, -5, 5);
  const std::vector<Point3> q(pts.begin() + 1, pts.end());
  const bool first = point_in_hull(pts[0], q);
  for (int i = 0; i < 5; ++i) CHECK(point_in_hull(pts[0], q) == first);
  const bool convex = is_convex_position(pts);
  for (int i = 0; i < 5; ++i) CHECK(is_convex_position(pts) == convex);
}
