#include "xconv/reduction.hpp"

#include "xconv/generator.hpp"

#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace xconv;

namespace {

Point2 c2(long x, long y) { return Point2{Rational(x), Rational(y)}; }
Point3 p3(long x, long y, long z) { return Point3{Rational(x), Rational(y), Rational(z)}; }

DiskInstance chain3() { return DiskInstance{{c2(0, 0), c2(2, 0), c2(4, 0)}}; }

DiskInstance square_block() {
  return DiskInstance{{c2(0, 0), c2(2, 0), c2(0, 2), c2(2, 2)}};
}

}  // namespace

TEST_CASE("validate_instance examples") {
  CHECK(validate_instance(DiskInstance{{c2(0, 0), c2(2, 0)}}));
  const auto bad = validate_instance(DiskInstance{{c2(0, 0), c2(1, 0)}});
  CHECK_FALSE(bad);
  CHECK(bad.first == 0);
  CHECK(bad.second == 1);
  CHECK(validate_instance(square_block()));
  CHECK_FALSE(validate_instance(DiskInstance{{c2(0, 0), c2(0, 0)}}));
}

TEST_CASE("tangent_pairs examples") {
  const auto chain = tangent_pairs(chain3());
  REQUIRE(chain.size() == 2);
  CHECK(chain[0] == TangentPair{0, 1});
  CHECK(chain[1] == TangentPair{1, 2});
  CHECK(tangent_pairs(DiskInstance{{c2(0, 0), c2(4, 0)}}).empty());
  const auto block = tangent_pairs(square_block());
  REQUIRE(block.size() == 4);
  CHECK(block[0] == TangentPair{0, 1});
  CHECK(block[1] == TangentPair{0, 2});
  CHECK(block[2] == TangentPair{1, 3});
  CHECK(block[3] == TangentPair{2, 3});
  CHECK_THROWS_AS(tangent_pairs(DiskInstance{{c2(0, 0), c2(1, 0)}}), std::invalid_argument);
}

TEST_CASE("build_reduction examples") {
  const auto r = build_reduction(DiskInstance{{c2(0, 0), c2(2, 0)}});
  REQUIRE(r.lifted.size() == 2);
  CHECK(r.lifted[0] == p3(0, 0, 0));
  CHECK(r.lifted[1] == p3(2, 0, 4));
  REQUIRE(r.blockers.size() == 1);
  CHECK(r.blockers[0].point == p3(1, 0, 2));
  CHECK(r.blockers[0].pair == TangentPair{0, 1});

  const auto none = build_reduction(DiskInstance{{c2(0, 0), c2(4, 0)}});
  CHECK(none.blockers.empty());
  CHECK(none.lifted[1] == p3(4, 0, 16));

  const auto chain = build_reduction(chain3());
  REQUIRE(chain.blockers.size() == 2);
  CHECK(chain.blockers[0].point == p3(1, 0, 2));
  CHECK(chain.blockers[1].point == p3(3, 0, 10));
  CHECK(chain.total_points() == 5);

  // determinism: bit-identical rebuild
  const auto again = build_reduction(chain3());
  CHECK(again.lifted == chain.lifted);
  for (std::size_t k = 0; k < again.blockers.size(); ++k) {
    CHECK(again.blockers[k].point == chain.blockers[k].point);
    CHECK(again.blockers[k].pair == chain.blockers[k].pair);
  }
}

TEST_CASE("witness_plane examples") {
  const auto r01 = build_reduction(DiskInstance{{c2(0, 0), c2(2, 0)}});
  CHECK(witness_plane(r01, TangentPair{0, 1}) ==
        Plane3(Rational(-2), Rational(0), Rational(1), Rational(0)));  // z = 2x

  const auto r02 = build_reduction(DiskInstance{{c2(0, 0), c2(0, 2)}});
  CHECK(witness_plane(r02, TangentPair{0, 1}) ==
        Plane3(Rational(0), Rational(-2), Rational(1), Rational(0)));  // z = 2y

  const auto r24 = build_reduction(DiskInstance{{c2(2, 0), c2(4, 0)}});
  CHECK(witness_plane(r24, TangentPair{0, 1}) ==
        Plane3(Rational(-6), Rational(0), Rational(1), Rational(8)));  // z = 6x - 8

  CHECK_THROWS_AS(witness_plane(r01, TangentPair{0, 5}), std::invalid_argument);
}

TEST_CASE("verify_witness_plane examples and corruption control") {
  const auto chain = build_reduction(chain3());
  CHECK(verify_witness_plane(chain, TangentPair{0, 1}));
  CHECK(verify_witness_plane(chain, TangentPair{1, 2}));
  CHECK(verify_witness_plane(build_reduction(DiskInstance{{c2(0, 0), c2(2, 0)}}),
                             TangentPair{0, 1}));

  // Corrupt a center so it lands exactly on the pair's circle: |(1,1)-(1,0)|^2 = 1.
  ReductionOutput corrupt = chain;
  corrupt.lifted[2] = lift(c2(1, 1));
  CHECK_FALSE(verify_witness_plane(corrupt, TangentPair{0, 1}));

  // Drift a blocking point off its own witness plane.
  ReductionOutput drifted = chain;
  drifted.blockers[1].point = p3(3, 0, 11);
  CHECK(verify_witness_plane(drifted, TangentPair{0, 1}));
  CHECK_FALSE(verify_witness_plane(drifted, TangentPair{1, 2}));
}

TEST_CASE("witness planes hold on randomized lattice instances") {
  std::mt19937_64 rng(201);
  int pairs_checked = 0;
  for (int iter = 0; iter < 1000; ++iter) {
    const std::uint64_t seed = rng();
    const std::size_t n = 2 + iter % 9;
    const Rational density = make_rational(Int(1 + iter % 4), Int(4));
    const auto r = build_reduction(generate_lattice_instance(seed, n, density));
    for (const Blocker& b : r.blockers) {
      CHECK(verify_witness_plane(r, b.pair));
      ++pairs_checked;
    }
  }
  CHECK(pairs_checked > 500);
}

TEST_CASE("encoding lemma examples") {
  const auto r = build_reduction(chain3());
  CHECK(check_encoding_lemma(r, std::vector<Point3>{p3(0, 0, 0), p3(4, 0, 16)}));
  CHECK(check_encoding_lemma(r, std::vector<Point3>{p3(0, 0, 0), p3(2, 0, 4)}));
  CHECK(check_encoding_lemma(r, std::vector<Point3>{}));
  CHECK_THROWS_AS(check_encoding_lemma(r, std::vector<Point3>{p3(9, 9, 9)}),
                  std::invalid_argument);

  // direct membership facts behind the two nontrivial cases
  CHECK_FALSE(point_in_hull(p3(1, 0, 2), std::vector<Point3>{p3(0, 0, 0), p3(4, 0, 16)}));
  CHECK(point_in_hull(p3(1, 0, 2), std::vector<Point3>{p3(0, 0, 0), p3(2, 0, 4)}));
}

TEST_CASE("encoding lemma is exhaustive-true on lattice instances") {
  std::mt19937_64 rng(202);
  for (int iter = 0; iter < 60; ++iter) {
    const std::size_t n = 2 + iter % 11;  // n <= 12
    const Rational density = make_rational(Int(1 + iter % 3), Int(3));
    const auto r = build_reduction(generate_lattice_instance(rng(), n, density));
    if (r.total_points() > 22) continue;
    CHECK(check_encoding_lemma_exhaustive(r));
  }
  // threaded sweep agrees with the sequential one
  const auto r = build_reduction(generate_lattice_instance(77, 9, make_rational(Int(2), Int(3))));
  CHECK(check_encoding_lemma_exhaustive(r, 1) == check_encoding_lemma_exhaustive(r, 4));
}

TEST_CASE("encoding lemma catches corrupted geometry") {
  auto r = build_reduction(chain3());
  r.blockers[0].point = p3(1, 0, 1);  // below the chord: inside conv({l1, l2, l3}) fails
  bool all = true;
  for (std::uint64_t mask = 0; mask < 8 && all; ++mask) {
    std::vector<Point3> q;
    for (std::size_t i = 0; i < 3; ++i)
      if (mask >> i & 1) q.push_back(r.lifted[i]);
    all = check_encoding_lemma(r, q);
  }
  CHECK_FALSE(all);
}

TEST_CASE("mask and point interfaces of the encoding check agree") {
  const auto r = build_reduction(square_block());
  const CoverTable cover = encoding_cover_table(r);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << r.lifted.size()); ++mask) {
    std::vector<Point3> q;
    for (std::size_t i = 0; i < r.lifted.size(); ++i)
      if (mask >> i & 1) q.push_back(r.lifted[i]);
    CHECK(check_encoding_lemma_subset(r, mask, cover) == check_encoding_lemma(r, q));
  }
}

TEST_CASE("convexity proposition holds for reductions") {
  CHECK(check_convex_proposition(build_reduction(chain3())));
  CHECK(check_convex_proposition(build_reduction(square_block())));
  CHECK(check_convex_proposition(build_reduction(DiskInstance{{c2(0, 0), c2(4, 0)}})));
  std::mt19937_64 rng(203);
  for (int iter = 0; iter < 40; ++iter) {
    const auto r = build_reduction(
        generate_lattice_instance(rng(), 2 + iter % 8, make_rational(Int(1), Int(2))));
    CHECK(check_convex_proposition(r));
  }
}

TEST_CASE("section-2 corollary holds exhaustively on small instances") {
  CHECK(check_convex_corollary_exhaustive(build_reduction(chain3())));
  CHECK(check_convex_corollary_exhaustive(build_reduction(square_block())));
  std::mt19937_64 rng(204);
  for (int iter = 0; iter < 15; ++iter) {
    const auto r = build_reduction(
        generate_lattice_instance(rng(), 2 + iter % 7, make_rational(Int(1), Int(2))));
    if (r.total_points() > 16) continue;
    CHECK(check_convex_corollary_exhaustive(r));
  }
}

TEST_CASE("swap procedure examples") {
  const auto r = build_reduction(chain3());

  // no swaps needed
  const std::vector<Point3> s1 = {p3(0, 0, 0), p3(4, 0, 16), p3(1, 0, 2), p3(3, 0, 10)};
  CHECK(convex_set_to_independent_set(r, s1, 2) == std::vector<std::size_t>{0, 2});

  // a genuine swap: on the 4-chain, S = {l1, l2, l4, b23, b34} is in convex
  // position and contains the touching pair (1,2); the procedure drops l1
  // and inserts b12, ending with the independent pair {2, 4}
  const auto chain4 =
      build_reduction(DiskInstance{{c2(0, 0), c2(2, 0), c2(4, 0), c2(6, 0)}});
  const std::vector<Point3> s2 = {p3(0, 0, 0), p3(2, 0, 4), p3(6, 0, 36), p3(3, 0, 10),
                                  p3(5, 0, 26)};
  REQUIRE(is_convex_position(s2));
  const auto disks = convex_set_to_independent_set(chain4, s2, 2);
  CHECK(disks == std::vector<std::size_t>{1, 3});
  for (std::size_t a = 0; a < disks.size(); ++a)
    for (std::size_t b = a + 1; b < disks.size(); ++b)
      CHECK(squared_distance(chain4.instance.centers[disks[a]],
                             chain4.instance.centers[disks[b]]) != Rational(4));

  // no tangencies: identity
  const auto free2 = build_reduction(DiskInstance{{c2(0, 0), c2(4, 0)}});
  const std::vector<Point3> s3 = {p3(0, 0, 0), p3(4, 0, 16)};
  CHECK(convex_set_to_independent_set(free2, s3, 2) == std::vector<std::size_t>{0, 1});

  // contract violations
  CHECK_THROWS_AS(convex_set_to_independent_set(r, s1, 1), std::invalid_argument);
  const std::vector<Point3> not_convex = {p3(0, 0, 0), p3(1, 0, 2), p3(2, 0, 4), p3(3, 0, 10)};
  CHECK_THROWS_AS(convex_set_to_independent_set(r, not_convex, 2), std::invalid_argument);
}
