#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "pointsep/bipartition.hpp"
#include "pointsep/generators.hpp"
#include "pointsep/geom.hpp"

#include <unordered_set>

using namespace pointsep;
using namespace pointsep::testing;

namespace {

Pt rp(long x, long y) { return Pt{Rational(x), Rational(y)}; }

}  // namespace

TEST_CASE("orientation basic turns") {
  CHECK(orientation(rp(0, 0), rp(1, 0), rp(0, 1)) == Orient::Ccw);
  CHECK(orientation(rp(0, 0), rp(1, 1), rp(2, 2)) == Orient::Collinear);
  CHECK(orientation(rp(0, 0), rp(1, 0), rp(2, -1)) == Orient::Cw);
}

TEST_CASE("orientation antisymmetry and invariance") {
  Rng rng(7);
  for (int it = 0; it < 50; ++it) {
    auto coord = [&]() {
      Rational q(static_cast<long>(rng.bits(10)) - 512, 1 + rng.bits(4));
      q.canonicalize();
      return q;
    };
    Pt p{coord(), coord()}, q{coord(), coord()}, r{coord(), coord()};
    int s = orientation_sign(p, q, r);
    CHECK(orientation_sign(q, p, r) == -s);
    CHECK(orientation_sign(p, r, q) == -s);
    CHECK(orientation_sign(r, q, p) == -s);
    // translation invariance
    Pt d{Rational(3, 7), Rational(-11, 5)};
    CHECK(orientation_sign(p + d, q + d, r + d) == s);
    // positive scaling invariance
    auto scale = [](const Pt& v) {
      return Pt{v.x * Rational(5, 3), v.y * Rational(5, 3)};
    };
    CHECK(orientation_sign(scale(p), scale(q), scale(r)) == s);
  }
}

TEST_CASE("general position checks") {
  CHECK(check_general_position(make_points({{0, 0}, {1, 0}, {0, 1}})).ok);

  auto bad = check_general_position(
      make_points({{0, 0}, {1, 1}, {2, 2}, {5, 0}}).points());
  CHECK_FALSE(bad.ok);
  CHECK(bad.witness == std::array<int, 3>{0, 1, 2});

  // Duplicates report in the degenerate (i, j, j) form on the raw overload.
  std::vector<Pt> dup{rp(0, 0), rp(0, 0)};
  auto dd = check_general_position(dup);
  CHECK_FALSE(dd.ok);
  CHECK(dd.witness == std::array<int, 3>{0, 1, 1});

  CHECK_THROWS_AS(make_points({{2, 3}, {2, 3}}), InputError);
}

TEST_CASE("segments properly cross") {
  CHECK(segments_properly_cross({rp(0, 0), rp(2, 2)}, {rp(0, 2), rp(2, 0)}));
  CHECK_FALSE(
      segments_properly_cross({rp(0, 0), rp(1, 0)}, {rp(2, 0), rp(3, 0)}));
  // endpoint touch is not proper
  CHECK_FALSE(
      segments_properly_cross({rp(0, 0), rp(2, 0)}, {rp(1, 0), rp(1, 5)}));
}

TEST_CASE("bipartition counts at small N") {
  // Every subset of 3 general points is separable: 8 ordered bipartitions.
  CHECK(enumerate_bipartitions(make_points({{0, 0}, {4, 0}, {1, 3}})).size() ==
        8);

  // Convex quadrilateral: 16 minus the two diagonal splits.
  PointSet square = make_points({{0, 0}, {4, 0}, {4, 4}, {0, 4}});
  auto bps = enumerate_bipartitions(square);
  CHECK(bps.size() == 14);
  std::unordered_set<Bits, BitsHash> seen;
  for (const auto& b : bps) seen.insert(b.positive);
  CHECK_FALSE(seen.count(mask_of({0, 2}, 4)));
  CHECK_FALSE(seen.count(mask_of({1, 3}, 4)));
  // ... and the independent hull route agrees they are unrealizable.
  CHECK_FALSE(bipartition_from_sides(square, mask_of({0, 2}, 4)).has_value());
  CHECK_FALSE(bipartition_from_sides(square, mask_of({1, 3}, 4)).has_value());

  CHECK(enumerate_bipartitions(make_points({{0, 0}, {1, 2}})).size() == 4);
}

TEST_CASE("dense line sampling confirms the square's 14 bipartitions") {
  PointSet square = make_points({{0, 0}, {4, 0}, {4, 4}, {0, 4}});
  std::unordered_set<Bits, BitsHash> sampled;
  Rng rng(17);
  for (int it = 0; it < 20000; ++it) {
    long a = static_cast<long>(rng.bits(12)) - 2048;
    long b = static_cast<long>(rng.bits(12)) - 2048;
    if (a == 0 && b == 0) continue;
    // Offset drawn between the extremes of a*x + b*y over the corners.
    Rational lo, hi;
    for (int i = 0; i < 4; ++i) {
      Rational v = a * square[i].x + b * square[i].y;
      if (i == 0 || v < lo) lo = v;
      if (i == 0 || v > hi) hi = v;
    }
    // Span a bit beyond both extremes so the trivial colorings appear too.
    Rational t(static_cast<long>(rng.bits(16)), 1L << 16);
    t.canonicalize();
    Rational u = t * Rational(3, 2) - Rational(1, 4);
    ConcreteLine ln{Rational(a), Rational(b), Rational(lo + (hi - lo) * u)};
    Bits mask(4);
    bool generic = true;
    for (int i = 0; i < 4 && generic; ++i) {
      int s = ln.side(square[i]);
      if (s == 0) generic = false;
      mask.set(i, s > 0);
    }
    if (generic) sampled.insert(mask);
  }
  CHECK(sampled.size() == 14);
  CHECK_FALSE(sampled.count(mask_of({0, 2}, 4)));
  CHECK_FALSE(sampled.count(mask_of({1, 3}, 4)));
  // ... and the sampled family is exactly the enumerated one.
  std::unordered_set<Bits, BitsHash> enumerated;
  for (const auto& b : enumerate_bipartitions(square))
    enumerated.insert(b.positive);
  for (const auto& m : sampled) CHECK(enumerated.count(m));
}

TEST_CASE("bipartition family properties on random sets") {
  for (uint64_t seed : {11u, 12u, 13u}) {
    for (int n : {4, 6, 9}) {
      PointSet ps = gen_random(n, seed);
      auto bps = enumerate_bipartitions(ps);
      CHECK(static_cast<long>(bps.size()) <= 4L * n * (n - 1) / 2 + 2);

      std::unordered_set<Bits, BitsHash> seen;
      for (const auto& b : bps) seen.insert(b.positive);
      for (const auto& b : bps) {
        // closed under side swap
        CHECK(seen.count(b.positive.complement()));
        // every bipartition realizes and classifies back exactly
        ConcreteLine ln = realize_line(b, ps);
        for (int i = 0; i < n; ++i)
          CHECK(ln.side(ps[i]) == (b.positive.get(i) ? 1 : -1));
      }
    }
  }
}

TEST_CASE("subset lattice matches the hull-disjointness oracle") {
  auto lattice_check = [](int n, uint64_t seed) {
    PointSet ps = gen_random(n, seed);
    auto bps = enumerate_bipartitions(ps);
    std::unordered_set<Bits, BitsHash> seen;
    for (const auto& b : bps) seen.insert(b.positive);
    int disagreements = 0;
    for (uint32_t m = 0; m < (1u << n); ++m) {
      std::vector<int> ids;
      for (int i = 0; i < n; ++i)
        if (m & (1u << i)) ids.push_back(i);
      bool in_family = seen.count(mask_of(ids, n)) > 0;
      bool separable = bipartition_from_sides(ps, mask_of(ids, n)).has_value();
      if (in_family != separable) ++disagreements;
    }
    CHECK(disagreements == 0);
  };
  lattice_check(8, 3);
  lattice_check(8, 4);
  lattice_check(10, 5);
}

TEST_CASE("realize_line trivial and anchored forms") {
  PointSet ps = gen_random(7, 99);
  auto bps = enumerate_bipartitions(ps);
  // all-positive: a line strictly below the lowest point
  for (const auto& b : bps) {
    if (b.kind == Bipartition::Kind::AllPositive) {
      ConcreteLine ln = realize_line(b, ps);
      for (int i = 0; i < ps.size(); ++i) CHECK(ln.side(ps[i]) == 1);
    }
  }
}

TEST_CASE("generic_direction gives distinct projections") {
  for (uint64_t seed : {5u, 6u}) {
    PointSet ps = gen_perturbed_grid(3, 3, seed);
    Pt u = generic_direction(ps.points());
    std::vector<Rational> proj;
    for (const Pt& p : ps.points()) proj.push_back(dot(u, p));
    std::sort(proj.begin(), proj.end());
    CHECK(std::adjacent_find(proj.begin(), proj.end()) == proj.end());
  }
}
