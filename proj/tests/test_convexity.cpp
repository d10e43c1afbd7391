#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "pointsep/convex.hpp"
#include "pointsep/generators.hpp"

using namespace pointsep;
using namespace pointsep::testing;

TEST_CASE("is_convex_position basics") {
  PointSet tri = make_points({{0, 0}, {4, 0}, {1, 3}});
  CHECK(is_convex_position({0, 1, 2}, tri));

  PointSet with_inner = make_points({{0, 0}, {6, 0}, {3, 6}, {3, 2}});
  CHECK_FALSE(is_convex_position({0, 1, 2, 3}, with_inner));
  CHECK(is_convex_position({0, 1, 2}, with_inner));

  PointSet circle = gen_convex(10, 5);
  std::vector<int> all(10);
  for (int i = 0; i < 10; ++i) all[i] = i;
  CHECK(is_convex_position(all, circle));

  CHECK_THROWS_AS(is_convex_position({0, 0}, tri), InputError);
}

TEST_CASE("convex_number on structured sets") {
  // Already convex: the whole set.
  PointSet circle = gen_convex(10, 7);
  ConvexResult r = convex_number(circle);
  CHECK(r.value == 10);
  CHECK(static_cast<int>(r.witness.size()) == 10);
  CHECK(is_convex_position(r.witness, circle));

  // Happy-Ending base case: every 5 general-position points contain 4 in
  // convex position.
  for (uint64_t seed = 0; seed < 40; ++seed) {
    PointSet ps = gen_random(5, seed);
    CHECK(convex_number(ps).value >= 4);
  }

  // Tiny sets.
  CHECK(convex_number(PointSet{}).value == 0);
  CHECK(convex_number(make_points({{1, 2}})).value == 1);
  CHECK(convex_number(make_points({{1, 2}, {3, 4}})).value == 2);
}

TEST_CASE("convex_number equals the exhaustive oracle") {
  // Perturbed 4x4 grid.
  {
    PointSet grid = gen_perturbed_grid(4, 4, 21);
    ConvexResult r = convex_number(grid);
    CHECK(r.value == exhaustive_convex_oracle(grid));
    CHECK(is_convex_position(r.witness, grid));
    CHECK(static_cast<int>(r.witness.size()) == r.value);
  }
  // Random sets across sizes.
  for (int n = 3; n <= 14; ++n) {
    for (uint64_t seed : {1u, 2u}) {
      PointSet ps = gen_random(n, 1000 + 10 * n + seed);
      ConvexResult r = convex_number(ps);
      CHECK(r.value == exhaustive_convex_oracle(ps));
      CHECK(is_convex_position(r.witness, ps));
      CHECK(r.value >= 3);  // N >= 3 in general position
    }
  }
}

TEST_CASE("convex_number witness is deterministic") {
  PointSet ps = gen_random(12, 77);
  ConvexResult a = convex_number(ps);
  ConvexResult b = convex_number(ps);
  CHECK(a.value == b.value);
  CHECK(a.witness == b.witness);
  CHECK(a.witness[0] == *std::min_element(a.witness.begin(), a.witness.end()));
}

TEST_CASE("convex_number monotone under subsets") {
  PointSet ps = gen_random(12, 31);
  int full = convex_number(ps).value;
  Rng rng(8);
  std::vector<int> ids(12);
  for (int i = 0; i < 12; ++i) ids[i] = i;
  for (int drop = 0; drop < 4; ++drop) {
    ids.erase(ids.begin() + rng.next() % ids.size());
    int sub = convex_number(ps.subset(ids)).value;
    CHECK(sub <= full);
    full = sub;  // chains are monotone step by step too
  }
}

TEST_CASE("four_point_probe") {
  PointSet circle = gen_convex(8, 3);
  CHECK(four_point_probe(circle).ok);

  PointSet with_inner = make_points({{0, 0}, {6, 0}, {3, 6}, {3, 2}});
  FourPointProbe p = four_point_probe(with_inner);
  CHECK_FALSE(p.ok);
  std::vector<int> quad(p.witness.begin(), p.witness.end());
  CHECK_FALSE(is_convex_position(quad, with_inner));

  // Random N=20: witness exists and is confirmed non-convex; ok iff CON = N.
  for (uint64_t seed : {41u, 42u, 43u}) {
    PointSet ps = gen_random(20, seed);
    FourPointProbe probe = four_point_probe(ps);
    bool all_convex = convex_number(ps).value == ps.size();
    CHECK(probe.ok == all_convex);
    if (!probe.ok) {
      std::vector<int> ids(probe.witness.begin(), probe.witness.end());
      CHECK_FALSE(is_convex_position(ids, ps));
    }
  }
}
