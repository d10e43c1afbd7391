#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "pointsep/arrangement.hpp"
#include "pointsep/convex.hpp"
#include "pointsep/curve.hpp"
#include "pointsep/generators.hpp"
#include "pointsep/io.hpp"

#include <map>

using namespace pointsep;
using namespace pointsep::testing;

TEST_CASE("generators are deterministic and in general position") {
  CHECK(gen_random(0, 1).size() == 0);
  CHECK(write_pointset(gen_random(40, 9)) == write_pointset(gen_random(40, 9)));
  CHECK(write_pointset(gen_random(40, 9)) != write_pointset(gen_random(40, 10)));
  CHECK(check_general_position(gen_random(100, 3)).ok);

  CHECK(write_pointset(gen_convex(15, 2)) == write_pointset(gen_convex(15, 2)));
  CHECK(check_general_position(gen_convex(30, 2)).ok);

  CHECK(write_pointset(gen_perturbed_grid(4, 5, 7)) ==
        write_pointset(gen_perturbed_grid(4, 5, 7)));
  CHECK(check_general_position(gen_perturbed_grid(5, 5, 7)).ok);
}

TEST_CASE("gen_convex emits strictly convex hull-ordered points") {
  PointSet ps = gen_convex(12, 13);
  std::vector<int> all(12);
  for (int i = 0; i < 12; ++i) all[i] = i;
  CHECK(is_convex_position(all, ps));
  CHECK(convex_number(ps).value == 12);
  // Emitted order is the hull cycle.
  PolygonalCurve hull = curve_from_order(ps, all);
  CHECK(polygon_is_simple(hull));
  CHECK(stab_polygon(hull).value == 2);
}

TEST_CASE("gen_perturbed_grid basics and singleton isolation") {
  CHECK(gen_perturbed_grid(1, 1, 5).size() == 1);
  PointSet g = gen_perturbed_grid(3, 3, 5);
  CHECK(g.size() == 9);

  // w + h - 2 axis-aligned-ish lines isolate every point: jitter stays
  // within (-1/4, 1/4), so the integer half-grid lines avoid all points.
  Arrangement arr;
  for (int i = 1; i < 3; ++i)
    arr.lines.push_back(
        ConcreteLine{Rational(1), Rational(0), Rational(2 * i - 1, 2)});
  for (int j = 1; j < 3; ++j)
    arr.lines.push_back(
        ConcreteLine{Rational(0), Rational(1), Rational(2 * j - 1, 2)});
  CHECK(arr.k() == 4);
  CellAssignment ca = classify(g, arr);
  CHECK(max_cell(ca) == 1);
  CHECK(ca.occupied_cells() == 9);
}

TEST_CASE("gen_bumped_curve instances certify their bounds") {
  for (int m : {2, 3}) {
    BumpedCurveInstance inst = gen_bumped_curve(m, 4);
    CHECK(inst.points.size() == m * m * m);
    CHECK(inst.stab_single <= 10);
    CHECK(inst.stab_assembled <= 22);
    CHECK(inst.max_bumps_hit <= 2);
    CHECK(polygon_is_simple(inst.assembled));
    CHECK(check_general_position(inst.points).ok);

    // Every member point is a vertex of the assembled curve.
    std::map<std::pair<std::string, std::string>, int> vert;
    for (int i = 0; i < inst.assembled.size(); ++i)
      vert[{format_rational(inst.assembled.vertices[i].x),
            format_rational(inst.assembled.vertices[i].y)}] = i;
    for (int id = 0; id < inst.points.size(); ++id) {
      auto key = std::make_pair(format_rational(inst.points[id].x),
                                format_rational(inst.points[id].y));
      CHECK(vert.count(key));
    }

    // Exactly M points per bump, across M copies and M bumps each.
    std::map<std::pair<int, int>, int> per_bump;
    for (auto [copy, bump] : inst.bump_index) ++per_bump[{copy, bump}];
    CHECK(static_cast<int>(per_bump.size()) == m * m);
    for (auto& [key, cnt] : per_bump) CHECK(cnt == m);

    // Member ids are carried by the curve itself.
    std::vector<int> members = inst.assembled.member_ids();
    CHECK(static_cast<int>(members.size()) == m * m * m);
  }

  // Determinism.
  CHECK(write_pointset(gen_bumped_curve(3, 6).points) ==
        write_pointset(gen_bumped_curve(3, 6).points));
  CHECK_THROWS_AS(gen_bumped_curve(1, 1), InputError);
}

TEST_CASE("bumped-curve convex number stays small") {
  BumpedCurveInstance inst = gen_bumped_curve(3, 4);
  int con = convex_number(inst.points).value;
  CHECK(con <= 4 * 3);  // the pilot-calibrated 4M threshold
}
