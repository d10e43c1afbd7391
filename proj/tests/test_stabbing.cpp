#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "pointsep/arrangement.hpp"
#include "pointsep/curve.hpp"
#include "pointsep/cutting.hpp"
#include "pointsep/generators.hpp"
#include "pointsep/glue.hpp"
#include "pointsep/polygonize.hpp"
#include "pointsep/tree.hpp"

using namespace pointsep;
using namespace pointsep::testing;

namespace {

Pt rp(long x, long y) { return Pt{Rational(x), Rational(y)}; }

PolygonalCurve hull_polygon(const PointSet& ps) {
  std::vector<int> order(ps.size());
  for (int i = 0; i < ps.size(); ++i) order[i] = i;
  return curve_from_order(ps, order);  // gen_convex emits hull order
}

}  // namespace

TEST_CASE("stab of convex polygons is exactly 2") {
  for (int n : {3, 6, 11}) {
    PolygonalCurve hull = hull_polygon(gen_convex(n, 2));
    StabReport r = stab_polygon(hull);
    CHECK(r.value == 2);
    CHECK(r.recount() == 2);
  }
}

TEST_CASE("stab_union basics") {
  CurveUnion single{{Segment{rp(0, 0), rp(2, 1)}}};
  CHECK(stab_union(single).value == 1);

  CurveUnion cross{{Segment{rp(0, 0), rp(2, 2)}, Segment{rp(0, 2), rp(2, 0)}}};
  CHECK(stab_union(cross).value == 2);

  CHECK_THROWS_AS(stab_union(CurveUnion{}), InputError);
}

TEST_CASE("closed simple polygons have even stab >= 2") {
  Rng rng(31);
  for (uint64_t seed : {1u, 2u, 3u, 4u}) {
    PointSet ps = gen_random(9, seed);
    UncrossOptions opt;
    opt.check_stab_monotone = false;
    PolygonalCurve c = uncross(random_order(9, rng), ps, opt);
    StabReport r = stab_polygon(c);
    CHECK(r.value >= 2);
    CHECK(r.value % 2 == 0);
    CHECK(r.recount() == r.value);
  }
}

TEST_CASE("sweep engine agrees with the bipartition-enumeration oracle") {
  Rng rng(77);
  UncrossOptions opt;
  opt.check_stab_monotone = false;
  // Simple polygons through random sets.
  for (int n : {5, 7, 10}) {
    for (int rep = 0; rep < 3; ++rep) {
      PointSet ps = gen_random(n, 500 + 10 * n + rep);
      PolygonalCurve c = uncross(random_order(n, rng), ps, opt);
      CHECK(stab_polygon(c).value == naive_stab(c.edges()));
    }
  }
  // Open unions: spanning-tree edges.
  for (uint64_t seed : {8u, 9u}) {
    PointSet ps = gen_random(8, seed);
    TreeResult tr = low_stab_spanning_tree(ps);
    CHECK(tr.stab.value == naive_stab(tree_segments(tr.tree, ps)));
  }
}

TEST_CASE("zigzag comb polygon vs oracles") {
  // 6-vertex comb: two prongs pointing up.
  std::vector<Pt> pts{rp(0, 0), rp(1, 4),  rp(2, 1),
                      rp(3, 4), rp(4, 0),  rp(2, -2)};
  PolygonalCurve comb;
  for (const Pt& p : pts) {
    comb.vertices.push_back(p);
    comb.vertex_id.push_back(-1);
  }
  REQUIRE(polygon_is_simple(comb));
  StabReport r = stab_polygon(comb);
  CHECK(r.value == naive_stab(comb.edges()));
  // Dense sampling never beats the reported value.
  CHECK(sampled_max_crossings(comb.edges(), 100000, 13) <= r.value);
  CHECK(r.value == 4);
}

TEST_CASE("witness line realizes the report") {
  PolygonalCurve hull = hull_polygon(gen_convex(7, 9));
  StabReport r = stab_polygon(hull);
  ConcreteLine ln = witness_line(r);
  int crossings = 0;
  for (const auto& s : hull.edges()) {
    int sa = ln.side(s.a), sb = ln.side(s.b);
    CHECK(sa != 0);
    CHECK(sb != 0);
    if (sa != sb) ++crossings;
  }
  CHECK(crossings == r.value);
}

TEST_CASE("low_stab_spanning_tree") {
  // N=2: the single edge, stab 1.
  PointSet two = make_points({{0, 0}, {3, 1}});
  TreeResult tr2 = low_stab_spanning_tree(two);
  CHECK(tr2.tree.edges.size() == 1);
  CHECK(tr2.stab.value == 1);

  // Validity and the pilot-calibrated convex case.
  PointSet c16 = gen_convex(16, 6);
  TreeResult tc = low_stab_spanning_tree(c16);
  CHECK(tree_is_valid(tc.tree, 16));
  CHECK(tc.stab.value <= 15);
  CHECK(tc.stab.value <= 24);  // 6 * sqrt(16)

  for (uint64_t seed : {5u, 6u}) {
    PointSet ps = gen_random(20, seed);
    TreeResult tr = low_stab_spanning_tree(ps);
    CHECK(tree_is_valid(tr.tree, 20));
    // Determinism.
    TreeResult tr2b = low_stab_spanning_tree(ps);
    CHECK(tr.tree.edges == tr2b.tree.edges);
  }
}

TEST_CASE("preorder_tour") {
  // Path graph rooted at an end: path order.
  PointSet path = make_points({{0, 0}, {1, 1}, {2, 0}, {3, 1}});
  SpanningTree t{{{0, 1}, {1, 2}, {2, 3}}};
  CHECK(preorder_tour(t, path, 0) == std::vector<int>{0, 1, 2, 3});

  // Star with 4 leaves: root first, leaves in ccw angular order.
  PointSet star = make_points({{0, 0}, {2, 1}, {-1, 2}, {-2, -1}, {1, -2}});
  SpanningTree st{{{0, 1}, {0, 2}, {0, 3}, {0, 4}}};
  CHECK(preorder_tour(st, star, 0) == std::vector<int>{0, 1, 2, 3, 4});

  // Any tree: a permutation of all ids.
  PointSet ps = gen_random(12, 3);
  TreeResult tr = low_stab_spanning_tree(ps);
  std::vector<int> tour = preorder_tour(tr.tree, ps, 5);
  std::sort(tour.begin(), tour.end());
  for (int i = 0; i < 12; ++i) CHECK(tour[i] == i);
}

TEST_CASE("uncross") {
  // Already-simple order: returned unchanged.
  PointSet c6 = gen_convex(6, 8);
  std::vector<int> ident{0, 1, 2, 3, 4, 5};
  UncrossStats stats;
  PolygonalCurve c = uncross(ident, c6, {}, &stats);
  CHECK(stats.swaps == 0);
  for (int i = 0; i < 6; ++i) CHECK(c.vertex_id[i] == i);

  // Bowtie on 4 convex points: a single swap yields the quadrilateral.
  PointSet sq = make_points({{0, 0}, {4, 1}, {5, 5}, {-1, 4}});
  UncrossStats s2;
  PolygonalCurve q = uncross({0, 2, 1, 3}, sq, {}, &s2);
  CHECK(s2.swaps == 1);
  CHECK(polygon_is_simple(q));
  CHECK(stab_polygon(q).value == 2);

  // 100 random tours on N=12: simple output, stab never increased per swap
  // (a violation throws StabMonotonicityError and would fail the test).
  Rng rng(55);
  PointSet ps = gen_random(12, 44);
  for (int it = 0; it < 100; ++it) {
    PolygonalCurve out = uncross(random_order(12, rng), ps);
    CHECK(polygon_is_simple(out));
  }

  CHECK_THROWS_AS(uncross({0, 1}, make_points({{0, 0}, {1, 0}}), {}),
                  InputError);
}

TEST_CASE("sqrt_sum_compare") {
  // sqrt(4) + sqrt(9) = 5 vs sqrt(25) + sqrt(0) = 5
  CHECK(sqrt_sum_compare(Rational(4), Rational(9), Rational(25), Rational(0)) ==
        0);
  // sqrt(2) + sqrt(2) < sqrt(9)
  CHECK(sqrt_sum_compare(Rational(2), Rational(2), Rational(9), Rational(0)) <
        0);
  // sqrt(16) > sqrt(1) + sqrt(4)
  CHECK(sqrt_sum_compare(Rational(16), Rational(0), Rational(1), Rational(4)) >
        0);
  CHECK(sqrt_sum_compare(Rational(2), Rational(8), Rational(9), Rational(1)) >
        0);  // 3*sqrt(2) ~ 4.243 vs 4
}

TEST_CASE("glue_pair") {
  // Two triangles side by side: merged stab <= 2 + 2 + 2.
  PointSet ps = make_points(
      {{0, 0}, {2, 0}, {1, 2}, {6, 0}, {8, 0}, {7, 2}});
  PolygonalCurve p = convex_cycle(ps, {0, 1, 2});
  PolygonalCurve q = convex_cycle(ps, {3, 4, 5});
  PolygonalCurve merged = glue_pair(p, q, ps);
  CHECK(polygon_is_simple(merged));
  CHECK(merged.member_ids() == std::vector<int>{0, 1, 2, 3, 4, 5});
  CHECK(stab_polygon(merged).value <= 6);

  // The two-convex-quadrilateral case.
  PointSet qs = make_points({{0, 0}, {3, 0}, {3, 3}, {0, 3},
                             {10, 0}, {13, 1}, {13, 4}, {10, 3}});
  PolygonalCurve a = convex_cycle(qs, {0, 1, 2, 3});
  PolygonalCurve b = convex_cycle(qs, {4, 5, 6, 7});
  PolygonalCurve m2 = glue_pair(a, b, qs);
  CHECK(polygon_is_simple(m2));
  CHECK(stab_polygon(m2).value <= 6);
  CHECK(m2.member_ids().size() == 8);

  // Auxiliary-vertex partner: members of p are preserved.
  PolygonalCurve aux;
  for (auto [x, y] : {std::pair{20L, 0L}, {22L, 0L}, {21L, 2L}}) {
    aux.vertices.push_back(rp(x, y));
    aux.vertex_id.push_back(-1);
  }
  PolygonalCurve m3 = glue_pair(a, aux, qs);
  CHECK(m3.member_ids() == std::vector<int>{0, 1, 2, 3});

  // Non-separable pairs are rejected.
  PointSet nest = make_points({{0, 0}, {10, 0}, {5, 9}, {4, 2}, {6, 2}, {5, 4}});
  PolygonalCurve outer = convex_cycle(nest, {0, 1, 2});
  PolygonalCurve inner = convex_cycle(nest, {3, 4, 5});
  CHECK_THROWS_AS(glue_pair(outer, inner, nest), InputError);
}

TEST_CASE("glue_many") {
  // m = 2 delegates to glue_pair.
  PointSet ps = make_points(
      {{0, 0}, {2, 0}, {1, 2}, {6, 0}, {8, 0}, {7, 2}});
  PolygonalCurve p = convex_cycle(ps, {0, 1, 2});
  PolygonalCurve q = convex_cycle(ps, {3, 4, 5});
  PolygonalCurve via_many = glue_many({p, q}, ps);
  PolygonalCurve via_pair = glue_pair(p, q, ps);
  CHECK(via_many.vertices == via_pair.vertices);

  // Four squares at the corners of a big square.
  std::vector<Pt> pts;
  for (auto [cx, cy] : {std::pair{0L, 0L}, {20L, 0L}, {20L, 20L}, {0L, 20L}}) {
    pts.push_back(rp(cx, cy));
    pts.push_back(rp(cx + 3, cy));
    pts.push_back(rp(cx + 3, cy + 3));
    pts.push_back(rp(cx, cy + 3));
  }
  PointSet corners(pts);
  std::vector<PolygonalCurve> squares;
  for (int s = 0; s < 4; ++s)
    squares.push_back(
        convex_cycle(corners, {4 * s, 4 * s + 1, 4 * s + 2, 4 * s + 3}));
  PolygonalCurve merged = glue_many(squares, corners);
  CHECK(polygon_is_simple(merged));
  CHECK(merged.member_ids().size() == 16);
}

TEST_CASE("degree_exact") {
  // Convex position: the hull polygon, stab 2.
  CHECK(degree_exact(gen_convex(6, 5)).value == 2);

  // Triangle plus interior point: full enumeration gives 4.
  PointSet tin = make_points({{0, 0}, {6, 0}, {3, 6}, {3, 2}});
  DegreeResult r = degree_exact(tin);
  CHECK(r.value == 4);
  CHECK(r.exact);
  CHECK(polygon_is_simple(r.witness));
  CHECK(stab_polygon(r.witness).value == 4);

  // 3x3 perturbed grid: at least 3 (and even, so at least 4).
  PointSet grid = gen_perturbed_grid(3, 3, 2);
  CHECK(degree_exact(grid).value >= 3);

  CHECK_THROWS_AS(degree_exact(gen_random(10, 1)), InputError);
}

TEST_CASE("degree_upper") {
  // Convex position: the hull seed is already optimal.
  CHECK(degree_upper(gen_convex(9, 3)).value == 2);
  CHECK(degree_upper(gen_convex(14, 3)).value == 2);

  // Never below the exact value.
  for (uint64_t seed = 0; seed < 10; ++seed) {
    PointSet ps = gen_random(7, 900 + seed);
    DegreeResult up = degree_upper(ps);
    DegreeResult ex = degree_exact(ps);
    CHECK(up.value >= ex.value);
    CHECK_FALSE(up.exact);
    CHECK(polygon_is_simple(up.witness));
    CHECK(static_cast<int>(up.witness.member_ids().size()) == 7);
  }
}

TEST_CASE("degree_upper on perturbed grids stays within the pilot bound") {
  // data/calibration.md records the pilot values (10 and 14).
  for (int w : {7, 10}) {
    PointSet grid = gen_perturbed_grid(w, w, 3);
    DegreeResult r = degree_upper(grid);
    CHECK(r.value <= 6 * w);
    CHECK(polygon_is_simple(r.witness));
  }
}

TEST_CASE("curve lower bound against arrangements") {
  // For a curve C through X and any K lines: some cell holds at least
  // N/(K*stab(C)) points.
  PointSet ps = gen_random(10, 64);
  DegreeResult du = degree_upper(ps);
  int d = du.value;
  auto bps = enumerate_bipartitions(ps);
  Rng rng(99);
  for (int it = 0; it < 25; ++it) {
    std::vector<Bipartition> pick;
    while (pick.size() < 3) {
      const auto& b = bps[rng.next() % bps.size()];
      if (!b.trivial()) pick.push_back(b);
    }
    Arrangement arr = arrangement_from_bipartitions(pick, ps);
    int mc = max_cell(classify(ps, arr));
    CHECK(mc >= ceil_div(10, 3 * d));
  }
}
