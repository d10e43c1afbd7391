#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "pointsep/cutting.hpp"
#include "pointsep/generators.hpp"
#include "pointsep/io.hpp"
#include "pointsep/pipeline.hpp"
#include "pointsep/polygonize.hpp"
#include "pointsep/tree.hpp"

using namespace pointsep;
using namespace pointsep::testing;

TEST_CASE("rational parsing is exact") {
  CHECK(*parse_rational("0.25") == Rational(1, 4));
  CHECK(*parse_rational("-3.25") == Rational(-13, 4));
  CHECK(*parse_rational("7/21") == Rational(1, 3));
  CHECK(*parse_rational("-0.1") == Rational(-1, 10));
  CHECK(*parse_rational("42") == Rational(42));
  CHECK_FALSE(parse_rational("1/0").has_value());
  CHECK_FALSE(parse_rational("a.b").has_value());
  CHECK_FALSE(parse_rational("").has_value());
  // format/parse round trip
  Rational q(-355, 113);
  CHECK(*parse_rational(format_rational(q)) == q);
}

TEST_CASE("pointset round trip and diagnostics") {
  PointSet ps = gen_random(12, 3);
  std::string text = write_pointset(ps);
  PointSet back = read_pointset(text, "mem.psf");
  CHECK(write_pointset(back) == text);

  // Decimal inputs parse exactly.
  PointSet dec = read_pointset("pointset v1\nn 2\n0 0.5 1\n1 2 -0.25\n", "d");
  CHECK(dec[0].x == Rational(1, 2));
  CHECK(dec[1].y == Rational(-1, 4));

  // Errors carry file:line:column.
  try {
    read_pointset("pointset v1\nn 2\n0 1 2\n1 zz 4\n", "bad.psf");
    CHECK(false);
  } catch (const InputError& e) {
    std::string msg = e.what();
    CHECK(msg.find("bad.psf:4:3") != std::string::npos);
  }
  CHECK_THROWS_AS(read_pointset("pointset v1\nn 2\n1 0 0\n0 1 1\n", "x"),
                  InputError);  // ids must be dense in order
}

TEST_CASE("arrangement, curve, tree, order round trips") {
  PointSet ps = gen_random(10, 4);

  Arrangement arr = bounded_cell_arrangement(ps, 3);
  std::string at = write_arrangement(arr);
  CHECK(write_arrangement(read_arrangement(at, "a")) == at);

  UncrossOptions opt;
  opt.check_stab_monotone = false;
  Rng rng(5);
  PolygonalCurve c = uncross(random_order(10, rng), ps, opt);
  std::string ct = write_curve(c);
  CHECK(write_curve(read_curve(ct, "c")) == ct);

  TreeResult tr = low_stab_spanning_tree(ps);
  std::string tt = write_tree(tr.tree, 10);
  CHECK(write_tree(read_tree(tt, "t"), 10) == tt);
  CHECK_THROWS_AS(read_tree("tree v1\nn 3\nedge 0 1\nedge 0 1\n", "t"),
                  InputError);

  std::vector<int> order = random_order(10, rng);
  CHECK(read_order(write_order(order), "o") == order);
}

TEST_CASE("partial cutting round trip re-verifies membership") {
  PointSet ps = gen_random(30, 8);
  PartialCutting pc = partial_cutting(ps, 5, 3);
  std::string text = write_cutting(pc);
  PartialCutting back = read_cutting(text, "pc", ps);
  CHECK(write_cutting(back) == text);

  // Corrupt a member id: the constraint check on load must reject it.
  PartialCutting evil = pc;
  evil.cells[0].members[0] = pc.residual.empty() ? 0 : pc.residual[0];
  CHECK_THROWS_AS(read_cutting(write_cutting(evil), "pc", ps), InputError);
}

TEST_CASE("fnd witness round trip") {
  PointSet ps = gen_random(240, 11);
  FndConfig cfg;
  cfg.n = 12;
  cfg.d = 10;
  FndWitness w = fnd_witness(ps, cfg);
  std::string text = write_fnd_witness(w);
  CHECK(write_fnd_witness(read_fnd_witness(text, "w", ps)) == text);
}
