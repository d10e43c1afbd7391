// Command-line driver: generators, measurements, constructions, witness
// pipelines and SVG figures over the documented text formats.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <CLI11.hpp>
#include <json.hpp>

#include "pointsep/convex.hpp"
#include "pointsep/cutting.hpp"
#include "pointsep/generators.hpp"
#include "pointsep/glue.hpp"
#include "pointsep/io.hpp"
#include "pointsep/pipeline.hpp"
#include "pointsep/polygonize.hpp"
#include "pointsep/svg.hpp"
#include "pointsep/tree.hpp"

#include <cstdlib>
#include <iostream>

namespace {

using namespace pointsep;

uint64_t g_seed = 0;
int g_jobs = 1;  // identical results for any value; execution is sequential

PointSet load_points(const std::string& path) {
  return read_pointset(read_file(path), path);
}

void emit_failure_record(const std::string& kind, const std::string& message) {
  nlohmann::json j;
  j["error"] = kind;
  j["message"] = message;
  std::cerr << j.dump() << "\n";
}

Rational parse_rational_arg(const std::string& text, const std::string& what) {
  auto q = parse_rational(text);
  if (!q) throw InputError(what + ": not a rational: '" + text + "'");
  return *q;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"planar point separation toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", g_seed, "random seed")
      ->envname("POINTSEP_SEED");
  app.add_option("--jobs", g_jobs, "worker hint (results are identical)")
      ->check(CLI::PositiveNumber);

  // ---- gen ----------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "point-set generators");
  gen->require_subcommand(1);

  int gn = 10, gw = 3, gh = 3, gm = 3;
  std::string out_path, curve_out;

  auto* gen_rand = gen->add_subcommand("random", "uniform random points");
  gen_rand->add_option("--n", gn)->required();
  gen_rand->add_option("-o,--out", out_path)->required();
  gen_rand->callback([&] {
    PointSet ps = gen_random(gn, g_seed);
    write_file(out_path, write_pointset(ps));
    std::cout << "generated n=" << ps.size() << " seed=" << g_seed << "\n";
  });

  auto* gen_conv = gen->add_subcommand("convex", "points in convex position");
  gen_conv->add_option("--n", gn)->required();
  gen_conv->add_option("-o,--out", out_path)->required();
  gen_conv->callback([&] {
    PointSet ps = gen_convex(gn, g_seed);
    write_file(out_path, write_pointset(ps));
    std::cout << "generated n=" << ps.size() << " seed=" << g_seed << "\n";
  });

  auto* gen_grid = gen->add_subcommand("grid", "perturbed grid");
  gen_grid->add_option("--width", gw)->required();
  gen_grid->add_option("--height", gh)->required();
  gen_grid->add_option("-o,--out", out_path)->required();
  gen_grid->callback([&] {
    PointSet ps = gen_perturbed_grid(gw, gh, g_seed);
    write_file(out_path, write_pointset(ps));
    std::cout << "generated n=" << ps.size() << " seed=" << g_seed << "\n";
  });

  auto* gen_t32 =
      gen->add_subcommand("bumped-curve", "bumped-curve family (N = M^3)");
  gen_t32->add_option("--m", gm)->required();
  gen_t32->add_option("-o,--out", out_path)->required();
  gen_t32->add_option("--curve-out", curve_out);
  gen_t32->callback([&] {
    BumpedCurveInstance inst = gen_bumped_curve(gm, g_seed);
    write_file(out_path, write_pointset(inst.points));
    if (!curve_out.empty()) write_file(curve_out, write_curve(inst.assembled));
    std::cout << "generated m=" << gm << " n=" << inst.points.size()
              << " stab-single=" << inst.stab_single
              << " stab-assembled=" << inst.stab_assembled
              << " bumps-hit=" << inst.max_bumps_hit << "\n";
  });

  // ---- con ----------------------------------------------------------
  std::string points_path, witness_out;
  auto* con = app.add_subcommand("con", "convex number");
  con->add_option("points", points_path)->required();
  con->add_option("--witness-out", witness_out);
  con->callback([&] {
    PointSet ps = load_points(points_path);
    ConvexResult r = convex_number(ps);
    if (!witness_out.empty()) write_file(witness_out, write_order(r.witness));
    std::cout << r.value << "\n";
  });

  // ---- cut-exact ----------------------------------------------------
  int k_arg = 2;
  long budget = 50000000;
  auto* cutx = app.add_subcommand("cut-exact", "exact cutting number");
  cutx->add_option("points", points_path)->required();
  cutx->add_option("--k", k_arg)->required();
  cutx->add_option("--budget", budget);
  cutx->add_option("--witness-out", witness_out);
  cutx->callback([&] {
    PointSet ps = load_points(points_path);
    CutResult r = cut_number_exact(ps, k_arg, budget);
    if (!witness_out.empty())
      write_file(witness_out, write_arrangement(r.witness));
    std::cout << r.value << " exhaustive=" << (r.exhaustive ? 1 : 0)
              << " nodes=" << r.nodes_visited << "\n";
    if (!r.exhaustive)
      std::cout << "note: budget exhausted, value is an upper bound\n";
  });

  // ---- cut-construct -------------------------------------------------
  int quota = 1, lines_arg = 2;
  auto* cutc = app.add_subcommand("cut-construct",
                                  "arrangement with bounded cells");
  cutc->add_option("points", points_path)->required();
  cutc->add_option("--quota", quota)->required();
  cutc->add_option("-o,--out", out_path);
  cutc->callback([&] {
    PointSet ps = load_points(points_path);
    Arrangement arr = bounded_cell_arrangement(ps, quota);
    if (!out_path.empty()) write_file(out_path, write_arrangement(arr));
    std::cout << "lines=" << arr.k()
              << " max-cell=" << max_cell(classify(ps, arr)) << "\n";
  });

  // ---- partial-cut ----------------------------------------------------
  auto* pcut = app.add_subcommand("partial-cut", "partial cutting");
  pcut->add_option("points", points_path)->required();
  pcut->add_option("--quota", quota)->required();
  pcut->add_option("--lines", lines_arg)->required();
  pcut->add_option("-o,--out", out_path);
  pcut->callback([&] {
    PointSet ps = load_points(points_path);
    PartialCutting pc = partial_cutting(ps, quota, lines_arg);
    if (!out_path.empty()) write_file(out_path, write_cutting(pc));
    std::cout << "cells=" << pc.cells.size() << " quota=" << pc.quota
              << " residual=" << pc.residual.size() << "\n";
  });

  // ---- stab ----------------------------------------------------------
  auto* stab = app.add_subcommand("stab", "stabbing numbers");
  stab->require_subcommand(1);
  std::string curve_path, tree_path;
  std::vector<std::string> curve_paths;

  auto* stab_poly = stab->add_subcommand("polygon", "closed simple polygon");
  stab_poly->add_option("curve", curve_path)->required();
  stab_poly->callback([&] {
    PolygonalCurve c = read_curve(read_file(curve_path), curve_path);
    std::cout << stab_polygon(c).value << "\n";
  });

  auto* stab_union_cmd = stab->add_subcommand("union", "union of curves");
  stab_union_cmd->add_option("curves", curve_paths)->required();
  stab_union_cmd->callback([&] {
    CurveUnion u;
    for (const auto& path : curve_paths) {
      PolygonalCurve c = read_curve(read_file(path), path);
      auto es = c.edges();
      u.segments.insert(u.segments.end(), es.begin(), es.end());
    }
    std::cout << stab_union(u).value << "\n";
  });

  auto* stab_tree = stab->add_subcommand("tree", "spanning tree");
  stab_tree->add_option("points", points_path)->required();
  stab_tree->add_option("tree", tree_path)->required();
  stab_tree->callback([&] {
    PointSet ps = load_points(points_path);
    int n = 0;
    SpanningTree t = read_tree(read_file(tree_path), tree_path, &n);
    if (n != ps.size())
      throw InputError("tree was built over " + std::to_string(n) +
                       " points, point set has " + std::to_string(ps.size()));
    CurveUnion u{tree_segments(t, ps)};
    std::cout << stab_union(u).value << "\n";
  });

  // ---- tree -----------------------------------------------------------
  auto* tree_cmd = app.add_subcommand("tree", "low-stabbing spanning tree");
  tree_cmd->add_option("points", points_path)->required();
  tree_cmd->add_option("-o,--out", out_path);
  tree_cmd->callback([&] {
    PointSet ps = load_points(points_path);
    TreeResult r = low_stab_spanning_tree(ps);
    if (!out_path.empty())
      write_file(out_path, write_tree(r.tree, ps.size()));
    std::cout << "stab=" << r.stab.value << "\n";
  });

  // ---- tour -----------------------------------------------------------
  int root = 0;
  auto* tour = app.add_subcommand("tour", "preorder traversal of a tree");
  tour->add_option("points", points_path)->required();
  tour->add_option("tree", tree_path)->required();
  tour->add_option("--root", root);
  tour->add_option("-o,--out", out_path)->required();
  tour->callback([&] {
    PointSet ps = load_points(points_path);
    SpanningTree t = read_tree(read_file(tree_path), tree_path);
    write_file(out_path, write_order(preorder_tour(t, ps, root)));
  });

  // ---- uncross ---------------------------------------------------------
  std::string order_path;
  bool no_stab_check = false;
  auto* unc = app.add_subcommand("uncross", "2-opt to a simple polygon");
  unc->add_option("points", points_path)->required();
  unc->add_option("order", order_path)->required();
  unc->add_option("-o,--out", out_path);
  unc->add_flag("--no-stab-check", no_stab_check);
  unc->callback([&] {
    PointSet ps = load_points(points_path);
    std::vector<int> order = read_order(read_file(order_path), order_path);
    UncrossOptions opt;
    opt.check_stab_monotone = !no_stab_check;
    UncrossStats stats;
    try {
      PolygonalCurve c = uncross(order, ps, opt, &stats);
      if (!out_path.empty()) write_file(out_path, write_curve(c));
      std::cout << "swaps=" << stats.swaps
                << " stab=" << stab_polygon(c).value << "\n";
    } catch (const StabMonotonicityError& e) {
      // Counterexample to the per-swap non-increase: log the artifact.
      write_file("uncross-counterexample.txt",
                 write_order(e.order_before) + "# swap " +
                     std::to_string(e.swap_i) + " " +
                     std::to_string(e.swap_j) + " stab " +
                     std::to_string(e.stab_before) + " -> " +
                     std::to_string(e.stab_after) + "\n");
      throw;
    }
  });

  // ---- glue ------------------------------------------------------------
  auto* glue = app.add_subcommand("glue", "merge separable polygons");
  glue->add_option("points", points_path)->required();
  glue->add_option("curves", curve_paths)->required()->expected(2, -1);
  glue->add_option("-o,--out", out_path);
  glue->callback([&] {
    PointSet ps = load_points(points_path);
    std::vector<PolygonalCurve> curves;
    for (const auto& path : curve_paths)
      curves.push_back(read_curve(read_file(path), path));
    PolygonalCurve merged = glue_many(curves, ps);
    if (!out_path.empty()) write_file(out_path, write_curve(merged));
    std::cout << "stab=" << stab_polygon(merged).value
              << " members=" << merged.member_ids().size() << "\n";
  });

  // ---- degree -----------------------------------------------------------
  auto* deg = app.add_subcommand("degree", "minimal-stab curve through X");
  deg->require_subcommand(1);
  auto* dege = deg->add_subcommand("exact", "full enumeration, N <= 9");
  dege->add_option("points", points_path)->required();
  dege->add_option("-o,--out", out_path);
  dege->callback([&] {
    PointSet ps = load_points(points_path);
    DegreeResult r = degree_exact(ps);
    if (!out_path.empty()) write_file(out_path, write_curve(r.witness));
    std::cout << r.value << " exact=1\n";
  });
  auto* degu = deg->add_subcommand("upper", "tree route + 2-opt descent");
  degu->add_option("points", points_path)->required();
  degu->add_option("-o,--out", out_path);
  degu->callback([&] {
    PointSet ps = load_points(points_path);
    DegreeResult r = degree_upper(ps);
    if (!out_path.empty()) write_file(out_path, write_curve(r.witness));
    std::cout << r.value << " exact=0\n";
  });

  // ---- fnd ---------------------------------------------------------------
  int fnd_n = 3, fnd_d = 2;
  int h_override = -1, source_size = -1;
  auto* fnd = app.add_subcommand("fnd", "n points on a d-curve witness");
  fnd->add_option("points", points_path)->required();
  fnd->add_option("--n", fnd_n)->required();
  fnd->add_option("--d", fnd_d)->required();
  fnd->add_option("--h-override", h_override);
  fnd->add_option("--source-size", source_size);
  fnd->add_option("-o,--out", out_path);
  fnd->callback([&] {
    PointSet ps = load_points(points_path);
    FndConfig cfg;
    cfg.n = fnd_n;
    cfg.d = fnd_d;
    if (h_override >= 0) cfg.h_override = h_override;
    cfg.source_size = source_size;
    FndWitness w = fnd_witness(ps, cfg);
    if (!out_path.empty()) write_file(out_path, write_fnd_witness(w));
    std::cout << "subset=" << w.subset_ids.size()
              << " stab=" << w.measured_stab << " h=" << w.h_used
              << " union-stab=" << w.union_stab << "\n";
  });

  // ---- cut-report ----------------------------------------------------------
  auto* crep = app.add_subcommand("cut-report", "cutting-number bounds");
  crep->add_option("points", points_path)->required();
  crep->add_option("--k", k_arg)->required();
  crep->add_option("--curve", curve_paths, "curve witness file(s)");
  crep->callback([&] {
    PointSet ps = load_points(points_path);
    std::vector<std::pair<std::string, PolygonalCurve>> cw;
    for (const auto& path : curve_paths)
      cw.push_back({path, read_curve(read_file(path), path)});
    std::cout << cut_bound_report_text(cut_bound_report(ps, k_arg, cw));
  });

  // ---- survey ----------------------------------------------------------------
  int count = 10;
  std::string c_factor = "1";
  auto* survey = app.add_subcommand("survey", "separation survey CSV");
  survey->add_option("--count", count)->required();
  survey->add_option("--n", gn)->required();
  survey->add_option("--k", k_arg)->required();
  survey->add_option("--c", c_factor, "threshold factor (rational)");
  survey->add_option("-o,--out", out_path);
  survey->callback([&] {
    Rational c = parse_rational_arg(c_factor, "--c");
    std::string csv = separation_survey_csv(count, gn, k_arg, c, g_seed);
    if (!out_path.empty())
      write_file(out_path, csv);
    else
      std::cout << csv;
  });

  // ---- render -------------------------------------------------------------------
  std::string arr_path, cutting_path;
  std::vector<int> highlights;
  auto* render = app.add_subcommand("render", "emit an SVG figure");
  render->add_option("-o,--out", out_path)->required();
  render->add_option("--points", points_path);
  render->add_option("--arrangement", arr_path);
  render->add_option("--cutting", cutting_path);
  render->add_option("--curve", curve_paths);
  render->add_option("--tree", tree_path);
  render->add_option("--highlight", highlights);
  render->callback([&] {
    Scene scene;
    if (!points_path.empty()) scene.points = load_points(points_path);
    if (!arr_path.empty())
      scene.arrangement = read_arrangement(read_file(arr_path), arr_path);
    if (!cutting_path.empty()) {
      if (!scene.points)
        throw InputError("render: --cutting requires --points");
      scene.cutting =
          read_cutting(read_file(cutting_path), cutting_path, *scene.points);
    }
    for (const auto& path : curve_paths)
      scene.curves.push_back(read_curve(read_file(path), path));
    if (!tree_path.empty())
      scene.tree = read_tree(read_file(tree_path), tree_path);
    scene.highlight_ids = highlights;
    write_file(out_path, render_svg(scene));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const InputError& e) {
    emit_failure_record("input", e.what());
    return 2;
  } catch (const FndFailure& e) {
    nlohmann::json j;
    j["error"] = "verification";
    j["message"] = e.what();
    auto& stages = j["stages"] = nlohmann::json::array();
    for (const auto& d : e.diagnostics)
      stages.push_back({{"h", d.h}, {"stage", d.stage}, {"detail", d.detail}});
    std::cerr << j.dump() << "\n";
    return 1;
  } catch (const VerificationError& e) {
    emit_failure_record("verification", e.what());
    return 1;
  } catch (const std::exception& e) {
    emit_failure_record("internal", e.what());
    return 1;
  }
  return 0;
}
