#include "pointsep/pipeline.hpp"

#include "pointsep/convex.hpp"
#include "pointsep/generators.hpp"
#include "pointsep/glue.hpp"
#include "pointsep/polygonize.hpp"
#include "pointsep/rng.hpp"

#include <algorithm>
#include <sstream>

namespace pointsep {

namespace {

int ceil_sqrt(int v) {
  int c = 0;
  while (c * c < v) ++c;
  return c;
}

FndWitness convex_fallback(const PointSet& pool, const FndConfig& cfg,
                           std::vector<FndStageDiag>& diags) {
  ConvexResult cr = convex_number(pool);
  if (cr.value < cfg.n) {
    diags.push_back({0, "convex-fallback",
                     "largest convex subset has " + std::to_string(cr.value) +
                         " < n = " + std::to_string(cfg.n)});
    throw FndFailure("fnd_witness: all ladder rungs failed", diags);
  }
  FndWitness w;
  w.target_n = cfg.n;
  w.target_d = cfg.d;
  w.h_used = 0;
  w.curve = convex_cycle(pool, cr.witness);
  w.subset_ids = w.curve.member_ids();
  w.per_cell_convex_sizes = {cr.value};
  w.measured_stab = stab_polygon(w.curve).value;
  w.union_stab = w.measured_stab;
  if (w.measured_stab > cfg.d)
    throw VerificationError("fnd_witness: convex witness stab " +
                            std::to_string(w.measured_stab) + " > d");
  return w;
}

}  // namespace

FndWitness fnd_witness(const PointSet& ps, const FndConfig& cfg) {
  if (cfg.n < 3) throw InputError("fnd_witness: n >= 3");
  if (cfg.d < 2) throw InputError("fnd_witness: d >= 2");

  PointSet pool = ps;
  if (cfg.source_size >= 0) {
    if (cfg.source_size > ps.size())
      throw InputError("fnd_witness: source_size exceeds |X|");
    std::vector<int> ids(cfg.source_size);
    for (int i = 0; i < cfg.source_size; ++i) ids[i] = i;
    pool = ps.subset(ids);
  }
  const int n_pts = pool.size();

  std::vector<FndStageDiag> diags;
  int h0 = cfg.h_override ? *cfg.h_override
                          : cfg.d / 2 - ceil_sqrt(cfg.d);

  for (int h = h0; h >= 1; --h) {
    int need_per_cell = static_cast<int>(ceil_div(cfg.n, 2L * h));
    int quota = static_cast<int>((n_pts / 2) / h);
    if (quota < need_per_cell) {
      diags.push_back({h, "quota",
                       "max per-cell quota " + std::to_string(quota) +
                           " < required " + std::to_string(need_per_cell)});
      continue;
    }
    try {
      PartialCutting pc = partial_cutting(pool, quota, h + 1);

      std::vector<PolygonalCurve> polys;
      std::vector<int> sizes;
      for (const auto& cell : pc.cells) {
        PointSet sub = pool.subset(cell.members);
        ConvexResult cr = convex_number(sub);
        std::vector<int> ids;
        ids.reserve(cr.witness.size());
        for (int local : cr.witness) ids.push_back(cell.members[local]);
        sizes.push_back(cr.value);
        polys.push_back(convex_cycle(pool, ids));
      }

      CurveUnion all;
      for (const auto& poly : polys) {
        auto es = poly.edges();
        all.segments.insert(all.segments.end(), es.begin(), es.end());
      }
      int ustab = stab_union(all).value;
      if (ustab > 2 * h + 4)
        throw VerificationError("fnd_witness: union stab " +
                                std::to_string(ustab) + " > 2h+4 = " +
                                std::to_string(2 * h + 4));

      PolygonalCurve glued = glue_many(polys, pool);
      int measured = stab_polygon(glued).value;
      std::vector<int> subset = glued.member_ids();

      if (measured <= cfg.d && static_cast<int>(subset.size()) >= cfg.n) {
        FndWitness w;
        w.target_n = cfg.n;
        w.target_d = cfg.d;
        w.h_used = h;
        w.curve = std::move(glued);
        w.subset_ids = std::move(subset);
        w.per_cell_convex_sizes = std::move(sizes);
        w.measured_stab = measured;
        w.union_stab = ustab;
        return w;
      }
      diags.push_back({h, "verify",
                       "stab " + std::to_string(measured) + " (target " +
                           std::to_string(cfg.d) + "), subset " +
                           std::to_string(subset.size()) + " (target " +
                           std::to_string(cfg.n) + ")"});
    } catch (const InputError& e) {
      diags.push_back({h, "construction", e.what()});
    }
  }
  return convex_fallback(pool, cfg, diags);
}

void verify_fnd_witness(const FndWitness& w, const PointSet& ps) {
  require_simple(w.curve, "fnd witness curve");
  if (w.curve.member_ids() != w.subset_ids)
    throw VerificationError("fnd witness: subset ids do not match the curve");
  for (int id : w.subset_ids) {
    if (id < 0 || id >= ps.size())
      throw VerificationError("fnd witness: id out of range");
    bool found = false;
    for (int i = 0; i < w.curve.size() && !found; ++i)
      found = w.curve.vertex_id[i] == id && w.curve.vertices[i] == ps[id];
    if (!found)
      throw VerificationError("fnd witness: curve misses point " +
                              std::to_string(id));
  }
  int measured = stab_polygon(w.curve).value;
  if (measured != w.measured_stab)
    throw VerificationError("fnd witness: stored stab " +
                            std::to_string(w.measured_stab) +
                            " != measured " + std::to_string(measured));
  if (measured > w.target_d)
    throw VerificationError("fnd witness: stab exceeds target d");
  if (static_cast<int>(w.subset_ids.size()) < w.target_n)
    throw VerificationError("fnd witness: subset smaller than target n");
}

CutBoundReport cut_bound_report(
    const PointSet& ps, int k,
    const std::vector<std::pair<std::string, PolygonalCurve>>& curve_witnesses,
    const std::vector<std::pair<std::string, std::vector<int>>>& extra_subsets) {
  if (k < 1) throw InputError("cut_bound_report: K >= 1");
  CutBoundReport r;
  r.k = k;
  r.n = ps.size();

  r.constructive_witness = bounded_cell_arrangement(
      ps, std::max(1L, ceil_div(ps.size(), 2L * k)));
  r.constructive_upper = max_cell(classify(ps, r.constructive_witness));

  auto add_bound = [&](const std::string& name, int size, int d_ub) {
    SubsetBound b;
    b.name = name;
    b.subset_size = size;
    b.degree_upper_bound = d_ub;
    b.bound = Rational(size) / (k * d_ub);
    b.bound_ceil = ceil_rational(b.bound);
    r.lower_bounds.push_back(std::move(b));
  };

  if (ps.size() >= 3 && ps.size() <= 128) {
    DegreeResult du = degree_upper(ps);
    add_bound("whole-set", ps.size(), du.value);
  }
  {
    ConvexResult cr = convex_number(ps);
    add_bound("convex-witness", cr.value, 2);
  }
  for (const auto& [name, curve] : curve_witnesses) {
    int stab = stab_polygon(curve).value;
    add_bound(name, static_cast<int>(curve.member_ids().size()), stab);
  }
  for (const auto& [name, ids] : extra_subsets) {
    if (ids.size() < 3) continue;
    PointSet sub = ps.subset(ids);
    DegreeResult du = degree_upper(sub);
    add_bound(name, static_cast<int>(ids.size()), du.value);
  }

  if (ps.size() <= 14 && k <= 3) r.exact = cut_number_exact(ps, k);

  for (const auto& b : r.lower_bounds) {
    if (b.bound_ceil > r.constructive_upper)
      throw VerificationError("cut_bound_report: lower bound '" + b.name +
                              "' exceeds the constructive upper bound");
    if (r.exact && b.bound_ceil > r.exact->value)
      throw VerificationError("cut_bound_report: lower bound '" + b.name +
                              "' exceeds the exact value");
  }
  return r;
}

std::string cut_bound_report_text(const CutBoundReport& r) {
  std::ostringstream os;
  os << "cut-report n=" << r.n << " k=" << r.k << "\n";
  os << "upper constructive " << r.constructive_upper << "\n";
  if (r.exact)
    os << "exact " << r.exact->value
       << (r.exact->exhaustive ? " (exhaustive)" : " (budget-limited upper bound)")
       << "\n";
  for (const auto& b : r.lower_bounds)
    os << "lower " << b.name << " size=" << b.subset_size
       << " d_ub=" << b.degree_upper_bound
       << " bound=" << format_rational(b.bound) << " ceil=" << b.bound_ceil
       << "\n";
  return os.str();
}

std::string separation_survey_csv(int count, int n, int k, const Rational& c,
                                  uint64_t seed) {
  if (count < 0) throw InputError("separation_survey: count >= 0");
  std::ostringstream os;
  os << "index,seed,n,k,c,verdict,threshold,witness_max_cell,degree_upper,"
        "convex_number\n";
  for (int i = 0; i < count; ++i) {
    uint64_t s = mix_seed(seed, i);
    PointSet ps = gen_random(n, s);
    SeparationResult sr = equal_separation_check(ps, k, c);
    if (sr.witness) {
      // The verdict must be re-derivable from its own witness.
      int mc = max_cell(classify(ps, *sr.witness));
      if (mc != sr.witness_max_cell || mc > sr.threshold)
        throw VerificationError("separation_survey: witness recount failed");
    }
    const char* verdict = sr.verdict == SeparationVerdict::Yes
                              ? "yes"
                              : sr.verdict == SeparationVerdict::No ? "no"
                                                                    : "unknown";
    int du = n >= 3 ? degree_upper(ps).value : 0;
    int cn = convex_number(ps).value;
    os << i << "," << s << "," << n << "," << k << "," << format_rational(c)
       << "," << verdict << "," << sr.threshold << ","
       << (sr.witness ? std::to_string(sr.witness_max_cell) : "-") << ","
       << du << "," << cn << "\n";
  }
  return os.str();
}

}  // namespace pointsep
