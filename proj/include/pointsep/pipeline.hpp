#pragma once

#include "pointsep/curve.hpp"
#include "pointsep/cutting.hpp"
#include "pointsep/geom.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pointsep {

struct FndConfig {
  int n = 3;                     // target subset size
  int d = 2;                     // target stabbing bound
  std::optional<int> h_override; // carve parameter ladder start
  int source_size = -1;          // consume only the first k points; -1 = all
};

struct FndWitness {
  std::vector<int> subset_ids;
  PolygonalCurve curve;
  int measured_stab = 0;
  int h_used = 0;  // 0 = degenerate single-convex-subset route
  std::vector<int> per_cell_convex_sizes;
  int union_stab = 0;  // measured stab of the union of the convex polygons
  int target_n = 0, target_d = 0;
};

struct FndStageDiag {
  int h;
  std::string stage;
  std::string detail;
};

class FndFailure : public std::runtime_error {
 public:
  FndFailure(const std::string& msg, std::vector<FndStageDiag> diags)
      : std::runtime_error(msg), diagnostics(std::move(diags)) {}
  std::vector<FndStageDiag> diagnostics;
};

// Carve 2h cells of equal size with a partial cutting of h+1 lines, take the
// largest convex-position subset in each cell, check the union's stabbing
// number against 2h+4, then glue the convex polygons along a low-stabbing
// representative tree. h descends from floor(d/2) - ceil(sqrt(d)) until all
// verifications pass; the h = 0 fallback is the plain convex witness.
FndWitness fnd_witness(const PointSet& ps, const FndConfig& cfg);

// Re-runs every verification a stored witness claims.
void verify_fnd_witness(const FndWitness& w, const PointSet& ps);

struct SubsetBound {
  std::string name;
  int subset_size = 0;
  int degree_upper_bound = 0;  // a curve through the subset with this stab
  Rational bound;              // |Y| / (K * d_ub): a valid CUT_K lower bound
  BigInt bound_ceil;
};

struct CutBoundReport {
  int k = 0;
  int n = 0;
  int constructive_upper = 0;  // verified max cell of the ceil(N/2K)-witness
  Arrangement constructive_witness;
  std::optional<CutResult> exact;  // desk scale only
  std::vector<SubsetBound> lower_bounds;
};

// Lower bounds from a candidate subset family (the whole set via
// degree_upper, the convex witness with bound 2, plus any supplied curve
// witnesses and subsets), paired with the constructive upper bound and, at
// desk scale, the exact search.
CutBoundReport cut_bound_report(
    const PointSet& ps, int k,
    const std::vector<std::pair<std::string, PolygonalCurve>>&
        curve_witnesses = {},
    const std::vector<std::pair<std::string, std::vector<int>>>&
        extra_subsets = {});

std::string cut_bound_report_text(const CutBoundReport& r);

// One CSV row per seeded random instance: separation verdict (re-verified
// from its witness), degree upper bound, convex number. Byte-identical for a
// fixed seed.
std::string separation_survey_csv(int count, int n, int k, const Rational& c,
                                  uint64_t seed);

}  // namespace pointsep
