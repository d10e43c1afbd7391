#pragma once

#include "pointsep/curve.hpp"
#include "pointsep/geom.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace pointsep {

// All generators are deterministic under a fixed seed and emit sets in
// verified general position.

PointSet gen_random(int n, uint64_t seed);

// N >= 3 points in strictly convex position: exact rational points on the
// unit circle via the tangent-half-angle parametrization, so convexity and
// general position hold exactly by construction.
PointSet gen_convex(int n, uint64_t seed);

PointSet gen_perturbed_grid(int w, int h, uint64_t seed);

// The high-cutting-number / low-convex-number family: M copies of the
// bumped semicircle curve placed inward on the edges of a regular M-gon,
// with M member points clustered near the top of each of the M bumps per
// copy (N = M^3). All certificates are measured on the emitted polygonal
// curve itself; on failure the bump radius and cluster window shrink and
// the construction retries.
struct BumpedCurveInstance {
  PointSet points;               // N = M^3 members, ids copy-major
  PolygonalCurve assembled;      // closed curve, measured stab <= 22
  std::vector<Segment> single_g; // the full single-edge curve (open)
  int m = 0;
  Rational scale, bump_radius, spread, window;  // s, t, p, cluster window
  std::vector<std::pair<int, int>> bump_index;  // id -> (copy, bump)
  int stab_single = 0;     // measured stab of the single curve (<= 10)
  int stab_assembled = 0;  // measured stab of the assembly (<= 22)
  int max_bumps_hit = 0;   // max bump neighborhoods split by one line (<= 2)
};

BumpedCurveInstance gen_bumped_curve(int m, uint64_t seed);

// floor(sqrt(v) * 2^grid_bits) / 2^grid_bits for v >= 0, exact.
Rational sqrt_floor(const Rational& v, unsigned grid_bits);

}  // namespace pointsep
