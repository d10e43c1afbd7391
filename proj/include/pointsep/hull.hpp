#pragma once

#include "pointsep/geom.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace pointsep {

// Strict convex hull in ccw order (no collinear hull points are kept since
// inputs are in general position; with collinear inputs, interior-of-edge
// points are dropped). Handles 1- and 2-point inputs.
std::vector<Pt> convex_hull(std::vector<Pt> pts);

// All input points are hull vertices.
bool points_in_convex_position(const std::vector<Pt>& pts);

// Closest pair of points between two boundaries, each boundary given as a
// point list interpreted as: 1 point, a segment (2), or a closed polygon
// boundary (>= 3, in order). Returns (a on A, b on B) realizing the minimum
// distance, exact.
struct ClosestFeatures {
  Pt on_a, on_b;
  Rational sq_dist;
};
ClosestFeatures closest_boundary_points(const std::vector<Pt>& a,
                                        const std::vector<Pt>& b);

// A line strictly separating point sets A and B (A on the positive side),
// or nullopt when their convex hulls intersect or touch. No general-position
// assumption.
struct SeparatingLine {
  Rational a, b, c;  // {ax + by > c} contains A strictly
};
std::optional<SeparatingLine> find_separating_line(const std::vector<Pt>& a,
                                                   const std::vector<Pt>& b);

enum class PolygonLocation { Inside, Boundary, Outside };

// Exact point location against a simple polygon (vertices in order).
PolygonLocation locate_in_polygon(const Pt& p, const std::vector<Pt>& poly);

}  // namespace pointsep
