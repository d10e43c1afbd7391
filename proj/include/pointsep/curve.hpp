#pragma once

#include "pointsep/geom.hpp"
#include "pointsep/stab.hpp"

#include <optional>
#include <vector>

namespace pointsep {

// Closed polygon through exact points; some vertices carry ids of an owning
// PointSet (id >= 0), bridge/discretization vertices carry -1.
struct PolygonalCurve {
  std::vector<Pt> vertices;   // cyclic order
  std::vector<int> vertex_id; // parallel to vertices; -1 = auxiliary

  int size() const { return static_cast<int>(vertices.size()); }
  Segment edge(int i) const {
    return {vertices[i], vertices[(i + 1) % vertices.size()]};
  }
  std::vector<Segment> edges() const;
  std::vector<int> member_ids() const;  // sorted ids >= 0
};

// Union of segments drawn from any mix of curves, trees and bridges.
struct CurveUnion {
  std::vector<Segment> segments;
};

// No two non-adjacent edges share a point; adjacent edges meet only at the
// shared vertex. Exact, O(E^2).
bool polygon_is_simple(const PolygonalCurve& c);
void require_simple(const PolygonalCurve& c, const std::string& what);

Rational polygon_double_area(const PolygonalCurve& c);  // signed, ccw > 0
PolygonalCurve make_ccw(PolygonalCurve c);

// Maximum proper crossings with a generic line; pre: simple and closed.
StabReport stab_polygon(const PolygonalCurve& c);

// Same over a nonempty segment union (open curves, trees, unions of curves).
StabReport stab_union(const CurveUnion& u);

// A point strictly inside the polygon (ear-triangle centroid) together with
// the ear apex: the half-open segment from the point toward the apex stays
// strictly interior, which makes deterministic nudging safe.
struct EarPoint {
  Pt point;
  Pt apex;
};
std::optional<EarPoint> interior_ear_point(const PolygonalCurve& c);

// A point strictly inside the polygon (ear-triangle centroid).
std::optional<Pt> interior_point(const PolygonalCurve& c);

// The convex polygon through ids (which must be in convex position),
// in ccw hull order.
PolygonalCurve convex_cycle(const PointSet& ps, const std::vector<int>& ids);

// Curve through all of ps following the given cyclic id order.
PolygonalCurve curve_from_order(const PointSet& ps,
                                const std::vector<int>& order);

}  // namespace pointsep
