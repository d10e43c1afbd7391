#pragma once

#include "pointsep/curve.hpp"
#include "pointsep/geom.hpp"

#include <vector>

namespace pointsep {

// Merges two vertex-disjoint, linearly separable simple polygons into one
// simple polygon through the union of their members. The bridge runs along
// the minimum-distance chord between the boundaries, paired with a parallel
// twin at an exact offset small enough that the strip between them is free
// of vertices; the two strip-interior boundary pieces are deleted and the
// bridge pieces spliced in. Verified postcondition:
// stab(result) <= stab(p) + stab(q) + 2.
PolygonalCurve glue_pair(const PolygonalCurve& p, const PolygonalCurve& q,
                         const PointSet& ps);

// Folds glue_pair along the edges of a low-stabbing spanning tree over one
// interior representative point per curve. Curves must be pairwise
// vertex-disjoint and pairwise linearly separable.
PolygonalCurve glue_many(const std::vector<PolygonalCurve>& curves,
                         const PointSet& ps);

}  // namespace pointsep
