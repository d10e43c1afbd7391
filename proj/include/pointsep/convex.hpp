#pragma once

#include "pointsep/geom.hpp"

#include <array>
#include <vector>

namespace pointsep {

struct ConvexResult {
  int value = 0;
  std::vector<int> witness;  // ids in ccw hull order, rotated to start at min id
};

// True iff every listed point is a vertex of the subset's convex hull.
// ids must be distinct and non-empty.
bool is_convex_position(const std::vector<int>& ids, const PointSet& ps);

// Exact maximum subset of ps in convex position. Dynamic program over
// directed edges processed in direction order: a chain whose edge directions
// rotate monotonically counterclockwise by less than a half-turn per step,
// anchored at the subset's bottom-most point, closes into a convex polygon.
ConvexResult convex_number(const PointSet& ps);

struct FourPointProbe {
  bool ok = true;  // X itself is in convex position
  std::array<int, 4> witness{-1, -1, -1, -1};  // non-convex quadruple otherwise
};

// N >= 4. Certifies non-convex-position via a quadruple: an interior point
// together with a triangle containing it.
FourPointProbe four_point_probe(const PointSet& ps);

}  // namespace pointsep
