#pragma once

#include "pointsep/arrangement.hpp"
#include "pointsep/curve.hpp"
#include "pointsep/cutting.hpp"
#include "pointsep/geom.hpp"
#include "pointsep/tree.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pointsep {

// Layered scene; every referenced object must resolve (highlight ids against
// the point layer, the tree against the point layer).
struct Scene {
  std::optional<PointSet> points;
  std::vector<int> highlight_ids;
  std::optional<Arrangement> arrangement;
  std::optional<PartialCutting> cutting;
  std::vector<PolygonalCurve> curves;
  std::optional<SpanningTree> tree;
};

// Standalone deterministic SVG. Rational coordinates become floating
// decimals only here, at emission. Arrangement lines are clipped to the
// content box; partial-cutting cuts are additionally clipped to the
// complement of the earlier carve half-planes (the split line stays full).
std::string render_svg(const Scene& scene);

}  // namespace pointsep
