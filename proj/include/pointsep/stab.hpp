#pragma once

#include "pointsep/bipartition.hpp"
#include "pointsep/bits.hpp"
#include "pointsep/geom.hpp"

#include <utility>
#include <vector>

namespace pointsep {

// Maximum number of proper crossings between a generic line and a segment
// family, together with the side assignment (over the deduplicated segment
// endpoints) of a line class achieving it. Generic means: the line contains
// no endpoint; the maximum ranges over all such lines, finitized by the
// family of endpoint bipartitions.
struct StabReport {
  int value = 0;
  std::vector<Pt> positions;                   // deduplicated endpoints
  std::vector<std::pair<int, int>> segments;   // position index pairs
  Bits witness_positive;                       // winning side assignment
  int witness_anchor = -1;                     // position the sweep pivoted on

  // Crossings of the witness class, recomputed from the mask.
  int recount() const;
};

// Exact maximum over generic lines of the number of properly crossed
// segments. A rotating sweep about every endpoint visits every realizable
// endpoint bipartition; each evaluation is maintained incrementally.
StabReport stab_segments(const std::vector<Segment>& segments);

// Maximum, over generic lines, of the number of vertex groups whose point
// sets the line splits. Groups must have pairwise disjoint point positions.
int max_groups_split(const std::vector<std::vector<Pt>>& groups);

// Materializes a concrete line realizing the witness side assignment.
ConcreteLine witness_line(const StabReport& report);

}  // namespace pointsep
