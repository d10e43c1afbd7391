#pragma once

#include "pointsep/bipartition.hpp"
#include "pointsep/geom.hpp"

#include <map>
#include <vector>

namespace pointsep {

class LineThroughPointError : public InputError {
 public:
  LineThroughPointError(int line_index, int point_index)
      : InputError("line " + std::to_string(line_index) +
                   " passes through point " + std::to_string(point_index)),
        line_index(line_index),
        point_index(point_index) {}
  int line_index, point_index;
};

// K lines, each avoiding every point of the attached set.
struct Arrangement {
  std::vector<ConcreteLine> lines;
  bool simple_certified = false;  // pairwise non-parallel, no 3 concurrent

  int k() const { return static_cast<int>(lines.size()); }
};

// Sign-vector cell membership of every point.
struct CellAssignment {
  std::vector<std::vector<int8_t>> sign_vectors;          // [point][line]
  std::map<std::vector<int8_t>, std::vector<int>> cells;  // occupied cells only

  int occupied_cells() const { return static_cast<int>(cells.size()); }
};

// Throws LineThroughPointError when a line hits a point (exact check).
CellAssignment classify(const PointSet& ps, const Arrangement& arr);

int max_cell(const CellAssignment& ca);

// Pairwise non-parallel and no three concurrent, checked exactly.
bool arrangement_is_simple(const Arrangement& arr);

// Perturbs lines by exact rational rotations until the arrangement is simple,
// re-verifying that every point keeps its sign vector. Idempotent on
// already-simple input.
Arrangement make_simple(const Arrangement& arr, const PointSet& ps);

// Lines whose point-side assignment matches the given masks, materialized
// from bipartitions.
Arrangement arrangement_from_bipartitions(const std::vector<Bipartition>& bps,
                                          const PointSet& ps);

}  // namespace pointsep
