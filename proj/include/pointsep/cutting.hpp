#pragma once

#include "pointsep/arrangement.hpp"
#include "pointsep/bipartition.hpp"

#include <optional>
#include <vector>

namespace pointsep {

// One side of a line; contains(p) is an exact open half-plane test.
struct HalfPlane {
  ConcreteLine line;
  int side = 1;  // +1 or -1
  bool contains(const Pt& p) const { return line.side(p) == side; }
};

// A line whose open positive half-plane holds exactly r points of A and r of
// B. A and B must be disjoint, linearly separable, each of size >= r >= 1.
// Implemented as the rotating sweep over critical directions: the half-plane
// with 2r extreme points starts with at least r points of A, ends with at
// most r, and each swap event changes the count by at most one. Among the
// valid direction gaps, the one opened by the lexicographically smallest
// critical pair is chosen.
HalfPlane halving_line(const std::vector<int>& a_ids,
                       const std::vector<int>& b_ids, const PointSet& ps,
                       int r,
                       const std::optional<ConcreteLine>& separator = {});

// Exactly max(1, ceil(N/2H)) lines with verified max cell <= H: a median
// split followed by iterated halving cuts carving H points off each side's
// oversize set.
Arrangement bounded_cell_arrangement(const PointSet& ps, int quota);

struct CarvedCell {
  int cut_index;    // 2-based: the split line counts as line 1
  int split_side;   // +1 or -1: side of the split line
  std::vector<HalfPlane> constraints;  // conjunction defining the cell
  std::vector<int> members;            // exactly `quota` ids
};

struct PartialCutting {
  ConcreteLine split_line;
  std::vector<HalfPlane> cuts;     // Q_i for i = 2..L
  std::vector<CarvedCell> cells;   // 2*(L-1) cells of exactly `quota` points
  std::vector<int> residual;       // ids in no carved cell
  int quota = 0;
};

// The iterated construction run for exactly `lines` lines, recording each
// cut's half-plane and the two carved cells; carved-cell membership equals
// the evaluation of its half-plane constraint list.
PartialCutting partial_cutting(const PointSet& ps, int quota, int lines);

struct CutResult {
  int value = 0;
  Arrangement witness;
  bool exhaustive = false;
  long nodes_visited = 0;
  long arrangements_evaluated = 0;
};

// Exact CUT_K by branch-and-bound over K-subsets of the deduplicated
// realizable bipartition lines, seeded with the constructive upper bound.
// Desk scale: N <= 32.
CutResult cut_number_exact(const PointSet& ps, int k,
                           long budget = 50000000);

enum class SeparationVerdict { Yes, No, Unknown };

struct SeparationResult {
  SeparationVerdict verdict = SeparationVerdict::Unknown;
  int threshold = 0;  // ceil(c * N / K^2)
  std::optional<Arrangement> witness;
  int witness_max_cell = -1;
};

// Searches for an arrangement with max cell <= ceil(c*N/K^2).
SeparationResult equal_separation_check(const PointSet& ps, int k,
                                        const Rational& c,
                                        long budget = 50000000);

}  // namespace pointsep
