#pragma once

#include "pointsep/curve.hpp"
#include "pointsep/geom.hpp"

#include <vector>

namespace pointsep {

// A 2-opt swap increased the measured stabbing number; the expected
// invariant is non-increase, so this is reported, never ignored.
class StabMonotonicityError : public VerificationError {
 public:
  StabMonotonicityError(std::vector<int> order_before, int swap_i, int swap_j,
                        int stab_before, int stab_after)
      : VerificationError("uncross: stab increased from " +
                          std::to_string(stab_before) + " to " +
                          std::to_string(stab_after) + " at swap (" +
                          std::to_string(swap_i) + "," +
                          std::to_string(swap_j) + ")"),
        order_before(std::move(order_before)),
        swap_i(swap_i),
        swap_j(swap_j),
        stab_before(stab_before),
        stab_after(stab_after) {}
  std::vector<int> order_before;
  int swap_i, swap_j;
  int stab_before, stab_after;
};

struct UncrossOptions {
  // Assert per-swap stab non-increase. Exact stab evaluation per swap is
  // quadratic, so it is applied only up to this size unless forced.
  bool check_stab_monotone = true;
  int stab_check_limit = 32;
};

struct UncrossStats {
  int swaps = 0;
};

// Repeated 2-opt on properly crossing edge pairs until the tour is a simple
// polygon. Each swap strictly shortens the curve (verified exactly via
// nested-radical comparison), which bounds the loop.
PolygonalCurve uncross(const std::vector<int>& order, const PointSet& ps,
                       const UncrossOptions& opt = {},
                       UncrossStats* stats = nullptr);

struct DegreeResult {
  int value = 0;
  PolygonalCurve witness;
  bool exact = false;
};

// Exact degree by enumerating all (N-1)!/2 cyclic orders; 3 <= N <= 9.
DegreeResult degree_exact(const PointSet& ps);

struct DegreeUpperConfig {
  // Stab evaluations allowed inside the 2-opt descent.
  int descent_eval_budget = 400;
};

// Upper bound on the degree: best of the spanning-tree tour route and a
// stab-minimizing 2-opt descent from hull-peeling and nearest-neighbor
// seeds. A descent move is accepted only if the polygon stays simple and
// the stab does not increase (ties must strictly shorten the curve).
DegreeResult degree_upper(const PointSet& ps, const DegreeUpperConfig& cfg = {});

// sign of (sqrt(a1) + sqrt(a2)) - (sqrt(b1) + sqrt(b2)), exact,
// for non-negative rationals.
int sqrt_sum_compare(const Rational& a1, const Rational& a2,
                     const Rational& b1, const Rational& b2);

// Deterministic seed tours.
std::vector<int> hull_peeling_order(const PointSet& ps);
std::vector<int> nearest_neighbor_order(const PointSet& ps);

}  // namespace pointsep
