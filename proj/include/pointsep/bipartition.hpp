#pragma once

#include "pointsep/bits.hpp"
#include "pointsep/geom.hpp"

#include <optional>
#include <vector>

namespace pointsep {

// Exact rational line {ax + by = c} with (a, b) != (0, 0).
// The positive side is {ax + by > c}.
struct ConcreteLine {
  Rational a, b, c;

  int side(const Pt& p) const {
    Rational v = a * p.x + b * p.y - c;
    return sgn(v);
  }
};

// A linearly realizable two-coloring of a point set. The realizing line is
// kept symbolic (anchored perturbed pair-line) and materialized lazily by
// realize_line; side queries answer from the mask alone.
struct Bipartition {
  enum class Kind { AllPositive, AllNegative, Anchored, Explicit };

  Kind kind = Kind::AllPositive;
  Bits positive;  // bit i set <=> point i on the positive side

  // Anchored: the line through points (ai, aj), rotated/translated so that
  // ai lands on side si and aj on side sj (true = positive).
  int ai = -1, aj = -1;
  bool si = false, sj = false;

  // Explicit: a concrete certified line.
  std::optional<ConcreteLine> line;

  int n() const { return positive.universe(); }
  bool trivial() const {
    return kind == Kind::AllPositive || kind == Kind::AllNegative;
  }
};

// Every linearly realizable ordered bipartition of ps, deduplicated, built
// from the two trivial colorings plus all anchored pair-lines in their four
// side-assignment combinations. Requires general position; a collinear
// triple is reported via InputError.
std::vector<Bipartition> enumerate_bipartitions(const PointSet& ps);

// Materializes an exact line realizing b: every positive-side point strictly
// positive, every other point strictly negative. The construction offsets the
// anchor line by half of the minimum clearance among non-anchor points.
ConcreteLine realize_line(const Bipartition& b, const PointSet& ps);

// Certifies an arbitrary side mask: returns a Bipartition carrying a concrete
// separating line, or nullopt when the sides are not linearly separable.
// Uses a hull-disjointness route, so it is an independent check of the
// enumerated family.
std::optional<Bipartition> bipartition_from_sides(const PointSet& ps,
                                                  const Bits& positive);

}  // namespace pointsep
