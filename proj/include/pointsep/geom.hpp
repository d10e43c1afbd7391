#pragma once

#include "pointsep/rational.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace pointsep {

// Raised when an exact postcondition check fails; never swallowed.
class VerificationError : public std::runtime_error {
 public:
  explicit VerificationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised on violated preconditions / malformed input.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

struct Pt {
  Rational x, y;

  bool operator==(const Pt& o) const { return x == o.x && y == o.y; }
  bool operator!=(const Pt& o) const { return !(*this == o); }
};

inline Pt operator-(const Pt& a, const Pt& b) { return {a.x - b.x, a.y - b.y}; }
inline Pt operator+(const Pt& a, const Pt& b) { return {a.x + b.x, a.y + b.y}; }

// Strict total order on coordinates, used for canonical maps.
inline bool lex_less(const Pt& a, const Pt& b) {
  int cx = cmp(a.x, b.x);
  if (cx != 0) return cx < 0;
  return cmp(a.y, b.y) < 0;
}

inline Rational dot(const Pt& a, const Pt& b) { return a.x * b.x + a.y * b.y; }
inline Rational cross(const Pt& a, const Pt& b) { return a.x * b.y - a.y * b.x; }
inline Rational sq_dist(const Pt& a, const Pt& b) {
  Rational dx = a.x - b.x, dy = a.y - b.y;
  return dx * dx + dy * dy;
}

// Exact sign of (q - p) x (r - p): +1 ccw, -1 cw, 0 collinear.
int orientation_sign(const Pt& p, const Pt& q, const Pt& r);

enum class Orient { Cw = -1, Collinear = 0, Ccw = 1 };
inline Orient orientation(const Pt& p, const Pt& q, const Pt& r) {
  return static_cast<Orient>(orientation_sign(p, q, r));
}

struct Segment {
  Pt a, b;
};

// True iff the open segments cross in exactly one interior point; any
// endpoint contact or collinear overlap is not a proper crossing.
bool segments_properly_cross(const Segment& s1, const Segment& s2);

// True iff p lies on the closed segment s.
bool point_on_segment(const Pt& p, const Segment& s);

// True iff the segments share at least one point (crossing, touch or
// collinear overlap).
bool segments_touch(const Segment& s1, const Segment& s2);

// Finite set of exact points; ids are indices. Duplicates are rejected here;
// general position is the separate check below.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::vector<Pt> pts);

  int size() const { return static_cast<int>(pts_.size()); }
  const Pt& operator[](int i) const { return pts_[i]; }
  const std::vector<Pt>& points() const { return pts_; }

  PointSet subset(const std::vector<int>& ids) const;

 private:
  std::vector<Pt> pts_;
};

struct GeneralPositionCheck {
  bool ok = true;
  // A collinear triple (i < j < k), or (i, j, j) for a duplicate pair.
  std::array<int, 3> witness{-1, -1, -1};
};

GeneralPositionCheck check_general_position(const std::vector<Pt>& pts);
GeneralPositionCheck check_general_position(const PointSet& ps);

// Integer direction vector, positively scaled from an exact rational
// difference; cheap to compare in the rotational sweeps.
struct IDir {
  BigInt x, y;
};

IDir idir(const Pt& from, const Pt& to);
int cross_sign(const IDir& a, const IDir& b);

// True for directions with angle in [0, pi): y > 0, or y == 0 and x > 0.
bool upper_half(const IDir& d);

// Strict full-circle comparator: angle(a) < angle(b), angles in [0, 2*pi)
// measured from the +x axis.
bool angle_less(const IDir& a, const IDir& b);

// A direction u (as a Pt vector) whose projections u . p are pairwise
// distinct over pts. Deterministic.
Pt generic_direction(const std::vector<Pt>& pts);

}  // namespace pointsep
