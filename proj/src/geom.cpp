#include "pointsep/geom.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace pointsep {

int orientation_sign(const Pt& p, const Pt& q, const Pt& r) {
  Rational det = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
  return sgn(det);
}

bool segments_properly_cross(const Segment& s1, const Segment& s2) {
  int d1 = orientation_sign(s1.a, s1.b, s2.a);
  int d2 = orientation_sign(s1.a, s1.b, s2.b);
  int d3 = orientation_sign(s2.a, s2.b, s1.a);
  int d4 = orientation_sign(s2.a, s2.b, s1.b);
  return d1 * d2 < 0 && d3 * d4 < 0;
}

bool point_on_segment(const Pt& p, const Segment& s) {
  if (orientation_sign(s.a, s.b, p) != 0) return false;
  int cx = cmp(s.a.x, s.b.x);
  if (cx != 0) {
    const Pt& lo = cx < 0 ? s.a : s.b;
    const Pt& hi = cx < 0 ? s.b : s.a;
    return cmp(p.x, lo.x) >= 0 && cmp(p.x, hi.x) <= 0;
  }
  int cy = cmp(s.a.y, s.b.y);
  const Pt& lo = cy < 0 ? s.a : s.b;
  const Pt& hi = cy < 0 ? s.b : s.a;
  return cmp(p.y, lo.y) >= 0 && cmp(p.y, hi.y) <= 0;
}

bool segments_touch(const Segment& s1, const Segment& s2) {
  if (segments_properly_cross(s1, s2)) return true;
  return point_on_segment(s2.a, s1) || point_on_segment(s2.b, s1) ||
         point_on_segment(s1.a, s2) || point_on_segment(s1.b, s2);
}

PointSet::PointSet(std::vector<Pt> pts) : pts_(std::move(pts)) {
  std::vector<int> order(pts_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return lex_less(pts_[a], pts_[b]); });
  for (size_t i = 1; i < order.size(); ++i) {
    if (pts_[order[i - 1]] == pts_[order[i]])
      throw InputError("duplicate point at ids " + std::to_string(order[i - 1]) +
                       " and " + std::to_string(order[i]));
  }
}

PointSet PointSet::subset(const std::vector<int>& ids) const {
  std::vector<Pt> out;
  out.reserve(ids.size());
  for (int id : ids) out.push_back(pts_[id]);
  return PointSet(std::move(out));
}

IDir idir(const Pt& from, const Pt& to) {
  Rational dx = to.x - from.x;
  Rational dy = to.y - from.y;
  // Scale by den(dx)*den(dy) > 0; angle is preserved.
  IDir d;
  d.x = dx.get_num() * dy.get_den();
  d.y = dy.get_num() * dx.get_den();
  return d;
}

int cross_sign(const IDir& a, const IDir& b) {
  BigInt det = a.x * b.y - a.y * b.x;
  return sgn(det);
}

bool upper_half(const IDir& d) {
  int sy = sgn(d.y);
  if (sy != 0) return sy > 0;
  return sgn(d.x) > 0;
}

bool angle_less(const IDir& a, const IDir& b) {
  bool ua = upper_half(a), ub = upper_half(b);
  if (ua != ub) return ua;
  return cross_sign(a, b) > 0;
}

GeneralPositionCheck check_general_position(const std::vector<Pt>& pts) {
  GeneralPositionCheck out;
  const int n = static_cast<int>(pts.size());

  // Duplicates first, via a sorted pass.
  {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return lex_less(pts[a], pts[b]); });
    for (int i = 1; i < n; ++i) {
      if (pts[order[i - 1]] == pts[order[i]]) {
        int a = std::min(order[i - 1], order[i]);
        int b = std::max(order[i - 1], order[i]);
        out.ok = false;
        out.witness = {a, b, b};
        return out;
      }
    }
  }

  // Collinear triples: around each anchor, two parallel directions (mod pi)
  // witness a collinear triple. Any triple (a < b < c) is caught at anchor a.
  for (int i = 0; i < n - 2; ++i) {
    struct Entry {
      IDir d;
      int j;
    };
    std::vector<Entry> dirs;
    dirs.reserve(n - i - 1);
    for (int j = i + 1; j < n; ++j) {
      IDir d = idir(pts[i], pts[j]);
      if (!upper_half(d)) {
        d.x = -d.x;
        d.y = -d.y;
      }
      dirs.push_back({std::move(d), j});
    }
    std::sort(dirs.begin(), dirs.end(), [](const Entry& a, const Entry& b) {
      int c = cross_sign(a.d, b.d);
      if (c != 0) return c > 0;
      return a.j < b.j;
    });
    for (size_t t = 1; t < dirs.size(); ++t) {
      if (cross_sign(dirs[t - 1].d, dirs[t].d) == 0) {
        out.ok = false;
        out.witness = {i, dirs[t - 1].j, dirs[t].j};
        return out;
      }
    }
  }
  return out;
}

GeneralPositionCheck check_general_position(const PointSet& ps) {
  return check_general_position(ps.points());
}

Pt generic_direction(const std::vector<Pt>& pts) {
  // u = (1, tau): projections x + tau*y collide only at finitely many tau.
  // Pick tau below every positive collision value.
  Rational best(0);
  bool have = false;
  const int n = static_cast<int>(pts.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Rational dy = pts[i].y - pts[j].y;
      if (dy == 0) continue;  // only tau with dy != 0 can collide, except tau=0
      Rational bad = (pts[j].x - pts[i].x) / dy;
      if (bad > 0 && (!have || bad < best)) {
        best = bad;
        have = true;
      }
    }
  }
  Rational tau = have ? Rational(best / 2) : Rational(1);
  if (tau == 0) tau = 1;
  // tau must stay nonzero: equal-x pairs collide exactly at tau = 0.
  return Pt{Rational(1), tau};
}

}  // namespace pointsep
