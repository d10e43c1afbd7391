#include "pointsep/curve.hpp"

#include "pointsep/hull.hpp"

#include <algorithm>
#include <set>

namespace pointsep {

std::vector<Segment> PolygonalCurve::edges() const {
  std::vector<Segment> out;
  out.reserve(vertices.size());
  for (int i = 0; i < size(); ++i) out.push_back(edge(i));
  return out;
}

std::vector<int> PolygonalCurve::member_ids() const {
  std::vector<int> out;
  for (int id : vertex_id)
    if (id >= 0) out.push_back(id);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool polygon_is_simple(const PolygonalCurve& c) {
  const int n = c.size();
  if (n < 3) return false;
  for (int i = 0; i < n; ++i)
    if (c.vertices[i] == c.vertices[(i + 1) % n]) return false;

  for (int i = 0; i < n; ++i) {
    Segment ei = c.edge(i);
    for (int j = i + 1; j < n; ++j) {
      bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      Segment ej = c.edge(j);
      if (adjacent) {
        // Shared vertex v; the other two endpoints must not fold back.
        const Pt& u = j == i + 1 ? ei.a : ej.a;
        const Pt& v = j == i + 1 ? ei.b : ej.b;  // == shared
        const Pt& w = j == i + 1 ? ej.b : ei.b;
        if (orientation_sign(u, v, w) == 0 && sgn(dot(u - v, w - v)) > 0)
          return false;
      } else {
        if (segments_touch(ei, ej)) return false;
      }
    }
  }
  return true;
}

void require_simple(const PolygonalCurve& c, const std::string& what) {
  if (!polygon_is_simple(c))
    throw InputError(what + ": polygon is not simple");
}

Rational polygon_double_area(const PolygonalCurve& c) {
  Rational s(0);
  const int n = c.size();
  for (int i = 0; i < n; ++i) {
    const Pt& a = c.vertices[i];
    const Pt& b = c.vertices[(i + 1) % n];
    s += a.x * b.y - b.x * a.y;
  }
  return s;
}

PolygonalCurve make_ccw(PolygonalCurve c) {
  if (sgn(polygon_double_area(c)) < 0) {
    std::reverse(c.vertices.begin(), c.vertices.end());
    std::reverse(c.vertex_id.begin(), c.vertex_id.end());
  }
  return c;
}

StabReport stab_polygon(const PolygonalCurve& c) {
  require_simple(c, "stab_polygon");
  return stab_segments(c.edges());
}

StabReport stab_union(const CurveUnion& u) {
  if (u.segments.empty()) throw InputError("stab_union: empty union");
  return stab_segments(u.segments);
}

namespace {

bool point_in_closed_triangle(const Pt& p, const Pt& a, const Pt& b,
                              const Pt& c) {
  int s1 = orientation_sign(a, b, p);
  int s2 = orientation_sign(b, c, p);
  int s3 = orientation_sign(c, a, p);
  return (s1 >= 0 && s2 >= 0 && s3 >= 0) || (s1 <= 0 && s2 <= 0 && s3 <= 0);
}

}  // namespace

std::optional<EarPoint> interior_ear_point(const PolygonalCurve& curve) {
  PolygonalCurve c = make_ccw(curve);
  const int n = c.size();
  for (int i = 0; i < n; ++i) {
    const Pt& prev = c.vertices[(i + n - 1) % n];
    const Pt& v = c.vertices[i];
    const Pt& next = c.vertices[(i + 1) % n];
    if (orientation_sign(prev, v, next) <= 0) continue;  // need convex corner
    bool ear = true;
    for (int j = 0; j < n && ear; ++j) {
      if (j == i || j == (i + n - 1) % n || j == (i + 1) % n) continue;
      if (point_in_closed_triangle(c.vertices[j], prev, v, next)) ear = false;
    }
    if (!ear) continue;
    Pt centroid{(prev.x + v.x + next.x) / 3, (prev.y + v.y + next.y) / 3};
    if (locate_in_polygon(centroid, c.vertices) == PolygonLocation::Inside)
      return EarPoint{centroid, v};
  }
  return std::nullopt;
}

std::optional<Pt> interior_point(const PolygonalCurve& curve) {
  auto ep = interior_ear_point(curve);
  if (!ep) return std::nullopt;
  return ep->point;
}

PolygonalCurve convex_cycle(const PointSet& ps, const std::vector<int>& ids) {
  std::vector<Pt> pts;
  pts.reserve(ids.size());
  for (int id : ids) pts.push_back(ps[id]);
  if (!points_in_convex_position(pts))
    throw InputError("convex_cycle: ids not in convex position");
  std::vector<Pt> hull = convex_hull(pts);
  PolygonalCurve c;
  for (const Pt& p : hull) {
    int found = -1;
    for (size_t t = 0; t < ids.size(); ++t)
      if (ps[ids[t]] == p) {
        found = ids[t];
        break;
      }
    c.vertices.push_back(p);
    c.vertex_id.push_back(found);
  }
  return c;
}

PolygonalCurve curve_from_order(const PointSet& ps,
                                const std::vector<int>& order) {
  if (static_cast<int>(order.size()) != ps.size())
    throw InputError("curve_from_order: order size mismatch");
  std::set<int> uniq(order.begin(), order.end());
  if (static_cast<int>(uniq.size()) != ps.size() || *uniq.begin() != 0 ||
      *uniq.rbegin() != ps.size() - 1)
    throw InputError("curve_from_order: order is not a permutation");
  PolygonalCurve c;
  for (int id : order) {
    c.vertices.push_back(ps[id]);
    c.vertex_id.push_back(id);
  }
  return c;
}

}  // namespace pointsep
