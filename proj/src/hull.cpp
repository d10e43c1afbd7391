#include "pointsep/hull.hpp"

#include <algorithm>

namespace pointsep {

std::vector<Pt> convex_hull(std::vector<Pt> pts) {
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const int n = static_cast<int>(pts.size());
  if (n <= 2) return pts;

  std::vector<Pt> h(2 * n);
  int k = 0;
  for (int i = 0; i < n; ++i) {
    while (k >= 2 && orientation_sign(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (int i = n - 2, lower = k + 1; i >= 0; --i) {
    while (k >= lower && orientation_sign(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

bool points_in_convex_position(const std::vector<Pt>& pts) {
  if (pts.size() <= 2) return true;
  return convex_hull(pts).size() == pts.size();
}

namespace {

Pt closest_on_segment(const Pt& p, const Segment& s) {
  Pt d = s.b - s.a;
  Rational len2 = dot(d, d);
  if (len2 == 0) return s.a;
  Rational t = dot(p - s.a, d) / len2;
  if (t < 0) t = 0;
  if (t > 1) t = 1;
  return Pt{s.a.x + t * d.x, s.a.y + t * d.y};
}

std::vector<Segment> boundary_edges(const std::vector<Pt>& pts) {
  std::vector<Segment> out;
  if (pts.size() == 1) {
    out.push_back({pts[0], pts[0]});
  } else if (pts.size() == 2) {
    out.push_back({pts[0], pts[1]});
  } else {
    for (size_t i = 0; i < pts.size(); ++i)
      out.push_back({pts[i], pts[(i + 1) % pts.size()]});
  }
  return out;
}

}  // namespace

ClosestFeatures closest_boundary_points(const std::vector<Pt>& a,
                                        const std::vector<Pt>& b) {
  auto ea = boundary_edges(a);
  auto eb = boundary_edges(b);
  ClosestFeatures best;
  bool have = false;
  auto consider = [&](const Pt& pa, const Pt& pb) {
    Rational d = sq_dist(pa, pb);
    if (!have || d < best.sq_dist) {
      best = {pa, pb, d};
      have = true;
    }
  };
  for (const auto& sa : ea) {
    for (const auto& sb : eb) {
      consider(sa.a, closest_on_segment(sa.a, sb));
      consider(sa.b, closest_on_segment(sa.b, sb));
      consider(closest_on_segment(sb.a, sa), sb.a);
      consider(closest_on_segment(sb.b, sa), sb.b);
    }
  }
  return best;
}

PolygonLocation locate_in_polygon(const Pt& p, const std::vector<Pt>& poly) {
  const size_t n = poly.size();
  for (size_t i = 0; i < n; ++i) {
    Segment e{poly[i], poly[(i + 1) % n]};
    if (point_on_segment(p, e)) return PolygonLocation::Boundary;
  }
  bool in = false;
  for (size_t i = 0; i < n; ++i) {
    const Pt& a = poly[i];
    const Pt& b = poly[(i + 1) % n];
    bool ax = cmp(a.x, p.x) > 0;
    bool bx = cmp(b.x, p.x) > 0;
    if (ax == bx) continue;
    // y of the edge at x = p.x, exact
    Rational y_at = a.y + (b.y - a.y) * (p.x - a.x) / (b.x - a.x);
    if (y_at > p.y) in = !in;
  }
  return in ? PolygonLocation::Inside : PolygonLocation::Outside;
}

std::optional<SeparatingLine> find_separating_line(const std::vector<Pt>& a,
                                                   const std::vector<Pt>& b) {
  if (a.empty() || b.empty()) return std::nullopt;
  std::vector<Pt> ha = convex_hull(a);
  std::vector<Pt> hb = convex_hull(b);

  auto edges_a = boundary_edges(ha);
  auto edges_b = boundary_edges(hb);
  for (const auto& sa : edges_a)
    for (const auto& sb : edges_b)
      if (segments_touch(sa, sb)) return std::nullopt;
  if (ha.size() >= 3) {
    for (const Pt& p : hb)
      if (locate_in_polygon(p, ha) != PolygonLocation::Outside) return std::nullopt;
  }
  if (hb.size() >= 3) {
    for (const Pt& p : ha)
      if (locate_in_polygon(p, hb) != PolygonLocation::Outside) return std::nullopt;
  }

  // Disjoint hulls: the perpendicular bisector of the closest-feature
  // segment strictly separates them.
  ClosestFeatures cf = closest_boundary_points(ha, hb);
  Pt n = cf.on_a - cf.on_b;  // points from B toward A
  Rational c = (dot(n, cf.on_a) + dot(n, cf.on_b)) / 2;
  return SeparatingLine{n.x, n.y, c};
}

}  // namespace pointsep
