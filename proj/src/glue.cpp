#include "pointsep/glue.hpp"

#include "pointsep/hull.hpp"
#include "pointsep/tree.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

namespace pointsep {

namespace {

struct PtLess {
  bool operator()(const Pt& a, const Pt& b) const { return lex_less(a, b); }
};

Pt rot90_ccw(const Pt& v) { return Pt{-v.y, v.x}; }

// Candidate bridge feet on one polygon near the closest-feature point: the
// point itself when it is interior to an edge, otherwise points slid a
// fraction delta into each incident edge.
struct Foot {
  Pt point;
  int edge;  // index of the containing edge
};

std::vector<Foot> foot_candidates(const PolygonalCurve& c, const Pt& at,
                                  const Rational& delta) {
  std::vector<Foot> out;
  const int n = c.size();
  int vertex = -1;
  for (int i = 0; i < n; ++i)
    if (c.vertices[i] == at) vertex = i;
  if (vertex < 0) {
    for (int i = 0; i < n; ++i) {
      Segment e = c.edge(i);
      if (point_on_segment(at, e)) {
        out.push_back({at, i});
        break;
      }
    }
    return out;
  }
  // Slide into both incident edges.
  int prev_edge = (vertex + n - 1) % n;
  const Pt& v = c.vertices[vertex];
  {
    const Pt& w = c.vertices[(vertex + 1) % n];
    out.push_back({Pt{v.x + delta * (w.x - v.x), v.y + delta * (w.y - v.y)},
                   vertex});
  }
  {
    const Pt& w = c.vertices[prev_edge];
    out.push_back({Pt{v.x + delta * (w.x - v.x), v.y + delta * (w.y - v.y)},
                   prev_edge});
  }
  return out;
}

// The chord must cross each boundary exactly once, properly, on the expected
// edge, touching nothing else.
bool chord_ok(const Segment& chord, const PolygonalCurve& c, int expect_edge) {
  int proper = 0;
  const int n = c.size();
  for (int i = 0; i < n; ++i) {
    Segment e = c.edge(i);
    if (segments_properly_cross(chord, e)) {
      if (i != expect_edge) return false;
      ++proper;
    } else if (segments_touch(chord, e)) {
      return false;
    }
  }
  return proper == 1;
}

Pt segment_line_intersection(const Segment& s, const Pt& p0, const Pt& dir) {
  // Intersection of segment s with the line through p0 along dir.
  Pt nrm = rot90_ccw(dir);
  Rational fa = dot(nrm, s.a - p0);
  Rational fb = dot(nrm, s.b - p0);
  Rational t = fa / (fa - fb);
  return Pt{s.a.x + t * (s.b.x - s.a.x), s.a.y + t * (s.b.y - s.a.y)};
}

Rational edge_param(const Segment& e, const Pt& p) {
  Pt d = e.b - e.a;
  return dot(p - e.a, d) / dot(d, d);
}

// Walks c forward from just after edge `eidx` all the way around back to the
// start of edge `eidx`.
void append_long_way(const PolygonalCurve& c, int eidx,
                     std::vector<Pt>& vertices, std::vector<int>& ids) {
  const int n = c.size();
  for (int t = 1; t <= n; ++t) {
    int idx = (eidx + t) % n;
    vertices.push_back(c.vertices[idx]);
    ids.push_back(c.vertex_id[idx]);
  }
}

}  // namespace

PolygonalCurve glue_pair(const PolygonalCurve& p_in, const PolygonalCurve& q_in,
                         const PointSet& ps) {
  PolygonalCurve P = make_ccw(p_in);
  PolygonalCurve Q = make_ccw(q_in);
  require_simple(P, "glue_pair (first curve)");
  require_simple(Q, "glue_pair (second curve)");

  {
    std::set<Pt, PtLess> pv(P.vertices.begin(), P.vertices.end());
    for (const Pt& v : Q.vertices)
      if (pv.count(v)) throw InputError("glue_pair: curves share a vertex");
  }
  if (!find_separating_line(P.vertices, Q.vertices))
    throw InputError("glue_pair: curves are not linearly separable");

  int stab_p = stab_segments(P.edges()).value;
  int stab_q = stab_segments(Q.edges()).value;

  ClosestFeatures cf = closest_boundary_points(P.vertices, Q.vertices);

  PolygonalCurve result;
  bool built = false;

  Rational frac(1, 4);
  for (int attempt = 0; attempt < 24 && !built; ++attempt, frac /= 2) {
    for (const Foot& fa : foot_candidates(P, cf.on_a, frac)) {
      for (const Foot& fb : foot_candidates(Q, cf.on_b, frac)) {
        Pt dir = fb.point - fa.point;
        if (dir.x == 0 && dir.y == 0) continue;
        // Extend into both interiors so the crossings are proper. The
        // extension must shrink independently of the foot offset: near a
        // sharp closest vertex a fixed ratio overshoots through the far
        // side of the wedge.
        Rational mu = frac / 4;
        for (int mi = 0; mi < 40 && !built; ++mi, mu /= 2) {
        Pt r0{fa.point.x - mu * dir.x, fa.point.y - mu * dir.y};
        Pt r1{fb.point.x + mu * dir.x, fb.point.y + mu * dir.y};
        Segment chord{r0, r1};
        if (!chord_ok(chord, P, fa.edge) || !chord_ok(chord, Q, fb.edge))
          continue;
        if (locate_in_polygon(r0, P.vertices) != PolygonLocation::Inside)
          continue;
        if (locate_in_polygon(r1, Q.vertices) != PolygonLocation::Inside)
          continue;

        // Parallel twin at offset eps along the chord normal (either side);
        // the strip between the two chord lines must contain no vertex of
        // either curve.
        for (int side = 0; side < 2 && !built; ++side) {
        Pt m = rot90_ccw(dir);
        if (side) m = Pt{-m.x, -m.y};
        Rational mm = dot(m, m);
        Rational eps(1, 8);
        for (int k = 0; k < 96 && !built; ++k, eps /= 2) {
          bool strip_clean = true;
          for (const auto& vs : {P.vertices, Q.vertices}) {
            for (const Pt& v : vs) {
              Rational t = dot(m, v - r0);
              if (t >= 0 && t <= eps * mm) {
                strip_clean = false;
                break;
              }
            }
            if (!strip_clean) break;
          }
          if (!strip_clean) continue;
          Pt s0{r0.x + eps * m.x, r0.y + eps * m.y};
          Pt s1{r1.x + eps * m.x, r1.y + eps * m.y};
          Segment twin{s0, s1};
          if (!chord_ok(twin, P, fa.edge) || !chord_ok(twin, Q, fb.edge))
            continue;
          if (locate_in_polygon(s0, P.vertices) != PolygonLocation::Inside)
            continue;
          if (locate_in_polygon(s1, Q.vertices) != PolygonLocation::Inside)
            continue;

          // Crossing points on the two edges.
          Segment ep = P.edge(fa.edge);
          Segment eq = Q.edge(fb.edge);
          Pt rp = segment_line_intersection(ep, r0, dir);
          Pt sp = segment_line_intersection(ep, s0, dir);
          Pt rq = segment_line_intersection(eq, r0, dir);
          Pt sq = segment_line_intersection(eq, s0, dir);

          // On each edge the piece between the two crossing points is the
          // deleted one; the point with larger edge parameter continues
          // forward along the polygon.
          bool r_hi_p = edge_param(ep, rp) > edge_param(ep, sp);
          bool r_hi_q = edge_param(eq, rq) > edge_param(eq, sq);

          std::vector<Pt> verts;
          std::vector<int> ids;
          const Pt& hi_p = r_hi_p ? rp : sp;
          const Pt& lo_p = r_hi_p ? sp : rp;
          verts.push_back(hi_p);
          ids.push_back(-1);
          append_long_way(P, fa.edge, verts, ids);
          verts.push_back(lo_p);
          ids.push_back(-1);
          // lo_p bridges to its partner on Q.
          bool lo_p_is_r = !r_hi_p;
          const Pt& enter_q = lo_p_is_r ? rq : sq;
          const Pt& exit_q = lo_p_is_r ? sq : rq;
          bool enter_is_hi = (lo_p_is_r ? r_hi_q : !r_hi_q);
          verts.push_back(enter_q);
          ids.push_back(-1);
          if (enter_is_hi) {
            append_long_way(Q, fb.edge, verts, ids);
          } else {
            // Reverse traversal: from the low point backwards around Q.
            const int nq = Q.size();
            for (int t = 0; t <= nq - 1; ++t) {
              int idx = (fb.edge - t + nq) % nq;
              verts.push_back(Q.vertices[idx]);
              ids.push_back(Q.vertex_id[idx]);
            }
          }
          verts.push_back(exit_q);
          ids.push_back(-1);

          PolygonalCurve out;
          out.vertices = std::move(verts);
          out.vertex_id = std::move(ids);
          if (!polygon_is_simple(out)) continue;

          // Member bookkeeping and the additive stab bound, all verified.
          std::vector<int> want = P.member_ids();
          {
            auto mq = Q.member_ids();
            want.insert(want.end(), mq.begin(), mq.end());
            std::sort(want.begin(), want.end());
          }
          if (out.member_ids() != want)
            throw VerificationError("glue_pair: members lost");
          int stab_out = stab_segments(out.edges()).value;
          if (stab_out > stab_p + stab_q + 2)
            throw VerificationError(
                "glue_pair: stab bound violated (" + std::to_string(stab_out) +
                " > " + std::to_string(stab_p + stab_q + 2) + ")");
          result = std::move(out);
          built = true;
        }
        }
        }
        if (built) break;
      }
      if (built) break;
    }
  }
  if (!built) throw VerificationError("glue_pair: bridge construction failed");
  (void)ps;
  return result;
}

PolygonalCurve glue_many(const std::vector<PolygonalCurve>& curves,
                         const PointSet& ps) {
  const int m = static_cast<int>(curves.size());
  if (m == 0) throw InputError("glue_many: no curves");
  if (m == 1) return curves[0];
  if (m == 2) return glue_pair(curves[0], curves[1], ps);

  // Interior representative per curve, nudged off member coordinates and
  // into general position.
  std::set<Pt, PtLess> member_coords;
  for (const auto& c : curves)
    for (int i = 0; i < c.size(); ++i)
      if (c.vertex_id[i] >= 0) member_coords.insert(c.vertices[i]);

  std::vector<Pt> reps;
  std::vector<Pt> apexes;
  for (int i = 0; i < m; ++i) {
    auto rep = interior_ear_point(curves[i]);
    if (!rep)
      throw VerificationError("glue_many: no interior point for curve " +
                              std::to_string(i));
    reps.push_back(rep->point);
    apexes.push_back(rep->apex);
  }
  // Nudging toward the ear apex keeps a representative strictly interior;
  // resolve collisions with member points and any collinear triple.
  auto nudge = [&](int i) {
    reps[i] = Pt{(reps[i].x + apexes[i].x) / 2, (reps[i].y + apexes[i].y) / 2};
  };
  for (int guard = 0;; ++guard) {
    if (guard == 400)
      throw VerificationError("glue_many: representatives degenerate");
    bool clash = false;
    for (int i = 0; i < m && !clash; ++i)
      if (member_coords.count(reps[i])) {
        nudge(i);
        clash = true;
      }
    if (clash) continue;
    auto gp = check_general_position(reps);
    if (gp.ok) break;
    nudge(gp.witness[2]);
  }

  TreeResult tr = low_stab_spanning_tree(PointSet(reps));
  std::vector<std::pair<int, int>> edges = tr.tree.edges;
  for (auto& e : edges)
    if (e.first > e.second) std::swap(e.first, e.second);
  std::sort(edges.begin(), edges.end());

  std::vector<int> group(m);
  std::vector<PolygonalCurve> current(curves);
  for (int i = 0; i < m; ++i) group[i] = i;
  auto find = [&](int x) {
    while (group[x] != x) x = group[x] = group[group[x]];
    return x;
  };
  PolygonalCurve* last = nullptr;
  for (auto [u, v] : edges) {
    int gu = find(u), gv = find(v);
    if (gu == gv) continue;
    try {
      current[gu] = glue_pair(current[gu], current[gv], ps);
    } catch (const InputError& e) {
      throw InputError("glue_many: curves " + std::to_string(u) + " and " +
                       std::to_string(v) + ": " + e.what());
    }
    group[gv] = gu;
    last = &current[gu];
  }
  if (!last) throw VerificationError("glue_many: nothing merged");
  return *last;
}

}  // namespace pointsep
