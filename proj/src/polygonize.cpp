#include "pointsep/polygonize.hpp"

#include "pointsep/hull.hpp"
#include "pointsep/tree.hpp"

#include <algorithm>
#include <numeric>

namespace pointsep {

int sqrt_sum_compare(const Rational& a1, const Rational& a2,
                     const Rational& b1, const Rational& b2) {
  // Compare u = sqrt(a1)+sqrt(a2) against v = sqrt(b1)+sqrt(b2) by double
  // squaring; all intermediate quantities stay rational.
  Rational d = (a1 + a2) - (b1 + b2);     // u^2 - v^2 = d + 2(sqrt(pa)-sqrt(pb))
  Rational pa = a1 * a2, pb = b1 * b2;
  int sd = sgn(d);
  int sp = cmp(pa, pb);
  if (sd >= 0 && sp >= 0) return (sd == 0 && sp == 0) ? 0 : 1;
  if (sd <= 0 && sp <= 0) return (sd == 0 && sp == 0) ? 0 : -1;
  // Mixed signs: compare d^2 against 4(pa + pb - 2 sqrt(pa pb)).
  Rational l = d * d - 4 * (pa + pb);
  int result_if_big;  // sign when |d| wins
  result_if_big = sd > 0 ? 1 : -1;
  if (sgn(l) >= 0) {
    if (sgn(l) == 0 && sgn(pa * pb) == 0) return 0;  // exact tie
    return result_if_big;
  }
  Rational l2 = l * l;
  Rational rhs = 64 * pa * pb;
  int c = cmp(l2, rhs);
  if (c == 0) return 0;
  return c < 0 ? result_if_big : -result_if_big;
}

namespace {

bool find_crossing(const std::vector<int>& order, const PointSet& ps, int& oi,
                   int& oj) {
  const int n = static_cast<int>(order.size());
  for (int i = 0; i < n; ++i) {
    Segment ei{ps[order[i]], ps[order[(i + 1) % n]]};
    for (int j = i + 1; j < n; ++j) {
      if (j == i + 1 || (i == 0 && j == n - 1)) continue;
      Segment ej{ps[order[j]], ps[order[(j + 1) % n]]};
      if (segments_properly_cross(ei, ej)) {
        oi = i;
        oj = j;
        return true;
      }
    }
  }
  return false;
}

}  // namespace

PolygonalCurve uncross(const std::vector<int>& order_in, const PointSet& ps,
                       const UncrossOptions& opt, UncrossStats* stats) {
  const int n = ps.size();
  if (n < 3) throw InputError("uncross: needs N >= 3");
  std::vector<int> order = order_in;
  {
    std::vector<int> check = order;
    std::sort(check.begin(), check.end());
    for (int i = 0; i < n; ++i)
      if (check[i] != i) throw InputError("uncross: order is not a permutation");
  }

  const bool watch_stab = opt.check_stab_monotone && n <= opt.stab_check_limit;
  int cur_stab = -1;
  auto tour_stab = [&](const std::vector<int>& ord) {
    std::vector<Segment> segs;
    segs.reserve(n);
    for (int i = 0; i < n; ++i)
      segs.push_back({ps[ord[i]], ps[ord[(i + 1) % n]]});
    return stab_segments(segs).value;
  };
  if (watch_stab) cur_stab = tour_stab(order);

  long guard = 0;
  int oi, oj;
  while (find_crossing(order, ps, oi, oj)) {
    if (++guard > 2000000)
      throw VerificationError("uncross: swap budget exceeded");
    const Pt& a = ps[order[oi]];
    const Pt& b = ps[order[oi + 1]];
    const Pt& c = ps[order[oj]];
    const Pt& d = ps[order[(oj + 1) % n]];
    // New edges (a,c) and (b,d) must strictly shorten the curve.
    if (sqrt_sum_compare(sq_dist(a, c), sq_dist(b, d), sq_dist(a, b),
                         sq_dist(c, d)) >= 0)
      throw VerificationError("uncross: swap did not shorten the curve");
    std::vector<int> before;
    if (watch_stab) before = order;
    std::reverse(order.begin() + oi + 1, order.begin() + oj + 1);
    if (stats) ++stats->swaps;
    if (watch_stab) {
      int after = tour_stab(order);
      if (after > cur_stab)
        throw StabMonotonicityError(before, oi, oj, cur_stab, after);
      cur_stab = after;
    }
  }

  PolygonalCurve out = curve_from_order(ps, order);
  require_simple(out, "uncross result");
  return out;
}

DegreeResult degree_exact(const PointSet& ps) {
  const int n = ps.size();
  if (n < 3 || n > 9)
    throw InputError(
        "degree_exact: supported for 3 <= N <= 9 (use degree_upper)");

  DegreeResult res;
  res.exact = true;
  res.value = -1;

  std::vector<int> perm(n - 1);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<int> order(n);
  do {
    if (n >= 3 && perm.front() > perm.back()) continue;  // skip reversals
    order[0] = 0;
    std::copy(perm.begin(), perm.end(), order.begin() + 1);
    PolygonalCurve c = curve_from_order(ps, order);
    if (!polygon_is_simple(c)) continue;
    int v = stab_segments(c.edges()).value;
    if (res.value < 0 || v < res.value) {
      res.value = v;
      res.witness = c;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  if (res.value < 0)
    throw VerificationError("degree_exact: no simple polygon found");
  return res;
}

std::vector<int> hull_peeling_order(const PointSet& ps) {
  const int n = ps.size();
  std::vector<int> remaining(n);
  std::iota(remaining.begin(), remaining.end(), 0);
  std::vector<int> out;
  while (!remaining.empty()) {
    if (remaining.size() <= 2) {
      out.insert(out.end(), remaining.begin(), remaining.end());
      break;
    }
    std::vector<Pt> pts;
    pts.reserve(remaining.size());
    for (int id : remaining) pts.push_back(ps[id]);
    std::vector<Pt> hull = convex_hull(pts);
    std::vector<int> layer;
    for (const Pt& hp : hull)
      for (int id : remaining)
        if (ps[id] == hp) {
          layer.push_back(id);
          break;
        }
    // Start each ring at its smallest id, keep hull (ccw) order.
    auto mn = std::min_element(layer.begin(), layer.end());
    std::rotate(layer.begin(), mn, layer.end());
    out.insert(out.end(), layer.begin(), layer.end());
    std::vector<int> next;
    for (int id : remaining)
      if (std::find(layer.begin(), layer.end(), id) == layer.end())
        next.push_back(id);
    remaining = std::move(next);
  }
  return out;
}

std::vector<int> nearest_neighbor_order(const PointSet& ps) {
  const int n = ps.size();
  int start = 0;
  for (int i = 1; i < n; ++i) {
    int cy = cmp(ps[i].y, ps[start].y);
    if (cy < 0 || (cy == 0 && cmp(ps[i].x, ps[start].x) < 0)) start = i;
  }
  std::vector<char> used(n, 0);
  std::vector<int> out{start};
  used[start] = 1;
  while (static_cast<int>(out.size()) < n) {
    int cur = out.back();
    int best = -1;
    Rational best_d;
    for (int i = 0; i < n; ++i) {
      if (used[i]) continue;
      Rational d = sq_dist(ps[cur], ps[i]);
      if (best < 0 || d < best_d) {
        best = i;
        best_d = d;
      }
    }
    used[best] = 1;
    out.push_back(best);
  }
  return out;
}

namespace {

// First-improvement 2-opt descent on the stabbing number. A move must keep
// the polygon simple; equal-stab moves must strictly shorten the curve.
// Under general position, simplicity after a 2-opt only requires that the
// two fresh edges cross nothing (all other edge pairs are unchanged).
void stab_descent(std::vector<int>& order, int& cur_stab, const PointSet& ps,
                  int& eval_budget) {
  const int n = static_cast<int>(order.size());

  bool improved = true;
  while (improved && eval_budget > 0) {
    improved = false;
    for (int i = 0; i < n - 1 && !improved; ++i) {
      for (int j = i + 2; j < n && !improved; ++j) {
        if (i == 0 && j == n - 1) continue;  // cyclically adjacent edges
        const Pt& a = ps[order[i]];
        const Pt& b = ps[order[i + 1]];
        const Pt& c = ps[order[j]];
        const Pt& d = ps[order[(j + 1) % n]];
        int len_cmp = sqrt_sum_compare(sq_dist(a, c), sq_dist(b, d),
                                       sq_dist(a, b), sq_dist(c, d));

        std::vector<int> cand = order;
        std::reverse(cand.begin() + i + 1, cand.begin() + j + 1);
        Segment f1{a, c};  // edge at position i in cand
        Segment f2{b, d};  // edge at position j in cand
        bool ok = !segments_properly_cross(f1, f2);
        for (int t = 0; t < n && ok; ++t) {
          if (t == i || t == j) continue;
          Segment et{ps[cand[t]], ps[cand[(t + 1) % n]]};
          bool adj1 = (t + 1) % n == i || t == i + 1;
          bool adj2 = (t + 1) % n == j || t == (j + 1) % n;
          if (!adj1 && segments_properly_cross(et, f1)) ok = false;
          if (ok && !adj2 && segments_properly_cross(et, f2)) ok = false;
        }
        if (!ok) continue;

        if (eval_budget-- <= 0) return;
        std::vector<Segment> segs;
        segs.reserve(n);
        for (int t = 0; t < n; ++t)
          segs.push_back({ps[cand[t]], ps[cand[(t + 1) % n]]});
        int v = stab_segments(segs).value;
        if (v < cur_stab || (v == cur_stab && len_cmp < 0)) {
          order = std::move(cand);
          cur_stab = v;
          improved = true;
        }
      }
    }
  }
}

}  // namespace

DegreeResult degree_upper(const PointSet& ps, const DegreeUpperConfig& cfg) {
  const int n = ps.size();
  if (n < 3) throw InputError("degree_upper: needs N >= 3");

  UncrossOptions uopt;
  uopt.check_stab_monotone = false;  // measured only at the end here

  DegreeResult best;
  best.value = -1;
  auto consider = [&](const PolygonalCurve& c) {
    int v = stab_segments(c.edges()).value;
    if (best.value < 0 || v < best.value) {
      best.value = v;
      best.witness = c;
    }
  };

  // Route (a): spanning tree, preorder tour, uncross.
  {
    TreeResult tr = low_stab_spanning_tree(ps);
    std::vector<int> tour = preorder_tour(tr.tree, ps, 0);
    consider(uncross(tour, ps, uopt));
  }

  // Route (b): stab-minimizing 2-opt descent from seeded tours.
  int budget = cfg.descent_eval_budget;
  for (auto seed_fn : {hull_peeling_order, nearest_neighbor_order}) {
    std::vector<int> seed = seed_fn(ps);
    PolygonalCurve start = uncross(seed, ps, uopt);
    std::vector<int> order;
    for (int id : start.vertex_id) order.push_back(id);
    int cur = stab_segments(start.edges()).value;
    stab_descent(order, cur, ps, budget);
    consider(curve_from_order(ps, order));
  }

  best.exact = false;
  return best;
}

}  // namespace pointsep
