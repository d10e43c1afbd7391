#pragma once

#include "pointsep/bipartition.hpp"
#include "pointsep/curve.hpp"
#include "pointsep/geom.hpp"
#include "pointsep/hull.hpp"
#include "pointsep/rng.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

namespace pointsep::testing {

inline Bits mask_of(const std::vector<int>& ids, int n) {
  Bits b(n);
  for (int id : ids) b.set(id);
  return b;
}

inline PointSet make_points(std::initializer_list<std::pair<long, long>> xs) {
  std::vector<Pt> pts;
  for (auto [x, y] : xs) pts.push_back({Rational(x), Rational(y)});
  return PointSet(std::move(pts));
}

// Independent oracle: maximum subset in convex position by full subset
// enumeration (N <= ~16).
inline int exhaustive_convex_oracle(const PointSet& ps) {
  const int n = ps.size();
  int best = std::min(n, 2);
  for (uint32_t mask = 1; mask < (uint32_t(1) << n); ++mask) {
    int pc = __builtin_popcount(mask);
    if (pc <= best || pc < 3) continue;
    std::vector<Pt> pts;
    for (int i = 0; i < n; ++i)
      if (mask & (uint32_t(1) << i)) pts.push_back(ps[i]);
    if (points_in_convex_position(pts)) best = pc;
  }
  return best;
}

// Independent oracle for stabbing numbers: enumerate all realizable
// bipartitions of the endpoint set directly and count crossings per mask.
// Endpoints must be in general position.
inline int naive_stab(const std::vector<Segment>& segs) {
  std::vector<Pt> positions;
  auto pos_of = [&](const Pt& p) {
    for (size_t i = 0; i < positions.size(); ++i)
      if (positions[i] == p) return static_cast<int>(i);
    positions.push_back(p);
    return static_cast<int>(positions.size() - 1);
  };
  std::vector<std::pair<int, int>> ends;
  for (const auto& s : segs) ends.push_back({pos_of(s.a), pos_of(s.b)});
  PointSet ps(positions);
  int best = 0;
  for (const auto& b : enumerate_bipartitions(ps)) {
    int c = 0;
    for (auto [u, v] : ends)
      if (b.positive.get(u) != b.positive.get(v)) ++c;
    best = std::max(best, c);
  }
  return best;
}

// Sampling soundness: no random generic line may cross more segments than
// the reported stab. Returns the sampled maximum.
inline int sampled_max_crossings(const std::vector<Segment>& segs, int samples,
                                 uint64_t seed) {
  Rng rng(seed);
  // Content box for offsets.
  Rational x0 = segs[0].a.x, x1 = x0, y0 = segs[0].a.y, y1 = y0;
  for (const auto& s : segs) {
    for (const Pt* p : {&s.a, &s.b}) {
      if (p->x < x0) x0 = p->x;
      if (p->x > x1) x1 = p->x;
      if (p->y < y0) y0 = p->y;
      if (p->y > y1) y1 = p->y;
    }
  }
  int best = 0;
  for (int it = 0; it < samples; ++it) {
    long a = static_cast<long>(rng.bits(16)) - 32768;
    long b = static_cast<long>(rng.bits(16)) - 32768;
    if (a == 0 && b == 0) continue;
    // c between the extreme values of a*x + b*y over the box corners
    Rational lo, hi;
    bool first = true;
    for (const Rational* xx : {&x0, &x1}) {
      for (const Rational* yy : {&y0, &y1}) {
        Rational v = a * *xx + b * *yy;
        if (first || v < lo) lo = v;
        if (first || v > hi) hi = v;
        first = false;
      }
    }
    Rational c = lo + (hi - lo) * Rational(static_cast<long>(rng.bits(20)),
                                           1 << 20);
    ConcreteLine ln{Rational(a), Rational(b), c};
    int cnt = 0;
    bool generic = true;
    for (const auto& s : segs) {
      int sa = ln.side(s.a), sb = ln.side(s.b);
      if (sa == 0 || sb == 0) {
        generic = false;
        break;
      }
      if (sa != sb) ++cnt;
    }
    if (generic) best = std::max(best, cnt);
  }
  return best;
}

// Full enumeration cutting-number oracle (no pruning): all K-subsets of the
// deduplicated unordered bipartition masks.
inline int no_prune_cut_oracle(const PointSet& ps, int k) {
  const int n = ps.size();
  std::vector<Bits> lines;
  {
    std::set<std::vector<uint64_t>> seen;
    for (const auto& b : enumerate_bipartitions(ps)) {
      if (b.trivial()) continue;
      Bits canon = b.positive.get(0) ? b.positive.complement() : b.positive;
      if (seen.insert(canon.words()).second) lines.push_back(canon);
    }
  }
  const int L = static_cast<int>(lines.size());
  int keff = std::min(k, L);
  int best = n;
  std::vector<int> idx(keff);
  // Iterate all keff-subsets.
  for (int i = 0; i < keff; ++i) idx[i] = i;
  auto eval = [&]() {
    std::vector<std::vector<char>> sv(n);
    std::map<std::vector<char>, int> cells;
    for (int p = 0; p < n; ++p) {
      std::vector<char> key;
      for (int t : idx) key.push_back(lines[t].get(p) ? 1 : 0);
      cells[key]++;
    }
    int mx = 0;
    for (auto& [key, cnt] : cells) mx = std::max(mx, cnt);
    best = std::min(best, mx);
  };
  if (keff == 0) return n;
  for (;;) {
    eval();
    int t = keff - 1;
    while (t >= 0 && idx[t] == L - keff + t) --t;
    if (t < 0) break;
    ++idx[t];
    for (int s = t + 1; s < keff; ++s) idx[s] = idx[s - 1] + 1;
  }
  return best;
}

// Deterministic random cyclic order.
inline std::vector<int> random_order(int n, Rng& rng) {
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  for (int i = n - 1; i > 0; --i) {
    int j = static_cast<int>(rng.next() % (i + 1));
    std::swap(order[i], order[j]);
  }
  return order;
}

// Translates every point by (dx, dy).
inline PointSet translated(const PointSet& ps, long dx, long dy) {
  std::vector<Pt> pts;
  for (const Pt& p : ps.points())
    pts.push_back({p.x + dx, p.y + dy});
  return PointSet(std::move(pts));
}

}  // namespace pointsep::testing
