#include "pointsep/bipartition.hpp"

#include "pointsep/hull.hpp"

#include <algorithm>
#include <unordered_set>

namespace pointsep {

namespace {

void verify_realization(const ConcreteLine& ln, const Bipartition& b,
                        const PointSet& ps) {
  for (int k = 0; k < ps.size(); ++k) {
    int s = ln.side(ps[k]);
    int want = b.positive.get(k) ? 1 : -1;
    if (s != want)
      throw VerificationError("realize_line: point " + std::to_string(k) +
                              " is on the wrong side");
  }
}

}  // namespace

std::vector<Bipartition> enumerate_bipartitions(const PointSet& ps) {
  const int n = ps.size();
  std::vector<Bipartition> out;
  std::unordered_set<Bits, BitsHash> seen;

  auto push = [&](Bipartition b) {
    if (seen.insert(b.positive).second) out.push_back(std::move(b));
  };

  {
    Bipartition all;
    all.kind = Bipartition::Kind::AllPositive;
    all.positive = Bits(n);
    for (int i = 0; i < n; ++i) all.positive.set(i);
    push(std::move(all));
    Bipartition none;
    none.kind = Bipartition::Kind::AllNegative;
    none.positive = Bits(n);
    push(std::move(none));
  }
  if (n < 2) return out;

  const int m = n - 1;
  std::vector<IDir> dir(n);
  std::vector<int> order;
  order.reserve(m);
  std::vector<Bits> prefix;

  for (int i = 0; i < n; ++i) {
    order.clear();
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      dir[j] = idir(ps[i], ps[j]);
      order.push_back(j);
    }
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return angle_less(dir[a], dir[b]); });
    for (int t = 1; t < m; ++t) {
      if (cross_sign(dir[order[t - 1]], dir[order[t]]) == 0)
        throw InputError("enumerate_bipartitions: collinear triple (" +
                         std::to_string(i) + "," + std::to_string(order[t - 1]) +
                         "," + std::to_string(order[t]) + ")");
    }

    // XOR prefixes over the doubled circular order; disjoint singletons make
    // XOR act as set union, so any arc mask is prefix[b] ^ prefix[a].
    prefix.assign(2 * m + 1, Bits(n));
    for (int t = 1; t <= 2 * m; ++t) {
      prefix[t] = prefix[t - 1];
      prefix[t].flip(order[(t - 1) % m]);
    }

    // ap(pos): first doubled index whose direction is not strictly within
    // the open ccw half-turn after order[pos].
    size_t ap = 1;
    for (int pos = 0; pos < m; ++pos) {
      int j = order[pos];
      if (ap < static_cast<size_t>(pos) + 1) ap = pos + 1;
      while (ap < static_cast<size_t>(pos) + m) {
        int k = order[ap % m];
        int cs = cross_sign(dir[j], dir[k]);
        if (cs == 0)
          throw InputError("enumerate_bipartitions: collinear triple (" +
                           std::to_string(i) + "," + std::to_string(j) + "," +
                           std::to_string(k) + ")");
        if (cs > 0)
          ++ap;
        else
          break;
      }
      // Both ordered pairs (i, j) and (j, i) are needed: the fan of anchor j
      // supplies the bipartitions whose positive side is the other side of
      // the pair line.
      Bits base = prefix[ap] ^ prefix[pos + 1];
      for (int combo = 0; combo < 4; ++combo) {
        bool si = combo & 1, sj = combo & 2;
        Bipartition b;
        b.kind = Bipartition::Kind::Anchored;
        b.positive = base;
        b.positive.set(i, si);
        b.positive.set(j, sj);
        b.ai = i;
        b.aj = j;
        b.si = si;
        b.sj = sj;
        push(std::move(b));
      }
    }
  }
  return out;
}

ConcreteLine realize_line(const Bipartition& b, const PointSet& ps) {
  const int n = ps.size();
  ConcreteLine ln;

  switch (b.kind) {
    case Bipartition::Kind::Explicit:
      ln = *b.line;
      break;

    case Bipartition::Kind::AllPositive:
    case Bipartition::Kind::AllNegative: {
      Rational ext = 0;
      for (int k = 0; k < n; ++k) {
        if (k == 0 || (b.kind == Bipartition::Kind::AllPositive
                           ? ps[k].y < ext
                           : ps[k].y > ext))
          ext = ps[k].y;
      }
      if (b.kind == Bipartition::Kind::AllPositive)
        ln = {Rational(0), Rational(1), ext - 1};
      else
        ln = {Rational(0), Rational(1), ext + 1};
      break;
    }

    case Bipartition::Kind::Anchored: {
      const Pt& pi = ps[b.ai];
      const Pt& pj = ps[b.aj];
      Pt d = pj - pi;
      Pt nrm{-d.y, d.x};  // positive side = left of i -> j
      Rational c0 = dot(nrm, pi);

      // Minimum clearance among non-anchor points.
      Rational clear(0);
      bool have = false;
      for (int k = 0; k < n; ++k) {
        if (k == b.ai || k == b.aj) continue;
        Rational f = dot(nrm, ps[k]) - c0;
        if (f < 0) f = -f;
        if (f == 0)
          throw InputError("realize_line: anchor line passes through point " +
                           std::to_string(k));
        if (!have || f < clear) {
          clear = f;
          have = true;
        }
      }
      if (!have) clear = 1;

      if (b.si == b.sj) {
        // Translate: both anchors to the requested side.
        Rational delta = clear / 2;
        Rational c = b.si ? Rational(c0 - delta) : Rational(c0 + delta);
        ln = {nrm.x, nrm.y, c};
      } else {
        // Rotate about the anchor midpoint.
        Pt mid{(pi.x + pj.x) / 2, (pi.y + pj.y) / 2};
        Rational reach(0);
        for (int k = 0; k < n; ++k) {
          if (k == b.ai || k == b.aj) continue;
          Rational g = dot(d, ps[k] - mid);
          if (g < 0) g = -g;
          if (g > reach) reach = g;
        }
        Rational eps = clear / (2 * (reach + 1));
        if (!b.sj) eps = -eps;  // sj positive needs ccw nudge
        Pt nrm2{nrm.x + eps * d.x, nrm.y + eps * d.y};
        ln = {nrm2.x, nrm2.y, dot(nrm2, mid)};
      }
      break;
    }
  }

  verify_realization(ln, b, ps);
  return ln;
}

std::optional<Bipartition> bipartition_from_sides(const PointSet& ps,
                                                  const Bits& positive) {
  const int n = ps.size();
  int cnt = positive.count();
  if (cnt == 0 || cnt == n) {
    Bipartition b;
    b.kind = cnt == 0 ? Bipartition::Kind::AllNegative
                      : Bipartition::Kind::AllPositive;
    b.positive = positive;
    return b;
  }
  std::vector<Pt> a_pts, b_pts;
  for (int i = 0; i < n; ++i)
    (positive.get(i) ? a_pts : b_pts).push_back(ps[i]);
  auto sep = find_separating_line(a_pts, b_pts);
  if (!sep) return std::nullopt;
  Bipartition b;
  b.kind = Bipartition::Kind::Explicit;
  b.positive = positive;
  b.line = ConcreteLine{sep->a, sep->b, sep->c};
  verify_realization(*b.line, b, ps);
  return b;
}

}  // namespace pointsep
