#include "pointsep/cutting.hpp"

#include "pointsep/hull.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace pointsep {

namespace {

Pt rot90_ccw(const Pt& v) { return Pt{-v.y, v.x}; }

}  // namespace

HalfPlane halving_line(const std::vector<int>& a_ids,
                       const std::vector<int>& b_ids, const PointSet& ps,
                       int r, const std::optional<ConcreteLine>& separator) {
  if (r < 1) throw InputError("halving_line: r must be >= 1");
  if (static_cast<int>(a_ids.size()) < r)
    throw InputError("halving_line: |A| < r");
  if (static_cast<int>(b_ids.size()) < r)
    throw InputError("halving_line: |B| < r");
  {
    std::set<int> sa(a_ids.begin(), a_ids.end());
    for (int id : b_ids)
      if (sa.count(id)) throw InputError("halving_line: A and B intersect");
  }

  struct Node {
    Pt p;
    int orig;
    bool in_a;
  };
  std::vector<Node> pts;
  for (int id : a_ids) pts.push_back({ps[id], id, true});
  for (int id : b_ids) pts.push_back({ps[id], id, false});
  const int m = static_cast<int>(pts.size());

  // Separator with A on the positive side.
  ConcreteLine sep;
  if (separator) {
    sep = *separator;
  } else {
    std::vector<Pt> pa, pb;
    for (const Node& nd : pts) (nd.in_a ? pa : pb).push_back(nd.p);
    auto found = find_separating_line(pa, pb);
    if (!found) throw InputError("halving_line: A and B are not linearly separable");
    sep = {found->a, found->b, found->c};
  }
  {
    // The provided separator may be oriented either way round.
    bool a_pos = true, a_neg = true, b_pos = true, b_neg = true;
    for (const Node& nd : pts) {
      int s = sep.side(nd.p);
      if (s == 0) {
        a_pos = a_neg = false;
        break;
      }
      if (nd.in_a) {
        a_pos &= s > 0;
        a_neg &= s < 0;
      } else {
        b_pos &= s > 0;
        b_neg &= s < 0;
      }
    }
    if (a_neg && b_pos)
      sep = {-sep.a, -sep.b, -sep.c};
    else if (!(a_pos && b_neg))
      throw InputError("halving_line: separator does not separate A from B");
  }

  const Pt u0{sep.a, sep.b};        // toward A
  const Pt u1 = rot90_ccw(u0);      // tie-break direction at angle 0+
  // Integer form of u0; cross signs are invariant under positive scaling.
  const IDir u0i{sep.a.get_num() * sep.b.get_den(),
                 sep.b.get_num() * sep.a.get_den()};

  // Order by projection, descending, under the perturbed start direction.
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::vector<Rational> k0(m), k1(m);
  for (int i = 0; i < m; ++i) {
    k0[i] = dot(u0, pts[i].p);
    k1[i] = dot(u1, pts[i].p);
  }
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    int c = cmp(k0[x], k0[y]);
    if (c != 0) return c > 0;
    return cmp(k1[x], k1[y]) > 0;
  });
  std::vector<int> pos(m);
  for (int t = 0; t < m; ++t) pos[order[t]] = t;

  int f = 0;
  for (int t = 0; t < 2 * r; ++t)
    if (pts[order[t]].in_a) ++f;

  // Swap events within the open half-turn after u0, as exact integer
  // directions.
  struct Event {
    IDir e;  // critical direction
    int i, j;
  };
  std::vector<Event> events;
  events.reserve(static_cast<size_t>(m) * (m - 1) / 2);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      IDir d = idir(pts[i].p, pts[j].p);
      IDir e{-d.y, d.x};
      int s = cross_sign(u0i, e);
      if (s == 0) continue;  // tied at the sweep boundary, never swaps inside
      if (s < 0) {
        e.x = -e.x;
        e.y = -e.y;
      }
      events.push_back({std::move(e), i, j});
    }
  }
  std::sort(events.begin(), events.end(), [&](const Event& x, const Event& y) {
    int c = cross_sign(x.e, y.e);
    if (c != 0) return c > 0;
    int xa = std::min(pts[x.i].orig, pts[x.j].orig);
    int xb = std::max(pts[x.i].orig, pts[x.j].orig);
    int ya = std::min(pts[y.i].orig, pts[y.j].orig);
    int yb = std::max(pts[y.i].orig, pts[y.j].orig);
    return std::make_pair(xa, xb) < std::make_pair(ya, yb);
  });

  // Best valid gap: key = smallest original pair of the opening batch,
  // with (-1,-1) for the initial gap.
  bool have_best = false, best_pending = false;
  std::pair<int, int> best_key{-1, -1};
  std::vector<int> best_inside;
  IDir best_open, best_close;

  auto consider = [&](std::pair<int, int> key, const IDir& open_dir) {
    if (have_best && !(key < best_key)) return;
    have_best = true;
    best_pending = true;
    best_key = key;
    best_open.x = open_dir.x;
    best_open.y = open_dir.y;
    best_inside.assign(order.begin(), order.begin() + 2 * r);
  };

  if (f == r) consider({-1, -1}, u0i);

  size_t t = 0;
  while (t < events.size()) {
    size_t t2 = t + 1;
    while (t2 < events.size() &&
           cross_sign(events[t].e, events[t2].e) == 0)
      ++t2;

    if (best_pending) {
      best_close.x = events[t].e.x;
      best_close.y = events[t].e.y;
      best_pending = false;
    }

    std::pair<int, int> key{-1, -1};
    for (size_t s = t; s < t2; ++s) {
      const Event& ev = events[s];
      int pi = pos[ev.i], pj = pos[ev.j];
      if (pi > pj) std::swap(pi, pj);
      if (pj != pi + 1)
        throw VerificationError("halving_line: non-adjacent swap (input not in general position?)");
      if (pi == 2 * r - 1) {
        f -= pts[order[pi]].in_a ? 1 : 0;
        f += pts[order[pj]].in_a ? 1 : 0;
      }
      std::swap(order[pi], order[pj]);
      pos[order[pi]] = pi;
      pos[order[pj]] = pj;
      std::pair<int, int> pk{
          std::min(pts[ev.i].orig, pts[ev.j].orig),
          std::max(pts[ev.i].orig, pts[ev.j].orig)};
      if (s == t || pk < key) key = pk;
    }

    if (f == r) consider(key, events[t].e);
    t = t2;
  }
  if (best_pending) {
    best_close.x = -u0i.x;
    best_close.y = -u0i.y;
    best_pending = false;
  }
  if (!have_best)
    throw VerificationError("halving_line: no valid direction found");

  // A direction strictly inside the chosen gap.
  BigInt ux = best_open.x + best_close.x;
  BigInt uy = best_open.y + best_close.y;
  if (ux == 0 && uy == 0) {
    ux = -best_open.y;
    uy = best_open.x;
  }
  Pt ustar{Rational(ux), Rational(uy)};

  std::vector<char> inside(m, 0);
  for (int idx : best_inside) inside[idx] = 1;
  bool have_in = false, have_out = false;
  Rational t_in, t_out;
  for (int i = 0; i < m; ++i) {
    Rational pr = dot(ustar, pts[i].p);
    if (inside[i]) {
      if (!have_in || pr < t_in) t_in = pr;
      have_in = true;
    } else {
      if (!have_out || pr > t_out) t_out = pr;
      have_out = true;
    }
  }
  Rational c = have_out ? Rational((t_in + t_out) / 2) : Rational(t_in - 1);
  if (have_out && !(t_in > t_out))
    throw VerificationError("halving_line: degenerate gap direction");

  HalfPlane hp{ConcreteLine{ustar.x, ustar.y, c}, 1};

  // Exact recount is the contract.
  int ca = 0, cb = 0;
  for (const Node& nd : pts) {
    int s = hp.line.side(nd.p);
    if (s == 0) throw VerificationError("halving_line: line touches a point");
    if (s > 0) (nd.in_a ? ca : cb)++;
  }
  if (ca != r || cb != r)
    throw VerificationError("halving_line: recount failed (" +
                            std::to_string(ca) + "," + std::to_string(cb) +
                            ") != r=" + std::to_string(r));
  return hp;
}

namespace {

// Open half-plane containing exactly `take` points of `chosen`, threshold
// placed between two globally adjacent projections.
HalfPlane one_sided_carve(const std::vector<int>& chosen, const PointSet& ps,
                          int take) {
  Pt u = generic_direction(ps.points());
  std::vector<int> all(ps.size());
  std::iota(all.begin(), all.end(), 0);
  std::vector<Rational> proj(ps.size());
  for (int i = 0; i < ps.size(); ++i) proj[i] = dot(u, ps[i]);
  std::sort(all.begin(), all.end(),
            [&](int x, int y) { return cmp(proj[x], proj[y]) > 0; });
  std::vector<char> is_chosen(ps.size(), 0);
  for (int id : chosen) is_chosen[id] = 1;
  int seen = 0, cut_pos = -1;
  for (size_t t = 0; t < all.size(); ++t) {
    if (is_chosen[all[t]]) ++seen;
    if (seen == take) {
      cut_pos = static_cast<int>(t);
      break;
    }
  }
  if (cut_pos < 0) throw InputError("one_sided_carve: not enough points");
  Rational c = cut_pos + 1 < static_cast<int>(all.size())
                   ? Rational((proj[all[cut_pos]] + proj[all[cut_pos + 1]]) / 2)
                   : Rational(proj[all[cut_pos]] - 1);
  HalfPlane hp{ConcreteLine{u.x, u.y, c}, 1};
  int cnt = 0;
  for (int id : chosen)
    if (hp.contains(ps[id])) ++cnt;
  if (cnt != take)
    throw VerificationError("one_sided_carve: recount failed");
  return hp;
}

ConcreteLine median_line(const PointSet& ps) {
  const int n = ps.size();
  if (n == 0) return ConcreteLine{Rational(0), Rational(1), Rational(1)};
  Pt u = generic_direction(ps.points());
  std::vector<Rational> proj;
  proj.reserve(n);
  for (int i = 0; i < n; ++i) proj.push_back(dot(u, ps[i]));
  std::sort(proj.begin(), proj.end(),
            [](const Rational& a, const Rational& b) { return cmp(a, b) > 0; });
  int top = (n + 1) / 2;  // positive side gets ceil(n/2)
  Rational c = top < n ? Rational((proj[top - 1] + proj[top]) / 2)
                       : Rational(proj[n - 1] - 1);
  return ConcreteLine{u.x, u.y, c};
}

ConcreteLine pad_line(const PointSet& ps, int index) {
  Rational ymin(0);
  for (int i = 0; i < ps.size(); ++i)
    if (i == 0 || ps[i].y < ymin) ymin = ps[i].y;
  return ConcreteLine{Rational(0), Rational(1), ymin - 1 - index};
}

}  // namespace

Arrangement bounded_cell_arrangement(const PointSet& ps, int quota) {
  if (quota < 1) throw InputError("bounded_cell_arrangement: quota >= 1");
  const int n = ps.size();
  const int k = std::max(1L, ceil_div(n, 2L * quota));

  Arrangement arr;
  arr.lines.push_back(median_line(ps));

  int pads = 0;
  while (arr.k() < k) {
    CellAssignment ca = classify(ps, arr);
    std::vector<int> r_side, s_side;
    for (const auto& [sv, ids] : ca.cells) {
      if (static_cast<int>(ids.size()) <= quota) continue;
      auto& dst = sv[0] > 0 ? r_side : s_side;
      dst.insert(dst.end(), ids.begin(), ids.end());
    }
    std::sort(r_side.begin(), r_side.end());
    std::sort(s_side.begin(), s_side.end());
    if (!r_side.empty() && !s_side.empty()) {
      HalfPlane hp = halving_line(r_side, s_side, ps, quota, arr.lines[0]);
      arr.lines.push_back(hp.line);
    } else if (!r_side.empty() || !s_side.empty()) {
      const auto& one = r_side.empty() ? s_side : r_side;
      arr.lines.push_back(one_sided_carve(one, ps, quota).line);
    } else {
      arr.lines.push_back(pad_line(ps, pads++));
    }
  }

  if (n > 0 && max_cell(classify(ps, arr)) > quota)
    throw VerificationError("bounded_cell_arrangement: quota violated");
  return arr;
}

PartialCutting partial_cutting(const PointSet& ps, int quota, int lines) {
  if (quota < 1) throw InputError("partial_cutting: quota >= 1");
  if (lines < 2) throw InputError("partial_cutting: needs at least 2 lines");
  const int n = ps.size();
  const long need = 2L * quota * (lines - 1);
  if (n < need) {
    long max_l = (n / 2) / quota + 1;
    throw InputError("partial_cutting: insufficient points (max feasible L = " +
                     std::to_string(max_l) + ")");
  }

  PartialCutting pc;
  pc.quota = quota;
  pc.split_line = median_line(ps);

  std::vector<int> active_pos, active_neg;
  for (int i = 0; i < n; ++i) {
    int s = pc.split_line.side(ps[i]);
    if (s == 0) throw VerificationError("partial_cutting: split touches point");
    (s > 0 ? active_pos : active_neg).push_back(i);
  }

  for (int i = 2; i <= lines; ++i) {
    HalfPlane q =
        halving_line(active_pos, active_neg, ps, quota, pc.split_line);

    for (int split_side : {+1, -1}) {
      auto& act = split_side > 0 ? active_pos : active_neg;
      CarvedCell cell;
      cell.cut_index = i;
      cell.split_side = split_side;
      cell.constraints.push_back(
          HalfPlane{pc.split_line, split_side});
      for (const auto& earlier : pc.cuts)
        cell.constraints.push_back(HalfPlane{earlier.line, -earlier.side});
      cell.constraints.push_back(q);
      std::vector<int> keep;
      for (int id : act)
        (q.contains(ps[id]) ? cell.members : keep).push_back(id);
      if (static_cast<int>(cell.members.size()) != quota)
        throw VerificationError("partial_cutting: carved cell has " +
                                std::to_string(cell.members.size()) +
                                " points, expected " + std::to_string(quota));
      act = std::move(keep);
      pc.cells.push_back(std::move(cell));
    }
    pc.cuts.push_back(q);
  }

  pc.residual = active_pos;
  pc.residual.insert(pc.residual.end(), active_neg.begin(), active_neg.end());
  std::sort(pc.residual.begin(), pc.residual.end());

  // Membership of every carved cell must equal its constraint evaluation.
  for (const auto& cell : pc.cells) {
    std::vector<int> eval;
    for (int id = 0; id < n; ++id) {
      bool in = true;
      for (const auto& hp : cell.constraints)
        if (!hp.contains(ps[id])) {
          in = false;
          break;
        }
      if (in) eval.push_back(id);
    }
    std::vector<int> want = cell.members;
    std::sort(want.begin(), want.end());
    if (eval != want)
      throw VerificationError(
          "partial_cutting: constraint evaluation mismatch");
  }
  return pc;
}

namespace {

struct SearchSetup {
  std::vector<uint32_t> cand_masks;        // canonical (bit 0 clear)
  std::vector<int> cand_bipartition;       // index into bps
  std::vector<Bipartition> bps;
  uint32_t full = 0;
};

SearchSetup search_setup(const PointSet& ps) {
  const int n = ps.size();
  if (n > 32) throw InputError("cut search: desk scale only (N <= 32)");
  SearchSetup st;
  st.full = n == 32 ? ~uint32_t(0) : ((uint32_t(1) << n) - 1);
  st.bps = enumerate_bipartitions(ps);
  std::set<uint32_t> seen;
  for (size_t i = 0; i < st.bps.size(); ++i) {
    uint32_t m = 0;
    for (int p = 0; p < n; ++p)
      if (st.bps[i].positive.get(p)) m |= uint32_t(1) << p;
    if (m & 1u) m = ~m & st.full;  // canonical orientation
    if (m == 0) continue;          // trivial line: refines nothing
    if (seen.insert(m).second) {
      st.cand_masks.push_back(m);
      st.cand_bipartition.push_back(static_cast<int>(i));
    }
  }
  return st;
}

void sort_by_balance(SearchSetup& st, int n) {
  std::vector<int> idx(st.cand_masks.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    int ba = std::abs(2 * __builtin_popcount(st.cand_masks[a]) - n);
    int bb = std::abs(2 * __builtin_popcount(st.cand_masks[b]) - n);
    if (ba != bb) return ba < bb;
    return st.cand_masks[a] < st.cand_masks[b];
  });
  std::vector<uint32_t> m2;
  std::vector<int> b2;
  for (int i : idx) {
    m2.push_back(st.cand_masks[i]);
    b2.push_back(st.cand_bipartition[i]);
  }
  st.cand_masks = std::move(m2);
  st.cand_bipartition = std::move(b2);
}

void sort_by_mask(SearchSetup& st) {
  std::vector<int> idx(st.cand_masks.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](int a, int b) { return st.cand_masks[a] < st.cand_masks[b]; });
  std::vector<uint32_t> m2;
  std::vector<int> b2;
  for (int i : idx) {
    m2.push_back(st.cand_masks[i]);
    b2.push_back(st.cand_bipartition[i]);
  }
  st.cand_masks = std::move(m2);
  st.cand_bipartition = std::move(b2);
}

int cells_capacity(int k) { return (k * k + k + 2) / 2; }

// Max cell size over the partition refined by the chosen masks.
int eval_cells(const std::vector<uint32_t>& cells) {
  int best = 0;
  for (uint32_t c : cells) best = std::max(best, __builtin_popcount(c));
  return best;
}

// Lower bound: t more lines at most 2^t-fold refine each cell, and the final
// arrangement has at most cells_capacity(K) cells.
int lower_bound(const std::vector<uint32_t>& cells, int remaining, int n,
                int k_total) {
  int lb = ceil_div(n, cells_capacity(k_total));
  for (uint32_t c : cells) {
    long sz = __builtin_popcount(c);
    long denom = remaining >= 30 ? (1L << 30) : (1L << remaining);
    lb = std::max(lb, static_cast<int>(ceil_div(sz, denom)));
  }
  return lb;
}

struct Searcher {
  const SearchSetup& st;
  int n, keff, k_total;
  long budget;
  bool exhausted = false;
  long nodes = 0, leaves = 0;

  int best_val;
  std::vector<int> best_subset;
  bool find_first_leq = false;  // equal-separation mode
  int target = -1;

  std::vector<int> chosen;

  Searcher(const SearchSetup& s, int n, int keff, int k_total, long budget,
           int seed_val)
      : st(s), n(n), keff(keff), k_total(k_total), budget(budget),
        best_val(seed_val) {}

  // Returns true to stop the whole search (first-fit found).
  bool dfs(int from, std::vector<uint32_t>& cells, int depth) {
    if (budget-- <= 0) {
      exhausted = true;
      return true;
    }
    ++nodes;
    if (depth == keff) {
      ++leaves;
      int v = eval_cells(cells);
      if (find_first_leq) {
        if (v <= target) {
          best_val = v;
          best_subset = chosen;
          return true;
        }
        return false;
      }
      if (v < best_val) {
        best_val = v;
        best_subset = chosen;
      }
      return false;
    }
    {
      int lb = lower_bound(cells, keff - depth, n, k_total);
      if (find_first_leq ? lb > target : lb >= best_val) return false;
    }
    int limit = static_cast<int>(st.cand_masks.size()) - (keff - depth - 1);
    for (int i = from; i < limit; ++i) {
      std::vector<uint32_t> next;
      next.reserve(cells.size() * 2);
      uint32_t m = st.cand_masks[i];
      for (uint32_t c : cells) {
        uint32_t c1 = c & m, c2 = c & ~m;
        if (c1) next.push_back(c1);
        if (c2) next.push_back(c2);
      }
      int lb = lower_bound(next, keff - depth - 1, n, k_total);
      bool prune = find_first_leq ? lb > target : lb >= best_val;
      if (!prune) {
        chosen.push_back(i);
        bool stop = dfs(i + 1, next, depth + 1);
        chosen.pop_back();
        if (stop) return true;
      }
    }
    return false;
  }
};

Arrangement realize_subset(const SearchSetup& st, const std::vector<int>& subset,
                           const PointSet& ps, int k_total) {
  Arrangement arr;
  for (int i : subset)
    arr.lines.push_back(realize_line(st.bps[st.cand_bipartition[i]], ps));
  int pads = 0;
  while (arr.k() < k_total) arr.lines.push_back(pad_line(ps, pads++));
  return make_simple(arr, ps);
}

}  // namespace

CutResult cut_number_exact(const PointSet& ps, int k, long budget) {
  if (k < 1) throw InputError("cut_number_exact: K >= 1");
  const int n = ps.size();
  if (n < 1) throw InputError("cut_number_exact: N >= 1");

  // Constructive seed: both an incumbent value and a witness. The
  // construction emits ceil(N/2H) <= K lines for H = ceil(N/2K).
  Arrangement seed =
      bounded_cell_arrangement(ps, static_cast<int>(ceil_div(n, 2L * k)));
  while (seed.k() < k) seed.lines.push_back(pad_line(ps, seed.k()));
  int seed_val = max_cell(classify(ps, seed));

  CutResult res;
  res.value = seed_val;
  res.witness = seed;

  SearchSetup st = search_setup(ps);
  int keff = std::min<int>(k, static_cast<int>(st.cand_masks.size()));
  if (keff == 0) {
    res.exhaustive = true;
    res.witness = make_simple(res.witness, ps);
    return res;
  }

  sort_by_balance(st, n);
  Searcher s(st, n, keff, k, budget, seed_val);
  std::vector<uint32_t> cells{st.full};
  s.dfs(0, cells, 0);
  res.nodes_visited = s.nodes;
  res.arrangements_evaluated = s.leaves;
  res.exhaustive = !s.exhausted;
  res.value = s.best_val;

  // Witness from the first pass (indices refer to the balance ordering).
  if (!s.best_subset.empty())
    res.witness = realize_subset(st, s.best_subset, ps, k);

  if (res.exhaustive) {
    // Deterministic tie-break: first subset achieving the optimum in
    // lexicographic canonical-mask order. The candidate family covers every
    // arrangement's effect, so one exists; if this pass runs out of budget
    // the incumbent witness (which attains the value) is kept.
    sort_by_mask(st);
    Searcher s2(st, n, keff, k, budget, s.best_val + 1);
    s2.find_first_leq = true;
    s2.target = s.best_val;
    std::vector<uint32_t> cells2{st.full};
    s2.dfs(0, cells2, 0);
    if (!s2.best_subset.empty())
      res.witness = realize_subset(st, s2.best_subset, ps, k);
    else if (!s2.exhausted)
      throw VerificationError("cut_number_exact: optimum not re-found");
  }

  if (max_cell(classify(ps, res.witness)) != res.value)
    throw VerificationError("cut_number_exact: witness does not match value");
  return res;
}

SeparationResult equal_separation_check(const PointSet& ps, int k,
                                        const Rational& c, long budget) {
  if (k < 1) throw InputError("equal_separation_check: K >= 1");
  const int n = ps.size();
  SeparationResult out;
  Rational thr_q = c * n / (k * k);
  BigInt thr_z = ceil_rational(thr_q);
  out.threshold = static_cast<int>(thr_z.get_si());

  // Constructive shortcut.
  Arrangement seed =
      bounded_cell_arrangement(ps, std::max(1L, ceil_div(n, 2L * k)));
  while (seed.k() < k) seed.lines.push_back(pad_line(ps, seed.k()));
  int seed_val = max_cell(classify(ps, seed));
  if (seed_val <= out.threshold) {
    out.verdict = SeparationVerdict::Yes;
    out.witness = make_simple(seed, ps);
    out.witness_max_cell = seed_val;
    return out;
  }

  SearchSetup st = search_setup(ps);
  int keff = std::min<int>(k, static_cast<int>(st.cand_masks.size()));
  if (keff == 0) {
    out.verdict = n <= out.threshold ? SeparationVerdict::Yes
                                     : SeparationVerdict::No;
    if (out.verdict == SeparationVerdict::Yes) {
      out.witness = make_simple(seed, ps);
      out.witness_max_cell = seed_val;
    }
    return out;
  }
  sort_by_mask(st);
  Searcher s(st, n, keff, k, budget, n + 1);
  s.find_first_leq = true;
  s.target = out.threshold;
  std::vector<uint32_t> cells{st.full};
  s.dfs(0, cells, 0);
  if (!s.best_subset.empty()) {
    out.verdict = SeparationVerdict::Yes;
    out.witness = realize_subset(st, s.best_subset, ps, k);
    out.witness_max_cell = max_cell(classify(ps, *out.witness));
    if (out.witness_max_cell > out.threshold)
      throw VerificationError("equal_separation_check: bad witness");
  } else {
    out.verdict = s.exhausted ? SeparationVerdict::Unknown
                              : SeparationVerdict::No;
  }
  return out;
}

}  // namespace pointsep
