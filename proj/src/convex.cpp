#include "pointsep/convex.hpp"

#include "pointsep/hull.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace pointsep {

bool is_convex_position(const std::vector<int>& ids, const PointSet& ps) {
  if (ids.empty()) throw InputError("is_convex_position: empty id list");
  std::set<int> uniq(ids.begin(), ids.end());
  if (uniq.size() != ids.size())
    throw InputError("is_convex_position: duplicate ids");
  std::vector<Pt> pts;
  pts.reserve(ids.size());
  for (int id : ids) pts.push_back(ps[id]);
  return points_in_convex_position(pts);
}

namespace {

struct DirEdge {
  int cls;  // full-circle direction class
  int16_t u, v;
  int16_t min_rank;
};

// Rotates the cycle so it starts at the smallest id, preserving orientation.
std::vector<int> canonical_cycle(std::vector<int> cycle) {
  auto it = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), it, cycle.end());
  return cycle;
}

}  // namespace

ConvexResult convex_number(const PointSet& ps) {
  const int n = ps.size();
  ConvexResult res;
  if (n == 0) return res;
  if (n <= 2) {
    res.value = n;
    for (int i = 0; i < n; ++i) res.witness.push_back(i);
    return res;
  }

  // Bottom-lex ranks: rank 0 is the lowest point (ties by x).
  std::vector<int> by_rank(n);
  std::iota(by_rank.begin(), by_rank.end(), 0);
  std::sort(by_rank.begin(), by_rank.end(), [&](int a, int b) {
    int cy = cmp(ps[a].y, ps[b].y);
    if (cy != 0) return cy < 0;
    return cmp(ps[a].x, ps[b].x) < 0;
  });
  std::vector<int16_t> rank(n);
  for (int r = 0; r < n; ++r) rank[by_rank[r]] = static_cast<int16_t>(r);

  // Direction classes. Unordered pairs get an upper-half canonical class in
  // [0, U); the ordered edge (u, v) is that class when its direction lies in
  // the upper half, class + U otherwise. Antipodal classes then differ by
  // exactly U, so the "turns left" test becomes an integer window test.
  struct PairDir {
    IDir d;
    int pair_index;
  };
  std::vector<PairDir> pd;
  pd.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  std::vector<IDir> dir_uv(static_cast<size_t>(n) * n);
  std::vector<uint8_t> upper_uv(static_cast<size_t>(n) * n, 0);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      IDir d = idir(ps[u], ps[v]);
      bool up = upper_half(d);
      IDir canon = up ? IDir{d.x, d.y} : IDir{-d.x, -d.y};
      upper_uv[static_cast<size_t>(u) * n + v] = up;
      upper_uv[static_cast<size_t>(v) * n + u] = !up;
      pd.push_back({std::move(canon), u * n + v});
    }
  }
  std::sort(pd.begin(), pd.end(), [](const PairDir& a, const PairDir& b) {
    int c = cross_sign(a.d, b.d);
    if (c != 0) return c > 0;
    return a.pair_index < b.pair_index;
  });
  std::vector<int> pair_cls(static_cast<size_t>(n) * n, -1);
  int num_classes = 0;
  for (size_t t = 0; t < pd.size(); ++t) {
    if (t > 0 && cross_sign(pd[t - 1].d, pd[t].d) != 0) ++num_classes;
    int u = pd[t].pair_index / n, v = pd[t].pair_index % n;
    pair_cls[static_cast<size_t>(u) * n + v] = num_classes;
    pair_cls[static_cast<size_t>(v) * n + u] = num_classes;
  }
  ++num_classes;
  const int U = num_classes;

  std::vector<DirEdge> edges;
  edges.reserve(static_cast<size_t>(n) * (n - 1));
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      size_t idx = static_cast<size_t>(u) * n + v;
      int cls = pair_cls[idx] + (upper_uv[idx] ? 0 : U);
      edges.push_back({cls, static_cast<int16_t>(u), static_cast<int16_t>(v),
                       std::min(rank[u], rank[v])});
    }
  }
  std::sort(edges.begin(), edges.end(), [](const DirEdge& a, const DirEdge& b) {
    if (a.cls != b.cls) return a.cls < b.cls;
    if (a.u != b.u) return a.u < b.u;
    return a.v < b.v;
  });

  // Per-vertex chain entries with a sliding-window maximum over direction
  // classes (window: previous edge direction within the open half-turn
  // before the current one).
  struct Entry {
    int cls;
    int val;
    int prev;      // entry index in entries[from], -1 for chain start
    int16_t from;  // predecessor vertex (the base for start entries)
  };
  std::vector<std::vector<Entry>> entries(n);
  std::vector<std::vector<int>> deque_idx(n);  // indices, values non-increasing
  std::vector<int> head(n, 0);
  std::vector<int> version(n, -1);
  int cur_version = -1;

  auto touch = [&](int v) {
    if (version[v] != cur_version) {
      version[v] = cur_version;
      entries[v].clear();
      deque_idx[v].clear();
      head[v] = 0;
    }
  };
  auto push_entry = [&](int v, Entry e) {
    touch(v);
    auto& ent = entries[v];
    auto& dq = deque_idx[v];
    ent.push_back(e);
    while (static_cast<int>(dq.size()) > head[v] &&
           ent[dq.back()].val < e.val)
      dq.pop_back();
    dq.push_back(static_cast<int>(ent.size()) - 1);
  };
  // Max entry with cls > limit, or -1.
  auto window_max = [&](int v, int limit) -> int {
    touch(v);
    auto& ent = entries[v];
    auto& dq = deque_idx[v];
    while (head[v] < static_cast<int>(dq.size()) &&
           ent[dq[head[v]]].cls <= limit)
      ++head[v];
    if (head[v] >= static_cast<int>(dq.size())) return -1;
    return dq[head[v]];
  };

  int best = std::min(n, 2);
  int best_base = -1;

  auto run_base = [&](int b, bool reconstruct) -> std::vector<int> {
    ++cur_version;
    const int16_t rb = rank[b];
    int local_best = 0;
    int close_u = -1, close_entry = -1;
    for (const DirEdge& e : edges) {
      if (e.min_rank < rb) continue;
      if (e.u == b) {
        if (rank[e.v] > rb)
          push_entry(e.v, Entry{e.cls, 1, -1, static_cast<int16_t>(b)});
      } else if (e.v == b) {
        int q = window_max(e.u, e.cls - U);
        if (q >= 0) {
          const Entry& qe = entries[e.u][q];
          if (qe.val >= 2) {
            int total = qe.val + 1;
            if (reconstruct) {
              if (total == best && close_entry < 0) {
                close_u = e.u;
                close_entry = q;
              }
            } else if (total > local_best) {
              local_best = total;
            }
          }
        }
      } else {
        int q = window_max(e.u, e.cls - U);
        if (q >= 0) {
          const Entry& qe = entries[e.u][q];
          push_entry(e.v, Entry{e.cls, qe.val + 1, q, e.u});
        }
      }
    }
    if (!reconstruct) {
      if (local_best > best) {
        best = local_best;
        best_base = b;
      }
      return {};
    }
    if (close_entry < 0)
      throw VerificationError("convex_number: witness reconstruction failed");
    std::vector<int> chain;
    int v = close_u, eidx = close_entry;
    while (eidx >= 0) {
      chain.push_back(v);
      const Entry& e = entries[v][eidx];
      int pv = e.from;
      eidx = e.prev;
      v = pv;
    }
    chain.push_back(b);
    std::reverse(chain.begin(), chain.end());
    return chain;
  };

  for (int r = 0; r < n; ++r) {
    int b = by_rank[r];
    if (n - r <= best) break;  // no base below can beat the incumbent
    run_base(b, false);
  }

  if (best_base < 0) {
    // No closed polygon found (n < 3 handled above; with general position
    // any 3 points close, so this cannot happen).
    throw VerificationError("convex_number: no polygon found");
  }
  res.value = best;
  res.witness = canonical_cycle(run_base(best_base, true));
  return res;
}

FourPointProbe four_point_probe(const PointSet& ps) {
  const int n = ps.size();
  if (n < 4) throw InputError("four_point_probe: needs at least 4 points");
  FourPointProbe out;
  std::vector<Pt> hull = convex_hull(ps.points());
  if (static_cast<int>(hull.size()) == n) return out;

  auto find_id = [&](const Pt& p) {
    for (int i = 0; i < n; ++i)
      if (ps[i] == p) return i;
    return -1;
  };

  // First point that is not a hull vertex.
  std::vector<Pt> hull_sorted = hull;
  std::sort(hull_sorted.begin(), hull_sorted.end(), lex_less);
  int inner = -1;
  for (int i = 0; i < n && inner < 0; ++i) {
    if (!std::binary_search(hull_sorted.begin(), hull_sorted.end(), ps[i],
                            lex_less))
      inner = i;
  }

  // Fan triangle of the hull containing it.
  for (size_t t = 1; t + 1 < hull.size(); ++t) {
    const Pt& a = hull[0];
    const Pt& b = hull[t];
    const Pt& c = hull[t + 1];
    int s1 = orientation_sign(a, b, ps[inner]);
    int s2 = orientation_sign(b, c, ps[inner]);
    int s3 = orientation_sign(c, a, ps[inner]);
    if (s1 >= 0 && s2 >= 0 && s3 >= 0) {
      out.ok = false;
      out.witness = {find_id(a), find_id(b), find_id(c), inner};
      return out;
    }
  }
  throw VerificationError("four_point_probe: interior point not located");
}

}  // namespace pointsep
