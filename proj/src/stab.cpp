#include "pointsep/stab.hpp"

#include <algorithm>
#include <map>

namespace pointsep {

int StabReport::recount() const {
  int c = 0;
  for (const auto& [u, v] : segments)
    if (witness_positive.get(u) != witness_positive.get(v)) ++c;
  return c;
}

namespace {

struct PtLess {
  bool operator()(const Pt& a, const Pt& b) const { return lex_less(a, b); }
};

struct Ev {
  IDir e;
  int p;
};

}  // namespace

StabReport stab_segments(const std::vector<Segment>& segs) {
  if (segs.empty()) throw InputError("stab_segments: empty segment family");

  StabReport rep;
  std::map<Pt, int, PtLess> index;
  auto pos_of = [&](const Pt& p) {
    auto it = index.find(p);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(rep.positions.size());
    index.emplace(p, id);
    rep.positions.push_back(p);
    return id;
  };
  for (const auto& s : segs) {
    if (s.a == s.b) throw InputError("stab_segments: zero-length segment");
    int u = pos_of(s.a), v = pos_of(s.b);
    rep.segments.push_back({u, v});
  }
  const int V = static_cast<int>(rep.positions.size());
  const int E = static_cast<int>(rep.segments.size());

  std::vector<std::vector<int>> inc(V);
  for (int e = 0; e < E; ++e) {
    inc[rep.segments[e].first].push_back(e);
    inc[rep.segments[e].second].push_back(e);
  }

  int best = -1, best_anchor = -1, best_batch = -2, best_sigma = 1;

  std::vector<int8_t> side(V);
  std::vector<Ev> events;
  std::vector<int> seg_stamp(E, -1);
  std::vector<int> affected;
  int stamp = 0;

  // Sweeps the line fan about anchor a. In search mode, updates the best
  // (value, anchor, batch, sigma). In capture mode, stops at stop_batch and
  // writes the side assignment, with the anchor forced to want_sigma.
  auto sweep = [&](int a, bool capture, int stop_batch, int want_sigma,
                   Bits* out_mask) {
    events.clear();
    for (int p = 0; p < V; ++p) {
      if (p == a) continue;
      IDir d = idir(rep.positions[a], rep.positions[p]);
      int sy = sgn(d.y);
      if (sy > 0)
        side[p] = 1;
      else if (sy < 0)
        side[p] = -1;
      else
        side[p] = sgn(d.x) > 0 ? -1 : 1;
      if (sy != 0) {
        if (sy < 0) {
          d.x = -d.x;
          d.y = -d.y;
        }
        events.push_back({std::move(d), p});
      }
    }
    std::sort(events.begin(), events.end(), [](const Ev& x, const Ev& y) {
      int c = cross_sign(x.e, y.e);
      if (c != 0) return c > 0;
      return x.p < y.p;
    });

    int rest = 0, n_plus = 0, n_minus = 0;
    for (int e = 0; e < E; ++e) {
      auto [u, v] = rep.segments[e];
      if (u == a || v == a) {
        int other = u == a ? v : u;
        (side[other] > 0 ? n_plus : n_minus)++;
      } else if (side[u] != side[v]) {
        ++rest;
      }
    }

    auto capture_now = [&](int sigma) {
      *out_mask = Bits(V);
      for (int p = 0; p < V; ++p)
        if (p != a && side[p] > 0) out_mask->set(p);
      out_mask->set(a, sigma > 0);
    };
    auto eval = [&](int batch) -> bool {
      int vp = rest + n_minus;  // anchor positive: crosses edges to '-' ends
      int vm = rest + n_plus;
      if (capture) {
        if (batch == stop_batch) {
          capture_now(want_sigma);
          return true;
        }
        return false;
      }
      if (vp > best) {
        best = vp;
        best_anchor = a;
        best_batch = batch;
        best_sigma = 1;
      }
      if (vm > best) {
        best = vm;
        best_anchor = a;
        best_batch = batch;
        best_sigma = -1;
      }
      return false;
    };

    if (eval(-1)) return;

    size_t t = 0;
    int batch_id = 0;
    while (t < events.size()) {
      size_t t2 = t + 1;
      while (t2 < events.size() &&
             cross_sign(events[t].e, events[t2].e) == 0)
        ++t2;

      affected.clear();
      ++stamp;
      for (size_t s = t; s < t2; ++s)
        for (int e : inc[events[s].p])
          if (seg_stamp[e] != stamp) {
            seg_stamp[e] = stamp;
            affected.push_back(e);
          }
      auto apply = [&](int delta) {
        for (int e : affected) {
          auto [u, v] = rep.segments[e];
          if (u == a || v == a) {
            int other = u == a ? v : u;
            (side[other] > 0 ? n_plus : n_minus) += delta;
          } else if (side[u] != side[v]) {
            rest += delta;
          }
        }
      };
      apply(-1);
      for (size_t s = t; s < t2; ++s) side[events[s].p] = -side[events[s].p];
      apply(+1);

      if (eval(batch_id)) return;
      ++batch_id;
      t = t2;
    }
  };

  for (int a = 0; a < V; ++a) sweep(a, false, 0, 0, nullptr);

  rep.value = best;
  rep.witness_anchor = best_anchor;
  sweep(best_anchor, true, best_batch, best_sigma, &rep.witness_positive);

  if (rep.recount() != rep.value)
    throw VerificationError("stab_segments: witness recount mismatch");
  return rep;
}

int max_groups_split(const std::vector<std::vector<Pt>>& groups) {
  std::vector<Pt> positions;
  std::vector<int> group_of;
  std::map<Pt, int, PtLess> index;
  const int G = static_cast<int>(groups.size());
  std::vector<int> gsize(G, 0);
  for (int g = 0; g < G; ++g) {
    for (const Pt& p : groups[g]) {
      if (index.count(p))
        throw InputError("max_groups_split: duplicate position across groups");
      index.emplace(p, static_cast<int>(positions.size()));
      positions.push_back(p);
      group_of.push_back(g);
      ++gsize[g];
    }
  }
  const int V = static_cast<int>(positions.size());
  if (V == 0) return 0;

  int best = 0;
  std::vector<int8_t> side(V);
  std::vector<int> plus(G);
  std::vector<Ev> events;

  for (int a = 0; a < V; ++a) {
    const int ga = group_of[a];
    events.clear();
    std::fill(plus.begin(), plus.end(), 0);
    for (int p = 0; p < V; ++p) {
      if (p == a) continue;
      IDir d = idir(positions[a], positions[p]);
      int sy = sgn(d.y);
      if (sy > 0)
        side[p] = 1;
      else if (sy < 0)
        side[p] = -1;
      else
        side[p] = sgn(d.x) > 0 ? -1 : 1;
      if (side[p] > 0) ++plus[group_of[p]];
      if (sy != 0) {
        if (sy < 0) {
          d.x = -d.x;
          d.y = -d.y;
        }
        events.push_back({std::move(d), p});
      }
    }
    std::sort(events.begin(), events.end(), [](const Ev& x, const Ev& y) {
      int c = cross_sign(x.e, y.e);
      if (c != 0) return c > 0;
      return x.p < y.p;
    });

    int split_others = 0;
    for (int g = 0; g < G; ++g) {
      if (g == ga) continue;
      if (plus[g] > 0 && plus[g] < gsize[g]) ++split_others;
    }
    auto eval = [&]() {
      for (int sigma = 0; sigma <= 1; ++sigma) {
        int pa = plus[ga] + sigma;
        int total = split_others + (pa > 0 && pa < gsize[ga] ? 1 : 0);
        best = std::max(best, total);
      }
    };
    auto splitness = [&](int g) { return plus[g] > 0 && plus[g] < gsize[g]; };

    eval();
    size_t t = 0;
    while (t < events.size()) {
      size_t t2 = t + 1;
      while (t2 < events.size() &&
             cross_sign(events[t].e, events[t2].e) == 0)
        ++t2;
      for (size_t s = t; s < t2; ++s) {
        int p = events[s].p;
        int g = group_of[p];
        bool was = g != ga && splitness(g);
        plus[g] += side[p] > 0 ? -1 : 1;
        side[p] = -side[p];
        if (g != ga) {
          bool now = splitness(g);
          if (was != now) split_others += now ? 1 : -1;
        }
      }
      eval();
      t = t2;
    }
  }
  return best;
}

ConcreteLine witness_line(const StabReport& report) {
  PointSet ps(report.positions);
  auto b = bipartition_from_sides(ps, report.witness_positive);
  if (!b)
    throw VerificationError("witness_line: side assignment not realizable");
  return realize_line(*b, ps);
}

}  // namespace pointsep
