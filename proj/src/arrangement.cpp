#include "pointsep/arrangement.hpp"

#include <optional>

namespace pointsep {

CellAssignment classify(const PointSet& ps, const Arrangement& arr) {
  CellAssignment ca;
  const int n = ps.size();
  const int k = arr.k();
  ca.sign_vectors.assign(n, std::vector<int8_t>(k, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < k; ++j) {
      int s = arr.lines[j].side(ps[i]);
      if (s == 0) throw LineThroughPointError(j, i);
      ca.sign_vectors[i][j] = static_cast<int8_t>(s);
    }
    ca.cells[ca.sign_vectors[i]].push_back(i);
  }
  return ca;
}

int max_cell(const CellAssignment& ca) {
  size_t best = 0;
  for (const auto& [sv, ids] : ca.cells) best = std::max(best, ids.size());
  return static_cast<int>(best);
}

namespace {

bool lines_parallel(const ConcreteLine& l1, const ConcreteLine& l2) {
  return l1.a * l2.b - l1.b * l2.a == 0;
}

std::optional<Pt> line_intersection(const ConcreteLine& l1,
                                    const ConcreteLine& l2) {
  Rational det = l1.a * l2.b - l1.b * l2.a;
  if (det == 0) return std::nullopt;
  return Pt{(l1.c * l2.b - l2.c * l1.b) / det,
            (l1.a * l2.c - l2.a * l1.c) / det};
}

}  // namespace

bool arrangement_is_simple(const Arrangement& arr) {
  const int k = arr.k();
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (lines_parallel(arr.lines[i], arr.lines[j])) return false;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      auto q = line_intersection(arr.lines[i], arr.lines[j]);
      if (!q) continue;
      for (int t = j + 1; t < k; ++t)
        if (arr.lines[t].side(*q) == 0) return false;
    }
  }
  return true;
}

namespace {

// True if line t is parallel to an earlier line or concurrent with an
// earlier pair.
bool line_conflicts(const Arrangement& arr, int t) {
  for (int s = 0; s < t; ++s)
    if (lines_parallel(arr.lines[s], arr.lines[t])) return true;
  for (int s1 = 0; s1 < t; ++s1) {
    for (int s2 = s1 + 1; s2 < t; ++s2) {
      auto q = line_intersection(arr.lines[s1], arr.lines[s2]);
      if (q && arr.lines[t].side(*q) == 0) return true;
    }
  }
  return false;
}

}  // namespace

Arrangement make_simple(const Arrangement& arr, const PointSet& ps) {
  if (arrangement_is_simple(arr)) {
    Arrangement out = arr;
    out.simple_certified = true;
    return out;
  }

  Arrangement out = arr;
  const int k = out.k();
  for (int t = 0; t < k; ++t) {
    if (!line_conflicts(out, t)) continue;
    const ConcreteLine orig = out.lines[t];
    Pt nrm{orig.a, orig.b};
    Pt rot{-orig.b, orig.a};
    Rational nn = dot(nrm, nrm);

    // Pivot on the line, distinct from every earlier pairwise intersection
    // lying on it (a rotation about such a point could never clear the
    // concurrency there).
    Pt pivot{orig.a * orig.c / nn, orig.b * orig.c / nn};
    for (int shift = 0; shift < 1 + t * t; ++shift) {
      bool bad = false;
      for (int s1 = 0; s1 < t && !bad; ++s1)
        for (int s2 = s1 + 1; s2 < t && !bad; ++s2) {
          auto q = line_intersection(out.lines[s1], out.lines[s2]);
          if (q && *q == pivot) bad = true;
        }
      if (!bad) break;
      pivot = pivot + rot;
    }

    // Clearance-bounded rotation keeps every point's side.
    Rational clear(0);
    Rational reach(0);
    bool have = false;
    for (int i = 0; i < ps.size(); ++i) {
      Rational f = dot(nrm, ps[i]) - orig.c;
      if (f < 0) f = -f;
      if (f == 0) throw LineThroughPointError(t, i);
      if (!have || f < clear) {
        clear = f;
        have = true;
      }
      Rational g = dot(rot, ps[i] - pivot);
      if (g < 0) g = -g;
      if (g > reach) reach = g;
    }
    if (!have) clear = 1;
    Rational eps = clear / (2 * (reach + 1));

    for (int attempt = 0; attempt < 256; ++attempt) {
      Pt nrm2{nrm.x + eps * rot.x, nrm.y + eps * rot.y};
      out.lines[t] = ConcreteLine{nrm2.x, nrm2.y, dot(nrm2, pivot)};
      if (!line_conflicts(out, t)) break;
      eps /= 2;
      if (attempt == 255)
        throw VerificationError("make_simple: could not clear conflicts");
    }
  }

  // Sign vectors must be untouched.
  if (ps.size() > 0) {
    CellAssignment before = classify(ps, arr);
    CellAssignment after = classify(ps, out);
    if (before.sign_vectors != after.sign_vectors)
      throw VerificationError("make_simple: sign vector changed");
  }
  if (!arrangement_is_simple(out))
    throw VerificationError("make_simple: result not simple");
  out.simple_certified = true;
  return out;
}

Arrangement arrangement_from_bipartitions(const std::vector<Bipartition>& bps,
                                          const PointSet& ps) {
  Arrangement arr;
  arr.lines.reserve(bps.size());
  for (const auto& b : bps) arr.lines.push_back(realize_line(b, ps));
  return arr;
}

}  // namespace pointsep
