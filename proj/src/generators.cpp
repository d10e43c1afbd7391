#include "pointsep/generators.hpp"

#include "pointsep/hull.hpp"
#include "pointsep/rng.hpp"

#include <algorithm>
#include <cmath>

namespace pointsep {

Rational sqrt_floor(const Rational& v, unsigned grid_bits) {
  if (sgn(v) < 0) throw InputError("sqrt_floor: negative input");
  BigInt num = v.get_num();
  mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), 2 * grid_bits);
  BigInt scaled;
  mpz_fdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), v.get_den().get_mpz_t());
  BigInt root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  BigInt den(1);
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), grid_bits);
  Rational out(root, den);
  out.canonicalize();
  return out;
}

PointSet gen_random(int n, uint64_t seed) {
  if (n < 0) throw InputError("gen_random: n >= 0");
  Rng rng(mix_seed(seed, 0x72616e646f6dull));
  const BigInt den = BigInt(1) << 53;
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<Pt> pts;
    pts.reserve(n);
    for (int i = 0; i < n; ++i) {
      Rational x(BigInt(rng.bits(53)), den);
      Rational y(BigInt(rng.bits(53)), den);
      x.canonicalize();
      y.canonicalize();
      pts.push_back({x, y});
    }
    if (check_general_position(pts).ok) return PointSet(std::move(pts));
  }
  throw VerificationError("gen_random: could not reach general position");
}

PointSet gen_convex(int n, uint64_t seed) {
  if (n < 3) throw InputError("gen_convex: n >= 3");
  Rng rng(mix_seed(seed, 0x636f6e766578ull));
  std::vector<Pt> pts;
  pts.reserve(n);
  for (int i = 0; i < n; ++i) {
    // Spacing is combinatorially irrelevant; any distinct parameters give
    // distinct points on the circle.
    Rational t(BigInt(i) * (BigInt(1) << 20) + BigInt(rng.bits(20)),
               BigInt(1) << 20);
    t.canonicalize();
    Rational t2 = t * t;
    Rational den = t2 + 1;
    pts.push_back({(1 - t2) / den, 2 * t / den});
  }
  PointSet out(std::move(pts));
  return out;
}

PointSet gen_perturbed_grid(int w, int h, uint64_t seed) {
  if (w < 1 || h < 1) throw InputError("gen_perturbed_grid: w,h >= 1");
  Rng rng(mix_seed(seed, 0x67726964ull));
  const BigInt den = BigInt(1) << 42;
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<Pt> pts;
    pts.reserve(static_cast<size_t>(w) * h);
    for (int j = 0; j < h; ++j) {
      for (int i = 0; i < w; ++i) {
        // jitter in (-1/4, 1/4)
        BigInt jx = BigInt(rng.bits(40)) - (BigInt(1) << 39);
        BigInt jy = BigInt(rng.bits(40)) - (BigInt(1) << 39);
        Rational x = BigInt(i) + Rational(jx, den);
        Rational y = BigInt(j) + Rational(jy, den);
        x.canonicalize();
        y.canonicalize();
        pts.push_back({x, y});
      }
    }
    if (check_general_position(pts).ok) return PointSet(std::move(pts));
  }
  throw VerificationError("gen_perturbed_grid: could not reach general position");
}

namespace {

// Exact point on the circle of radius r centered at c, parametrized by the
// tangent half-angle u = tan(theta/2), theta in (0, pi) for u > 0.
Pt circle_point(const Pt& c, const Rational& r, const Rational& u) {
  Rational u2 = u * u;
  Rational den = u2 + 1;
  return Pt{c.x + r * (1 - u2) / den, c.y + r * 2 * u / den};
}

// Rational parameter whose circle point has abscissa close to x (|x| < r).
Rational u_for_abscissa(const Pt& c, const Rational& r, const Rational& x,
                        unsigned grid_bits) {
  Rational rel = (x - c.x) / r;  // target cos(theta)
  Rational arg = (1 - rel) / (1 + rel);
  return sqrt_floor(arg, grid_bits);
}

struct LocalPiece {
  std::vector<Pt> verts;          // open polyline, left to right
  std::vector<int> member_bump;   // -1 or bump index (1-based)
  std::vector<int> member_slot;   // -1 or member index within the bump
  Pt left_end, right_end;
  Rational base_y;
};

struct BuildParams {
  int m;
  Rational t;       // bump radius
  Rational window;  // member cluster half-width in the u-parameter
  Rational p;       // abscissa spread divisor
  unsigned grid;    // sqrt grid bits
};

// One bumped-semicircle edge curve on the unit circle, restricted to
// |x| <= cut. Bumps hang below the big arc at abscissae A_k, joined by
// vertical connectors; the M member points per bump sit on the bump circle
// clustered around its top.
LocalPiece build_piece(const BuildParams& bp, const Rational& cut, Rng& rng) {
  const int m = bp.m;
  LocalPiece piece;
  const Pt origin{Rational(0), Rational(0)};

  std::vector<Rational> bump_x(m + 1);
  for (int k = 1; k <= m; ++k)
    bump_x[k] = Rational(k) / (bp.p * (m + 1));

  auto arc_y = [&](const Rational& x) {
    return sqrt_floor(1 - x * x, bp.grid);
  };
  auto push = [&](const Pt& pt, int bump = -1, int slot = -1) {
    piece.verts.push_back(pt);
    piece.member_bump.push_back(bump);
    piece.member_slot.push_back(slot);
  };
  // Exact-on-circle arc samples strictly between two abscissae.
  auto push_arc = [&](const Rational& x0, const Rational& x1, int fills) {
    for (int f = 1; f <= fills; ++f) {
      Rational x = x0 + (x1 - x0) * f / (fills + 1);
      Rational u = u_for_abscissa(origin, Rational(1), x, 22);
      if (u <= 0) continue;
      Pt pt = circle_point(origin, Rational(1), u);
      if (!piece.verts.empty() && cmp(pt.x, piece.verts.back().x) <= 0)
        continue;  // keep x strictly increasing
      push(pt);
    }
  };

  Rational yl = arc_y(cut);
  piece.base_y = yl;
  piece.left_end = Pt{-cut, yl};
  push(piece.left_end);
  push_arc(-cut, bump_x[1] - bp.t, 14);

  for (int k = 1; k <= m; ++k) {
    Rational xa = bump_x[k] - bp.t;
    Rational xb = bump_x[k] + bp.t;
    Rational ya = arc_y(xa);
    Rational yb = arc_y(xb);
    Rational hk = arc_y(bump_x[k]) - 2 * bp.t;  // bump center height
    if (!(hk + bp.t < ya && hk + bp.t < yb))
      throw VerificationError("gen_bumped_curve: bump pokes above the arc");

    push(Pt{xa, ya});       // connector top, left
    push(Pt{xa, hk});       // bump left end (u -> infinity side)
    const Pt bc{bump_x[k], hk};
    // Ladder of u values, descending = left-to-right along the bump.
    std::vector<Rational> us;
    for (int c : {4, 2}) us.push_back(Rational(c));
    std::vector<Rational> members;
    for (int s = 0; s < m; ++s) {
      Rational off = bp.window * (2 * s - (m - 1)) / (2 * m);
      Rational jit =
          bp.window * Rational(BigInt(rng.bits(16)), BigInt(1) << 16) /
          (8 * m);
      members.push_back(1 + off + jit);
    }
    std::sort(members.begin(), members.end(),
              [](const Rational& a, const Rational& b) { return cmp(a, b) > 0; });
    for (const Rational& u : members) us.push_back(u);
    us.push_back(Rational(1, 2));
    us.push_back(Rational(1, 4));

    size_t member_from = us.size() - 2 - m;
    int slot = 0;
    for (size_t i = 0; i < us.size(); ++i) {
      bool is_member = i >= member_from && i < member_from + m;
      push(circle_point(bc, bp.t, us[i]), is_member ? k : -1,
           is_member ? slot : -1);
      if (is_member) ++slot;
    }
    push(Pt{xb, hk});  // bump right end (u = 0)
    push(Pt{xb, yb});  // connector top, right

    Rational next = k < m ? Rational(bump_x[k + 1] - bp.t) : cut;
    push_arc(xb, next, k < m ? 3 : 6);
  }
  piece.right_end = Pt{cut, yl};
  push(piece.right_end);
  return piece;
}

Pt rot_scale(const Pt& z, const Pt& d, const Rational& lambda, const Pt& mid) {
  return Pt{mid.x + lambda * (d.x * z.x - d.y * z.y),
            mid.y + lambda * (d.y * z.x + d.x * z.y)};
}

// cos/sin of 2*pi*j/m rounded to the grid; convexity of the polygon is
// verified by the caller via orientation tests.
Pt gon_vertex(int j, int m, unsigned grid_bits) {
  double ang = 2.0 * M_PI * j / m;
  double scale = std::ldexp(1.0, grid_bits);
  BigInt cx(static_cast<long>(std::floor(std::cos(ang) * scale)));
  BigInt cy(static_cast<long>(std::floor(std::sin(ang) * scale)));
  BigInt den = BigInt(1) << grid_bits;
  Rational x(cx, den), y(cy, den);
  x.canonicalize();
  y.canonicalize();
  return Pt{x, y};
}

}  // namespace

BumpedCurveInstance gen_bumped_curve(int m, uint64_t seed) {
  if (m < 2) throw InputError("gen_bumped_curve: M >= 2");
  Rng rng(mix_seed(seed, 0x74333268ull));

  BumpedCurveInstance inst;
  inst.m = m;
  inst.scale = 1;
  inst.spread = 10;

  BuildParams bp;
  bp.m = m;
  bp.p = inst.spread;
  bp.t = Rational(1) / (100 * m * m);
  bp.window = Rational(1) / (100 * m);
  bp.grid = 40;

  std::string last_failure = "unknown";
  for (int attempt = 0; attempt < 8; ++attempt) {
    try {
      Rational a1 = Rational(1) / (bp.p * (m + 1));
      Rational am = Rational(m) / (bp.p * (m + 1));
      Rational cut = am + a1;

      LocalPiece piece = build_piece(bp, cut, rng);

      // Full single-edge curve: the piece plus the rest of the semicircle
      // down to the diameter, measured as an open union.
      std::vector<Segment> single;
      {
        std::vector<Pt> chain;
        chain.push_back(Pt{Rational(-1), Rational(0)});
        for (int f = 1; f <= 20; ++f) {
          Rational x = -1 + (1 - cut) * f / 21;
          Rational u = u_for_abscissa(Pt{Rational(0), Rational(0)},
                                      Rational(1), x, 22);
          Pt pt = circle_point(Pt{Rational(0), Rational(0)}, Rational(1), u);
          if (cmp(pt.x, chain.back().x) > 0) chain.push_back(pt);
        }
        for (const Pt& v : piece.verts)
          if (chain.empty() || !(v == chain.back())) chain.push_back(v);
        for (int f = 1; f <= 20; ++f) {
          Rational x = cut + (1 - cut) * f / 21;
          Rational u = u_for_abscissa(Pt{Rational(0), Rational(0)},
                                      Rational(1), x, 22);
          Pt pt = circle_point(Pt{Rational(0), Rational(0)}, Rational(1), u);
          if (cmp(pt.x, chain.back().x) > 0) chain.push_back(pt);
        }
        Pt end{Rational(1), Rational(0)};
        if (!(end == chain.back())) chain.push_back(end);
        for (size_t i = 0; i + 1 < chain.size(); ++i)
          single.push_back({chain[i], chain[i + 1]});
      }
      inst.stab_single = stab_union(CurveUnion{single}).value;
      if (inst.stab_single > 10)
        throw VerificationError("single curve stab " +
                                std::to_string(inst.stab_single) + " > 10");

      // Bump neighborhoods: rectangles around bump + connectors; no line
      // may split more than two of them.
      {
        std::vector<std::vector<Pt>> groups;
        for (int k = 1; k <= m; ++k) {
          Rational xa = Rational(k) / (bp.p * (m + 1)) - bp.t;
          Rational xb = Rational(k) / (bp.p * (m + 1)) + bp.t;
          Rational pad = bp.t / 4;
          Rational lo =
              sqrt_floor(1 - xb * xb, bp.grid) - 3 * bp.t;  // below bump
          Rational hi = sqrt_floor(1 - xa * xa, bp.grid) + pad;
          groups.push_back({Pt{xa - pad, lo}, Pt{xb + pad, lo},
                            Pt{xb + pad, hi}, Pt{xa - pad, hi}});
        }
        inst.max_bumps_hit = max_groups_split(groups);
        if (inst.max_bumps_hit > 2)
          throw VerificationError("a line can split " +
                                  std::to_string(inst.max_bumps_hit) +
                                  " bump neighborhoods");
      }

      // Assembly on a (near-)regular M-gon, pieces facing inward.
      std::vector<Pt> gon;
      if (m == 2) {
        gon = {Pt{Rational(-1), Rational(0)}, Pt{Rational(1), Rational(0)}};
      } else {
        for (int j = 0; j < m; ++j) gon.push_back(gon_vertex(j, m, 20));
        for (int j = 0; j < m; ++j) {
          if (orientation_sign(gon[j], gon[(j + 1) % m], gon[(j + 2) % m]) <= 0)
            throw VerificationError("rounded gon not convex");
        }
      }

      PolygonalCurve assembled;
      std::vector<Pt> members(static_cast<size_t>(m) * m * m);
      inst.bump_index.assign(static_cast<size_t>(m) * m * m, {-1, -1});
      const Rational lambda = Rational(3, 5) / (2 * cut);
      for (int j = 0; j < m; ++j) {
        const Pt& g0 = gon[j];
        const Pt& g1 = gon[(j + 1) % m];
        Pt d = g1 - g0;
        Pt mid{(g0.x + g1.x) / 2, (g0.y + g1.y) / 2};
        if (m > 2) {
          // Corner of the gon, then the inward piece; the edge remnants are
          // the spans between the corner and the piece base.
          assembled.vertices.push_back(g0);
          assembled.vertex_id.push_back(-1);
        }
        for (size_t i = 0; i < piece.verts.size(); ++i) {
          // For m == 2 both digon edges coincide, so the two piece bases
          // share their endpoints: drop the duplicates and join the pieces
          // into a lens.
          if (m == 2 && j == 1 && (i == 0 || i + 1 == piece.verts.size()))
            continue;
          Pt local{piece.verts[i].x, piece.verts[i].y - piece.base_y};
          Pt world = rot_scale(local, d, lambda, mid);
          int id = -1;
          if (piece.member_bump[i] > 0) {
            int k = piece.member_bump[i];
            int s = piece.member_slot[i];
            id = j * m * m + (k - 1) * m + s;
            members[id] = world;
            inst.bump_index[id] = {j, k};
          }
          assembled.vertices.push_back(world);
          assembled.vertex_id.push_back(id);
        }
      }

      if (!polygon_is_simple(assembled))
        throw VerificationError("assembled curve not simple");

      auto gp = check_general_position(members);
      if (!gp.ok)
        throw VerificationError("members not in general position");

      inst.stab_assembled = stab_segments(assembled.edges()).value;
      if (inst.stab_assembled > 22)
        throw VerificationError("assembled stab " +
                                std::to_string(inst.stab_assembled) + " > 22");

      inst.points = PointSet(std::move(members));
      inst.assembled = std::move(assembled);
      inst.single_g = std::move(single);
      inst.bump_radius = bp.t;
      inst.window = bp.window;
      return inst;
    } catch (const VerificationError& e) {
      last_failure = e.what();
      bp.t /= 2;
      bp.window /= 2;
      bp.grid += 4;
    }
  }
  throw VerificationError("gen_bumped_curve: certification failed after retries: " +
                          last_failure);
}

}  // namespace pointsep
