#include "pointsep/svg.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace pointsep {

namespace {

struct Box {
  Rational x0, y0, x1, y1;
  bool any = false;
  void add(const Pt& p) {
    if (!any) {
      x0 = x1 = p.x;
      y0 = y1 = p.y;
      any = true;
      return;
    }
    if (p.x < x0) x0 = p.x;
    if (p.x > x1) x1 = p.x;
    if (p.y < y0) y0 = p.y;
    if (p.y > y1) y1 = p.y;
  }
};

// Intersection of a line with the box boundary, as a segment (if any).
std::optional<Segment> clip_line(const ConcreteLine& l, const Box& box) {
  std::vector<Pt> hits;
  auto push = [&](const Pt& p) {
    for (const Pt& q : hits)
      if (q == p) return;
    hits.push_back(p);
  };
  if (l.b != 0) {
    for (const Rational& x : {box.x0, box.x1}) {
      Rational y = (l.c - l.a * x) / l.b;
      if (y >= box.y0 && y <= box.y1) push(Pt{x, y});
    }
  }
  if (l.a != 0) {
    for (const Rational& y : {box.y0, box.y1}) {
      Rational x = (l.c - l.b * y) / l.a;
      if (x >= box.x0 && x <= box.x1) push(Pt{x, y});
    }
  }
  if (hits.size() < 2) return std::nullopt;
  // Extreme pair along the line direction.
  Pt dir{l.b, -l.a};
  size_t lo = 0, hi = 0;
  for (size_t i = 1; i < hits.size(); ++i) {
    if (dot(dir, hits[i]) < dot(dir, hits[lo])) lo = i;
    if (dot(dir, hits[i]) > dot(dir, hits[hi])) hi = i;
  }
  if (hits[lo] == hits[hi]) return std::nullopt;
  return Segment{hits[lo], hits[hi]};
}

// Parameter sub-intervals of segment s outside all given open half-planes.
std::vector<std::pair<Rational, Rational>> subtract_halfplanes(
    const Segment& s, const std::vector<HalfPlane>& hps) {
  std::vector<std::pair<Rational, Rational>> keep{{Rational(0), Rational(1)}};
  for (const auto& hp : hps) {
    Rational v0 = hp.side * (hp.line.a * s.a.x + hp.line.b * s.a.y - hp.line.c);
    Rational v1 = hp.side * (hp.line.a * s.b.x + hp.line.b * s.b.y - hp.line.c);
    // inside (removed) where v(t) = v0 + t (v1 - v0) > 0
    std::vector<std::pair<Rational, Rational>> next;
    for (auto [lo, hi] : keep) {
      auto value = [&](const Rational& t) { return v0 + t * (v1 - v0); };
      if (v0 == v1) {
        if (sgn(value(lo)) <= 0) next.push_back({lo, hi});
        continue;
      }
      Rational root = (0 - v0) / (v1 - v0);
      bool rising = v1 > v0;  // inside for t > root if rising
      if (rising) {
        Rational cap = std::min(hi, std::max(lo, root));
        if (cap > lo) next.push_back({lo, cap});
      } else {
        Rational cap = std::max(lo, std::min(hi, root));
        if (hi > cap) next.push_back({cap, hi});
      }
    }
    keep = std::move(next);
  }
  return keep;
}

class Emitter {
 public:
  Emitter(const Box& box) {
    if (box.any) {
      double x0 = mpq_get_d(box.x0.get_mpq_t());
      double x1 = mpq_get_d(box.x1.get_mpq_t());
      double y0 = mpq_get_d(box.y0.get_mpq_t());
      double y1 = mpq_get_d(box.y1.get_mpq_t());
      double w = std::max(x1 - x0, 1e-9);
      double h = std::max(y1 - y0, 1e-9);
      scale_ = 800.0 / std::max(w, h);
      ox_ = x0;
      oy_ = y1;  // y flips
      width_ = w * scale_ + 2 * margin_;
      height_ = h * scale_ + 2 * margin_;
    }
  }

  double width() const { return width_; }
  double height() const { return height_; }

  std::pair<double, double> map(const Pt& p) const {
    double x = mpq_get_d(p.x.get_mpq_t());
    double y = mpq_get_d(p.y.get_mpq_t());
    return {(x - ox_) * scale_ + margin_, (oy_ - y) * scale_ + margin_};
  }

  void line(const Pt& a, const Pt& b, const char* color, double w) {
    auto [xa, ya] = map(a);
    auto [xb, yb] = map(b);
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "<line x1=\"%.3f\" y1=\"%.3f\" x2=\"%.3f\" y2=\"%.3f\" "
                  "stroke=\"%s\" stroke-width=\"%.2f\"/>\n",
                  xa, ya, xb, yb, color, w);
    body_ << buf;
  }

  void circle(const Pt& c, double r, const char* fill, const char* stroke) {
    auto [x, y] = map(c);
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "<circle cx=\"%.3f\" cy=\"%.3f\" r=\"%.2f\" fill=\"%s\" "
                  "stroke=\"%s\"/>\n",
                  x, y, r, fill, stroke);
    body_ << buf;
  }

  void polyline(const std::vector<Pt>& pts, bool closed, const char* color) {
    body_ << (closed ? "<polygon" : "<polyline") << " points=\"";
    char buf[64];
    for (const Pt& p : pts) {
      auto [x, y] = map(p);
      std::snprintf(buf, sizeof buf, "%.3f,%.3f ", x, y);
      body_ << buf;
    }
    body_ << "\" fill=\"none\" stroke=\"" << color
          << "\" stroke-width=\"1.5\"/>\n";
  }

  std::string finish() const {
    std::ostringstream os;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" "
                  "height=\"%.0f\" viewBox=\"0 0 %.0f %.0f\">\n",
                  width_, height_, width_, height_);
    os << buf << body_.str() << "</svg>\n";
    return os.str();
  }

 private:
  double scale_ = 1, ox_ = 0, oy_ = 0;
  double width_ = 100, height_ = 100;
  double margin_ = 20;
  std::ostringstream body_;
};

}  // namespace

std::string render_svg(const Scene& scene) {
  Box box;
  if (scene.points)
    for (const Pt& p : scene.points->points()) box.add(p);
  for (const auto& c : scene.curves)
    for (const Pt& p : c.vertices) box.add(p);
  if (scene.tree) {
    if (!scene.points)
      throw InputError("render_svg: tree layer needs a point layer");
    for (auto [u, v] : scene.tree->edges) {
      if (u < 0 || v < 0 || u >= scene.points->size() ||
          v >= scene.points->size())
        throw InputError("render_svg: tree references missing points");
    }
  }
  for (int id : scene.highlight_ids) {
    if (!scene.points || id < 0 || id >= scene.points->size())
      throw InputError("render_svg: highlight id does not resolve");
  }

  Emitter em(box);
  if (!box.any) return em.finish();  // empty canvas

  // Slight bbox inflation so content does not sit on the border.
  Box draw = box;
  {
    Rational w = box.x1 - box.x0, h = box.y1 - box.y0;
    Rational pad = (w > h ? w : h) / 20 + Rational(1, 100);
    draw.x0 -= pad;
    draw.x1 += pad;
    draw.y0 -= pad;
    draw.y1 += pad;
  }
  Emitter out(draw);

  if (scene.arrangement) {
    for (const auto& l : scene.arrangement->lines)
      if (auto s = clip_line(l, draw)) out.line(s->a, s->b, "#4c78a8", 1.2);
  }
  if (scene.cutting) {
    const auto& pc = *scene.cutting;
    if (auto s = clip_line(pc.split_line, draw))
      out.line(s->a, s->b, "#8c1d1d", 1.8);
    std::vector<HalfPlane> earlier;
    for (const auto& q : pc.cuts) {
      if (auto s = clip_line(q.line, draw)) {
        for (auto [lo, hi] : subtract_halfplanes(*s, earlier)) {
          Pt d = s->b - s->a;
          Pt a{s->a.x + lo * d.x, s->a.y + lo * d.y};
          Pt b{s->a.x + hi * d.x, s->a.y + hi * d.y};
          out.line(a, b, "#e6760c", 1.6);
        }
      }
      earlier.push_back(q);
    }
  }
  if (scene.tree && scene.points) {
    for (auto [u, v] : scene.tree->edges)
      out.line((*scene.points)[u], (*scene.points)[v], "#999999", 1.2);
  }
  for (const auto& c : scene.curves) out.polyline(c.vertices, true, "#2a7d2a");
  if (scene.points) {
    for (int i = 0; i < scene.points->size(); ++i)
      out.circle((*scene.points)[i], 2.4, "#222222", "none");
    for (int id : scene.highlight_ids)
      out.circle((*scene.points)[id], 4.5, "none", "#d62728");
  }
  return out.finish();
}

}  // namespace pointsep
