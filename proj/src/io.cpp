#include "pointsep/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace pointsep {

namespace {

// Line-oriented tokenizer with positions for diagnostics.
class Reader {
 public:
  Reader(const std::string& text, std::string name)
      : name_(std::move(name)) {
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) lines_.push_back(line);
  }

  [[noreturn]] void fail(const std::string& msg, int col = 1) const {
    throw InputError(name_ + ":" + std::to_string(cur_ + 1) + ":" +
                     std::to_string(col) + ": " + msg);
  }

  bool next_line() {
    while (cur_ + 1 < static_cast<int>(lines_.size())) {
      ++cur_;
      toks_.clear();
      cols_.clear();
      const std::string& l = lines_[cur_];
      size_t i = 0;
      while (i < l.size()) {
        while (i < l.size() && std::isspace(static_cast<unsigned char>(l[i])))
          ++i;
        if (i >= l.size()) break;
        if (l[i] == '#') break;  // comment to end of line
        size_t j = i;
        while (j < l.size() && !std::isspace(static_cast<unsigned char>(l[j])))
          ++j;
        toks_.push_back(l.substr(i, j - i));
        cols_.push_back(static_cast<int>(i) + 1);
        i = j;
      }
      if (!toks_.empty()) return true;
    }
    return false;
  }

  void expect_line(const std::string& head) {
    if (!next_line() || toks_[0] != head)
      fail("expected '" + head + "'");
  }

  const std::vector<std::string>& tokens() const { return toks_; }
  int col(size_t i) const {
    return i < cols_.size() ? cols_[i] : 1;
  }

  long get_int(size_t i) const {
    if (i >= toks_.size()) fail("missing integer field");
    try {
      size_t used = 0;
      long v = std::stol(toks_[i], &used);
      if (used != toks_[i].size()) throw std::invalid_argument("trail");
      return v;
    } catch (...) {
      fail("expected integer, got '" + toks_[i] + "'", col(i));
    }
  }

  Rational get_rational(size_t i) const {
    if (i >= toks_.size()) fail("missing rational field");
    auto q = parse_rational(toks_[i]);
    if (!q) fail("expected rational, got '" + toks_[i] + "'", col(i));
    return *q;
  }

  size_t token_count() const { return toks_.size(); }

 private:
  std::string name_;
  std::vector<std::string> lines_;
  std::vector<std::string> toks_;
  std::vector<int> cols_;
  int cur_ = -1;
};

std::string fmt(const Rational& q) { return format_rational(q); }

}  // namespace

std::string write_pointset(const PointSet& ps) {
  std::ostringstream os;
  os << "pointset v1\n";
  os << "n " << ps.size() << "\n";
  for (int i = 0; i < ps.size(); ++i)
    os << i << " " << fmt(ps[i].x) << " " << fmt(ps[i].y) << "\n";
  return os.str();
}

PointSet read_pointset(const std::string& text, const std::string& name) {
  Reader r(text, name);
  r.expect_line("pointset");
  r.expect_line("n");
  long n = r.get_int(1);
  if (n < 0) r.fail("negative point count");
  std::vector<Pt> pts;
  pts.reserve(n);
  for (long i = 0; i < n; ++i) {
    if (!r.next_line()) r.fail("unexpected end of point rows");
    if (r.get_int(0) != i) r.fail("ids must be dense from 0");
    pts.push_back({r.get_rational(1), r.get_rational(2)});
  }
  return PointSet(std::move(pts));
}

std::string write_arrangement(const Arrangement& arr) {
  std::ostringstream os;
  os << "arrangement v1\n";
  os << "k " << arr.k() << "\n";
  for (const auto& l : arr.lines)
    os << "line " << fmt(l.a) << " " << fmt(l.b) << " " << fmt(l.c) << "\n";
  return os.str();
}

Arrangement read_arrangement(const std::string& text,
                             const std::string& name) {
  Reader r(text, name);
  r.expect_line("arrangement");
  r.expect_line("k");
  long k = r.get_int(1);
  Arrangement arr;
  for (long i = 0; i < k; ++i) {
    r.expect_line("line");
    ConcreteLine l{r.get_rational(1), r.get_rational(2), r.get_rational(3)};
    if (l.a == 0 && l.b == 0) r.fail("degenerate line");
    arr.lines.push_back(std::move(l));
  }
  return arr;
}

std::string write_curve(const PolygonalCurve& c) {
  std::ostringstream os;
  os << "curve v1\n";
  os << "m " << c.size() << "\n";
  for (int i = 0; i < c.size(); ++i)
    os << "v " << c.vertex_id[i] << " " << fmt(c.vertices[i].x) << " "
       << fmt(c.vertices[i].y) << "\n";
  return os.str();
}

PolygonalCurve read_curve(const std::string& text, const std::string& name) {
  Reader r(text, name);
  r.expect_line("curve");
  r.expect_line("m");
  long m = r.get_int(1);
  if (m < 3) r.fail("curve needs at least 3 vertices");
  PolygonalCurve c;
  for (long i = 0; i < m; ++i) {
    r.expect_line("v");
    c.vertex_id.push_back(static_cast<int>(r.get_int(1)));
    c.vertices.push_back({r.get_rational(2), r.get_rational(3)});
  }
  return c;
}

std::string write_tree(const SpanningTree& t, int n) {
  std::ostringstream os;
  os << "tree v1\n";
  os << "n " << n << "\n";
  for (auto [u, v] : t.edges) os << "edge " << u << " " << v << "\n";
  return os.str();
}

SpanningTree read_tree(const std::string& text, const std::string& name,
                       int* n_out) {
  Reader r(text, name);
  r.expect_line("tree");
  r.expect_line("n");
  long n = r.get_int(1);
  SpanningTree t;
  for (long i = 0; i + 1 < n; ++i) {
    r.expect_line("edge");
    t.edges.push_back({static_cast<int>(r.get_int(1)),
                       static_cast<int>(r.get_int(2))});
  }
  if (!tree_is_valid(t, static_cast<int>(n)))
    throw InputError(name + ": not a spanning tree");
  if (n_out) *n_out = static_cast<int>(n);
  return t;
}

std::string write_order(const std::vector<int>& order) {
  std::ostringstream os;
  os << "order v1\n";
  os << "n " << order.size() << "\n";
  for (int id : order) os << id << "\n";
  return os.str();
}

std::vector<int> read_order(const std::string& text, const std::string& name) {
  Reader r(text, name);
  r.expect_line("order");
  r.expect_line("n");
  long n = r.get_int(1);
  std::vector<int> out;
  for (long i = 0; i < n; ++i) {
    if (!r.next_line()) r.fail("unexpected end of order rows");
    out.push_back(static_cast<int>(r.get_int(0)));
  }
  return out;
}

std::string write_cutting(const PartialCutting& pc) {
  std::ostringstream os;
  os << "partial-cutting v1\n";
  os << "quota " << pc.quota << "\n";
  os << "lines " << pc.cuts.size() + 1 << "\n";
  os << "split " << fmt(pc.split_line.a) << " " << fmt(pc.split_line.b) << " "
     << fmt(pc.split_line.c) << "\n";
  for (const auto& q : pc.cuts)
    os << "cut " << fmt(q.line.a) << " " << fmt(q.line.b) << " "
       << fmt(q.line.c) << " " << (q.side > 0 ? "+" : "-") << "\n";
  for (const auto& cell : pc.cells) {
    os << "cell " << cell.cut_index << " "
       << (cell.split_side > 0 ? "+" : "-") << " " << cell.members.size();
    for (int id : cell.members) os << " " << id;
    os << "\n";
  }
  os << "residual " << pc.residual.size();
  for (int id : pc.residual) os << " " << id;
  os << "\n";
  return os.str();
}

PartialCutting read_cutting(const std::string& text, const std::string& name,
                            const PointSet& ps) {
  Reader r(text, name);
  r.expect_line("partial-cutting");
  r.expect_line("quota");
  long quota = r.get_int(1);
  r.expect_line("lines");
  long lines = r.get_int(1);
  r.expect_line("split");
  PartialCutting pc;
  pc.quota = static_cast<int>(quota);
  pc.split_line = {r.get_rational(1), r.get_rational(2), r.get_rational(3)};
  for (long i = 2; i <= lines; ++i) {
    r.expect_line("cut");
    HalfPlane hp;
    hp.line = {r.get_rational(1), r.get_rational(2), r.get_rational(3)};
    const auto& toks = r.tokens();
    if (toks.size() < 5 || (toks[4] != "+" && toks[4] != "-"))
      r.fail("cut needs a side marker (+ or -)");
    hp.side = toks[4] == "+" ? 1 : -1;
    pc.cuts.push_back(std::move(hp));
  }
  for (long i = 0; i < 2 * (lines - 1); ++i) {
    r.expect_line("cell");
    CarvedCell cell;
    cell.cut_index = static_cast<int>(r.get_int(1));
    const auto& toks = r.tokens();
    if (toks.size() < 4 || (toks[2] != "+" && toks[2] != "-"))
      r.fail("cell needs a split-side marker");
    cell.split_side = toks[2] == "+" ? 1 : -1;
    long cnt = r.get_int(3);
    for (long j = 0; j < cnt; ++j)
      cell.members.push_back(static_cast<int>(r.get_int(4 + j)));
    if (cell.cut_index < 2 || cell.cut_index > static_cast<int>(lines))
      r.fail("cell cut index out of range");
    // Reconstruct the constraint list.
    cell.constraints.push_back(HalfPlane{pc.split_line, cell.split_side});
    for (int s = 2; s < cell.cut_index; ++s)
      cell.constraints.push_back(
          HalfPlane{pc.cuts[s - 2].line, -pc.cuts[s - 2].side});
    cell.constraints.push_back(pc.cuts[cell.cut_index - 2]);
    pc.cells.push_back(std::move(cell));
  }
  r.expect_line("residual");
  long cnt = r.get_int(1);
  for (long j = 0; j < cnt; ++j)
    pc.residual.push_back(static_cast<int>(r.get_int(2 + j)));

  // Verification-on-load: members must re-derive from the constraints.
  for (const auto& cell : pc.cells) {
    if (static_cast<int>(cell.members.size()) != pc.quota)
      throw InputError(name + ": carved cell size != quota");
    std::vector<int> eval;
    for (int id = 0; id < ps.size(); ++id) {
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
      throw InputError(name + ": carved cell does not match its constraints");
  }
  return pc;
}

std::string write_fnd_witness(const FndWitness& w) {
  std::ostringstream os;
  os << "fnd-witness v1\n";
  os << "n " << w.target_n << "\n";
  os << "d " << w.target_d << "\n";
  os << "h " << w.h_used << "\n";
  os << "stab " << w.measured_stab << "\n";
  os << "union-stab " << w.union_stab << "\n";
  os << "cellsizes " << w.per_cell_convex_sizes.size();
  for (int s : w.per_cell_convex_sizes) os << " " << s;
  os << "\n";
  os << "subset " << w.subset_ids.size();
  for (int id : w.subset_ids) os << " " << id;
  os << "\n";
  os << write_curve(w.curve);
  return os.str();
}

FndWitness read_fnd_witness(const std::string& text, const std::string& name,
                            const PointSet& ps) {
  Reader r(text, name);
  r.expect_line("fnd-witness");
  FndWitness w;
  r.expect_line("n");
  w.target_n = static_cast<int>(r.get_int(1));
  r.expect_line("d");
  w.target_d = static_cast<int>(r.get_int(1));
  r.expect_line("h");
  w.h_used = static_cast<int>(r.get_int(1));
  r.expect_line("stab");
  w.measured_stab = static_cast<int>(r.get_int(1));
  r.expect_line("union-stab");
  w.union_stab = static_cast<int>(r.get_int(1));
  r.expect_line("cellsizes");
  long cs = r.get_int(1);
  for (long i = 0; i < cs; ++i)
    w.per_cell_convex_sizes.push_back(static_cast<int>(r.get_int(2 + i)));
  r.expect_line("subset");
  long sc = r.get_int(1);
  for (long i = 0; i < sc; ++i)
    w.subset_ids.push_back(static_cast<int>(r.get_int(2 + i)));
  r.expect_line("curve");
  r.expect_line("m");
  long m = r.get_int(1);
  for (long i = 0; i < m; ++i) {
    r.expect_line("v");
    w.curve.vertex_id.push_back(static_cast<int>(r.get_int(1)));
    w.curve.vertices.push_back({r.get_rational(2), r.get_rational(3)});
  }
  verify_fnd_witness(w, ps);
  return w;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << content;
}

}  // namespace pointsep
