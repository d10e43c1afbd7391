#include "pointsep/tree.hpp"

#include "pointsep/bipartition.hpp"
#include "pointsep/bits.hpp"

#include <algorithm>
#include <queue>

namespace pointsep {

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

}  // namespace

bool tree_is_valid(const SpanningTree& t, int n) {
  if (static_cast<int>(t.edges.size()) != n - 1) return false;
  Dsu dsu(n);
  for (auto [u, v] : t.edges) {
    if (u < 0 || u >= n || v < 0 || v >= n || u == v) return false;
    if (!dsu.unite(u, v)) return false;  // cycle
  }
  return true;
}

std::vector<Segment> tree_segments(const SpanningTree& t, const PointSet& ps) {
  std::vector<Segment> out;
  out.reserve(t.edges.size());
  for (auto [u, v] : t.edges) out.push_back({ps[u], ps[v]});
  return out;
}

TreeResult low_stab_spanning_tree(const PointSet& ps, const TreeConfig& cfg) {
  const int n = ps.size();
  if (n < 2) throw InputError("low_stab_spanning_tree: needs N >= 2");

  // Deduplicated unordered test lines (a line and its side-swap act alike).
  std::vector<Bits> lines;
  {
    std::vector<Bipartition> bps = enumerate_bipartitions(ps);
    std::vector<Bits> seen;
    for (const auto& b : bps) {
      if (b.trivial()) continue;
      Bits canon = b.positive.get(0) ? b.positive.complement() : b.positive;
      seen.push_back(canon);
    }
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    lines = std::move(seen);
  }
  const int num_lines = static_cast<int>(lines.size());

  // Per-point signature over lines; an edge crosses line l iff the bits of
  // its endpoints differ.
  std::vector<Bits> sig(n, Bits(num_lines));
  for (int l = 0; l < num_lines; ++l)
    for (int p = 0; p < n; ++p)
      if (lines[l].get(p)) sig[p].set(l);

  std::vector<int> expo(num_lines, 0);  // weight of line l is 2^expo[l]

  auto edge_weight = [&](int u, int v) {
    // Exponent histogram over crossing lines, assembled exactly.
    std::vector<long> hist;
    const auto& wu = sig[u].words();
    const auto& wv = sig[v].words();
    for (size_t w = 0; w < wu.size(); ++w) {
      uint64_t x = wu[w] ^ wv[w];
      while (x) {
        int b = __builtin_ctzll(x);
        x &= x - 1;
        int l = static_cast<int>(w * 64 + b);
        if (static_cast<size_t>(expo[l]) >= hist.size())
          hist.resize(expo[l] + 1, 0);
        ++hist[expo[l]];
      }
    }
    BigInt total = 0;
    for (size_t c = 0; c < hist.size(); ++c) {
      if (!hist[c]) continue;
      BigInt term = hist[c];
      mpz_mul_2exp(term.get_mpz_t(), term.get_mpz_t(), c);
      total += term;
    }
    return total;
  };

  struct Entry {
    BigInt w;
    int u, v;
    int stamp;
  };
  struct EntryCmp {
    bool operator()(const Entry& a, const Entry& b) const {
      int c = cmp(a.w, b.w);
      if (c != 0) return c > 0;  // min-heap
      if (a.u != b.u) return a.u > b.u;
      return a.v > b.v;
    }
  };
  std::priority_queue<Entry, std::vector<Entry>, EntryCmp> heap;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      heap.push(Entry{BigInt(sig[u].count_xor(sig[v])), u, v, 0});

  Dsu dsu(n);
  TreeResult res;
  int round = 0;
  while (static_cast<int>(res.tree.edges.size()) < n - 1) {
    if (heap.empty())
      throw VerificationError("low_stab_spanning_tree: heap exhausted");
    Entry e = heap.top();
    heap.pop();
    if (dsu.find(e.u) == dsu.find(e.v)) continue;
    if (e.stamp != round) {
      // Weights only grow, so stale keys are lower bounds; refresh and retry.
      e.w = edge_weight(e.u, e.v);
      e.stamp = round;
      heap.push(std::move(e));
      continue;
    }
    dsu.unite(e.u, e.v);
    res.tree.edges.push_back({e.u, e.v});
    const auto& wu = sig[e.u].words();
    const auto& wv = sig[e.v].words();
    for (size_t w = 0; w < wu.size(); ++w) {
      uint64_t x = wu[w] ^ wv[w];
      while (x) {
        int b = __builtin_ctzll(x);
        x &= x - 1;
        expo[w * 64 + b] += cfg.doubling_step;
      }
    }
    ++round;
  }

  res.stab = stab_segments(tree_segments(res.tree, ps));
  return res;
}

std::vector<int> preorder_tour(const SpanningTree& t, const PointSet& ps,
                               int root) {
  const int n = ps.size();
  if (!tree_is_valid(t, n)) throw InputError("preorder_tour: invalid tree");
  if (root < 0 || root >= n) throw InputError("preorder_tour: bad root");

  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : t.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (int p = 0; p < n; ++p) {
    std::sort(adj[p].begin(), adj[p].end(), [&](int a, int b) {
      return angle_less(idir(ps[p], ps[a]), idir(ps[p], ps[b]));
    });
  }

  std::vector<int> out;
  out.reserve(n);
  std::vector<char> seen(n, 0);
  std::vector<int> stack{root};
  while (!stack.empty()) {
    int p = stack.back();
    stack.pop_back();
    if (seen[p]) continue;
    seen[p] = 1;
    out.push_back(p);
    for (auto it = adj[p].rbegin(); it != adj[p].rend(); ++it)
      if (!seen[*it]) stack.push_back(*it);
  }
  if (static_cast<int>(out.size()) != n)
    throw VerificationError("preorder_tour: tree not connected");
  return out;
}

}  // namespace pointsep
