#pragma once

#include "pointsep/curve.hpp"
#include "pointsep/geom.hpp"
#include "pointsep/stab.hpp"

#include <utility>
#include <vector>

namespace pointsep {

struct SpanningTree {
  std::vector<std::pair<int, int>> edges;  // N-1 id pairs, connected, acyclic
};

struct TreeResult {
  SpanningTree tree;
  StabReport stab;  // measured on the edge union
};

struct TreeConfig {
  // Multiplicative-weights parameters: each chosen edge multiplies the
  // weight of every test line it crosses by 2^step. Test lines are all
  // deduplicated bipartitions of the point set; edge candidates are all
  // point pairs.
  int doubling_step = 1;
};

// Spanning tree by iterative reweighting: repeatedly add the edge of minimum
// weighted crossing number joining two components, then double the weight of
// every test line the new edge crosses. Exact integer weights; deterministic
// lexicographic tie-break.
TreeResult low_stab_spanning_tree(const PointSet& ps,
                                  const TreeConfig& cfg = {});

// First-visit depth-first order, children taken counterclockwise by angle
// around their parent.
std::vector<int> preorder_tour(const SpanningTree& t, const PointSet& ps,
                               int root);

std::vector<Segment> tree_segments(const SpanningTree& t, const PointSet& ps);

// Connected, acyclic, N-1 edges.
bool tree_is_valid(const SpanningTree& t, int n);

}  // namespace pointsep
