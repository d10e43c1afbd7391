#pragma once

#include "pointsep/arrangement.hpp"
#include "pointsep/curve.hpp"
#include "pointsep/cutting.hpp"
#include "pointsep/geom.hpp"
#include "pointsep/pipeline.hpp"
#include "pointsep/tree.hpp"

#include <string>
#include <vector>

namespace pointsep {

// Text formats. Output rationals are canonical "p" or "p/q"; input also
// accepts exact decimals. Parse errors carry file:line:column diagnostics.
// Serialization followed by parsing is the identity on every emitted file,
// and loaders re-verify the invariants of what they read.

std::string write_pointset(const PointSet& ps);
PointSet read_pointset(const std::string& text, const std::string& name);

std::string write_arrangement(const Arrangement& arr);
Arrangement read_arrangement(const std::string& text, const std::string& name);

std::string write_curve(const PolygonalCurve& c);
PolygonalCurve read_curve(const std::string& text, const std::string& name);

std::string write_tree(const SpanningTree& t, int n);
SpanningTree read_tree(const std::string& text, const std::string& name,
                       int* n_out = nullptr);

std::string write_order(const std::vector<int>& order);
std::vector<int> read_order(const std::string& text, const std::string& name);

std::string write_cutting(const PartialCutting& pc);
// Re-verifies carved-cell membership against the reconstructed constraints.
PartialCutting read_cutting(const std::string& text, const std::string& name,
                            const PointSet& ps);

std::string write_fnd_witness(const FndWitness& w);
// Runs verify_fnd_witness before returning.
FndWitness read_fnd_witness(const std::string& text, const std::string& name,
                            const PointSet& ps);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace pointsep
