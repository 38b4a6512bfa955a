#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "vsl/schroeder.hpp"
#include "vsl/symfunc.hpp"

namespace vsl {

/// kappa[v] for v = 1..n; index 0 is unused.
using Coloring = std::vector<int>;

/// Orientation of the non-strict edges of a graph: bit i set means plain_edges()[i]
/// is directed from its smaller to its larger vertex (an ascent). Strict edges are
/// always directed upward.
struct Orientation {
  std::uint32_t mask = 0;
};

/// Non-strict edges (a,b) with kappa(a) < kappa(b). InvalidColoring when a strict edge is violated.
int asc_coloring(const DecoratedGraph& g, const Coloring& kappa);

/// Sum of q^asc over colorings whose color multiset is given by content:
/// content[i] vertices receive color i + 1. Proper restricts to colorings that
/// differ on every edge.
Coeff coloring_sum(const DecoratedGraph& g, const std::vector<int>& content, bool proper = false);

/// G_P(x;q) in the m-basis. Memoized per word; BoundExceeded above the coloring limit.
SymFunc llt(const SchroederPath& p);

/// Chromatic quasisymmetric function X_P in the m-basis (Dyck paths only).
SymFunc chromatic(const SchroederPath& p);

/// All 2^area orientations. BoundExceeded above the area limit.
std::vector<Orientation> orientations(const SchroederPath& p);

int asc_orientation(const Orientation& theta);

/// hrv[u] for u = 1..n: largest vertex reachable from u along strict and ascending edges.
std::vector<int> hrv_all(const DecoratedGraph& g, const Orientation& theta);
int hrv(const DecoratedGraph& g, const Orientation& theta, int u);

/// Block sizes of the fibers of hrv, sorted decreasingly.
Partition lambda_theta(const DecoratedGraph& g, const Orientation& theta);

/// Directed edges (from, to) of theta, strict edges included.
std::vector<Edge> directed_edges(const DecoratedGraph& g, const Orientation& theta);

/// sum over theta of q^asc(theta) e_lambda(theta).
SymFunc orientation_e_expansion(const SchroederPath& p);

/// orientation_e_expansion with q -> q - 1; equals llt(p) in the e-basis.
SymFunc llt_via_orientations(const SchroederPath& p);

/// kappa with the values at x and y exchanged.
Coloring swap_coloring(const Coloring& kappa, int x, int y);

/// Coloring generating function split by the relative order of kappa(x) and kappa(y):
/// keys are full color-count vectors over colors 1..n.
struct SplitColorings {
  std::map<std::vector<int>, Coeff> less;     // kappa(x) < kappa(y)
  std::map<std::vector<int>, Coeff> greater;  // kappa(x) > kappa(y)
};
SplitColorings split_colorings(const DecoratedGraph& g, int x, int y);

/// Lists every coloring of g with colors 1..k.
std::vector<Coloring> all_colorings(const DecoratedGraph& g, int k);

}  // namespace vsl
