#pragma once

#include <vector>

#include "vsl/llt.hpp"

namespace vsl {

/// Colorings of the path graph that use each color 1..n exactly once.
std::vector<Coloring> permutation_colorings(const DecoratedGraph& g);

/// {i : sigma^{-1}(i) < sigma^{-1}(i+1)}, the descent-free positions of the reading word.
std::vector<int> inverse_ascent_set(const Coloring& sigma);

/// (d1, d2 - d1, ..., n - dl) for the set {d1 < ... < dl}.
Composition gap_composition(const std::vector<int>& set, int n);

/// sum over permutation colorings of q^asc s_alpha(sigma), straightened.
SymFunc elw_schur(const SchroederPath& p);

/// sum over mu and orientations theta of (q-1)^asc(theta) K_{mu', lambda(theta)} s_mu.
SymFunc kostka_schur(const SchroederPath& p);

}  // namespace vsl
