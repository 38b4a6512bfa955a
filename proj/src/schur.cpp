#include "vsl/schur.hpp"

#include <functional>

#include "vsl/parallel.hpp"

namespace vsl {

std::vector<Coloring> permutation_colorings(const DecoratedGraph& g) {
  const int n = g.n();
  std::vector<Coloring> out;
  Coloring sigma(static_cast<std::size_t>(n + 1), 0);
  std::vector<bool> used(static_cast<std::size_t>(n + 1), false);
  // Strict edges only constrain pairs inside the interval below v, so checking
  // against earlier vertices at assignment time prunes every violation.
  std::function<void(int)> rec = [&](int v) {
    if (v > n) {
      out.push_back(sigma);
      return;
    }
    for (int c = 1; c <= n; ++c) {
      if (used[c]) continue;
      bool ok = true;
      for (int a = 1; a < v && ok; ++a) {
        if (g.is_strict(a, v)) ok = sigma[a] < c;
      }
      if (!ok) continue;
      sigma[v] = c;
      used[c] = true;
      rec(v + 1);
      used[c] = false;
    }
  };
  rec(1);
  return out;
}

std::vector<int> inverse_ascent_set(const Coloring& sigma) {
  const int n = static_cast<int>(sigma.size()) - 1;
  std::vector<int> inverse(sigma.size());
  for (int v = 1; v <= n; ++v) inverse[sigma[v]] = v;
  std::vector<int> out;
  for (int i = 1; i < n; ++i) {
    if (inverse[i] < inverse[i + 1]) out.push_back(i);
  }
  return out;
}

Composition gap_composition(const std::vector<int>& set, int n) {
  Composition out;
  int previous = 0;
  for (int d : set) {
    out.push_back(d - previous);
    previous = d;
  }
  out.push_back(n - previous);
  return out;
}

SymFunc elw_schur(const SchroederPath& p) {
  check_bound(p.size(), limits().coloring_n, "path size");
  const DecoratedGraph g = graph(p);
  SymFunc f(Basis::s);
  for (const Coloring& sigma : permutation_colorings(g)) {
    const auto shape = straighten_schur(gap_composition(inverse_ascent_set(sigma), p.size()));
    if (!shape) continue;
    f.add_term(shape->shape, Coeff::monomial(asc_coloring(g, sigma), 0, shape->sign));
  }
  return f;
}

SymFunc kostka_schur(const SchroederPath& p) {
  check_bound(p.size(), limits().coloring_n, "path size");
  const SymFunc shifted = llt_via_orientations(p);  // sum (q-1)^asc e_lambda
  SymFunc f(Basis::s);
  for (const auto& [lambda, c] : shifted.terms()) {
    for (const Partition& mu : partitions_of(p.size())) {
      const long long k = kostka(conjugate(mu), lambda);
      if (k != 0) f.add_term(mu, c * Rational(static_cast<long>(k)));
    }
  }
  return f;
}

}  // namespace vsl
