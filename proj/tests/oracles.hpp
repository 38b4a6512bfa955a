#pragma once

// Brute-force reference implementations used only by the tests. They share no
// code with the library beyond the value types.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "vsl/coeff.hpp"
#include "vsl/partitions.hpp"
#include "vsl/symfunc.hpp"

namespace oracle {

using vsl::Coeff;
using vsl::Partition;

/// Edge lists read straight off the word: every cell below the path in column x
/// gives an edge (x, j); a diagonal step ending at (x, y) makes (x, y) strict.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> plain;
  std::vector<std::pair<int, int>> strict;
};

inline Graph graph_of(const std::string& word) {
  Graph g;
  int x = 0;
  int y = 0;
  for (char c : word) {
    if (c == 'n') {
      ++y;
      continue;
    }
    ++x;
    if (c == 'd') ++y;
    const int top = c == 'd' ? y - 1 : y;
    for (int j = x + 1; j <= top; ++j) g.plain.emplace_back(x, j);
    if (c == 'd') g.strict.emplace_back(x, y);
  }
  g.n = x;
  return g;
}

/// Semistandard fillings of shape mu with content lambda, cell by cell.
inline long long kostka(const Partition& mu, const Partition& lambda) {
  if (mu.size() != lambda.size()) return 0;
  std::vector<std::vector<int>> t;
  for (int r : mu) t.emplace_back(static_cast<std::size_t>(r), 0);
  std::vector<int> left(lambda.begin(), lambda.end());
  const int k = lambda.length();
  long long count = 0;
  std::function<void(int, int)> fill = [&](int r, int c) {
    if (r == mu.length()) {
      ++count;
      return;
    }
    if (c == mu[static_cast<std::size_t>(r)]) {
      fill(r + 1, 0);
      return;
    }
    for (int v = 1; v <= k; ++v) {
      if (left[static_cast<std::size_t>(v - 1)] == 0) continue;
      if (c > 0 && t[r][c - 1] > v) continue;
      if (r > 0 && t[r - 1][c] >= v) continue;
      t[r][c] = v;
      --left[static_cast<std::size_t>(v - 1)];
      fill(r, c + 1);
      ++left[static_cast<std::size_t>(v - 1)];
    }
  };
  fill(0, 0);
  return count;
}

/// Coefficient of x^mu in e_lambda, h_lambda or p_lambda, by distributing each factor's
/// variables over the remaining exponent vector.
inline long monomial_coefficient(char basis, const Partition& lambda, const Partition& mu) {
  std::vector<int> rest(mu.begin(), mu.end());
  const int vars = static_cast<int>(rest.size());
  std::function<long(int)> factor = [&](int i) -> long {
    if (i == lambda.length()) {
      return std::all_of(rest.begin(), rest.end(), [](int r) { return r == 0; }) ? 1 : 0;
    }
    const int k = lambda[static_cast<std::size_t>(i)];
    long total = 0;
    if (basis == 'p') {
      for (int v = 0; v < vars; ++v) {
        if (rest[v] < k) continue;
        rest[v] -= k;
        total += factor(i + 1);
        rest[v] += k;
      }
      return total;
    }
    // e: k distinct variables; h: a multiset of k variables.
    std::function<void(int, int)> pick = [&](int from, int need) {
      if (need == 0) {
        total += factor(i + 1);
        return;
      }
      for (int v = from; v < vars; ++v) {
        if (rest[v] == 0) continue;
        --rest[v];
        pick(basis == 'e' ? v + 1 : v, need - 1);
        ++rest[v];
      }
    };
    pick(0, k);
    return total;
  };
  return factor(0);
}

/// Coefficient of x^lambda (lambda read as a content vector) in G_P, colors 1..len(lambda).
/// proper = true restricts to colorings that differ across every edge.
inline Coeff llt_monomial(const std::string& word, const std::vector<int>& content, bool proper = false) {
  const Graph g = graph_of(word);
  const int k = static_cast<int>(content.size());
  std::vector<int> kappa(static_cast<std::size_t>(g.n + 1), 0);
  std::vector<int> left = content;
  Coeff total;
  std::function<void(int)> rec = [&](int v) {
    if (v > g.n) {
      for (auto [a, b] : g.strict) {
        if (kappa[a] >= kappa[b]) return;
      }
      int asc = 0;
      for (auto [a, b] : g.plain) {
        if (proper && kappa[a] == kappa[b]) return;
        if (kappa[a] < kappa[b]) ++asc;
      }
      total += Coeff::q(asc);
      return;
    }
    for (int c = 1; c <= k; ++c) {
      if (left[c - 1] == 0) continue;
      --left[c - 1];
      kappa[v] = c;
      rec(v + 1);
      ++left[c - 1];
    }
  };
  rec(1);
  return total;
}

/// G_P in the m-basis assembled from llt_monomial.
inline vsl::SymFunc llt_m(const std::string& word, bool proper = false) {
  const int n = graph_of(word).n;
  vsl::SymFunc f(vsl::Basis::m);
  for (const auto& lambda : vsl::partitions_of(n)) {
    f.add_term(lambda, llt_monomial(word, lambda.parts(), proper));
  }
  return f;
}

/// sum over all orientations of q^asc e_lambda(theta); reachability follows strict and
/// ascending edges by depth-first search.
inline vsl::SymFunc orientation_sum(const std::string& word) {
  const Graph g = graph_of(word);
  const int m = static_cast<int>(g.plain.size());
  vsl::SymFunc f(vsl::Basis::e);
  for (long mask = 0; mask < (1L << m); ++mask) {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(g.n + 1));
    int asc = 0;
    for (int i = 0; i < m; ++i) {
      auto [a, b] = g.plain[static_cast<std::size_t>(i)];
      if (mask >> i & 1) {
        ++asc;
        out[a].push_back(b);
      }
    }
    for (auto [a, b] : g.strict) out[a].push_back(b);
    std::map<int, int> blocks;
    for (int u = 1; u <= g.n; ++u) {
      std::vector<bool> seen(static_cast<std::size_t>(g.n + 1), false);
      std::vector<int> stack{u};
      int best = u;
      seen[u] = true;
      while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        best = std::max(best, v);
        for (int w : out[v]) {
          if (!seen[w]) {
            seen[w] = true;
            stack.push_back(w);
          }
        }
      }
      ++blocks[best];
    }
    std::vector<int> parts;
    for (auto [top, size] : blocks) parts.push_back(size);
    f.add_term(Partition::from_unsorted(parts), Coeff::q(asc));
  }
  return f;
}

/// Deterministic random Laurent polynomial with small integer coefficients.
inline Coeff random_coeff(std::mt19937& rng, int max_terms = 4, int lo = -3, int hi = 6) {
  std::uniform_int_distribution<int> terms(0, max_terms);
  std::uniform_int_distribution<int> exp(lo, hi);
  std::uniform_int_distribution<int> val(-5, 5);
  Coeff c;
  const int k = terms(rng);
  for (int i = 0; i < k; ++i) c.add_term(exp(rng), exp(rng), val(rng));
  return c;
}

/// Random homogeneous symmetric function of degree n in basis b.
inline vsl::SymFunc random_symfunc(std::mt19937& rng, vsl::Basis b, int n) {
  vsl::SymFunc f(b);
  std::bernoulli_distribution keep(0.6);
  for (const auto& lambda : vsl::partitions_of(n)) {
    if (keep(rng)) f.add_term(lambda, random_coeff(rng, 2, 0, 3));
  }
  return f;
}

}  // namespace oracle
