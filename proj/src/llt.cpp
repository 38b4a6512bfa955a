#include "vsl/llt.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "vsl/memo.hpp"
#include "vsl/parallel.hpp"

namespace vsl {

namespace {

// Smallest neighbor below v; reach is monotone so the lower neighbors form an interval.
std::vector<int> lower_neighbor_start(const DecoratedGraph& g) {
  std::vector<int> lo(static_cast<std::size_t>(g.n() + 1));
  for (int v = 1; v <= g.n(); ++v) {
    int a = v;
    while (a > 1 && g.reach(a - 1) >= v) --a;
    lo[v] = a;
  }
  return lo;
}

void check_coloring(const DecoratedGraph& g, const Coloring& kappa) {
  if (static_cast<int>(kappa.size()) != g.n() + 1) {
    throw Error(ErrorKind::InvalidColoring, "coloring must assign a color to each of the " + std::to_string(g.n()) + " vertices");
  }
  for (auto [a, b] : g.strict_edges()) {
    if (kappa[a] >= kappa[b]) {
      throw Error(ErrorKind::InvalidColoring,
                  "strict edge (" + std::to_string(a) + "," + std::to_string(b) + ") needs kappa(a) < kappa(b)");
    }
  }
}

}  // namespace

int asc_coloring(const DecoratedGraph& g, const Coloring& kappa) {
  check_coloring(g, kappa);
  int asc = 0;
  for (auto [a, b] : g.plain_edges()) asc += kappa[a] < kappa[b];
  return asc;
}

Coeff coloring_sum(const DecoratedGraph& g, const std::vector<int>& content, bool proper) {
  const int n = g.n();
  const auto lo = lower_neighbor_start(g);
  std::vector<int> remaining = content;
  std::vector<int> kappa(static_cast<std::size_t>(n + 1), 0);
  std::vector<long long> histogram(static_cast<std::size_t>(n * n + 1), 0);

  std::function<void(int, int)> rec = [&](int v, int asc) {
    if (v > n) {
      ++histogram[asc];
      return;
    }
    for (std::size_t c = 0; c < remaining.size(); ++c) {
      if (remaining[c] == 0) continue;
      const int color = static_cast<int>(c) + 1;
      int gained = 0;
      bool ok = true;
      for (int a = lo[v]; a < v && ok; ++a) {
        if (g.is_strict(a, v)) {
          ok = kappa[a] < color;
        } else {
          if (proper && kappa[a] == color) ok = false;
          gained += kappa[a] < color;
        }
      }
      if (!ok) continue;
      kappa[v] = color;
      --remaining[c];
      rec(v + 1, asc + gained);
      ++remaining[c];
    }
  };
  rec(1, 0);

  Coeff result;
  for (std::size_t k = 0; k < histogram.size(); ++k) {
    if (histogram[k] != 0) result.add_term(static_cast<int>(k), 0, Rational(static_cast<long>(histogram[k])));
  }
  return result;
}

namespace {

SymFunc coloring_function(const SchroederPath& p, bool proper) {
  check_bound(p.size(), limits().coloring_n, "path size");
  const DecoratedGraph g = graph(p);
  const auto& shapes = partitions_of(p.size());
  auto coeffs = parallel_map(shapes, [&](const Partition& lambda) { return coloring_sum(g, lambda.parts(), proper); });
  SymFunc f(Basis::m);
  for (std::size_t i = 0; i < shapes.size(); ++i) f.add_term(shapes[i], coeffs[i]);
  return f;
}

}  // namespace

SymFunc llt(const SchroederPath& p) {
  static ConcurrentMemo<std::string, SymFunc> memo;
  return memo.get_or_compute(p.word(), [&] { return coloring_function(p, false); });
}

SymFunc chromatic(const SchroederPath& p) {
  if (!p.is_dyck()) throw Error(ErrorKind::HasDiagonal, "chromatic functions need a Dyck path, got '" + p.word() + "'");
  return coloring_function(p, true);
}

std::vector<Orientation> orientations(const SchroederPath& p) {
  const int a = area(p);
  check_bound(a, limits().max_area, "area");
  std::vector<Orientation> out;
  out.reserve(std::size_t{1} << a);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << a); ++mask) out.push_back({mask});
  return out;
}

int asc_orientation(const Orientation& theta) { return std::popcount(theta.mask); }

namespace {

// Index of each plain edge (a,b) in plain_edges(), or -1 for strict edges.
struct EdgeIndex {
  int n;
  std::vector<std::vector<int>> index;  // index[a][b - a]

  explicit EdgeIndex(const DecoratedGraph& g) : n(g.n()), index(static_cast<std::size_t>(g.n() + 1)) {
    int k = 0;
    for (int a = 1; a <= n; ++a) {
      index[a].assign(static_cast<std::size_t>(g.reach(a) - a + 1), -1);
      for (int b = a + 1; b <= g.reach(a); ++b) {
        if (!g.is_strict(a, b)) index[a][b - a] = k++;
      }
    }
  }
};

std::vector<int> hrv_indexed(const DecoratedGraph& g, const EdgeIndex& idx, std::uint32_t mask) {
  const int n = g.n();
  std::vector<int> h(static_cast<std::size_t>(n + 1));
  for (int u = n; u >= 1; --u) {
    int best = u;
    for (int v = u + 1; v <= g.reach(u); ++v) {
      const int k = idx.index[u][v - u];
      if (k < 0 || (mask >> k) & 1U) best = std::max(best, h[v]);
    }
    h[u] = best;
  }
  return h;
}

Partition fiber_sizes(const std::vector<int>& h) {
  std::vector<int> count(h.size(), 0);
  for (std::size_t u = 1; u < h.size(); ++u) ++count[h[u]];
  return Partition::from_unsorted(std::move(count));
}

}  // namespace

std::vector<int> hrv_all(const DecoratedGraph& g, const Orientation& theta) {
  return hrv_indexed(g, EdgeIndex(g), theta.mask);
}

int hrv(const DecoratedGraph& g, const Orientation& theta, int u) {
  if (u < 1 || u > g.n()) throw Error(ErrorKind::InvalidArgument, "vertex out of range");
  return hrv_all(g, theta)[u];
}

Partition lambda_theta(const DecoratedGraph& g, const Orientation& theta) { return fiber_sizes(hrv_all(g, theta)); }

std::vector<Edge> directed_edges(const DecoratedGraph& g, const Orientation& theta) {
  std::vector<Edge> out;
  const EdgeIndex idx(g);
  for (auto [a, b] : g.edges()) {
    const int k = idx.index[a][b - a];
    if (k < 0 || (theta.mask >> k) & 1U) {
      out.emplace_back(a, b);
    } else {
      out.emplace_back(b, a);
    }
  }
  return out;
}

SymFunc orientation_e_expansion(const SchroederPath& p) {
  const int a = area(p);
  check_bound(a, limits().max_area, "area");
  const DecoratedGraph g = graph(p);
  const EdgeIndex idx(g);

  // Chunk the mask range; each chunk accumulates its own partial sum.
  const std::uint32_t total = std::uint32_t{1} << a;
  const std::uint32_t chunk = std::max<std::uint32_t>(1, total / 64);
  std::vector<std::uint32_t> starts;
  for (std::uint32_t s = 0; s < total; s += chunk) starts.push_back(s);
  auto partials = parallel_map(starts, [&](std::uint32_t start) {
    std::map<Partition, std::vector<long long>> counts;
    const std::uint32_t end = std::min(total, start + chunk);
    for (std::uint32_t mask = start; mask < end; ++mask) {
      auto& hist = counts[fiber_sizes(hrv_indexed(g, idx, mask))];
      hist.resize(static_cast<std::size_t>(a + 1), 0);
      ++hist[std::popcount(mask)];
    }
    return counts;
  });

  SymFunc f(Basis::e);
  for (const auto& part : partials) {
    for (const auto& [lambda, hist] : part) {
      Coeff c;
      for (std::size_t k = 0; k < hist.size(); ++k) {
        if (hist[k]) c.add_term(static_cast<int>(k), 0, Rational(static_cast<long>(hist[k])));
      }
      f.add_term(lambda, c);
    }
  }
  return f;
}

SymFunc llt_via_orientations(const SchroederPath& p) {
  return orientation_e_expansion(p).map_coeffs([](const Coeff& c) { return shift_q(c, -1); });
}

Coloring swap_coloring(const Coloring& kappa, int x, int y) {
  Coloring out = kappa;
  std::swap(out.at(static_cast<std::size_t>(x)), out.at(static_cast<std::size_t>(y)));
  return out;
}

std::vector<Coloring> all_colorings(const DecoratedGraph& g, int k) {
  std::vector<Coloring> out;
  const int n = g.n();
  Coloring kappa(static_cast<std::size_t>(n + 1), 0);
  const auto lo = lower_neighbor_start(g);
  std::function<void(int)> rec = [&](int v) {
    if (v > n) {
      out.push_back(kappa);
      return;
    }
    for (int c = 1; c <= k; ++c) {
      bool ok = true;
      for (int a = lo[v]; a < v && ok; ++a) {
        if (g.is_strict(a, v)) ok = kappa[a] < c;
      }
      if (!ok) continue;
      kappa[v] = c;
      rec(v + 1);
    }
  };
  rec(1);
  return out;
}

SplitColorings split_colorings(const DecoratedGraph& g, int x, int y) {
  SplitColorings out;
  const int n = g.n();
  for (const Coloring& kappa : all_colorings(g, n)) {
    if (kappa[x] == kappa[y]) continue;
    std::vector<int> content(static_cast<std::size_t>(n), 0);
    for (int v = 1; v <= n; ++v) ++content[kappa[v] - 1];
    const int asc = asc_coloring(g, kappa);
    auto& target = kappa[x] < kappa[y] ? out.less : out.greater;
    target[content] += Coeff::q(asc);
  }
  return out;
}

}  // namespace vsl
