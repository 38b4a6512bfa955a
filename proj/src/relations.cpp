#include "vsl/relations.hpp"

#include <algorithm>
#include <array>

#include "vsl/llt.hpp"
#include "vsl/memo.hpp"
#include "vsl/parallel.hpp"

namespace vsl {

std::string_view to_string(Suite s) {
  switch (s) {
    case Suite::unicellular: return "unicellular";
    case Suite::bounceA: return "bounceA";
    case Suite::bounceB: return "bounceB";
    case Suite::bounceND: return "bounceND";
    case Suite::generalized: return "generalized";
    case Suite::dyck: return "dyck";
    case Suite::dual: return "dual";
    case Suite::chromatic: return "chromatic";
    case Suite::extended: return "extended";
  }
  return "?";
}

Suite parse_suite(std::string_view name) {
  for (Suite s : {Suite::unicellular, Suite::bounceA, Suite::bounceB, Suite::bounceND, Suite::generalized,
                  Suite::dyck, Suite::dual, Suite::chromatic, Suite::extended}) {
    if (to_string(s) == name) return s;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown suite '" + std::string(name) + "'");
}

std::vector<Suite> required_suites() {
  return {Suite::unicellular, Suite::bounceA, Suite::bounceB, Suite::bounceND,
          Suite::generalized, Suite::dyck,    Suite::dual,    Suite::chromatic};
}

namespace {

bool only_nd(const std::string& v) { return v.find('e') == std::string::npos; }

RelationInstance make(const SchroederPath& p, std::optional<Point> pt, std::string kind,
                      std::vector<std::pair<Coeff, std::string>> terms) {
  return RelationInstance{p.word(), pt, std::move(kind), std::move(terms)};
}

const Coeff kOne(1);
const Coeff kMinusOne(-1);
const Coeff kQ = Coeff::q();

std::vector<RelationInstance> unicellular_instances(int n) {
  std::vector<RelationInstance> out;
  for (const auto& p : enumerate(n)) {
    const std::string& w = p.word();
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] != 'd') continue;
      const std::string U = w.substr(0, i);
      const std::string V = w.substr(i + 1);
      out.push_back(make(p, p.point(static_cast<int>(i)), "d",
                         {{kOne, U + "ne" + V}, {kMinusOne, U + "en" + V}, {-(kQ - kOne), w}}));
    }
  }
  return out;
}

enum class Scope { single, multiple, any };

// Bounce relation instances with s3 s4 = d e.
std::vector<RelationInstance> bounce_instances(int n, const std::vector<std::string>& shapes, Scope scope,
                                               bool restrict_v) {
  std::vector<RelationInstance> out;
  for (const auto& p : enumerate(n)) {
    const auto pts = p.points();
    for (int s = 1; s < p.length(); ++s) {
      const auto [x, z] = pts[s];
      if (x + 1 >= z) continue;
      const BounceData bd = bounce_at(p, pts[s]);
      if (!bd.decomposition) continue;
      const Decomposition& d = *bd.decomposition;
      if (d.s3 != "d" || d.s4 != "e") continue;
      const std::size_t k = bd.bounce_points.size();
      if (scope == Scope::single && k != 1) continue;
      if (scope == Scope::multiple && k < 2) continue;
      if (restrict_v && !only_nd(d.V)) continue;
      const std::string st = d.st();
      if (std::find(shapes.begin(), shapes.end(), st) == shapes.end()) continue;

      const std::string tail = d.V + "ed" + d.W;
      if (st == "nn") {
        out.push_back(make(p, pts[s], st, {{kOne, p.word()}, {-kQ, d.U + "nn" + tail}}));
      } else if (st == "dn") {
        out.push_back(make(p, pts[s], st, {{kOne, p.word()}, {kMinusOne, d.U + "nd" + tail}}));
      } else if (st == "nd") {
        out.push_back(make(p, pts[s], st,
                           {{kOne, p.word()}, {-(kQ - kOne), d.U + "nd" + tail}, {-kQ, d.U + "dn" + tail}}));
      }
    }
  }
  return out;
}

std::vector<RelationInstance> dyck_instances(int n, bool dyck_only) {
  std::vector<RelationInstance> out;
  for (const auto& p : enumerate(n)) {
    if (dyck_only && !p.is_dyck()) continue;
    const auto pts = p.points();
    for (int s = 1; s < p.length(); ++s) {
      const auto [x, z] = pts[s];
      if (x + 1 >= z) continue;
      const BounceData bd = bounce_at(p, pts[s]);
      if (!bd.decomposition || bd.bounce_points.size() != 1) continue;
      const Decomposition& d = *bd.decomposition;
      if (d.s3 != "e" || d.s4 != "e" || d.V.empty() || d.V.back() != 'n') continue;
      const std::string V = d.V.substr(0, d.V.size() - 1);
      if (d.st() == "nn") {
        const std::string head = d.U + "nn" + V;
        out.push_back(make(p, pts[s], "modular",
                           {{kOne, head + "nee" + d.W},
                            {-(kQ + kOne), head + "ene" + d.W},
                            {kQ, head + "een" + d.W}}));
      } else if (d.st() == "en" && !d.U.empty() && d.U.back() == 'n') {
        const std::string U = d.U.substr(0, d.U.size() - 1);
        std::vector<std::pair<Coeff, std::string>> terms;
        for (const auto& [sign, word] : sarrus_terms(U, V, d.W)) terms.emplace_back(Coeff(sign), word);
        out.push_back(make(p, pts[s], "six-term", std::move(terms)));
      }
    }
  }
  return out;
}

RelationInstance reversed(const RelationInstance& inst) {
  RelationInstance r = inst;
  r.kind = "dual-" + inst.kind;
  for (auto& [c, w] : r.terms) {
    std::string rw(w.rbegin(), w.rend());
    for (char& ch : rw) {
      if (ch == 'n') {
        ch = 'e';
      } else if (ch == 'e') {
        ch = 'n';
      }
    }
    w = std::move(rw);
  }
  return r;
}

std::vector<RelationInstance> dual_instances(int n) {
  std::vector<RelationInstance> out;
  auto append = [&](const std::vector<RelationInstance>& src) {
    for (const auto& inst : src) out.push_back(reversed(inst));
  };
  append(bounce_instances(n, {"nn", "dn", "nd"}, Scope::single, true));
  append(bounce_instances(n, {"nn", "dn", "nd"}, Scope::multiple, true));
  append(dyck_instances(n, false));
  return out;
}

std::vector<RelationInstance> chromatic_instances(int n) {
  std::vector<RelationInstance> out = dyck_instances(n, true);
  // Multiplicativity: X_{PQ} - X_P X_Q, encoded with the product marked by '|'.
  for (int a = 1; a < n; ++a) {
    for (const auto& p : enumerate_dyck(a)) {
      for (const auto& q : enumerate_dyck(n - a)) {
        out.push_back(make(SchroederPath::parse(p.word() + q.word()), std::nullopt, "mult",
                           {{kOne, p.word() + q.word()}, {kMinusOne, p.word() + "|" + q.word()}}));
      }
    }
  }
  return out;
}

std::vector<RelationInstance> extended_instances(int n) {
  std::vector<RelationInstance> out;
  for (auto& inst : bounce_instances(n, {"nn", "dn", "nd"}, Scope::any, false)) {
    const auto bd = bounce_at(SchroederPath::parse(inst.source), *inst.point);
    if (bd.decomposition && !only_nd(bd.decomposition->V)) out.push_back(std::move(inst));
  }
  return out;
}

// F of a word; "P|Q" denotes the product F_P F_Q.
SymFunc evaluate_word(const std::string& word, const PathFunction& f) {
  const auto bar = word.find('|');
  if (bar != std::string::npos) {
    return multiply(convert(evaluate_word(word.substr(0, bar), f), Basis::e),
                    evaluate_word(word.substr(bar + 1), f));
  }
  if (word.empty()) return SymFunc::element(Basis::e, Partition{});
  return f(SchroederPath::parse(word));
}

int bound_for(Suite suite) { return suite == Suite::chromatic ? limits().chromatic_verify_n : limits().verify_n; }

}  // namespace

std::vector<std::pair<int, std::string>> sarrus_terms(const std::string& U, const std::string& V,
                                                      const std::string& W) {
  static const std::array<std::string, 3> a{"enn", "nen", "nne"};
  static const std::array<std::string, 3> b{"een", "ene", "nee"};
  // det [[U,U,U],[a_j V],[b_k W]] = sum over permutations (i,j,k) of sgn * U a_j V b_k W.
  static const int perms[6][4] = {{0, 1, 2, 1}, {1, 2, 0, 1}, {2, 0, 1, 1},
                                  {0, 2, 1, -1}, {1, 0, 2, -1}, {2, 1, 0, -1}};
  std::vector<std::pair<int, std::string>> out;
  for (const auto& perm : perms) out.emplace_back(perm[3], U + a[perm[1]] + V + b[perm[2]] + W);
  return out;
}

std::vector<RelationInstance> relation_instances(Suite suite, int n) {
  switch (suite) {
    case Suite::unicellular: return unicellular_instances(n);
    case Suite::bounceA: return bounce_instances(n, {"nn", "dn"}, Scope::single, true);
    case Suite::bounceB: return bounce_instances(n, {"nn", "nd"}, Scope::single, true);
    case Suite::bounceND: return bounce_instances(n, {"nd"}, Scope::single, true);
    case Suite::generalized: return bounce_instances(n, {"nn", "dn", "nd"}, Scope::multiple, true);
    case Suite::dyck: return dyck_instances(n, false);
    case Suite::dual: return dual_instances(n);
    case Suite::chromatic: return chromatic_instances(n);
    case Suite::extended: return extended_instances(n);
  }
  return {};
}

RelationReport check_instances(const std::string& suite, const std::vector<RelationInstance>& instances,
                               const PathFunction& f) {
  RelationReport report;
  report.suite = suite;
  report.instances = static_cast<long>(instances.size());
  auto results = parallel_map(instances, [&](const RelationInstance& inst) -> std::optional<Failure> {
    SymFunc total(Basis::e);
    try {
      for (const auto& [c, word] : inst.terms) total += convert(evaluate_word(word, f), Basis::e) * c;
    } catch (const Error& err) {
      return Failure{inst, SymFunc(Basis::e), err.what()};
    }
    if (total.is_zero()) return std::nullopt;
    return Failure{inst, total, ""};
  });
  for (auto& r : results) {
    if (r) report.failures.push_back(std::move(*r));
  }
  return report;
}

RelationReport verify(Suite suite, int max_n, const PathFunction& f) {
  check_bound(max_n, bound_for(suite), "relation suite size");
  PathFunction fn = f;
  if (!fn) {
    fn = suite == Suite::chromatic ? PathFunction([](const SchroederPath& p) { return chromatic(p); })
                                   : PathFunction([](const SchroederPath& p) { return llt(p); });
  }
  std::vector<RelationInstance> all;
  for (int n = 1; n <= max_n; ++n) {
    auto part = relation_instances(suite, n);
    std::move(part.begin(), part.end(), std::back_inserter(all));
  }
  RelationReport report = check_instances(std::string(to_string(suite)), all, fn);

  if (suite == Suite::chromatic) {
    // Initial condition on path graphs through the plethystic bridge.
    for (int k = 0; k + 1 <= max_n; ++k) {
      ++report.instances;
      RelationInstance inst{path_graph_path(k).word(), std::nullopt, "initial", {}};
      try {
        const int size = k + 1;
        const SymFunc bridged =
            convert(pleth_q_minus_1(dyck_path_graph_formula(k)), Basis::e).map_coeffs([&](const Coeff& c) {
              return exact_div(c, power(kQ - kOne, size));
            });
        const SymFunc diff = convert(fn(path_graph_path(k)), Basis::e) - bridged;
        if (!diff.is_zero()) report.failures.push_back({inst, diff, ""});
      } catch (const Error& err) {
        report.failures.push_back({inst, SymFunc(Basis::e), err.what()});
      }
    }
  }
  return report;
}

RelationReport verify_unicellular(int max_n, const PathFunction& f) { return verify(Suite::unicellular, max_n, f); }
RelationReport verify_bounce_A(int max_n, const PathFunction& f) { return verify(Suite::bounceA, max_n, f); }
RelationReport verify_bounce_B(int max_n, const PathFunction& f) { return verify(Suite::bounceB, max_n, f); }
RelationReport verify_bounce_nd(int max_n, const PathFunction& f) { return verify(Suite::bounceND, max_n, f); }
RelationReport verify_generalized_bounce(int max_n, const PathFunction& f) {
  return verify(Suite::generalized, max_n, f);
}
RelationReport verify_dyck_relations(int max_n, const PathFunction& f) { return verify(Suite::dyck, max_n, f); }
RelationReport verify_dual_bounce(int max_n, const PathFunction& f) { return verify(Suite::dual, max_n, f); }
RelationReport verify_chromatic_relations(int max_n, const PathFunction& f) {
  return verify(Suite::chromatic, max_n, f);
}
RelationReport verify_extended(int max_n, const PathFunction& f) { return verify(Suite::extended, max_n, f); }

namespace {

constexpr int kMaxDepth = 10000;
thread_local int recursion_depth = 0;

struct DepthGuard {
  DepthGuard() {
    if (++recursion_depth > kMaxDepth) {
      --recursion_depth;
      throw Error(ErrorKind::NonTermination, "recursion depth exceeded");
    }
  }
  ~DepthGuard() { --recursion_depth; }
  DepthGuard(const DepthGuard&) = delete;
  DepthGuard& operator=(const DepthGuard&) = delete;
};

SymFunc evaluate(const std::string& w);

SymFunc evaluate_uncached(const std::string& w) {
  if (w.empty()) return SymFunc::element(Basis::e, Partition{});
  const auto first_e = w.find('e');
  if (std::count(w.begin(), w.end(), 'e') == 1) {
    // Only n d^k e has a single east step.
    return SymFunc::element(Basis::e, Partition{static_cast<int>(w.size()) - 1});
  }
  const SchroederPath p = SchroederPath::parse(w);
  const Point corner = p.point(static_cast<int>(first_e));
  const auto [x, z] = corner;

  if (z == x + 1) {
    // The first east step returns to the diagonal: split into two factors.
    return multiply(evaluate(w.substr(0, first_e + 1)), evaluate(w.substr(first_e + 1)));
  }
  const std::string Y = w.substr(0, first_e - 1);
  const std::string W = w.substr(first_e + 1);
  if (w[first_e - 1] == 'n') {
    // Unicellular relation: F(Y ne W) = F(Y en W) + (q-1) F(Y d W).
    return evaluate(Y + "en" + W) + evaluate(Y + "d" + W) * (kQ - kOne);
  }

  const BounceData bd = bounce_at(p, corner);
  if (!bd.decomposition) throw Error(ErrorKind::NonTermination, "no bounce decomposition for '" + w + "'");
  const Decomposition& d = *bd.decomposition;
  const std::string tail = d.V + "ed" + d.W;
  const std::string st = d.st();
  if (st == "nn") return evaluate(d.U + "nn" + tail) * kQ;
  if (st == "dn") return evaluate(d.U + "nd" + tail);
  if (st == "nd") return evaluate(d.U + "nd" + tail) * (kQ - kOne) + evaluate(d.U + "dn" + tail) * kQ;
  throw Error(ErrorKind::NonTermination, "unexpected bounce shape '" + st + "' in '" + w + "'");
}

SymFunc evaluate(const std::string& w) {
  static ConcurrentMemo<std::string, SymFunc> memo;
  if (auto hit = memo.find(w)) return *hit;
  DepthGuard guard;
  return memo.insert(w, evaluate_uncached(w));
}

}  // namespace

SymFunc recursion_evaluate(const SchroederPath& p) {
  check_bound(p.size(), limits().coloring_n, "path size");
  return evaluate(p.word());
}

SymFunc dyck_path_graph_formula(int k) {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "negative k");
  check_bound(k, limits().path_graph_k, "k");
  SymFunc f(Basis::e);
  for (const auto& alpha : strict_compositions(k + 1)) {
    const int len = static_cast<int>(alpha.size());
    f.add_term(Partition::from_unsorted(alpha), power(kQ - kOne, k + 1 - len));
  }
  return f;
}

SchroederPath path_graph_path(int k) {
  std::string w = "n";
  for (int i = 0; i < k; ++i) w += "ne";
  return SchroederPath::parse(w + "e");
}

std::vector<std::pair<SchroederPath, int>> swap_map_instances(int n) {
  std::vector<std::pair<SchroederPath, int>> out;
  for (const auto& p : enumerate(n)) {
    const auto pts = p.points();
    for (int s = 1; s < p.length(); ++s) {
      const BounceData bd = bounce_at(p, pts[s]);
      if (!bd.decomposition || bd.bounce_points.size() != 1) continue;
      const Decomposition& d = *bd.decomposition;
      if (d.st() == "nn" && d.s3 == "e" && d.s4 == "e" && pts[s].first >= 1 && pts[s].first < n) {
        out.emplace_back(p, pts[s].first);
      }
    }
  }
  return out;
}

}  // namespace vsl
