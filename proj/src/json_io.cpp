#include "vsl/json_io.hpp"

namespace vsl {

Json to_json(const Coeff& c) {
  Json out = Json::array();
  for (const auto& [mono, r] : c.terms()) {
    out.push_back({{"q", mono.first},
                   {"t", mono.second},
                   {"num", r.get_num().get_str()},
                   {"den", r.get_den().get_str()}});
  }
  return out;
}

Coeff coeff_from_json(const Json& j) {
  Coeff c;
  for (const auto& term : j) {
    Rational r(mpz_class(term.at("num").get<std::string>()), mpz_class(term.at("den").get<std::string>()));
    r.canonicalize();
    c.add_term(term.at("q").get<int>(), term.at("t").get<int>(), r);
  }
  return c;
}

Json to_json(const Partition& p) { return Json(p.parts()); }

Partition partition_from_json(const Json& j) { return Partition(j.get<std::vector<int>>()); }

Json to_json(const SymFunc& f) {
  Json terms = Json::array();
  for (const auto& [lambda, c] : f.terms()) terms.push_back({{"partition", to_json(lambda)}, {"coeff", to_json(c)}});
  return {{"basis", std::string(to_string(f.basis()))}, {"terms", terms}};
}

SymFunc symfunc_from_json(const Json& j) {
  SymFunc f(parse_basis(j.at("basis").get<std::string>()));
  for (const auto& term : j.at("terms")) {
    f.add_term(partition_from_json(term.at("partition")), coeff_from_json(term.at("coeff")));
  }
  return f;
}

Json to_json(const DecoratedGraph& g) {
  Json edges = Json::array();
  Json strict = Json::array();
  for (auto [a, b] : g.edges()) edges.push_back({a, b});
  for (auto [a, b] : g.strict_edges()) strict.push_back({a, b});
  return {{"n", g.n()}, {"edges", edges}, {"strict", strict}};
}

DecoratedGraph graph_from_json(const Json& j) {
  const int n = j.at("n").get<int>();
  std::vector<int> reach(static_cast<std::size_t>(n + 1));
  std::vector<bool> strict(static_cast<std::size_t>(n + 1), false);
  for (int x = 1; x <= n; ++x) reach[x] = x;
  for (const auto& e : j.at("edges")) {
    const int a = e.at(0).get<int>();
    const int b = e.at(1).get<int>();
    if (a < 1 || b > n || a >= b) throw Error(ErrorKind::InvalidArgument, "bad edge in graph JSON");
    reach[a] = std::max(reach[a], b);
  }
  for (const auto& e : j.at("strict")) {
    const int a = e.at(0).get<int>();
    if (a < 1 || a > n || e.at(1).get<int>() != reach[a]) {
      throw Error(ErrorKind::InvalidArgument, "strict edge must be the top edge of its column");
    }
    strict[a] = true;
  }
  DecoratedGraph g(n, std::move(reach), std::move(strict));
  if (g.edges().size() != j.at("edges").size()) {
    throw Error(ErrorKind::InvalidArgument, "edge set is not an interval per column");
  }
  return g;
}

Json to_json(const RelationInstance& inst) {
  Json terms = Json::array();
  for (const auto& [c, w] : inst.terms) terms.push_back({{"coeff", to_json(c)}, {"path", w}});
  Json out = {{"source", inst.source}, {"kind", inst.kind}, {"terms", terms}};
  out["point"] = inst.point ? Json{inst.point->first, inst.point->second} : Json(nullptr);
  return out;
}

Json to_json(const RelationReport& r, bool witnesses) {
  Json failures = Json::array();
  for (const auto& f : r.failures) {
    Json item = {{"instance", to_json(f.instance)}, {"discrepancy", to_json(f.discrepancy)}};
    if (!f.note.empty()) item["note"] = f.note;
    failures.push_back(item);
  }
  Json out = {{"suite", r.suite},
              {"instances", r.instances},
              {"failure_count", r.failures.size()},
              {"passed", r.passed()}};
  if (witnesses || !r.passed()) out["failures"] = failures;
  return out;
}

Json to_json(const SurveyReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json coeffs = Json::array();
    for (const auto& c : e.coefficients) coeffs.push_back(c.get_str());
    entries.push_back({{"path", e.path},
                       {"partition", to_json(e.shape)},
                       {"coefficients", coeffs},
                       {"nonneg", e.nonneg},
                       {"unimodal", e.unimodal},
                       {"log_concave", e.log_concave},
                       {"mode", e.mode}});
  }
  return {{"max_n", r.max_n},
          {"entries", entries},
          {"not_unimodal", r.not_unimodal},
          {"not_log_concave", r.not_log_concave},
          {"negative", r.negative}};
}

}  // namespace vsl
