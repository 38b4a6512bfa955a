#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "vsl/schroeder.hpp"
#include "vsl/symfunc.hpp"

namespace vsl {

/// The function whose relations are checked; llt by default.
using PathFunction = std::function<SymFunc(const SchroederPath&)>;

/// sum_i coeff_i * F(word_i) = 0
struct RelationInstance {
  std::string source;          // the path the instance was generated from
  std::optional<Point> point;  // generating point, when there is one
  std::string kind;            // e.g. "nn", "modular", "mult"
  std::vector<std::pair<Coeff, std::string>> terms;
};

struct Failure {
  RelationInstance instance;
  SymFunc discrepancy{Basis::e};  // left side minus right side in the e-basis
  std::string note;               // set when the instance could not be evaluated
};

struct RelationReport {
  std::string suite;
  long instances = 0;
  std::vector<Failure> failures;

  bool passed() const { return failures.empty(); }
};

enum class Suite { unicellular, bounceA, bounceB, bounceND, generalized, dyck, dual, chromatic, extended };

std::string_view to_string(Suite s);
Suite parse_suite(std::string_view name);  // InvalidArgument on unknown names
std::vector<Suite> required_suites();      // every suite except the extended one

/// Instances of one suite for paths of size exactly n.
std::vector<RelationInstance> relation_instances(Suite suite, int n);

/// Checks every instance; failed evaluations are recorded rather than thrown.
RelationReport check_instances(const std::string& suite, const std::vector<RelationInstance>& instances,
                               const PathFunction& f);

/// Runs one suite for sizes 1..max_n with F = llt (chromatic for the chromatic suite)
/// unless f is given. Throws BoundExceeded above the verification limits.
RelationReport verify(Suite suite, int max_n, const PathFunction& f = nullptr);

RelationReport verify_unicellular(int max_n, const PathFunction& f = nullptr);
RelationReport verify_bounce_A(int max_n, const PathFunction& f = nullptr);
RelationReport verify_bounce_B(int max_n, const PathFunction& f = nullptr);
RelationReport verify_bounce_nd(int max_n, const PathFunction& f = nullptr);
RelationReport verify_generalized_bounce(int max_n, const PathFunction& f = nullptr);
RelationReport verify_dyck_relations(int max_n, const PathFunction& f = nullptr);
RelationReport verify_dual_bounce(int max_n, const PathFunction& f = nullptr);
RelationReport verify_chromatic_relations(int max_n, const PathFunction& f = nullptr);
RelationReport verify_extended(int max_n, const PathFunction& f = nullptr);

/// The six products U a_j V b_k W of the cross-product determinant with their signs,
/// a = (enn, nen, nne), b = (een, ene, nee).
std::vector<std::pair<int, std::string>> sarrus_terms(const std::string& U, const std::string& V,
                                                      const std::string& W);

/// F_P computed from the initial condition, multiplicativity, the unicellular relation
/// and the generalized bounce relations only. Result in the e-basis.
SymFunc recursion_evaluate(const SchroederPath& p);

/// sum over compositions alpha of k+1 of (q-1)^{k+1-len(alpha)} e_alpha.
SymFunc dyck_path_graph_formula(int k);

/// n (ne)^k e
SchroederPath path_graph_path(int k);

/// (P, x) such that the bounce decomposition at (x, z-1) has one bounce point and the
/// shape U n|n V e|e W, for all P of size n.
std::vector<std::pair<SchroederPath, int>> swap_map_instances(int n);

}  // namespace vsl
