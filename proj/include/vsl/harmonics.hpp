#pragma once

#include <string>
#include <vector>

#include "vsl/symfunc.hpp"

namespace vsl {

/// sum over Dyck paths P of size n of t^bounce(P) G_{P*}(x;q), Schur basis.
SymFunc nabla_e(int n);

/// (-1)^{n-1} nabla p_n as sum over weak compositions alpha of
/// t^area(alpha) q^below(alpha) G_{nu(alpha)}(x;q), Schur basis.
SymFunc nabla_p(int n);

/// H_{mu'}(x;q) = q^{-sum_{i>=2} C(mu_i,2)} omega G_{P_mu}, Schur basis.
SymFunc hall_littlewood(const Partition& mu);

struct SurveyEntry {
  std::string path;
  Partition shape;
  std::vector<Rational> coefficients;  // a_mu(q) from q^0 upward
  bool nonneg = true;
  bool unimodal = true;
  bool log_concave = true;
  int mode = 0;  // first index of the largest coefficient
};

struct SurveyReport {
  int max_n = 0;
  std::vector<SurveyEntry> entries;
  long not_unimodal = 0;
  long not_log_concave = 0;
  long negative = 0;
};

/// e-coefficients of G_P(x;q+1) for every path up to max_n, with shape statistics.
SurveyReport survey_e_coefficients(int max_n);

bool is_unimodal(const std::vector<Rational>& a);
bool is_log_concave(const std::vector<Rational>& a);

}  // namespace vsl
