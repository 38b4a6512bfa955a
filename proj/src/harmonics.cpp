#include "vsl/harmonics.hpp"

#include <algorithm>

#include "vsl/llt.hpp"
#include "vsl/parallel.hpp"
#include "vsl/schroeder.hpp"

namespace vsl {

SymFunc nabla_e(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be positive");
  check_bound(n, limits().nabla_e_n, "n");
  const auto paths = enumerate_dyck(n);
  auto parts = parallel_map(paths, [](const SchroederPath& p) {
    return convert(llt(dyck_star(p)), Basis::s) * Coeff::t(haglund_bounce(p));
  });
  SymFunc f(Basis::s);
  for (const auto& part : parts) f += part;
  return f;
}

SymFunc nabla_p(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be positive");
  check_bound(n, limits().nabla_p_n, "n");
  const auto alphas = weak_compositions(n, n);
  auto parts = parallel_map(alphas, [](const Composition& alpha) {
    const NuAlpha nu = nu_alpha(alpha);
    return convert(llt(nu.path), Basis::s) * Coeff::monomial(nu.below, nu.area);
  });
  SymFunc f(Basis::s);
  for (const auto& part : parts) f += part;
  return f;
}

SymFunc hall_littlewood(const Partition& mu) {
  check_bound(mu.size(), limits().hall_littlewood_n, "|mu|");
  int shift = 0;
  for (int i = 1; i < mu.length(); ++i) shift += mu[i] * (mu[i] - 1) / 2;
  const Coeff divisor = Coeff::q(shift);
  return convert(omega(llt(p_mu(mu))), Basis::s).map_coeffs([&](const Coeff& c) { return exact_div(c, divisor); });
}

bool is_unimodal(const std::vector<Rational>& a) {
  std::size_t i = 0;
  while (i + 1 < a.size() && a[i] <= a[i + 1]) ++i;
  while (i + 1 < a.size() && a[i] >= a[i + 1]) ++i;
  return i + 1 >= a.size();
}

bool is_log_concave(const std::vector<Rational>& a) {
  for (std::size_t i = 1; i + 1 < a.size(); ++i) {
    if (a[i] * a[i] < a[i - 1] * a[i + 1]) return false;
  }
  return true;
}

SurveyReport survey_e_coefficients(int max_n) {
  check_bound(max_n, limits().survey_n, "max n");
  std::vector<SchroederPath> paths;
  for (int n = 1; n <= max_n; ++n) {
    auto level = enumerate(n);
    paths.insert(paths.end(), level.begin(), level.end());
  }
  auto per_path = parallel_map(paths, [](const SchroederPath& p) {
    std::vector<SurveyEntry> entries;
    const SymFunc expansion = orientation_e_expansion(p);
    for (const auto& [lambda, c] : expansion.terms()) {
      SurveyEntry entry;
      entry.path = p.word();
      entry.shape = lambda;
      entry.coefficients.assign(static_cast<std::size_t>(std::max(0, c.max_q()) + 1), Rational(0));
      for (const auto& [mono, r] : c.terms()) {
        if (mono.first < 0) {
          entry.nonneg = false;
          continue;
        }
        entry.coefficients[mono.first] = r;
        if (r < 0) entry.nonneg = false;
      }
      entry.unimodal = is_unimodal(entry.coefficients);
      entry.log_concave = is_log_concave(entry.coefficients);
      entry.mode = static_cast<int>(std::max_element(entry.coefficients.begin(), entry.coefficients.end()) -
                                    entry.coefficients.begin());
      entries.push_back(std::move(entry));
    }
    return entries;
  });

  SurveyReport report;
  report.max_n = max_n;
  for (auto& entries : per_path) {
    for (auto& e : entries) {
      report.not_unimodal += !e.unimodal;
      report.not_log_concave += !e.log_concave;
      report.negative += !e.nonneg;
      report.entries.push_back(std::move(e));
    }
  }
  return report;
}

}  // namespace vsl
