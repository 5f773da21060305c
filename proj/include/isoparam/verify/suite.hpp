#pragma once

#include <isoparam/check.hpp>
#include <isoparam/exact/rational.hpp>
#include <isoparam/verify/report.hpp>

#include <optional>
#include <vector>

namespace isoparam::verify {

struct Tolerances {
  double spectrum = 1e-9;
  double jacobi = 1e-9;
  double alpha0 = 1e-7;
  double cmc = 1e-8;
};

struct RunConfig {
  std::vector<int> n_range{2, 3, 4, 5};
  // 0: per-dimension default 2n + 10 (40 for the n = 3 closed forms).
  int k_max = 0;
  // Empty: eq-n=3 uses s = 3..8, odd-n rank checks use s = 2n, 2n + 2.
  std::vector<int> s_values;
  std::vector<exact::Rational> tau_samples;
  Tolerances tol;
  bool timings = true;

  // Throws PreconditionError: n < 2, k_max < 2n for odd n, s < 1.
  void validate() const;
  nlohmann::json to_json() const;
  // Missing keys keep their defaults.
  static RunConfig from_json(const nlohmann::json& j);
};

std::vector<exact::Rational> default_tau_samples();

// build_Z(n) against the printed table; printed errata make the record
// "flagged" when each one is a real violation of the monomial-degree rule.
ClaimCheck golden_z_check(int n);
// Printed recursions (n = 3: eq-rec3; n >= 4: lem-coeff) against pq_step.
ClaimCheck stated_recursion_check(int n, int k_max);
// q_{3,0}: computed 6 tau against the value 4 tau displayed in a proof.
ClaimCheck q30_display_check();
CheckList kac_checks(int n, int k_max, const std::vector<exact::Rational>& taus, double tol);
CheckList determinant_checks_n2();
CheckList determinant_checks_n3(const std::vector<int>& s_values);
ClaimCheck det_m_zero_check(int n);
CheckList jacobi_checks(int n, const Tolerances& tol);
CheckList geometry_checks(int n, const Tolerances& tol);
// Twelve classification cases.
ClaimCheck classify_table_check();

Report run_verify(const RunConfig& config);

}  // namespace isoparam::verify
