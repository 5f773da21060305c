#include <isoparam/coeffs/pq_table.hpp>
#include <isoparam/errors.hpp>
#include <isoparam/jacobi/jacobi.hpp>

#include <algorithm>
#include <cmath>

namespace isoparam::jacobi {

CheckList alpha0_consistency(const ShapeSpec& spec, const Jet& h_jet, int k_max, double tol) {
  spec.validate();
  if (k_max < 1) throw PreconditionError("alpha0_consistency: k_max must be >= 1");
  const int n = spec.n;
  const double tau = spec.tau();
  const DFormula f = dformula_extract(spec);
  const std::vector<double> d = d_constants(h_jet, k_max);
  const coeffs::PQTable table = coeffs::pq_table(n, k_max + 1);

  nlohmann::json steps = nlohmann::json::array(), rows = nlohmann::json::array();
  bool steps_ok = true, rows_ok = true;
  double worst_steps = 0.0, worst_rows = 0.0;

  DFormula level = f;
  for (int k = 0; k <= k_max; ++k) {
    level = level.derivative(1);  // level k+1
    const double via_steps = level.alpha[0];

    double via_rows = 0.0;
    const coeffs::PQRow& row = table.row(k + 1);
    for (int l = 0; l < n; ++l)
      via_rows += row.p[l].evaluate_at_tau(tau) * f.alpha[l] + row.q[l].evaluate_at_tau(tau) * f.beta[l];

    const double scale = std::max(1.0, std::abs(d[k]));
    const double rs = std::abs(via_steps - d[k]) / scale;
    const double rr = std::abs(via_rows - d[k]) / scale;
    worst_steps = std::max(worst_steps, rs);
    worst_rows = std::max(worst_rows, rr);
    steps_ok = steps_ok && rs <= tol;
    rows_ok = rows_ok && rr <= tol;
    steps.push_back({{"k", k}, {"alpha0", via_steps}, {"d", d[k]}, {"residual", rs}});
    rows.push_back({{"k", k}, {"alpha0", via_rows}, {"d", d[k]}, {"residual", rr}});
  }

  CheckList out;
  out.push_back(make_check("eq-fderivativesagain", "alpha_{0,k+1} = d_k, recursion steps from det B(r)", steps_ok,
                           {{"n", n}, {"tau", tau}, {"k_max", k_max}, {"tol", tol}, {"max_residual", worst_steps},
                            {"values", steps}}));
  out.push_back(make_check("eq-fderivativesagain (p/q rows)", "alpha_{0,k+1} = sum p alpha_l0 + q beta_l0 = d_k", rows_ok,
                           {{"n", n}, {"tau", tau}, {"k_max", k_max}, {"tol", tol}, {"max_residual", worst_rows},
                            {"values", rows}}));
  return out;
}

}  // namespace isoparam::jacobi
