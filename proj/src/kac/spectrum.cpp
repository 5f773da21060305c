#include <isoparam/errors.hpp>
#include <isoparam/kac/kac.hpp>
#include <isoparam/kac/spectrum.hpp>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>

namespace isoparam::kac {

namespace {

Eigen::MatrixXd numeric_kac(int n, double tau) {
  Eigen::MatrixXd k = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    if (i + 1 < n) k(i, i + 1) = i + 1;
    if (i >= 1) k(i, i - 1) = (n - i) * tau;
  }
  return k;
}

}  // namespace

SpectrumReport spectrum_check(int n, const exact::Rational& tau_q, double tol) {
  if (n < 2) throw PreconditionError("spectrum_check: n must be >= 2");
  if (tau_q == 0) throw PreconditionError("spectrum_check: tau must be nonzero");
  SpectrumReport rep;
  rep.tau = exact::to_double(tau_q);
  rep.real_branch = rep.tau > 0;
  const double root = std::sqrt(std::abs(rep.tau));
  const Eigen::MatrixXd k = numeric_kac(n, rep.tau);
  const double scale = std::max(1.0, (n - 1) * root);

  // Left eigenvectors of K are eigenvectors of K^T.
  Eigen::EigenSolver<Eigen::MatrixXd> es(k.transpose());
  if (es.info() != Eigen::Success) return rep;
  Eigen::VectorXcd lambda = es.eigenvalues();
  Eigen::MatrixXcd vecs = es.eigenvectors();

  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  auto key = [&](int i) { return rep.real_branch ? lambda(i).real() : lambda(i).imag(); };
  std::sort(order.begin(), order.end(), [&](int a, int b) { return key(a) > key(b); });

  for (int l = 0; l < n; ++l) {
    const std::complex<double> expected =
        rep.real_branch ? std::complex<double>((n - 1 - 2 * l) * root, 0.0)
                        : std::complex<double>(0.0, (n - 1 - 2 * l) * root);
    rep.max_eigenvalue_error = std::max(rep.max_eigenvalue_error, std::abs(lambda(order[l]) - expected) / scale);
  }

  if (rep.real_branch) {
    Eigen::MatrixXd q = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    q.topLeftCorner(n, n) = k;
    q.bottomRightCorner(n, n) = k;
    q.topRightCorner(n, n) = Eigen::MatrixXd::Identity(n, n);
    Eigen::MatrixXd basis(n, n);
    for (int l = 0; l < n; ++l) {
      const Eigen::VectorXd v = vecs.col(order[l]).real().normalized();
      basis.col(l) = v;
      const double lam = lambda(order[l]).real();
      Eigen::RowVectorXd x = Eigen::RowVectorXd::Zero(2 * n), y = Eigen::RowVectorXd::Zero(2 * n);
      x.head(n) = v.transpose();
      y.tail(n) = v.transpose();
      const double rx = (x * q - lam * x - y).norm();
      const double ry = (y * q - lam * y).norm();
      rep.max_generalized_residual = std::max({rep.max_generalized_residual, rx / scale, ry / scale});
    }
    const Eigen::VectorXd coords = basis.fullPivLu().solve(Eigen::VectorXd::Unit(n, 0));
    rep.min_e1_coordinate = coords.cwiseAbs().minCoeff();
  }

  rep.passed = rep.max_eigenvalue_error <= tol && rep.max_generalized_residual <= tol &&
               (!rep.real_branch || rep.min_e1_coordinate > tol);
  return rep;
}

double binomial_expansion_residual(int n, double tau, const std::vector<double>& xs) {
  using C = std::complex<double>;
  const C root = tau > 0 ? C(std::sqrt(tau), 0.0) : C(0.0, std::sqrt(-tau));
  double worst = 0.0;
  for (double x : xs) {
    const double c = tau > 0 ? std::cosh(root.real() * x) : std::cos(root.imag() * x);
    const double lhs = std::pow(c, n - 1);
    C rhs = 0.0;
    double binom = 1.0;
    for (int l = 0; l <= n - 1; ++l) {
      rhs += binom * std::exp(static_cast<double>(n - 1 - 2 * l) * root * x);
      binom = binom * (n - 1 - l) / (l + 1);
    }
    rhs /= std::pow(2.0, n - 1);
    worst = std::max(worst, std::abs(C(lhs, 0.0) - rhs) / std::max(1.0, std::abs(lhs)));
  }
  return worst;
}

}  // namespace isoparam::kac
