#include <isoparam/coeffs/alpha_beta.hpp>
#include <isoparam/errors.hpp>
#include <isoparam/jacobi/jacobi.hpp>

#include <algorithm>
#include <cmath>
#include <string>

namespace isoparam::jacobi {

void ShapeSpec::validate() const {
  if (n < 2) throw PreconditionError("ShapeSpec: n must be >= 2");
  if (epsilon != 1 && epsilon != -1) throw PreconditionError("ShapeSpec: epsilon must be +1 or -1");
  if (!(std::abs(theta) < 1.0)) throw PreconditionError("ShapeSpec: need theta^2 < 1 (tau != 0)");
  if (a.rows() != n || a.cols() != n) throw PreconditionError("ShapeSpec: a must be n x n");
  if (!a.allFinite()) throw PreconditionError("ShapeSpec: a has non-finite entries");
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  if ((a - a.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) throw PreconditionError("ShapeSpec: a must be symmetric");
}

std::pair<double, double> sc_eval(double tau, double r) {
  if (tau == 0.0) throw PreconditionError("sc_eval: tau must be nonzero");
  if (tau > 0) {
    const double w = std::sqrt(tau);
    return {std::sinh(w * r) / w, std::cosh(w * r)};
  }
  const double w = std::sqrt(-tau);
  return {std::sin(w * r) / w, std::cos(w * r)};
}

namespace {

Jet tau_jet(double tau, double r0, std::size_t length, bool s_branch) {
  const auto [s, c] = sc_eval(tau, r0);
  std::vector<double> coeffs(length);
  double fact = 1.0, tau_m = 1.0;
  for (std::size_t k = 0; k < length; ++k) {
    if (k > 1) fact *= static_cast<double>(k);
    if (k > 0 && k % 2 == 0) tau_m *= tau;
    double v;
    if (s_branch) v = k % 2 == 0 ? tau_m * s : tau_m * c;
    else v = k % 2 == 0 ? tau_m * c : tau_m * tau * s;
    coeffs[k] = v / fact;
  }
  return Jet(std::move(coeffs));
}

// Minimal dense polynomial in one variable for cofactor expansion.
struct Poly {
  std::vector<double> c;

  friend Poly operator+(Poly a, const Poly& b) {
    if (a.c.size() < b.c.size()) a.c.resize(b.c.size(), 0.0);
    for (std::size_t i = 0; i < b.c.size(); ++i) a.c[i] += b.c[i];
    return a;
  }
  friend Poly operator-(Poly a, const Poly& b) {
    if (a.c.size() < b.c.size()) a.c.resize(b.c.size(), 0.0);
    for (std::size_t i = 0; i < b.c.size(); ++i) a.c[i] -= b.c[i];
    return a;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.c.empty() || b.c.empty()) return {};
    Poly out{std::vector<double>(a.c.size() + b.c.size() - 1, 0.0)};
    for (std::size_t i = 0; i < a.c.size(); ++i)
      for (std::size_t j = 0; j < b.c.size(); ++j) out.c[i + j] += a.c[i] * b.c[j];
    return out;
  }
};

constexpr int kMaxLaplace = 8;

template <class T>
T laplace_det(const std::vector<std::vector<T>>& m, const T& zero) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  T acc = zero;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<T>> minor;
    minor.reserve(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<T> row;
      row.reserve(n - 1);
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    T term = m[0][j] * laplace_det(minor, zero);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

double focal_threshold(const Eigen::MatrixXd& B) {
  const double scale = std::max(1.0, B.cwiseAbs().maxCoeff());
  return 1e-12 * std::pow(scale, static_cast<double>(B.rows()));
}

}  // namespace

Jet s_tau_jet(double tau, double r0, std::size_t length) { return tau_jet(tau, r0, length, true); }
Jet c_tau_jet(double tau, double r0, std::size_t length) { return tau_jet(tau, r0, length, false); }

BC b_solution(const ShapeSpec& spec, double r) {
  spec.validate();
  const int n = spec.n;
  const double tau = spec.tau();
  const auto [s, c] = sc_eval(tau, r);
  BC out{Eigen::MatrixXd(n, n), Eigen::MatrixXd(n, n)};
  for (int j = 0; j < n; ++j) {
    const double delta = j == 0 ? 1.0 : 0.0;
    out.B(0, j) = delta - spec.a(0, j) * r;
    out.C(0, j) = -spec.a(0, j);
  }
  for (int i = 1; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double delta = i == j ? 1.0 : 0.0;
      out.B(i, j) = delta * c - spec.a(i, j) * s;
      out.C(i, j) = delta * tau * s - spec.a(i, j) * c;
    }
  }
  return out;
}

Eigen::MatrixXd shape_of_parallel(const ShapeSpec& spec, double r) {
  const BC bc = b_solution(spec, r);
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(bc.B);
  const double det = lu.determinant();
  if (!(std::abs(det) >= focal_threshold(bc.B)))
    throw FocalPointError("det B(r) vanishes at r = " + std::to_string(r));
  // A = -C B^-1, i.e. A^T = -(B^T)^-1 C^T.
  Eigen::MatrixXd at = bc.B.transpose().partialPivLu().solve(bc.C.transpose());
  return -at.transpose();
}

double DFormula::evaluate(double r) const {
  const auto [s, c] = sc_eval(tau, r);
  double sum = 0.0;
  for (int l = 0; l < n; ++l)
    sum += (alpha[l] + beta[l] * r) * std::pow(s, l) * std::pow(c, n - 1 - l);
  return sum;
}

DFormula DFormula::derivative(int k) const {
  DFormula out = *this;
  for (int step = 0; step < k; ++step) {
    std::vector<double> a2, b2;
    coeffs::alphabeta_step_numeric(n, tau, out.alpha, out.beta, a2, b2);
    out.alpha = std::move(a2);
    out.beta = std::move(b2);
  }
  return out;
}

DFormula dformula_extract(const ShapeSpec& spec) {
  spec.validate();
  const int n = spec.n;
  if (n > kMaxLaplace) throw PreconditionError("dformula_extract: n > 8 not supported");
  // Rows 2..n are homogeneous of degree 1 in (s, c); set c = 1 and expand in s.
  std::vector<std::vector<Poly>> lower(n - 1, std::vector<Poly>(n));
  for (int i = 1; i < n; ++i)
    for (int j = 0; j < n; ++j) lower[i - 1][j] = Poly{{i == j ? 1.0 : 0.0, -spec.a(i, j)}};

  DFormula f{n, spec.tau(), std::vector<double>(n, 0.0), std::vector<double>(n, 0.0)};
  for (int j = 0; j < n; ++j) {
    Poly cof;
    if (n == 1) {
      cof = Poly{{1.0}};
    } else {
      std::vector<std::vector<Poly>> minor(n - 1);
      for (int i = 0; i < n - 1; ++i)
        for (int k = 0; k < n; ++k)
          if (k != j) minor[i].push_back(lower[i][k]);
      cof = laplace_det(minor, Poly{});
    }
    const double sign = j % 2 == 0 ? 1.0 : -1.0;
    // Row 1 is delta_1j - a_1j r.
    for (std::size_t l = 0; l < cof.c.size() && l < static_cast<std::size_t>(n); ++l) {
      const double v = sign * cof.c[l];
      if (j == 0) f.alpha[l] += v;
      f.beta[l] -= spec.a(0, j) * v;
    }
  }

  for (int k = 0; k < 20; ++k) {
    const double r = -0.95 + 0.1 * k;
    const BC bc = b_solution(spec, r);
    const double det = bc.B.determinant();
    const double val = f.evaluate(r);
    if (std::abs(val - det) > 1e-10 * std::max({1.0, std::abs(det), bc.B.cwiseAbs().maxCoeff()}))
      throw VerificationError("dformula_extract: formula misses det B(" + std::to_string(r) + ")");
  }
  return f;
}

DH d_and_h(const ShapeSpec& spec, double r) {
  const BC bc = b_solution(spec, r);
  DH out;
  out.D = bc.B.determinant();
  if (!(std::abs(out.D) >= focal_threshold(bc.B)))
    throw FocalPointError("det B(r) vanishes at r = " + std::to_string(r));
  out.D_prime = dformula_extract(spec).derivative(1).evaluate(r);
  out.H = -out.D_prime / out.D;
  out.trace_H = shape_of_parallel(spec, r).trace();
  if (std::abs(out.H - out.trace_H) > 1e-9 * (1.0 + std::abs(out.H)))
    throw VerificationError("d_and_h: -D'/D and trace A^r disagree at r = " + std::to_string(r));
  return out;
}

Jet d_jet(const ShapeSpec& spec, double r0, std::size_t length) {
  spec.validate();
  const int n = spec.n;
  if (n > kMaxLaplace) throw PreconditionError("d_jet: n > 8 not supported");
  const double tau = spec.tau();
  const Jet s = s_tau_jet(tau, r0, length);
  const Jet c = c_tau_jet(tau, r0, length);
  std::vector<std::vector<Jet>> m(n, std::vector<Jet>(n));
  for (int j = 0; j < n; ++j) {
    Jet e = Jet::constant((j == 0 ? 1.0 : 0.0) - spec.a(0, j) * r0, length);
    if (length > 1) e[1] = -spec.a(0, j);
    m[0][j] = e;
  }
  for (int i = 1; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = (i == j ? 1.0 : 0.0) * c - spec.a(i, j) * s;
  return laplace_det(m, Jet::constant(0.0, length));
}

// From f = D' + H D = 0: f^(k) = D^(k+1) + phi_k D with phi_0 = H. Differentiating
// once more and using D' = -H D gives phi_(k+1) = phi_k' - H phi_k. With D(0) = 1,
// D^(k+1)(0) = -phi_k(0) = d_k.
std::vector<double> d_constants(const Jet& h_jet, int k_max) {
  if (k_max < 0) throw PreconditionError("d_constants: k_max must be >= 0");
  if (h_jet.length() < static_cast<std::size_t>(k_max) + 1)
    throw PreconditionError("d_constants: H jet needs length k_max + 1");
  std::vector<double> d(k_max + 1);
  Jet phi = h_jet;
  d[0] = -phi[0];
  for (int k = 1; k <= k_max; ++k) {
    phi = phi.derivative() - h_jet * phi;
    d[k] = -phi[0];
  }
  return d;
}

Eigen::VectorXd curvature_term(const Eigen::VectorXd& x, const Eigen::VectorXd& y, const Eigen::VectorXd& z,
                               int epsilon) {
  if (x.size() != y.size() || x.size() != z.size() || x.size() < 2)
    throw PreconditionError("curvature_term: vectors need equal size >= 2");
  const Eigen::Index m = x.size() - 1;
  const Eigen::VectorXd xh = x.head(m), yh = y.head(m), zh = z.head(m);
  Eigen::VectorXd out = Eigen::VectorXd::Zero(x.size());
  out.head(m) = epsilon * (xh.dot(zh) * yh - yh.dot(zh) * xh);
  return out;
}

nlohmann::json parallel_table(const ShapeSpec& spec, const std::vector<double>& rs) {
  nlohmann::json rows = nlohmann::json::array();
  for (double r : rs) {
    nlohmann::json row{{"r", r}};
    try {
      const DH dh = d_and_h(spec, r);
      const Eigen::MatrixXd A = shape_of_parallel(spec, r);
      Eigen::EigenSolver<Eigen::MatrixXd> es(A, false);
      std::vector<double> ev;
      for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) ev.push_back(es.eigenvalues()[i].real());
      std::sort(ev.begin(), ev.end());
      row["D"] = dh.D;
      row["H"] = dh.H;
      row["eigenvalues"] = ev;
    } catch (const FocalPointError&) {
      row["focal"] = true;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace isoparam::jacobi
