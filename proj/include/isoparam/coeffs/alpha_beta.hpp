#pragma once

#include <isoparam/exact/affine_form.hpp>

#include <compare>
#include <string>
#include <vector>

namespace isoparam::coeffs {

using exact::TauPoly;

// Initial Jacobi data alpha_{ell,0} / beta_{ell,0}; kept apart from d-symbols.
struct InitialSymbol {
  enum class Kind { alpha, beta };
  Kind kind = Kind::alpha;
  int ell = 0;

  friend auto operator<=>(const InitialSymbol&, const InitialSymbol&) = default;
};

using InitialForm = exact::AffineForm<InitialSymbol>;

inline InitialForm alpha0(int ell) { return InitialForm::symbol({InitialSymbol::Kind::alpha, ell}); }
inline InitialForm beta0(int ell) { return InitialForm::symbol({InitialSymbol::Kind::beta, ell}); }

// Coefficients of the k-th derivative of D in the basis s^ell c^(n-1-ell):
// D^(k)(r) = sum_ell (alpha[ell] + beta[ell] r) s^ell c^(n-1-ell).
struct AlphaBetaLevel {
  std::vector<InitialForm> alpha;
  std::vector<InitialForm> beta;
};

class AlphaBetaTable {
 public:
  // Level 0 only: alpha_{ell,0} -> alpha_{ell,0}, beta_{ell,0} -> beta_{ell,0}.
  explicit AlphaBetaTable(int n);

  int n() const { return n_; }
  int depth() const { return static_cast<int>(levels_.size()) - 1; }
  const AlphaBetaLevel& level(int k) const;

  void push(AlphaBetaLevel next) { levels_.push_back(std::move(next)); }

 private:
  int n_;
  std::vector<AlphaBetaLevel> levels_;
};

// One differentiation step applied to a single level.
template <class T>
void derivative_step(int n, const T& tau, const std::vector<T>& alpha, const std::vector<T>& beta,
                     std::vector<T>& alpha_next, std::vector<T>& beta_next) {
  alpha_next.assign(n, T());
  beta_next.assign(n, T());
  for (int l = 0; l < n; ++l) {
    T a = beta[l];
    T b = T();
    if (l + 1 < n) {
      a += alpha[l + 1] * T(static_cast<long>(l + 1));
      b += beta[l + 1] * T(static_cast<long>(l + 1));
    }
    if (l >= 1) {
      a += alpha[l - 1] * (tau * T(static_cast<long>(n - l)));
      b += beta[l - 1] * (tau * T(static_cast<long>(n - l)));
    }
    alpha_next[l] = a;
    beta_next[l] = b;
  }
}

// Appends the next level.
AlphaBetaTable alphabeta_step(const AlphaBetaTable& t);
AlphaBetaTable alphabeta_table(int n, int k_max);

// Numeric level update at a fixed tau, used by the Jacobi pipeline.
void alphabeta_step_numeric(int n, double tau, const std::vector<double>& alpha, const std::vector<double>& beta,
                            std::vector<double>& alpha_next, std::vector<double>& beta_next);

std::string to_string(const InitialForm& f);

}  // namespace isoparam::coeffs
