#pragma once

#include <isoparam/check.hpp>
#include <isoparam/coeffs/alpha_beta.hpp>
#include <isoparam/exact/poly_matrix.hpp>

#include <vector>

namespace isoparam::coeffs {

// Coefficients of alpha_{0,k} over the initial data:
// alpha_{0,k} = sum_ell p[ell] alpha_{ell,0} + q[ell] beta_{ell,0}.
struct PQRow {
  std::vector<TauPoly> p;
  std::vector<TauPoly> q;

  // (p_0..p_{n-1}, q_0..q_{n-1})
  std::vector<TauPoly> concat() const;
  friend bool operator==(const PQRow&, const PQRow&) = default;
};

// Reads (p, q) off an expanded alpha_{0,k}.
PQRow extract_pq(const InitialForm& alpha_0k, int n);

class PQTable {
 public:
  PQTable(int n, std::vector<PQRow> rows, int first_level);

  int n() const { return n_; }
  int first_level() const { return first_; }
  int last_level() const { return first_ + static_cast<int>(rows_.size()) - 1; }
  // Row for level k, first_level() <= k <= last_level().
  const PQRow& row(int k) const;
  TauPoly p(int k, int ell) const { return row(k).p.at(ell); }
  TauPoly q(int k, int ell) const { return row(k).q.at(ell); }

  void push(PQRow r) { rows_.push_back(std::move(r)); }

 private:
  int n_;
  int first_;
  std::vector<PQRow> rows_;
};

// Levels 0..2 obtained by expanding the derivative recursion symbolically.
PQTable pq_seed(int n);

// Appends level k+1 by substituting the level-1 forms alpha_{ell,1}, beta_{ell,1}
// into alpha_{0,k+1} = sum p_{k,ell} alpha_{ell,1} + q_{k,ell} beta_{ell,1}.
// Valid for every n >= 2.
PQTable pq_step(const PQTable& t);

// Memoized table with levels 0..k_max. Thread-safe.
PQTable pq_table(int n, int k_max);

// The recurrences as printed for n = 3 (eq-rec3) and n >= 4 (lem-coeff),
// applied to one row. Independent of pq_step; throws for n = 2.
PQRow stated_recursion_step(int n, const PQRow& row);
// Stated initial row (level 2); throws for n = 2.
PQRow stated_initial_row(int n);

// Rows of Z: row i (1-based) is level i+1, i.e. the coefficient row of
// alpha_{0,i+1}. extra_rows are further 1-based row indices appended in order.
exact::PolyMatrix build_Z(int n, const std::vector<int>& extra_rows = {});
// Single row of Z as a 2n vector.
std::vector<TauPoly> z_row(int n, int row_index);

enum class CoefKind { p, q };

// Closed forms for n = 3, k >= 2, ell in {0,1,2}.
TauPoly closed_form_n3(int k, CoefKind kind, int ell);

// Parity zeros, vanishing above the diagonal, factorial diagonal and
// monomial positivity, for levels 2..last_level.
CheckList structure_check(const PQTable& t);

// Matches pq_step against alpha_{0,k} expanded by the alpha/beta table.
ClaimCheck cross_derivation_check(int n, int k_max);

// Table entries for n = 3 against closed_form_n3, levels 2..k_max.
CheckList closed_form_n3_check(int k_max);

}  // namespace isoparam::coeffs
