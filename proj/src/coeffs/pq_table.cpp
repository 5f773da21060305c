#include <isoparam/coeffs/pq_table.hpp>
#include <isoparam/errors.hpp>
#include <isoparam/exact/serialize.hpp>

#include <algorithm>
#include <map>
#include <mutex>

namespace isoparam::coeffs {

using exact::DLinear;
using exact::PolyMatrix;
using exact::Rational;

std::vector<TauPoly> PQRow::concat() const {
  std::vector<TauPoly> out = p;
  out.insert(out.end(), q.begin(), q.end());
  return out;
}

PQRow extract_pq(const InitialForm& alpha_0k, int n) {
  if (!alpha_0k.constant().is_zero()) throw VerificationError("extract_pq: form has a constant part");
  PQRow row{std::vector<TauPoly>(n), std::vector<TauPoly>(n)};
  for (const auto& [sym, c] : alpha_0k.coeffs()) {
    if (sym.ell < 0 || sym.ell >= n) throw VerificationError("extract_pq: symbol index out of range");
    (sym.kind == InitialSymbol::Kind::alpha ? row.p : row.q)[sym.ell] = c;
  }
  return row;
}

PQTable::PQTable(int n, std::vector<PQRow> rows, int first_level)
    : n_(n), first_(first_level), rows_(std::move(rows)) {
  if (n < 2) throw PreconditionError("PQTable: n must be >= 2");
}

const PQRow& PQTable::row(int k) const {
  if (k < first_ || k > last_level())
    throw PreconditionError("PQTable: level " + std::to_string(k) + " outside [" + std::to_string(first_) + ", " +
                            std::to_string(last_level()) + "]");
  return rows_[k - first_];
}

PQTable pq_seed(int n) {
  const AlphaBetaTable ab = alphabeta_table(n, 2);
  std::vector<PQRow> rows;
  for (int k = 0; k <= 2; ++k) rows.push_back(extract_pq(ab.level(k).alpha[0], n));
  return PQTable(n, std::move(rows), 0);
}

namespace {

// Level-1 substitution: how alpha_{ell,1}, beta_{ell,1} read in the initial data.
struct LevelOne {
  std::vector<PQRow> alpha;  // alpha[ell] = coefficients of alpha_{ell,1}
  std::vector<PQRow> beta;
};

const LevelOne& level_one(int n) {
  static std::mutex mu;
  static std::map<int, LevelOne> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  const AlphaBetaTable ab = alphabeta_table(n, 1);
  LevelOne l1;
  for (int l = 0; l < n; ++l) {
    l1.alpha.push_back(extract_pq(ab.level(1).alpha[l], n));
    l1.beta.push_back(extract_pq(ab.level(1).beta[l], n));
  }
  return cache.emplace(n, std::move(l1)).first->second;
}

void extend(PQTable& t) {
  const int n = t.n();
  const LevelOne& l1 = level_one(n);
  const PQRow& cur = t.row(t.last_level());
  PQRow next{std::vector<TauPoly>(n), std::vector<TauPoly>(n)};
  for (int l = 0; l < n; ++l) {
    for (int m = 0; m < n; ++m) {
      if (!cur.p[l].is_zero()) {
        if (!l1.alpha[l].p[m].is_zero()) next.p[m] += cur.p[l] * l1.alpha[l].p[m];
        if (!l1.alpha[l].q[m].is_zero()) next.q[m] += cur.p[l] * l1.alpha[l].q[m];
      }
      if (!cur.q[l].is_zero()) {
        if (!l1.beta[l].p[m].is_zero()) next.p[m] += cur.q[l] * l1.beta[l].p[m];
        if (!l1.beta[l].q[m].is_zero()) next.q[m] += cur.q[l] * l1.beta[l].q[m];
      }
    }
  }
  t.push(std::move(next));
}

}  // namespace

PQTable pq_step(const PQTable& t) {
  PQTable out = t;
  extend(out);
  return out;
}

PQTable pq_table(int n, int k_max) {
  if (k_max < 0) throw PreconditionError("pq_table: k_max must be >= 0");
  static std::mutex mu;
  static std::map<int, PQTable> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, pq_seed(n)).first;
  while (it->second.last_level() < k_max) extend(it->second);
  std::vector<PQRow> rows;
  for (int k = 0; k <= k_max; ++k) rows.push_back(it->second.row(k));
  return PQTable(n, std::move(rows), 0);
}

PQRow stated_recursion_step(int n, const PQRow& row) {
  if (n < 3) throw PreconditionError("stated recursion is printed for n >= 3 only");
  const TauPoly tau = TauPoly::tau();
  const auto& p = row.p;
  const auto& q = row.q;
  PQRow next{std::vector<TauPoly>(n), std::vector<TauPoly>(n)};
  next.p[0] = TauPoly(n - 1) * tau * p[1];
  next.q[0] = p[0] + TauPoly(n - 1) * tau * q[1];
  for (int l = 1; l <= n - 2; ++l) {
    next.p[l] = TauPoly(l) * p[l - 1] + TauPoly(n - 1 - l) * tau * p[l + 1];
    next.q[l] = p[l] + TauPoly(l) * q[l - 1] + TauPoly(n - 1 - l) * tau * q[l + 1];
  }
  next.p[n - 1] = TauPoly(n - 1) * p[n - 2];
  next.q[n - 1] = p[n - 1] + TauPoly(n - 1) * q[n - 2];
  return next;
}

PQRow stated_initial_row(int n) {
  if (n < 3) throw PreconditionError("stated initial row is printed for n >= 3 only");
  PQRow r{std::vector<TauPoly>(n), std::vector<TauPoly>(n)};
  r.p[0] = TauPoly::tau_power(1, n - 1);
  r.p[2] = TauPoly(2);
  r.q[1] = TauPoly(2);
  return r;
}

std::vector<TauPoly> z_row(int n, int row_index) {
  if (row_index < 1) throw PreconditionError("z_row: row index must be >= 1");
  return pq_table(n, row_index + 1).row(row_index + 1).concat();
}

PolyMatrix build_Z(int n, const std::vector<int>& extra_rows) {
  if (n < 2) throw PreconditionError("build_Z: n must be >= 2");
  std::vector<int> indices;
  for (int i = 1; i <= 2 * n - 1; ++i) indices.push_back(i);
  indices.insert(indices.end(), extra_rows.begin(), extra_rows.end());
  int top = 0;
  for (int i : indices) {
    if (i < 1) throw PreconditionError("build_Z: row indices must be >= 1");
    top = std::max(top, i + 1);
  }
  const PQTable t = pq_table(n, top);
  std::vector<std::vector<TauPoly>> rows;
  for (int i : indices) rows.push_back(t.row(i + 1).concat());
  return PolyMatrix::from_rows(rows);
}

TauPoly closed_form_n3(int k, CoefKind kind, int ell) {
  if (k < 2 || ell < 0 || ell > 2) throw PreconditionError("closed_form_n3: need k >= 2 and ell in {0,1,2}");
  const bool even = k % 2 == 0;
  const int s = even ? k / 2 : (k - 1) / 2;
  auto two_pow = [](int e) { return exact::pow(Rational(2), static_cast<unsigned>(e)); };
  if (kind == CoefKind::p) {
    if (even) {
      if (ell == 0) return TauPoly::tau_power(s, two_pow(2 * s - 1));
      if (ell == 2) return TauPoly::tau_power(s - 1, two_pow(2 * s - 1));
      return {};
    }
    return ell == 1 ? TauPoly::tau_power(s, two_pow(2 * s)) : TauPoly();
  }
  if (even) return ell == 1 ? TauPoly::tau_power(s - 1, Rational(s) * two_pow(2 * s - 1)) : TauPoly();
  const Rational mu = Rational(2 * s + 1) * two_pow(2 * s - 1);
  if (ell == 0) return TauPoly::tau_power(s, mu);
  if (ell == 2) return TauPoly::tau_power(s - 1, mu);
  return {};
}

namespace {

nlohmann::json entry_witness(int k, int ell, const char* kind, const TauPoly& v) {
  return {{"k", k}, {"ell", ell}, {"kind", kind}, {"value", v.str()}};
}

bool is_positive_integer_monomial(const TauPoly& v, int power) {
  if (!v.is_monomial()) return false;
  const auto& [h, c] = *v.terms().begin();
  return h == 2 * power && c.get_den() == 1 && c > 0;
}

}  // namespace

CheckList structure_check(const PQTable& t) {
  const int n = t.n();
  const int lo = std::max(2, t.first_level());
  const int hi = t.last_level();
  nlohmann::json w_parity, w_upper, w_fact, w_mono_p, w_mono_q;
  for (int k = lo; k <= hi; ++k) {
    const PQRow& r = t.row(k);
    for (int l = 0; l < n; ++l) {
      if ((k + l) % 2 == 1 && !r.p[l].is_zero() && w_parity.is_null()) w_parity = entry_witness(k, l, "p", r.p[l]);
      if ((k + l) % 2 == 0 && !r.q[l].is_zero() && w_parity.is_null()) w_parity = entry_witness(k, l, "q", r.q[l]);
      if (l > k && w_upper.is_null()) {
        if (!r.p[l].is_zero()) w_upper = entry_witness(k, l, "p", r.p[l]);
        if (!r.q[l].is_zero()) w_upper = entry_witness(k, l, "q", r.q[l]);
      }
      if (l <= k && (k - l) % 2 == 0 && !is_positive_integer_monomial(r.p[l], (k - l) / 2) && w_mono_p.is_null())
        w_mono_p = entry_witness(k, l, "p", r.p[l]);
      if (l <= k && (k - l) % 2 == 1 && !is_positive_integer_monomial(r.q[l], (k - l - 1) / 2) &&
          w_mono_q.is_null())
        w_mono_q = entry_witness(k, l, "q", r.q[l]);
    }
    if (k <= n - 1 && r.p[k] != TauPoly(Rational(exact::factorial(k))) && w_fact.is_null())
      w_fact = entry_witness(k, k, "p", r.p[k]);
    // q_{k+1,k} = (k+1)! read at level k+1
    if (k - 1 >= 2 && k - 1 <= n - 1 && r.q[k - 1] != TauPoly(Rational(exact::factorial(k))) && w_fact.is_null())
      w_fact = entry_witness(k, k - 1, "q", r.q[k - 1]);
  }
  const nlohmann::json range = {{"n", n}, {"k_from", lo}, {"k_to", hi}};
  auto mk = [&](const char* id, const char* ref, const nlohmann::json& w) {
    nlohmann::json wit = range;
    if (!w.is_null()) wit["counterexample"] = w;
    return make_check(id, ref, w.is_null(), wit);
  };
  return {
      mk("prop-p&q(i)", "p/q parity zeros", w_parity),
      mk("prop-p&q(ii)", "p/q vanish above the diagonal", w_upper),
      mk("prop-p&q(iii)", "factorial diagonal p_{k,k}, q_{k+1,k}", w_fact),
      mk("prop-p&q(iv)", "p_{k,l} positive integer monomial of degree (k-l)/2", w_mono_p),
      mk("prop-p&q(v)", "q_{k,l} positive integer monomial of degree (k-l-1)/2", w_mono_q),
  };
}

CheckList closed_form_n3_check(int k_max) {
  const PQTable t = pq_table(3, k_max);
  nlohmann::json w[5];
  auto note = [&](int part, int k, int ell, const char* kind, const TauPoly& v) {
    if (w[part].is_null()) w[part] = entry_witness(k, ell, kind, v);
  };
  for (int k = 2; k <= k_max; ++k) {
    const PQRow& r = t.row(k);
    for (int l = 0; l < 3; ++l) {
      if ((k + l) % 2 == 1 && !r.p[l].is_zero()) note(0, k, l, "p", r.p[l]);
      if ((k + l) % 2 == 0 && !r.q[l].is_zero()) note(0, k, l, "q", r.q[l]);
    }
    if (k % 2 == 0) {
      if (r.p[0] != closed_form_n3(k, CoefKind::p, 0) || r.p[0] != TauPoly::tau() * r.p[2]) note(1, k, 0, "p", r.p[0]);
      if (r.q[1] != closed_form_n3(k, CoefKind::q, 1)) note(4, k, 1, "q", r.q[1]);
    } else {
      if (r.p[1] != closed_form_n3(k, CoefKind::p, 1)) note(2, k, 1, "p", r.p[1]);
      if (r.q[0] != closed_form_n3(k, CoefKind::q, 0) || r.q[0] != TauPoly::tau() * r.q[2]) note(3, k, 0, "q", r.q[0]);
    }
  }
  static const char* ids[5] = {"prop-coeff3(i)", "prop-coeff3(ii)", "prop-coeff3(iii)", "prop-coeff3(iv)",
                               "prop-coeff3(v)"};
  static const char* refs[5] = {"parity zeros, n = 3", "p_{2s,0} = tau p_{2s,2} = 2^(2s-1) tau^s",
                                "p_{2s+1,1} = 2^(2s) tau^s", "q_{2s+1,0} = tau q_{2s+1,2} = (2s+1) 2^(2s-1) tau^s",
                                "q_{2s,1} = s 2^(2s-1) tau^(s-1)"};
  CheckList out;
  for (int i = 0; i < 5; ++i) {
    nlohmann::json wit{{"n", 3}, {"k_from", 2}, {"k_to", k_max}};
    if (!w[i].is_null()) wit["counterexample"] = w[i];
    out.push_back(make_check(ids[i], refs[i], w[i].is_null(), wit));
  }
  return out;
}

ClaimCheck cross_derivation_check(int n, int k_max) {
  const AlphaBetaTable ab = alphabeta_table(n, k_max);
  const PQTable t = pq_table(n, k_max);
  for (int k = 0; k <= k_max; ++k) {
    const PQRow direct = extract_pq(ab.level(k).alpha[0], n);
    if (direct != t.row(k)) {
      nlohmann::json row_direct = nlohmann::json::array(), row_table = nlohmann::json::array();
      for (const auto& v : direct.concat()) row_direct.push_back(v.str());
      for (const auto& v : t.row(k).concat()) row_table.push_back(v.str());
      return make_check("eq-linearcombination", "p/q rows vs expanded alpha_{0,k}", false,
                        {{"n", n}, {"k", k}, {"expanded", row_direct}, {"table", row_table}});
    }
  }
  return make_check("eq-linearcombination", "p/q rows vs expanded alpha_{0,k}", true, {{"n", n}, {"k_max", k_max}});
}

}  // namespace isoparam::coeffs
