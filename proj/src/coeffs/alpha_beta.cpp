#include <isoparam/coeffs/alpha_beta.hpp>
#include <isoparam/errors.hpp>

namespace isoparam::coeffs {

AlphaBetaTable::AlphaBetaTable(int n) : n_(n) {
  if (n < 2) throw PreconditionError("AlphaBetaTable: n must be >= 2");
  AlphaBetaLevel first;
  for (int l = 0; l < n; ++l) {
    first.alpha.push_back(alpha0(l));
    first.beta.push_back(beta0(l));
  }
  levels_.push_back(std::move(first));
}

const AlphaBetaLevel& AlphaBetaTable::level(int k) const {
  if (k < 0 || k > depth()) throw PreconditionError("AlphaBetaTable: level " + std::to_string(k) + " not computed");
  return levels_[k];
}

AlphaBetaTable alphabeta_step(const AlphaBetaTable& t) {
  const AlphaBetaLevel& last = t.level(t.depth());
  AlphaBetaLevel next;
  derivative_step<InitialForm>(t.n(), InitialForm(TauPoly::tau()), last.alpha, last.beta, next.alpha, next.beta);
  AlphaBetaTable out = t;
  out.push(std::move(next));
  return out;
}

AlphaBetaTable alphabeta_table(int n, int k_max) {
  AlphaBetaTable t(n);
  while (t.depth() < k_max) t = alphabeta_step(t);
  return t;
}

void alphabeta_step_numeric(int n, double tau, const std::vector<double>& alpha, const std::vector<double>& beta,
                            std::vector<double>& alpha_next, std::vector<double>& beta_next) {
  if (static_cast<int>(alpha.size()) != n || static_cast<int>(beta.size()) != n)
    throw PreconditionError("alphabeta_step_numeric: vectors must have length n");
  derivative_step<double>(n, tau, alpha, beta, alpha_next, beta_next);
}

std::string to_string(const InitialForm& f) {
  if (f.is_zero()) return "0";
  std::string out;
  auto append = [&out](const TauPoly& c, const std::string& sym) {
    std::string body = c.terms().size() > 1 ? "(" + c.str() + ")" : c.str();
    if (!sym.empty()) body = body == "1" ? sym : body == "-1" ? "-" + sym : body + "*" + sym;
    out += out.empty() ? body : (body.front() == '-' ? " - " + body.substr(1) : " + " + body);
  };
  if (!f.constant().is_zero()) append(f.constant(), "");
  for (const auto& [s, c] : f.coeffs())
    append(c, std::string(s.kind == InitialSymbol::Kind::alpha ? "a" : "b") + std::to_string(s.ell) + "_0");
  return out;
}

}  // namespace isoparam::coeffs
