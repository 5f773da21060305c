#include "oracles.hpp"

#include <isoparam/coeffs/pq_table.hpp>
#include <isoparam/errors.hpp>
#include <isoparam/kac/kac.hpp>
#include <isoparam/kac/spectrum.hpp>
#include <isoparam/kac/vandermonde.hpp>

#include <Eigen/Dense>
#include <doctest.h>

using namespace isoparam;
using namespace isoparam::kac;
using exact::Rational;

namespace {

TauPoly t(int power, long c = 1) { return TauPoly::tau_power(power, Rational(c)); }

// det(x I - K) at a rational tau by Leibniz expansion, compared with the
// claimed coefficients at several x.
bool char_poly_matches_det(int n, const Rational& sqrt_tau, const XPoly& cp) {
  const exact::RationalMatrix k = build_kac(n).entries.evaluate(sqrt_tau);
  for (long xi = -3; xi <= 3; ++xi) {
    exact::RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = (i == j ? Rational(xi) : Rational(0)) - k(i, j);
    Rational value = 0, xp = 1;
    for (const auto& c : cp) {
      value += c.evaluate(sqrt_tau) * xp;
      xp *= xi;
    }
    if (value != oracle::leibniz_det(m)) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("kac") {
  TEST_CASE("build_kac examples") {
    const PolyMatrix k2 = build_kac(2).entries;
    CHECK(k2.poly(0, 1) == TauPoly(1));
    CHECK(k2.poly(1, 0) == t(1));
    CHECK(k2.poly(0, 0).is_zero());
    const PolyMatrix k3 = build_kac(3).entries;
    CHECK(k3.poly(1, 0) == t(1, 2));
    CHECK(k3.poly(1, 2) == TauPoly(2));
    CHECK(k3.poly(2, 1) == t(1));
    CHECK(build_kac(4).entries.poly(1, 0) == t(1, 3));
    CHECK_THROWS_AS(build_kac(1), PreconditionError);
  }

  TEST_CASE("char_poly examples and product form") {
    CHECK(char_poly(build_kac(2)) == XPoly{-t(1), 0, 1});
    CHECK(char_poly(build_kac(3)) == XPoly{0, -t(1, 4), 0, 1});
    CHECK(char_poly(build_kac(4)) == XPoly{t(2, 9), 0, -t(1, 10), 0, 1});
    for (int n = 2; n <= 12; ++n) {
      const XPoly cp = char_poly(build_kac(n));
      CHECK(cp == expected_char_poly(n));
      if (n <= 7) {
        CHECK(char_poly_matches_det(n, Rational(2), cp));
        CHECK(char_poly_matches_det(n, exact::make_rational(1, 3), cp));
      }
    }
  }

  TEST_CASE("kac_rank parity rule") {
    CHECK(kac_rank(build_kac(2)) == 2);
    CHECK(kac_rank(build_kac(3)) == 2);
    CHECK(kac_rank(build_kac(6)) == 6);
    for (int n = 2; n <= 12; ++n) CHECK(kac_rank(build_kac(n)) == static_cast<std::size_t>(n % 2 == 0 ? n : n - 1));
  }

  TEST_CASE("row_power examples and the pinned offset") {
    CHECK(row_power(3, 0) == std::vector<TauPoly>{1, 0, 0, 0, 0, 0});
    CHECK(row_power(3, 1 + kRowPowerOffset) == std::vector<TauPoly>{t(1, 2), 0, 2, 0, 2, 0});
    CHECK(row_power(2, 2 + kRowPowerOffset) == std::vector<TauPoly>{0, t(1), t(1, 3), 0});
    CHECK(detect_row_power_offset() == kRowPowerOffset);
    CHECK_NOTHROW(pin_row_power_offset());
    for (int n = 2; n <= 6; ++n) {
      const PolyMatrix z = coeffs::build_Z(n, {2 * n + 1, 2 * n + 4});
      const std::vector<int> idx = [&] {
        std::vector<int> v;
        for (int i = 1; i <= 2 * n - 1; ++i) v.push_back(i);
        v.push_back(2 * n + 1);
        v.push_back(2 * n + 4);
        return v;
      }();
      for (std::size_t r = 0; r < z.rows(); ++r) {
        const std::vector<TauPoly> want = row_power(n, idx[r] + kRowPowerOffset);
        for (std::size_t c = 0; c < z.cols(); ++c) CHECK(z.poly(r, c) == want[c]);
      }
    }
  }

  TEST_CASE("Q block powers") {
    const QMatrix q2 = build_q(2);
    CHECK(q_block_power(q2, 1) == q2.entries);
    const PolyMatrix q22 = q_block_power(q2, 2);
    CHECK(q22.poly(0, 0) == t(1));
    CHECK(q22.poly(1, 1) == t(1));
    CHECK(q22.poly(0, 1).is_zero());
    CHECK(q22.poly(0, 3) == TauPoly(2));
    CHECK(q22.poly(1, 2) == t(1, 2));
    for (int n = 2; n <= 5; ++n) {
      const QMatrix q = build_q(n);
      const PolyMatrix k = build_kac(n).entries;
      const PolyMatrix q3 = q_block_power(q, 3), k2 = k * k;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) CHECK(q3.poly(i, n + j) == TauPoly(3) * k2.poly(i, j));
      for (int j = 1; j <= 6; ++j) CHECK_NOTHROW(q_block_power(q, j));
    }
    CHECK_THROWS_AS(q_block_power(q2, 0), PreconditionError);
  }

  TEST_CASE("spectrum at sampled tau") {
    for (int n = 2; n <= 7; ++n)
      for (const Rational& tau : {Rational(1), Rational(4), exact::make_rational(9, 4), Rational(-1), Rational(-4)}) {
        const SpectrumReport r = spectrum_check(n, tau);
        CHECK_MESSAGE(r.passed, "n=" << n << " tau=" << tau.get_str());
        CHECK(r.real_branch == (tau > 0));
        if (tau > 0) CHECK(r.min_e1_coordinate > 1e-9);
      }
    // Oracle: Eigen on the evaluated matrix, sorted real eigenvalues.
    for (int n = 2; n <= 7; ++n) {
      const double tau = 2.25;
      const exact::RationalMatrix k = build_kac(n).entries.evaluate(exact::make_rational(3, 2));
      Eigen::MatrixXd m(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = exact::to_double(k(i, j));
      Eigen::VectorXd ev = m.eigenvalues().real();
      std::sort(ev.data(), ev.data() + n);
      for (int l = 0; l < n; ++l) CHECK(ev[l] == doctest::Approx((2 * l - n + 1) * std::sqrt(tau)).epsilon(1e-9));
    }
    CHECK(binomial_expansion_residual(5, 2.0, {0.1, 0.7, 1.3}) < 1e-12);
    CHECK(binomial_expansion_residual(4, -3.0, {0.1, 0.7, 1.3}) < 1e-12);
  }

  TEST_CASE("vandermonde examples") {
    CHECK(vandermonde_det({1, 2, 3}, false) == 2);
    CHECK(vandermonde_det({0, 1}, true) == 1);
    CHECK(vandermonde_det({1, 2, 4}, true) == 1296);
    CHECK_THROWS_AS(vandermonde_det({1, 2, 1}, false), PreconditionError);
  }

  TEST_CASE("vandermonde against Leibniz and the product formula") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 30; ++trial) {
      const int size = 1 + trial % 4;
      std::vector<Rational> nodes;
      while (static_cast<int>(nodes.size()) < size) {
        const Rational x = oracle::random_rational(rng, 20, 7);
        if (std::find(nodes.begin(), nodes.end(), x) == nodes.end()) nodes.push_back(x);
      }
      const Rational v = vandermonde_det(nodes, false);
      CHECK(v == oracle::leibniz_det(instantiate(vandermonde_template(size), nodes)));
      const Rational v2 = vandermonde_det(nodes, true);
      CHECK(v2 == v * v * v * v);
      if (size <= 4) CHECK(v2 == oracle::leibniz_det(instantiate(vandermonde2_template(size), nodes)));
    }
  }

  TEST_CASE("type-2 template rows come in derivative pairs") {
    for (int m = 1; m <= 6; ++m) {
      const NodeTemplate t2 = vandermonde2_template(m);
      CHECK(t2.rows.size() == static_cast<std::size_t>(2 * m));
      CHECK(derivative_pairs_hold(t2));
    }
    NodeTemplate broken = vandermonde2_template(2);
    broken.rows[1][2].coeff += 1;
    CHECK_FALSE(derivative_pairs_hold(broken));
  }

  TEST_CASE("independence and span certificates") {
    for (int n : {2, 4, 6})
      for (int s : {0, 1, 2}) CHECK(even_independence_check(n, s).ok());
    for (int n : {3, 5})
      for (int s : {2 * n, 2 * n + 1, 2 * n + 5}) {
        CHECK(odd_dependence_check(n, s).ok());
        CHECK(all_ok(odd_column_span_checks(n, s)));
      }
    CHECK_THROWS_AS(odd_dependence_check(3, 4), PreconditionError);
  }
}
