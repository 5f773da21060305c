#include "oracles.hpp"

#include <isoparam/errors.hpp>
#include <isoparam/exact/serialize.hpp>

#include <doctest.h>

using namespace isoparam;
using namespace isoparam::exact;

namespace {

TauPoly t(int power, long c = 1) { return TauPoly::tau_power(power, Rational(c)); }

PolyMatrix pure(const std::vector<std::vector<TauPoly>>& rows) { return PolyMatrix::from_rows(rows); }

}  // namespace

TEST_SUITE("exact") {
  TEST_CASE("rational canonical form and parsing") {
    CHECK(make_rational(6, -4) == make_rational(-3, 2));
    CHECK(to_string(make_rational(6, -4)) == "-3/2");
    CHECK(to_string(make_rational(0, 7)) == "0");
    CHECK(to_string(make_rational(4, 2)) == "2");
    CHECK_THROWS_AS(make_rational(1, 0), DivisionByZero);
    CHECK(parse_rational("-10/4") == make_rational(-5, 2));
    CHECK(parse_rational("+7") == Rational(7));
    CHECK_THROWS_AS(parse_rational("1/"), PreconditionError);
    CHECK_THROWS_AS(parse_rational("abc"), PreconditionError);
    CHECK_THROWS_AS(parse_rational("1/0"), DivisionByZero);
    CHECK(factorial(6) == 720);
  }

  TEST_CASE("poly_arith examples") {
    CHECK(TauPoly(2) * t(1) * (TauPoly(3) * t(2)) == t(3, 6));
    CHECK((t(1) - t(1)).is_zero());
    CHECK((t(1) - t(1)).terms().empty());
    CHECK((t(3, 2) - t(2, 4)) + (t(2, 4) + t(1, 2)) == t(3, 2) + t(1, 2));
    CHECK((t(3, 2) - t(2, 4)).str() == "2*t^3 - 4*t^2");
  }

  TEST_CASE("poly_eval examples") {
    CHECK(t(2).evaluate(Rational(2)) == 16);
    CHECK((t(3, 2) - t(2, 4) + t(1, 2)).evaluate(Rational(1)) == 0);
    CHECK(TauPoly().evaluate(Rational(5)) == 0);
    CHECK(TauPoly::monomial(Rational(3), 1).evaluate(Rational(2)) == 6);
    CHECK_THROWS_AS(TauPoly::monomial(Rational(1), -2).evaluate(Rational(0)), DivisionByZero);
  }

  TEST_CASE("ring laws on random polynomials") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
      const TauPoly a = oracle::random_tau_poly(rng), b = oracle::random_tau_poly(rng),
                    c = oracle::random_tau_poly(rng);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK((a + (-a)).is_zero());
      const TauPoly mixed = a * b - c;
      for (const auto& [e, coeff] : mixed.terms()) CHECK(coeff != 0);
      const Rational x = oracle::random_rational(rng);
      if (x != 0) CHECK((a * b).evaluate(x) == oracle::eval_terms(a, x) * oracle::eval_terms(b, x));
    }
  }

  TEST_CASE("exact quotient") {
    const TauPoly num = t(3, 2) - t(1, 2), den = t(1, 2);
    CHECK(exact_quotient(num, den) == t(2) - TauPoly(1));
    CHECK_THROWS_AS(exact_quotient(t(1), TauPoly()), DivisionByZero);
    CHECK_THROWS_AS(exact_quotient(t(1) + TauPoly(1), t(1) + TauPoly(2)), VerificationError);
  }

  TEST_CASE("matrix_det examples") {
    CHECK(matrix_det(pure({{t(1), TauPoly(1)}, {t(2), t(1)}})).is_zero());
    CHECK(matrix_det(PolyMatrix::identity(3)) == DLinear(1));

    // n = 2 system matrix with its second column replaced by P.
    PolyMatrix m2 = pure({{TauPoly(), TauPoly(), TauPoly(2)}, {t(1), t(1, 3), TauPoly()}, {TauPoly(), TauPoly(), t(1, 4)}});
    // P = d_k - p_{k+1,0} per row: (d_1 - tau, d_2, d_3 - tau^2).
    const std::vector<DLinear> column{d_symbol(1) - DLinear(t(1)), d_symbol(2), d_symbol(3) - DLinear(t(2))};
    const DLinear det = matrix_det(m2.with_column(1, column));
    const DLinear want = DLinear(t(3, 2)) - d_symbol(1, t(2, 4)) + d_symbol(3, t(1, 2));
    CHECK(det == want);
    CHECK(to_string(det) == "2*t^3 - 4*t^2*d1 + 2*t*d3");

    PolyMatrix two = m2.with_column(0, column).with_column(1, column);
    CHECK_THROWS_AS(matrix_det(two), PreconditionError);
  }

  TEST_CASE("determinant commutes with evaluation") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t n = 1 + trial % 5;
      PolyMatrix m(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = DLinear(oracle::random_tau_poly(rng, 4, 2));
      const DLinear det = matrix_det(m);
      REQUIRE(det.is_pure());
      for (int k = 0; k < 3; ++k) {
        Rational x = oracle::random_rational(rng);
        if (x == 0) x = 1;
        CHECK(det.constant().evaluate(x) == oracle::leibniz_det(m.evaluate(x)));
      }
    }
  }

  TEST_CASE("symbolic column determinant against per-symbol evaluation") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t n = 2 + trial % 4;
      PolyMatrix m(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = DLinear(oracle::random_tau_poly(rng, 4, 2));
      const std::size_t col = trial % n;
      for (std::size_t i = 0; i < n; ++i)
        m(i, col) = DLinear(oracle::random_tau_poly(rng, 2, 1)) + d_symbol(static_cast<int>(i) + 1, oracle::random_tau_poly(rng, 2, 1));
      const DLinear det = matrix_det(m);
      std::vector<Rational> d;
      for (std::size_t i = 0; i < n; ++i) d.push_back(oracle::random_rational(rng));
      const Rational x = 3;
      Rational value = det.constant().evaluate(x);
      for (const auto& [k, c] : det.coeffs()) value += c.evaluate(x) * d[k - 1];
      CHECK(value == oracle::leibniz_det(m.evaluate(x, d)));
    }
  }

  TEST_CASE("matrix_rank examples and evaluation bound") {
    CHECK(matrix_rank(pure({{TauPoly(), TauPoly(), TauPoly(2)}, {t(1), t(1, 3), TauPoly()}, {TauPoly(), TauPoly(), t(1, 4)}})) == 2);
    CHECK(matrix_rank(PolyMatrix::identity(5)) == 5);
    PolyMatrix sym(1, 1);
    sym(0, 0) = d_symbol(1);
    CHECK_THROWS_AS(matrix_rank(sym), PreconditionError);

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t rows = 2 + trial % 4, cols = 2 + (trial / 4) % 4;
      std::vector<std::vector<TauPoly>> data(rows, std::vector<TauPoly>(cols));
      for (auto& r : data)
        for (auto& e : r) e = oracle::random_tau_poly(rng, 4, 2);
      // Force a dependent row: a tau-multiple of the first plus the second.
      if (rows >= 3)
        for (std::size_t j = 0; j < cols; ++j) data[rows - 1][j] = t(1) * data[0][j] + data[1][j];
      const PolyMatrix m = pure(data);
      const std::size_t rank = matrix_rank(m);
      int agree = 0;
      for (const Rational& x : {Rational(2), Rational(3), make_rational(1, 2), Rational(-5), make_rational(7, 3)}) {
        const std::size_t ev = oracle::gauss_jordan_rank(m.evaluate(x));
        CHECK(rank >= ev);
        if (rank == ev) ++agree;
      }
      CHECK(agree >= 3);
    }
  }

  TEST_CASE("monomial_factor examples and round trip") {
    const PolyMatrix diag = pure({{t(1), TauPoly()}, {TauPoly(), t(3)}});
    // b = (0, 1), c = (1/2, 1/2) in tau units.
    const std::vector<int> bh{0, 4}, ch{2, 2};
    const MonomialFactorization f = monomial_factor(diag, bh, ch);
    CHECK(f.scalars(0, 0) == 1);
    CHECK(f.scalars(1, 1) == 1);
    CHECK(f.scalars(0, 1) == 0);
    CHECK(f.total_half_pow == 8);
    CHECK(matrix_det(diag) == DLinear(t(4)));

    const PolyMatrix ones = pure({{TauPoly(1), TauPoly(1)}, {TauPoly(1), TauPoly(1)}});
    const std::vector<int> zero{0, 0};
    const MonomialFactorization g = monomial_factor(ones, zero, zero);
    CHECK(rational_det(g.scalars) == 0);

    CHECK_THROWS_AS(monomial_factor(diag, zero, zero), VerificationError);

    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> hp(0, 3);
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t n = 2 + trial % 4;
      std::vector<int> rb(n), cb(n);
      for (auto& v : rb) v = hp(rng);
      for (auto& v : cb) v = hp(rng);
      PolyMatrix m(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = DLinear(TauPoly::monomial(oracle::random_rational(rng), rb[i] + cb[j]));
      const MonomialFactorization mf = monomial_factor(m, rb, cb);
      const TauPoly rebuilt = TauPoly::monomial(rational_det(mf.scalars), mf.total_half_pow);
      CHECK(DLinear(rebuilt) == matrix_det(m));
    }
  }

  TEST_CASE("serialization round trips") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
      const TauPoly p = oracle::random_tau_poly(rng);
      CHECK(tau_poly_from_json(to_json(p)) == p);
      const DLinear f = DLinear(p) + d_symbol(2, oracle::random_tau_poly(rng)) + d_symbol(5, oracle::random_tau_poly(rng));
      CHECK(dlinear_from_json(to_json(f)) == f);
      PolyMatrix m(2, 3);
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 3; ++j) m(i, j) = DLinear(oracle::random_tau_poly(rng, 4, 2));
      m(1, 2) = f;
      CHECK(poly_matrix_from_json(to_json(m)) == m);
      const Rational q = oracle::random_rational(rng, 1000, 97);
      CHECK(rational_from_json(rational_to_json(q)) == q);
    }
    const Json j = to_json(t(2, 8) + TauPoly(make_rational(1, 2)));
    REQUIRE(j.is_array());
    CHECK(j[0]["half_pow"] == 0);
    CHECK(j[0]["coeff"] == "1/2");
    CHECK(j[1]["half_pow"] == 4);
  }

  TEST_CASE("csv quoting") {
    CHECK(csv_field("8*t^2") == "8*t^2");
    CHECK(csv_field("a,b") == "\"a,b\"");
    CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
    CHECK(csv_line({"x", "y,z", ""}) == "x,\"y,z\",");
  }
}
