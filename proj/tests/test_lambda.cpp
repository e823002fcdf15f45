#include <cmath>

#include "doctest.h"
#include "oracle.hpp"

#include "weinstein/lambda.hpp"

using namespace weinstein;

namespace {

const Rational kGrid[] = {Rational(1, 10), Rational(1, 4), Rational(1, 3), Rational(1, 2),
                          Rational(2, 3), Rational(3, 4), Rational(9, 10), Rational(1)};

Poly lambda_poly(unsigned n, unsigned k) {
  return oracle::poly("lambda_poly_in_u", std::to_string(n) + "," + std::to_string(k));
}

} // namespace

TEST_CASE("jacobi sum examples") {
  CHECK(lambda_jacobi_sum(2, 1, Rational(1, 2)) == oracle::rat("lambda_values", "2,1,1/2"));
  CHECK(lambda_jacobi_sum(2, 0, Rational(1, 2)) == oracle::rat("lambda_values", "2,0,1/2"));
  for (unsigned n = 0; n <= 12; ++n)
    for (const auto& u : kGrid)
      CHECK(lambda_jacobi_sum(n, n, u) == u.pow(n));
}

TEST_CASE("binomial form examples") {
  for (const auto& u : kGrid) {
    CHECK(lambda_binomial(1, 0, u) == lambda_poly(1, 0).eval(u));
    CHECK(lambda_binomial(1, 0, u) == Rational(2) - Rational(2) * u);
    CHECK(lambda_binomial(2, 1, u) == lambda_poly(2, 1).eval(u));
    CHECK(lambda_binomial(0, 0, u) == 1);
  }
}

TEST_CASE("hypergeometric form examples") {
  for (const auto& u : kGrid) {
    CHECK(lambda_3f2(2, 1, u) == Rational(4) * u * (Rational(1) - u));
    for (unsigned k = 0; k <= 8; ++k)
      CHECK(lambda_3f2(k, k, u) == u.pow(k));
  }
  CHECK(lambda_3f2(1, 0, Rational(1)) == oracle::rat("lambda_values", "1,0,1"));
  CHECK(lambda_3f2(7, 3, Rational(2, 3)) == oracle::rat("lambda_values", "7,3,2/3"));
  CHECK(lambda_3f2(9, 4, Rational(1, 10)) == oracle::rat("lambda_values", "9,4,1/10"));
}

TEST_CASE("askey-gasper form examples") {
  for (const auto& u : kGrid) {
    const AskeyGasperSum s = lambda_askey_gasper(2, 1, u);
    CHECK(s.total == Rational(4) * u * (Rational(1) - u));
    REQUIRE(s.terms.size() == 2);
    CHECK(s.terms[1] == 0);
    for (unsigned k = 0; k <= 8; ++k) {
      const AskeyGasperSum d = lambda_askey_gasper(k, k, u);
      CHECK(d.total == u.pow(k));
      CHECK(d.terms.size() == 1);
    }
  }
  CHECK(lambda_askey_gasper(2, 0, Rational(1, 2)).total == lambda_jacobi_sum(2, 0, Rational(1, 2)));
}

TEST_CASE("parity sums") {
  CHECK(lambda_parity_sums(2, 0, Parity::Even, Rational(1, 2)) ==
        oracle::rat("lambda_values", "2,0,1/2"));
  for (const auto& u : kGrid) {
    CHECK(lambda_parity_sums(2, 1, Parity::Even, u) == u * u);
    CHECK(lambda_parity_sums(1, 0, Parity::Odd, u) == u);
  }
  CHECK(legendre_cos_weight(0) == 1);
  CHECK(legendre_cos_weight(1) == Rational(1, 2));
  CHECK(legendre_cos_weight(2) == Rational(3, 8));
}

TEST_CASE("series oracle examples") {
  const Rational third(1, 3);
  CHECK(lambda_series_oracle(2, 2, third) == std::vector<Rational>{third * third});
  CHECK(lambda_series_oracle(2, 2, third) == oracle::list("series_oracle", "2,2,1/3"));
  CHECK(lambda_series_oracle(1, 0, Rational(1)) == oracle::list("series_oracle", "1,0,1"));
  CHECK(lambda_series_oracle(1, 0, Rational(1, 2)) == oracle::list("series_oracle", "1,0,1/2"));
  CHECK(lambda_series_oracle(4, 1, third) == oracle::list("series_oracle", "4,1,1/3"));
}

TEST_CASE("representations agree with the reference polynomials") {
  const std::pair<unsigned, unsigned> cases[] = {{1, 0}, {2, 0}, {2, 1}, {2, 2},
                                                 {3, 1}, {5, 2}, {6, 0}};
  for (auto [n, k] : cases)
    for (const auto& u : kGrid) {
      const Rational want = lambda_poly(n, k).eval(u);
      CHECK(lambda_jacobi_sum(n, k, u) == want);
      CHECK(lambda_binomial(n, k, u) == want);
      CHECK(lambda_3f2(n, k, u) == want);
      CHECK(lambda_askey_gasper(n, k, u).total == want);
    }
}

TEST_CASE("representations agree with each other") {
  for (unsigned n = 0; n <= 14; ++n)
    for (unsigned k = 0; k <= n; ++k)
      for (const auto& u : {Rational(1, 3), Rational(3, 4), Rational(1)}) {
        const Rational b = lambda_binomial(n, k, u);
        CHECK(lambda_jacobi_sum(n, k, u) == b);
        CHECK(lambda_3f2(n, k, u) == b);
        const AskeyGasperSum ag = lambda_askey_gasper(n, k, u);
        CHECK(ag.total == b);
        for (const auto& term : ag.terms)
          CHECK(term.sign() >= 0);
        const Parity parity = k % 2 ? Parity::Odd : Parity::Even;
        CHECK(lambda_parity_sums(n, k / 2, parity, u) == b);
      }
}

TEST_CASE("boundary values") {
  for (unsigned n = 0; n <= 20; ++n) {
    // only the j = 0 term survives at u = 0
    CHECK(lambda_binomial(n, 0, Rational(0)) == Rational(n + 1));
    for (unsigned k = 0; k <= n; ++k)
      CHECK(lambda_binomial(n, k, Rational(1)) == ((n - k) % 2 == 0 ? 1 : 0));
  }
}

TEST_CASE("dispatcher") {
  const EvalPoint half = EvalPoint::exact(Rational(1, 2));
  CHECK(lambda(2, 1, half, Representation::JacobiSum).exact() == 1);
  CHECK(lambda(2, 1, half, Representation::Hyp3F2).exact() == 1);
  CHECK(lambda(2, 1, half, Representation::SeriesOracle).exact() == 1);
  for (auto rep : kClosedRepresentations)
    for (const auto& u : kGrid)
      CHECK(lambda(0, 0, EvalPoint::exact(u), rep).exact() == 1);
  CHECK(lambda(2, 1, half, Representation::Binomial).str() == "1");
  CHECK_THROWS_AS(lambda(1, 2, half, Representation::Binomial), std::invalid_argument);
  CHECK_THROWS_AS(EvalPoint::exact(Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(lambda_binomial(2, 1, Rational(-1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(EvalPoint::exact(Rational(3, 2)), std::invalid_argument);
  CHECK_THROWS_AS(EvalPoint::floating(-0.5), std::invalid_argument);
  CHECK_THROWS_AS(WeinsteinIndex::make(2, 3), std::invalid_argument);
}

TEST_CASE("representation names") {
  for (auto rep : {Representation::JacobiSum, Representation::Binomial, Representation::Hyp3F2,
                   Representation::AskeyGasper, Representation::SeriesOracle})
    CHECK(parse_representation(to_string(rep)) == rep);
  CHECK(to_string(Representation::AskeyGasper) == "askey-gasper");
  CHECK_THROWS_AS(parse_representation("fourier"), std::invalid_argument);
}

TEST_CASE("float mode") {
  const double t = std::log(2.0);
  const LambdaValue v = lambda(2, 1, EvalPoint::floating(t), Representation::Binomial);
  CHECK_FALSE(v.is_exact());
  CHECK(v.as_double() == doctest::Approx(1.0));
  // The alternating forms lose digits to cancellation, so the error is
  // measured against the sum of the absolute values of the binomial terms.
  for (unsigned n = 0; n <= 12; ++n)
    for (unsigned k = 0; k <= n; ++k)
      for (long tenths : {1, 5, 9}) {
        const Rational u(tenths, 10);
        const double want = lambda_binomial(n, k, u).to_double();
        Rational magnitude;
        for (unsigned j = k; j <= n; ++j)
          magnitude += binomial(Rational(n + j + 1), n - j) * binomial(Rational(2 * j), j - k) *
                       u.pow(j);
        for (auto rep : kClosedRepresentations)
          CHECK(std::abs(lambda_float(n, k, u.to_double(), rep) - want) <=
                1e-14 * magnitude.to_double());
      }
  CHECK(lambda(0, 0, EvalPoint::floating(0.0), Representation::JacobiSum).as_double() == 1.0);
}
