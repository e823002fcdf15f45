#include <cmath>
#include <random>

#include "doctest.h"
#include "oracle.hpp"

#include "weinstein/identities.hpp"
#include "weinstein/lambda.hpp"
#include "weinstein/orthopoly.hpp"

using namespace weinstein;

namespace {

Rational parse_str(const ReportValue& v) { return Rational::parse(std::get<std::string>(v)); }

const Rational kZetas[] = {Rational(-1), Rational(-2, 3), Rational(-1, 5), Rational(0),
                           Rational(1, 2), Rational(5, 7), Rational(1)};

} // namespace

TEST_CASE("chebyshev basis conversion") {
  const Poly x2{Rational(0), Rational(0), Rational(1)};
  CHECK(chebyshev_t_expand(x2) == oracle::list("chebyshev_expand", "x^2"));
  CHECK(chebyshev_t_expand(Poly::constant(1)) == std::vector<Rational>{1});
  CHECK(chebyshev_t_expand(Poly{Rational(-1), Rational(0), Rational(4)}) ==
        oracle::list("chebyshev_expand", "4x^2-1"));
  CHECK(chebyshev_t_expand(Poly::monomial(Rational(1), 5)) ==
        oracle::list("chebyshev_expand", "x^5"));
}

TEST_CASE("chebyshev round trip") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> num(-30, 30), den(1, 9);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Rational> c(1 + trial % 12);
    for (auto& v : c)
      v = Rational(num(rng), den(rng));
    const Poly p(c);
    CHECK(chebyshev_t_reconstruct(chebyshev_t_expand(p)) == p);
  }
  for (unsigned n = 0; n <= 10; ++n) {
    std::vector<Rational> unit(n + 1, Rational(0));
    unit[n] = 1;
    CHECK(chebyshev_t_reconstruct(unit) == chebyshev_t(n));
  }
}

TEST_CASE("fourier expansion") {
  const Report r1 = fourier_check(1, Rational(1, 3));
  CHECK(r1.pass);
  CHECK(r1.discrepancy == 0.0);
  for (const auto& [key, n, u] : {std::tuple{"1,1/3", 1u, Rational(1, 3)},
                                  std::tuple{"2,1/2", 2u, Rational(1, 2)},
                                  std::tuple{"3,3/4", 3u, Rational(3, 4)}}) {
    const auto want = oracle::list("fourier", key);
    const auto got = chebyshev_t_expand(chebyshev_u(n).compose_affine(Rational(1) - u, u));
    CHECK(got == want);
    CHECK(got[0] == lambda_binomial(n, 0, u));
    for (unsigned k = 1; k <= n; ++k)
      CHECK(got[k] == Rational(2) * lambda_binomial(n, k, u));
    CHECK(fourier_check(n, u).pass);
  }
  CHECK(fourier_check(0, Rational(2, 7)).pass);
  for (unsigned n = 0; n <= 12; ++n)
    CHECK(fourier_check(n, Rational(5, 9)).pass);
}

TEST_CASE("legendre cosine expansion") {
  CHECK(legendre_cos_coeffs(0) == std::vector<Rational>{1});
  for (unsigned j = 0; j <= 3; ++j)
    CHECK(legendre_cos_coeffs(j) == oracle::list("legendre_cos", std::to_string(j)));
  CHECK(legendre_cos_coeffs(1) == std::vector<Rational>{0, 1});
  for (unsigned j = 0; j <= 20; ++j) {
    CHECK(legendre_cos_check(j).pass);
    const auto c = legendre_cos_coeffs(j);
    for (unsigned k = 0; k <= j; ++k)
      CHECK(c[k].sign() >= 0);
  }
}

TEST_CASE("sin half power expansion") {
  CHECK(sin_half_power_expand(0) == std::vector<Rational>{1});
  CHECK(sin_half_power_expand(1) == std::vector<Rational>{Rational(1, 2), Rational(-1, 2)});
  for (unsigned j = 0; j <= 3; ++j)
    CHECK(sin_half_power_expand(j) == oracle::list("sin_half_power", std::to_string(j)));
  for (unsigned j = 0; j <= 20; ++j)
    CHECK(sin_half_power_check(j).pass);
}

TEST_CASE("pythagorean points") {
  const auto p = PythagoreanPoint::make(Rational(3, 5));
  CHECK(p.s == Rational(4, 5));
  CHECK(PythagoreanPoint::make(Rational(1)).s == 0);
  CHECK_THROWS_AS(PythagoreanPoint::make(Rational(1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(PythagoreanPoint::make(Rational(5, 3)), std::invalid_argument);
}

TEST_CASE("addition theorem examples") {
  const auto px = PythagoreanPoint::make(Rational(3, 5));
  const auto py = PythagoreanPoint::make(Rational(5, 13));
  const Rational want = oracle::rat("addition_lhs", "1,1,3/5,5/13,1/2");
  CHECK(want == Rational(2) * (Rational(3, 13) + Rational(4, 5) * Rational(12, 13) / 2));
  CHECK(addition_theorem_rhs(1, 1, px, py, Rational(1, 2)) == want);
  CHECK(addition_theorem_check(1, 1, px, py, Rational(1, 2)).pass);
  CHECK(addition_theorem_rhs(3, Rational(3, 2), px, py, Rational(-2, 7)) ==
        oracle::rat("addition_lhs", "3,3/2,3/5,5/13,-2/7"));

  const auto one = PythagoreanPoint::make(Rational(1));
  for (const auto& nu : {Rational(1), Rational(3, 2), Rational(2)})
    for (unsigned n = 0; n <= 6; ++n)
      for (const auto& zeta : kZetas) {
        CHECK(addition_theorem_rhs(n, nu, one, one, zeta) == gegenbauer_at_one(n, nu));
        CHECK(addition_theorem_check(n, nu, one, one, zeta).pass);
      }

  // x = y = 0: the left side is C_2^1(zeta) as a polynomial in zeta
  const auto zero = PythagoreanPoint::make(Rational(0));
  for (const auto& zeta : kZetas)
    CHECK(addition_theorem_rhs(2, 1, zero, zero, zeta) == chebyshev_u(2).eval(zeta));
  CHECK_THROWS_AS(addition_theorem_rhs(2, Rational(1, 2), px, py, 0), std::invalid_argument);
}

TEST_CASE("addition theorem float") {
  CHECK(addition_theorem_float_check(5, 1.75, 0.3, -0.8, 0.41, 1e-9).pass);
  const Report r = addition_theorem_float_check(8, 2.5, 0.9, 0.1, -0.6, 1e-9);
  CHECK(r.pass);
  CHECK(r.discrepancy <= 1e-9);
}

TEST_CASE("legendre addition examples") {
  const auto px = PythagoreanPoint::make(Rational(3, 5));
  const Poly lhs1 = oracle::poly("legendre_addition_lhs", "1,3/5");
  CHECK(lhs1 == Poly{Rational(9, 25), Rational(16, 25)});
  const auto p817 = PythagoreanPoint::make(Rational(8, 17));
  const Poly lhs4 = oracle::poly("legendre_addition_lhs", "4,8/17");
  for (const auto& zeta : kZetas) {
    const Report r1 = legendre_addition_check(1, px, zeta);
    CHECK(r1.pass);
    CHECK(parse_str(r1.lhs) == lhs1.eval(zeta));
    const Report r4 = legendre_addition_check(4, p817, zeta);
    CHECK(r4.pass);
    CHECK(parse_str(r4.lhs) == lhs4.eval(zeta));
  }
  const auto one = PythagoreanPoint::make(Rational(1));
  for (unsigned n = 0; n <= 6; ++n) {
    const Report r = legendre_addition_check(n, one, Rational(-1, 3));
    CHECK(r.pass);
    CHECK(parse_str(r.rhs) == 1);
  }
  CHECK(parse_str(legendre_addition_check(2, px, Rational(1)).lhs) == 1);
}

TEST_CASE("askey-gasper sum identity") {
  CHECK(ag_1016_lhs(2, 1, Rational(1)) == oracle::rat("ag16_lhs", "2,1,1"));
  CHECK(ag_1016_rhs(2, 1, Rational(1)) == 10);
  CHECK(ag_1016_check(2, 1, Rational(1)).pass);
  CHECK(ag_1016_lhs(1, 0, Rational(1, 4)) == oracle::rat("ag16_lhs", "1,0,1/4"));
  CHECK(ag_1016_rhs(1, 0, Rational(1, 4)) == oracle::rat("ag16_lhs", "1,0,1/4"));
  CHECK(ag_1016_rhs(6, 2, Rational(3, 4)) == oracle::rat("ag16_lhs", "6,2,3/4"));
  CHECK(ag_1016_rhs(5, 3, Rational(0)) == oracle::rat("ag16_lhs", "5,3,0"));
  for (unsigned k = 0; k <= 4; ++k)
    for (const auto& ysq : {Rational(0), Rational(1, 4), Rational(2, 3), Rational(1)}) {
      CHECK(ag_1016_lhs(0, k, ysq) == 1);
      CHECK(ag_1016_rhs(0, k, ysq) == 1);
      for (unsigned n = 0; n <= 8; ++n)
        CHECK(ag_1016_check(n, k, ysq).pass);
    }
  // x = 1 anchor
  for (unsigned k = 0; k <= 3; ++k)
    for (unsigned n = 0; n <= 8; ++n) {
      Rational want;
      for (unsigned j = 0; j <= n; ++j)
        want += binomial(Rational(j + 2 * k), j);
      CHECK(ag_1016_rhs(n, k, Rational(1)) == want);
    }
}

TEST_CASE("beta integral") {
  CHECK(beta_integral_value(0, 1) == PiMultiple{oracle::rat("beta", "0,1"), 0});
  CHECK(beta_integral_value(1, 1) == PiMultiple{oracle::rat("beta", "1,1"), 0});
  CHECK(beta_integral_value(0, 2) == PiMultiple{oracle::rat("beta", "0,2"), 0});
  CHECK(beta_integral_value(0, Rational(3, 2)) == PiMultiple{oracle::rat("beta", "0,3/2/pi"), 1});
  CHECK(beta_integral_value(2, Rational(5, 2)) == PiMultiple{oracle::rat("beta", "2,5/2/pi"), 1});
  CHECK(beta_integral_value(0, Rational(3, 2)).str() == "1/2*pi");
  for (unsigned e = 0; e <= 10; ++e)
    CHECK(beta_integral_by_polynomial(e) == beta_integral_value(e, 1).coefficient);
  CHECK(beta_integral_by_polynomial(1) == Rational(4, 3));
}

TEST_CASE("Q constant and quadrature") {
  CHECK(qjn_integral(1, 0, 1, 0.5, 0.5) ==
        doctest::Approx(oracle::data()["qjn_integral"]["1,0,1,1/2,1/2"].get<double>()).epsilon(1e-13));
  CHECK(qjn_integral(3, 1, 2, 0.6, 5.0 / 13.0) ==
        doctest::Approx(oracle::data()["qjn_integral"]["3,1,2,3/5,5/13"].get<double>())
            .epsilon(1e-12));
  // n = j: the integrand is the bare weight
  for (unsigned j = 0; j <= 4; ++j)
    CHECK(qjn_integral(j, j, 2, 0.3, -0.2) ==
          doctest::Approx(beta_integral_value(j, 2).to_double()).epsilon(1e-13));
  CHECK(qjn_constant(1, 1, 1) == PiMultiple{Rational(4, 3), 0});
  CHECK(qjn_constant(1, 0, 1) == PiMultiple{Rational(1), 0});

  for (const auto& nu : {Rational(1), Rational(2)})
    for (unsigned n = 0; n <= 6; ++n)
      for (unsigned j = 0; j <= n; ++j)
        CHECK(qjn_product_check(n, j, nu, 0.6, -0.35).pass);
  for (const auto& nu : {Rational(3, 2), Rational(5, 2)})
    for (unsigned n = 0; n <= 6; ++n)
      for (unsigned j = 0; j <= n; ++j) {
        const Report r = qjn_product_check(n, j, nu, 0.6, -0.35);
        CHECK(r.pass);
        CHECK(r.discrepancy <= 1e-8);
      }
}
