#include "weinstein/orthopoly.hpp"

#include <stdexcept>
#include <string>

namespace weinstein {

namespace {

void require_positive_lambda(const Rational& lambda) {
  if (lambda.sign() <= 0)
    throw std::invalid_argument("Gegenbauer parameter must be > 0, got " +
                                lambda.str());
}

} // namespace

Family parse_family(std::string_view name) {
  if (name == "jacobi") return Family::Jacobi;
  if (name == "gegenbauer") return Family::Gegenbauer;
  if (name == "chebyshevT") return Family::ChebyshevT;
  if (name == "chebyshevU") return Family::ChebyshevU;
  if (name == "legendre") return Family::Legendre;
  if (name == "assocLegendre") return Family::AssocLegendre;
  throw std::invalid_argument("unknown polynomial family '" + std::string(name) + "'");
}

Poly jacobi(unsigned j, const Rational& alpha, const Rational& beta) {
  if (alpha <= Rational(-1) || beta <= Rational(-1))
    throw std::invalid_argument("Jacobi parameters must exceed -1, got alpha=" +
                                alpha.str() + ", beta=" + beta.str());
  Poly prev = Poly::constant(1);
  if (j == 0)
    return prev;
  const Rational ab = alpha + beta;
  // P_1 = (alpha + 1) + (alpha + beta + 2)(x - 1)/2
  Poly cur{(alpha - beta) / Rational(2), (ab + Rational(2)) / Rational(2)};
  const Rational a2b2 = alpha * alpha - beta * beta;
  for (unsigned n = 2; n <= j; ++n) {
    const Rational N(n);
    const Rational s = Rational(2) * N + ab;
    const Rational lead = Rational(2) * N * (N + ab) * (s - Rational(2));
    const Rational c1 = s - Rational(1);
    Poly next = Poly{c1 * a2b2, c1 * s * (s - Rational(2))} * cur -
                prev * (Rational(2) * (N + alpha - Rational(1)) *
                        (N + beta - Rational(1)) * s);
    next *= Rational(1) / lead;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Poly gegenbauer(unsigned n, const Rational& lambda) {
  require_positive_lambda(lambda);
  Poly prev = Poly::constant(1);
  if (n == 0)
    return prev;
  Poly cur = Poly::monomial(Rational(2) * lambda, 1);
  // (m+1) C_{m+1} = 2(m+lambda) x C_m - (m+2 lambda-1) C_{m-1}
  for (unsigned m = 1; m < n; ++m) {
    const Rational M(m);
    Poly next = Poly::monomial(Rational(2) * (M + lambda), 1) * cur -
                prev * (M + Rational(2) * lambda - Rational(1));
    next *= Rational(1) / (M + Rational(1));
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Poly chebyshev_t(unsigned n) {
  Poly prev = Poly::constant(1);
  if (n == 0)
    return prev;
  Poly cur = Poly::x();
  const Poly two_x = Poly::monomial(2, 1);
  for (unsigned m = 1; m < n; ++m) {
    Poly next = two_x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Poly chebyshev_u(unsigned n) { return gegenbauer(n, Rational(1)); }

Poly legendre(unsigned n) { return gegenbauer(n, Rational(1, 2)); }

Rational gegenbauer_at_one(unsigned n, const Rational& lambda) {
  require_positive_lambda(lambda);
  return binomial(Rational(static_cast<long>(n)) + Rational(2) * lambda - Rational(1), n);
}

Rational gegenbauer_at_zero(unsigned n, const Rational& lambda) {
  require_positive_lambda(lambda);
  if (n % 2 == 1)
    return Rational(0);
  const unsigned h = n / 2;
  Rational v = pochhammer(lambda, h) / Rational(factorial(h));
  return h % 2 == 0 ? v : -v;
}

Poly gegenbauer_sq_at_sqrt(unsigned m, const Rational& lambda) {
  const Poly c = gegenbauer(m, lambda);
  // C_m(y) = y^(m mod 2) q(y^2)
  const unsigned parity = m % 2;
  std::vector<Rational> q;
  for (std::size_t i = parity; i < c.coeffs().size(); i += 2)
    q.push_back(c.coeffs()[i]);
  Poly in_v = Poly(std::move(q)).pow(2);
  if (parity == 1)
    in_v = in_v * Poly::x();
  // v = y^2 = 1 - u
  return in_v.compose_affine(Rational(1), Rational(-1));
}

SurdPoly assoc_legendre(unsigned n, unsigned j) {
  if (j > n)
    return {};
  Poly d = legendre(n).derivative(j);
  if (j % 2 == 1)
    d = -d;
  return SurdPoly(std::move(d), j);
}

Poly gegenbauer_derivative(unsigned n, const Rational& lambda, unsigned j) {
  if (j > n)
    return {};
  return gegenbauer(n, lambda).derivative(j);
}

TruncSeries jacobi_generating_series(const Rational& alpha, const Rational& x,
                                     unsigned order) {
  if (!alpha.is_integer() || alpha.sign() < 0)
    throw std::invalid_argument(
        "jacobi_generating_series: exact mode needs a nonnegative integer alpha, got " +
        alpha.str());
  const auto a = static_cast<unsigned>(alpha.to_long());
  const TruncSeries R =
      TruncSeries::from_poly(Poly{Rational(1), Rational(-2) * x, Rational(1)}, order);
  const TruncSeries root = series_sqrt(R);
  const TruncSeries denom =
      root * (TruncSeries::from_poly(Poly{Rational(1), Rational(-1)}, order) + root).pow(a);
  return series_reciprocal(denom) * Rational(2).pow(a);
}

Poly build_family(const FamilyParams& params, unsigned n) {
  switch (params.family) {
  case Family::Jacobi:
    return jacobi(n, params.alpha, params.beta);
  case Family::Gegenbauer:
    return gegenbauer(n, params.lambda);
  case Family::ChebyshevT:
    return chebyshev_t(n);
  case Family::ChebyshevU:
    return chebyshev_u(n);
  case Family::Legendre:
    return legendre(n);
  case Family::AssocLegendre:
    break;
  }
  throw std::invalid_argument("build_family: associated Legendre functions are not polynomials");
}

double gegenbauer_value(unsigned n, double lambda, double x) {
  double prev = 1.0;
  if (n == 0)
    return prev;
  double cur = 2.0 * lambda * x;
  for (unsigned m = 1; m < n; ++m) {
    const double next =
        (2.0 * (m + lambda) * x * cur - (m + 2.0 * lambda - 1.0) * prev) / (m + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

double jacobi_value(unsigned n, double alpha, double beta, double x) {
  double prev = 1.0;
  if (n == 0)
    return prev;
  const double ab = alpha + beta;
  double cur = 0.5 * (alpha - beta) + 0.5 * (ab + 2.0) * x;
  const double a2b2 = alpha * alpha - beta * beta;
  for (unsigned k = 2; k <= n; ++k) {
    const double s = 2.0 * k + ab;
    const double lead = 2.0 * k * (k + ab) * (s - 2.0);
    const double next = ((s - 1.0) * (a2b2 + s * (s - 2.0) * x) * cur -
                         2.0 * (k + alpha - 1.0) * (k + beta - 1.0) * s * prev) /
                        lead;
    prev = cur;
    cur = next;
  }
  return cur;
}

} // namespace weinstein
