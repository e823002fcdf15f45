#include "weinstein/lambda.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "weinstein/orthopoly.hpp"
#include "weinstein/trunc_series.hpp"

namespace weinstein {

namespace {

// Every form is a polynomial in u, so the closed end u = 0 (t = infinity) is allowed.
void require_unit_u(const Rational& u) {
  if (u.sign() < 0 || u > Rational(1))
    throw std::invalid_argument("u must satisfy 0 <= u <= 1, got " + u.str());
}

Rational fact(unsigned n) { return Rational(factorial(n)); }

Rational four_pow(unsigned e) { return Rational(4).pow(e); }

/// Coefficient of the j-th Askey-Gasper summand, without the u-dependent factors.
Rational askey_gasper_coefficient(unsigned m, unsigned k, unsigned j) {
  const Rational half_k = pochhammer(Rational(1, 2), k);
  return Rational(static_cast<long>(2 * j + 2 * k + 1)) * four_pow(j + 2 * k) *
         fact(j + k) * fact(j + k) * fact(m - j) * fact(j) * half_k * half_k /
         (fact(2 * k + m + j + 1) * fact(j + 2 * k));
}

Rational hyp3f2_term_ratio(unsigned n, unsigned k, unsigned j) {
  // t_{j+1}/t_j for the 3F2(n+k+2, k+1/2, k-n; k+3/2, 2k+1; u) series
  const Rational J(j);
  const Rational K(k);
  const Rational N(n);
  return (N + K + Rational(2) + J) * (K + Rational(1, 2) + J) * (K - N + J) /
         ((K + Rational(3, 2) + J) * (Rational(2) * K + Rational(1) + J) * (J + Rational(1)));
}

} // namespace

std::string_view to_string(Representation rep) {
  switch (rep) {
  case Representation::JacobiSum: return "jacobi";
  case Representation::Binomial: return "binomial";
  case Representation::Hyp3F2: return "hyp3f2";
  case Representation::AskeyGasper: return "askey-gasper";
  case Representation::SeriesOracle: return "series";
  }
  return "?";
}

Representation parse_representation(std::string_view name) {
  for (auto rep : {Representation::JacobiSum, Representation::Binomial, Representation::Hyp3F2,
                   Representation::AskeyGasper, Representation::SeriesOracle})
    if (to_string(rep) == name)
      return rep;
  throw std::invalid_argument("unknown representation '" + std::string(name) + "'");
}

WeinsteinIndex WeinsteinIndex::make(unsigned n, unsigned k) {
  if (k > n)
    throw std::invalid_argument("Weinstein index needs k <= n, got n=" + std::to_string(n) +
                                ", k=" + std::to_string(k));
  return {n, k};
}

EvalPoint EvalPoint::exact(const Rational& u) {
  if (u.sign() <= 0 || u > Rational(1))
    throw std::invalid_argument("u must satisfy 0 < u <= 1, got " + u.str());
  return EvalPoint(u);
}

EvalPoint EvalPoint::floating(double t) {
  if (!std::isfinite(t) || t < 0.0)
    throw std::invalid_argument("t must be finite and >= 0");
  return EvalPoint(t);
}

double EvalPoint::u_double() const {
  return is_exact() ? u().to_double() : std::exp(-t());
}

double LambdaValue::as_double() const {
  return is_exact() ? exact().to_double() : std::get<double>(value);
}

std::string LambdaValue::str() const {
  if (is_exact())
    return exact().str();
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", std::get<double>(value));
  return buf;
}

Rational lambda_jacobi_sum(unsigned n, unsigned k, const Rational& u) {
  WeinsteinIndex::make(n, k);
  require_unit_u(u);
  const Rational x = Rational(1) - Rational(2) * u;
  const Rational alpha(static_cast<long>(2 * k));
  Rational sum;
  for (unsigned j = 0; j <= n - k; ++j)
    sum += jacobi(j, alpha, Rational(0)).eval(x);
  return u.pow(k) * sum;
}

Rational lambda_binomial(unsigned n, unsigned k, const Rational& u) {
  WeinsteinIndex::make(n, k);
  require_unit_u(u);
  Rational sum;
  for (unsigned j = k; j <= n; ++j) {
    Rational term = binomial(Rational(static_cast<long>(n + j + 1)), n - j) *
                    binomial(Rational(static_cast<long>(2 * j)), j - k) * u.pow(j);
    if ((j + k) % 2 == 1)
      term = -term;
    sum += term;
  }
  return sum;
}

Rational lambda_3f2(unsigned n, unsigned k, const Rational& u) {
  WeinsteinIndex::make(n, k);
  require_unit_u(u);
  Rational term(1);
  Rational sum(1);
  for (unsigned j = 0; j < n - k; ++j) {
    term *= hyp3f2_term_ratio(n, k, j) * u;
    sum += term;
  }
  return u.pow(k) * binomial(Rational(static_cast<long>(n + k + 1)), n - k) * sum;
}

AskeyGasperSum lambda_askey_gasper(unsigned n, unsigned k, const Rational& u) {
  WeinsteinIndex::make(n, k);
  require_unit_u(u);
  const unsigned m = n - k;
  const Rational half(1, 2);
  AskeyGasperSum out;
  out.terms.reserve(m + 1);
  for (unsigned j = 0; j <= m; ++j) {
    const Rational at_zero = gegenbauer_at_zero(j, half + Rational(k));
    if (at_zero.is_zero()) {
      out.terms.emplace_back(0);
      continue;
    }
    const Rational lambda(static_cast<long>(j + k + 1));
    Rational term = askey_gasper_coefficient(m, k, j) * u.pow(j + k) * at_zero * at_zero *
                    gegenbauer_sq_at_sqrt(m - j, lambda).eval(u);
    out.total += term;
    out.terms.push_back(std::move(term));
  }
  return out;
}

Rational legendre_cos_weight(unsigned l) {
  return fact(2 * l) / (four_pow(l) * fact(l) * fact(l));
}

Rational lambda_parity_sums(unsigned n, unsigned m, Parity parity, const Rational& u) {
  require_unit_u(u);
  Rational sum;
  if (parity == Parity::Even) {
    if (2 * m > n)
      throw std::invalid_argument("lambda_parity_sums: need 2m <= n");
    for (unsigned j = m; j <= n / 2; ++j) {
      sum += four_pow(2 * j) * fact(n - 2 * j) * fact(2 * j) * fact(2 * j) /
             fact(n + 1 + 2 * j) * Rational(static_cast<long>(4 * j + 1)) *
             legendre_cos_weight(j - m) * legendre_cos_weight(j + m) * u.pow(2 * j) *
             gegenbauer_sq_at_sqrt(n - 2 * j, Rational(static_cast<long>(2 * j + 1))).eval(u);
    }
  } else {
    if (2 * m + 1 > n)
      throw std::invalid_argument("lambda_parity_sums: need 2m+1 <= n");
    for (unsigned j = m; 2 * j + 1 <= n; ++j) {
      sum += four_pow(2 * j + 1) * fact(n - 2 * j - 1) * fact(2 * j + 1) * fact(2 * j + 1) /
             fact(n + 2 + 2 * j) * Rational(static_cast<long>(4 * j + 3)) *
             legendre_cos_weight(j - m) * legendre_cos_weight(j + 1 + m) * u.pow(2 * j + 1) *
             gegenbauer_sq_at_sqrt(n - 2 * j - 1, Rational(static_cast<long>(2 * j + 2))).eval(u);
    }
  }
  return sum;
}

std::vector<Rational> lambda_series_oracle(unsigned n_max, unsigned k, const Rational& u) {
  WeinsteinIndex::make(n_max, k);
  require_unit_u(u);
  const unsigned order = n_max + 1;
  const Rational x = Rational(1) - Rational(2) * u;
  const TruncSeries root =
      series_sqrt(TruncSeries::from_poly(Poly{Rational(1), Rational(-2) * x, Rational(1)}, order));
  const TruncSeries one_minus_z = TruncSeries::from_poly(Poly{Rational(1), Rational(-1)}, order);
  const TruncSeries denominator = one_minus_z * root * (one_minus_z + root).pow(2 * k);
  const TruncSeries W =
      series_reciprocal(denominator).shift(k + 1) * (u.pow(k) * four_pow(k));

  for (unsigned j = 0; j <= k; ++j)
    if (!W[j].is_zero())
      throw std::logic_error("lambda_series_oracle: nonzero coefficient below z^(k+1)");
  std::vector<Rational> values;
  values.reserve(n_max - k + 1);
  for (unsigned n = k; n <= n_max; ++n)
    values.push_back(W[n + 1]);
  return values;
}

double lambda_float(unsigned n, unsigned k, double u, Representation rep) {
  WeinsteinIndex::make(n, k);
  // e^{-t} may underflow to 0 for large t; the representations are
  // polynomials in u, so u = 0 is still meaningful here.
  if (!(u >= 0.0 && u <= 1.0))
    throw std::invalid_argument("u must satisfy 0 <= u <= 1");
  switch (rep) {
  case Representation::JacobiSum: {
    const double x = 1.0 - 2.0 * u;
    double sum = 0.0;
    for (unsigned j = 0; j <= n - k; ++j)
      sum += jacobi_value(j, 2.0 * k, 0.0, x);
    return std::pow(u, k) * sum;
  }
  case Representation::Binomial: {
    double sum = 0.0;
    for (unsigned j = k; j <= n; ++j) {
      const double c =
          binomial(Rational(static_cast<long>(n + j + 1)), n - j).to_double() *
          binomial(Rational(static_cast<long>(2 * j)), j - k).to_double();
      sum += ((j + k) % 2 ? -c : c) * std::pow(u, j);
    }
    return sum;
  }
  case Representation::Hyp3F2: {
    double term = 1.0;
    double sum = 1.0;
    for (unsigned j = 0; j < n - k; ++j) {
      term *= hyp3f2_term_ratio(n, k, j).to_double() * u;
      sum += term;
    }
    return std::pow(u, k) *
           binomial(Rational(static_cast<long>(n + k + 1)), n - k).to_double() * sum;
  }
  case Representation::AskeyGasper: {
    const unsigned m = n - k;
    const double y = std::sqrt(1.0 - u);
    double sum = 0.0;
    for (unsigned j = 0; j <= m; j += 2) {
      const double c0 = gegenbauer_at_zero(j, Rational(1, 2) + Rational(k)).to_double();
      const double cy = gegenbauer_value(m - j, j + k + 1.0, y);
      sum += askey_gasper_coefficient(m, k, j).to_double() * std::pow(u, j + k) * c0 * c0 *
             cy * cy;
    }
    return sum;
  }
  case Representation::SeriesOracle:
    break;
  }
  throw std::invalid_argument("series oracle has no floating-point evaluation");
}

LambdaValue lambda(unsigned n, unsigned k, const EvalPoint& point, Representation rep) {
  WeinsteinIndex::make(n, k);
  if (!point.is_exact())
    return {lambda_float(n, k, point.u_double(), rep), rep};
  const Rational& u = point.u();
  switch (rep) {
  case Representation::JacobiSum: return {lambda_jacobi_sum(n, k, u), rep};
  case Representation::Binomial: return {lambda_binomial(n, k, u), rep};
  case Representation::Hyp3F2: return {lambda_3f2(n, k, u), rep};
  case Representation::AskeyGasper: return {lambda_askey_gasper(n, k, u).total, rep};
  case Representation::SeriesOracle: return {lambda_series_oracle(n, k, u).back(), rep};
  }
  throw std::invalid_argument("unknown representation");
}

} // namespace weinstein
