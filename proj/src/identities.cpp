#include "weinstein/identities.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "weinstein/lambda.hpp"
#include "weinstein/orthopoly.hpp"
#include "weinstein/quadrature.hpp"

namespace weinstein {

namespace {

Rational fact(unsigned n) { return Rational(factorial(n)); }
Rational nat(unsigned n) { return Rational(static_cast<long>(n)); }

std::string join(std::span<const Rational> values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i)
      out += ", ";
    out += values[i].str();
  }
  return out + "]";
}

Report exact_report(std::string suite,
                    std::vector<std::pair<std::string, std::string>> inputs,
                    std::string lhs, std::string rhs, bool pass) {
  Report r;
  r.suite = std::move(suite);
  r.inputs = std::move(inputs);
  r.pass = pass;
  r.discrepancy = 0.0;
  if (!pass) {
    // Discrepancy is informational for failing exact cases.
    try {
      r.discrepancy = std::abs((Rational::parse(lhs) - Rational::parse(rhs)).to_double());
    } catch (const std::invalid_argument&) {
      r.discrepancy = std::numeric_limits<double>::infinity();
    }
  }
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  return r;
}

/// Gamma(a)^2 for a positive integer or half-integer a.
PiMultiple gamma_squared(const Rational& a) {
  if (a.sign() <= 0)
    throw std::invalid_argument("gamma_squared: argument must be positive");
  if (a.is_integer()) {
    const Rational g = fact(static_cast<unsigned>(a.to_long() - 1));
    return {g * g, 0};
  }
  if (!a.is_half_odd_integer())
    throw std::invalid_argument("gamma_squared: argument must be an integer or half-integer, got " +
                                a.str());
  // Gamma(h + 1/2) = (1/2)_h sqrt(pi)
  const auto h = static_cast<unsigned>((a - Rational(1, 2)).to_long());
  const Rational p = pochhammer(Rational(1, 2), h);
  return {p * p, 1};
}

void require_integer_or_half(const Rational& nu) {
  if (!(nu.is_integer() || nu.is_half_odd_integer()))
    throw std::invalid_argument("parameter must be an integer or half-integer, got " + nu.str());
}

struct QuadratureSum {
  double value;
  double magnitude; ///< sum of |w_i f(x_i)|
};

QuadratureSum quadrature_with_magnitude(const std::function<double(double)>& f,
                                        const QuadRule& rule) {
  QuadratureSum out{0.0, 0.0};
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double v = rule.weights[i] * f(rule.nodes[i]);
    if (!std::isfinite(v))
      throw std::domain_error("Q_j^n integrand not finite");
    out.value += v;
    out.magnitude += std::abs(v);
  }
  return out;
}

QuadratureSum qjn_quadrature(unsigned n, unsigned j, const Rational& nu, double x, double y,
                             unsigned nodes) {
  if (j > n)
    throw std::invalid_argument("Q_j^n needs j <= n");
  require_integer_or_half(nu);
  const Rational exponent = nat(j) + nu - Rational(1);
  if (exponent.sign() < 0)
    throw std::invalid_argument("Q_j^n needs j + nu - 1 >= 0");
  const double lambda = (nu + nat(j)).to_double();
  const double sx = std::sqrt(1.0 - x * x);
  const double sy = std::sqrt(1.0 - y * y);
  const unsigned degree = n - j;
  auto inner = [=](double z) { return gegenbauer_value(degree, lambda, x * y + sx * sy * z); };

  if (exponent.is_integer()) {
    const auto e = static_cast<unsigned>(exponent.to_long());
    const unsigned total_degree = 2 * e + degree;
    const unsigned m = nodes ? nodes : std::max(1u, (total_degree + 2) / 2);
    return quadrature_with_magnitude(
        [&](double z) { return std::pow(1.0 - z * z, e) * inner(z); },
        *cached_gauss_legendre(m));
  }
  // z = sin(pi s/2) turns (1-z^2)^e dz into cos(pi s/2)^(2e+1) (pi/2) ds,
  // which is smooth on [-1, 1].
  const double two_e = (Rational(2) * exponent).to_double();
  const unsigned m = nodes ? nodes : 64;
  return quadrature_with_magnitude(
      [&](double s) {
        const double c = std::cos(std::numbers::pi * s / 2.0);
        return std::pow(c, two_e + 1.0) * (std::numbers::pi / 2.0) *
               inner(std::sin(std::numbers::pi * s / 2.0));
      },
      *cached_gauss_legendre(m));
}

} // namespace

PythagoreanPoint PythagoreanPoint::make(const Rational& x) {
  if (x.abs() > Rational(1))
    throw std::invalid_argument("Pythagorean point needs |x| <= 1, got " + x.str());
  const Rational rest = Rational(1) - x * x;
  if (!rest.is_square())
    throw std::invalid_argument("1 - x^2 is not a rational square for x = " + x.str());
  return {x, rest.sqrt()};
}

double PiMultiple::to_double() const {
  return coefficient.to_double() * std::pow(std::numbers::pi, pi_power);
}

std::string PiMultiple::str() const {
  if (pi_power == 0)
    return coefficient.str();
  std::string out = coefficient.str() + "*pi";
  if (pi_power != 1)
    out += "^" + std::to_string(pi_power);
  return out;
}

std::vector<Rational> chebyshev_t_expand(const Poly& p) {
  // Horner in the T basis: x T_0 = T_1, x T_k = (T_{k+1} + T_{k-1}) / 2.
  std::vector<Rational> c;
  const auto coeffs = p.coeffs();
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    std::vector<Rational> next(c.size() + 1);
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k].is_zero())
        continue;
      if (k == 0) {
        next[1] += c[0];
      } else {
        const Rational half = c[k] / Rational(2);
        next[k + 1] += half;
        next[k - 1] += half;
      }
    }
    next[0] += *it;
    c = std::move(next);
  }
  while (!c.empty() && c.back().is_zero())
    c.pop_back();
  if (c.empty())
    c.emplace_back(0);
  return c;
}

Poly chebyshev_t_reconstruct(std::span<const Rational> coeffs) {
  Poly p;
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    if (!coeffs[k].is_zero())
      p += chebyshev_t(static_cast<unsigned>(k)) * coeffs[k];
  return p;
}

Report fourier_check(unsigned n, const Rational& u) {
  const Poly composed = chebyshev_u(n).compose_affine(Rational(1) - u, u);
  std::vector<Rational> expansion = chebyshev_t_expand(composed);
  expansion.resize(n + 1);
  std::vector<Rational> predicted(n + 1);
  for (unsigned k = 0; k <= n; ++k) {
    const Rational v = lambda_binomial(n, k, u);
    predicted[k] = k == 0 ? v : Rational(2) * v;
  }
  return exact_report("fourier", {{"n", std::to_string(n)}, {"u", u.str()}}, join(expansion),
                      join(predicted), expansion == predicted);
}

std::vector<Rational> legendre_cos_coeffs(unsigned j) {
  std::vector<Rational> c(j + 1);
  for (unsigned l = 0; l <= j; ++l) {
    const unsigned k = j >= 2 * l ? j - 2 * l : 2 * l - j;
    c[k] += legendre_cos_weight(l) * legendre_cos_weight(j - l);
  }
  return c;
}

Report legendre_cos_check(unsigned j) {
  std::vector<Rational> expansion = chebyshev_t_expand(legendre(j));
  expansion.resize(j + 1);
  const std::vector<Rational> predicted = legendre_cos_coeffs(j);
  return exact_report("expansions", {{"identity", "legendre-cos"}, {"j", std::to_string(j)}},
                      join(expansion), join(predicted), expansion == predicted);
}

std::vector<Rational> sin_half_power_expand(unsigned j) {
  std::vector<Rational> c(j + 1);
  const Rational scale = Rational(2) / Rational(4).pow(j);
  for (unsigned k = 0; k <= j; ++k) {
    Rational v = scale * binomial(nat(2 * j), j - k);
    if (k % 2 == 1)
      v = -v;
    c[k] = k == 0 ? v / Rational(2) : v;
  }
  return c;
}

Report sin_half_power_check(unsigned j) {
  const Poly base{Rational(1, 2), Rational(-1, 2)};
  std::vector<Rational> expansion = chebyshev_t_expand(base.pow(j));
  expansion.resize(j + 1);
  const std::vector<Rational> predicted = sin_half_power_expand(j);
  return exact_report("expansions", {{"identity", "sin-half-power"}, {"j", std::to_string(j)}},
                      join(expansion), join(predicted), expansion == predicted);
}

Rational addition_theorem_rhs(unsigned n, const Rational& nu, const PythagoreanPoint& px,
                              const PythagoreanPoint& py, const Rational& zeta) {
  if (nu <= Rational(1, 2))
    throw std::invalid_argument("addition theorem needs nu > 1/2, got " + nu.str());
  const Rational two_nu_minus_one = Rational(2) * nu - Rational(1);
  const Rational sxsy = px.s * py.s;
  Rational sum;
  for (unsigned j = 0; j <= n; ++j) {
    const Rational poch = pochhammer(nu, j);
    const Rational coefficient = Rational(4).pow(j) * fact(n - j) * poch * poch *
                                 (two_nu_minus_one + nat(2 * j)) /
                                 pochhammer(two_nu_minus_one, n + j + 1);
    const Poly c = gegenbauer(n - j, nu + nat(j));
    sum += coefficient * sxsy.pow(j) * c.eval(px.x) * c.eval(py.x) *
           gegenbauer(j, nu - Rational(1, 2)).eval(zeta);
  }
  return sum;
}

Report addition_theorem_check(unsigned n, const Rational& nu, const PythagoreanPoint& px,
                              const PythagoreanPoint& py, const Rational& zeta) {
  const Rational argument = px.x * py.x + px.s * py.s * zeta;
  const Rational lhs = gegenbauer(n, nu).eval(argument);
  const Rational rhs = addition_theorem_rhs(n, nu, px, py, zeta);
  return exact_report("addition",
                      {{"n", std::to_string(n)},
                       {"nu", nu.str()},
                       {"x", px.x.str()},
                       {"y", py.x.str()},
                       {"zeta", zeta.str()}},
                      lhs.str(), rhs.str(), lhs == rhs);
}

Report addition_theorem_float_check(unsigned n, double nu, double x, double y, double zeta,
                                    double tol) {
  if (nu <= 0.5)
    throw std::invalid_argument("addition theorem needs nu > 1/2");
  const double sx = std::sqrt(1.0 - x * x);
  const double sy = std::sqrt(1.0 - y * y);
  const double lhs = gegenbauer_value(n, nu, x * y + sx * sy * zeta);
  double rhs = 0.0;
  for (unsigned j = 0; j <= n; ++j) {
    double poch = 1.0;
    for (unsigned i = 0; i < j; ++i)
      poch *= nu + i;
    double shifted = 1.0; // (2nu-1)_{n+j+1}
    for (unsigned i = 0; i < n + j + 1; ++i)
      shifted *= 2.0 * nu - 1.0 + i;
    const double coefficient = std::pow(4.0, j) * std::tgamma(n - j + 1.0) * poch * poch *
                               (2.0 * nu + 2.0 * j - 1.0) / shifted;
    rhs += coefficient * std::pow(sx * sy, j) * gegenbauer_value(n - j, nu + j, x) *
           gegenbauer_value(n - j, nu + j, y) * gegenbauer_value(j, nu - 0.5, zeta);
  }
  Report r;
  r.suite = "addition";
  r.inputs = {{"n", std::to_string(n)},
              {"nu", format_double(nu)},
              {"x", format_double(x)},
              {"y", format_double(y)},
              {"zeta", format_double(zeta)}};
  r.lhs = lhs;
  r.rhs = rhs;
  r.discrepancy = std::abs(lhs - rhs);
  r.pass = r.discrepancy <= tol;
  return r;
}

Report legendre_addition_check(unsigned n, const PythagoreanPoint& px, const Rational& zeta) {
  const Rational x = px.x;
  const Rational one_minus_x2 = Rational(1) - x * x;
  const Rational lhs = legendre(n).eval(x * x + one_minus_x2 * zeta);
  const Rational pn = legendre(n).eval(x);
  Rational rhs = pn * pn;
  bool forms_agree = true;
  for (unsigned j = 1; j <= n; ++j) {
    const Rational ratio = fact(n - j) / fact(n + j);
    const Rational assoc_sq = assoc_legendre(n, j).square().eval(x);
    // Gegenbauer form of the same summand
    const Rational half_j = pochhammer(Rational(1, 2), j);
    const Rational c = gegenbauer(n - j, Rational(1, 2) + nat(j)).eval(x);
    const Rational gegenbauer_form =
        Rational(4).pow(j) * ratio * half_j * half_j * one_minus_x2.pow(j) * c * c;
    forms_agree = forms_agree && gegenbauer_form == ratio * assoc_sq;
    rhs += Rational(2) * ratio * assoc_sq * chebyshev_t(j).eval(zeta);
  }
  return exact_report("legendre-addition",
                      {{"n", std::to_string(n)}, {"x", x.str()}, {"zeta", zeta.str()}},
                      lhs.str(), rhs.str(), lhs == rhs && forms_agree);
}

Rational ag_1016_lhs(unsigned n, unsigned k, const Rational& ysq) {
  const Rational x = Rational(2) * ysq - Rational(1);
  Rational sum;
  for (unsigned j = 0; j <= n; ++j)
    sum += jacobi(j, nat(2 * k), Rational(0)).eval(x);
  return sum;
}

Rational ag_1016_rhs(unsigned n, unsigned k, const Rational& ysq) {
  const Rational alpha = nat(2 * k);
  const Rational a1 = (alpha + Rational(1)) / Rational(2);
  const Rational a2 = (alpha + Rational(2)) / Rational(2);
  const Rational a3 = (alpha + Rational(3)) / Rational(2);
  const Rational u = Rational(1) - ysq;
  Rational sum;
  for (unsigned j = 0; 2 * j <= n; ++j) {
    const unsigned d = n - 2 * j;
    const Rational coefficient =
        pochhammer(Rational(1, 2), j) * pochhammer(a2, n - j) * pochhammer(a3, d) * fact(d) /
        (fact(j) * pochhammer(a3, n - j) * pochhammer(a1, d) * pochhammer(alpha + Rational(1), d));
    sum += coefficient * gegenbauer_sq_at_sqrt(d, a1).eval(u);
  }
  return sum;
}

Report ag_1016_check(unsigned n, unsigned k, const Rational& ysq) {
  if (ysq.sign() < 0 || ysq > Rational(1))
    throw std::invalid_argument("ag_1016_check needs 0 <= ysq <= 1, got " + ysq.str());
  const Rational lhs = ag_1016_lhs(n, k, ysq);
  const Rational rhs = ag_1016_rhs(n, k, ysq);
  bool pass = lhs == rhs;
  if (ysq < Rational(1)) {
    const Rational u = Rational(1) - ysq;
    pass = pass && lhs == lambda_jacobi_sum(n + k, k, u) / u.pow(k);
  }
  return exact_report("ag16", {{"n", std::to_string(n)}, {"k", std::to_string(k)}, {"ysq", ysq.str()}},
                      lhs.str(), rhs.str(), pass);
}

PiMultiple beta_integral_value(unsigned j, const Rational& nu) {
  require_integer_or_half(nu);
  const Rational exponent = nat(j) + nu - Rational(1);
  if (exponent.sign() < 0)
    throw std::invalid_argument("beta_integral_value: exponent j + nu - 1 must be >= 0");
  const Rational two_a = Rational(2) * (nat(j) + nu); // 2j + 2nu, an integer
  const PiMultiple g2 = gamma_squared(nat(j) + nu);
  const auto power_of_two = static_cast<unsigned>(two_a.to_long() - 1);
  return {Rational(2).pow(power_of_two) * g2.coefficient /
              fact(static_cast<unsigned>(two_a.to_long() - 1)),
          g2.pi_power};
}

Rational beta_integral_by_polynomial(unsigned e) {
  return Poly{Rational(1), Rational(0), Rational(-1)}.pow(e).integrate(Rational(-1), Rational(1));
}

PiMultiple qjn_constant(unsigned n, unsigned j, const Rational& nu) {
  if (j > n)
    throw std::invalid_argument("qjn_constant needs j <= n");
  require_integer_or_half(nu);
  const Rational two_nu = Rational(2) * nu;
  const PiMultiple g2 = gamma_squared(nat(j) + nu);
  const auto power_of_two = static_cast<unsigned>((nat(2 * j) + two_nu - Rational(1)).to_long());
  const auto gamma_arg = static_cast<unsigned>((nat(n + j) + two_nu).to_long());
  return {Rational(2).pow(power_of_two) * fact(n - j) * g2.coefficient / fact(gamma_arg - 1),
          g2.pi_power};
}

double qjn_integral(unsigned n, unsigned j, const Rational& nu, double x, double y,
                    unsigned nodes) {
  return qjn_quadrature(n, j, nu, x, y, nodes).value;
}

Report qjn_product_check(unsigned n, unsigned j, const Rational& nu, double x, double y,
                         std::optional<double> tol) {
  const bool integer_exponent = nu.is_integer();
  const QuadratureSum q = qjn_quadrature(n, j, nu, x, y, 0);
  const double lambda = (nu + nat(j)).to_double();
  const double rhs = qjn_constant(n, j, nu).to_double() * gegenbauer_value(n - j, lambda, x) *
                     gegenbauer_value(n - j, lambda, y);
  const double scale = std::max({std::abs(rhs), q.magnitude, 1e-300});
  Report r;
  r.suite = "quadrature";
  r.inputs = {{"identity", "qjn"},
              {"n", std::to_string(n)},
              {"j", std::to_string(j)},
              {"nu", nu.str()},
              {"x", format_double(x)},
              {"y", format_double(y)}};
  r.lhs = q.value;
  r.rhs = rhs;
  r.discrepancy = std::abs(q.value - rhs) / scale;
  r.pass = r.discrepancy <= tol.value_or(integer_exponent ? 1e-12 : 1e-8);
  return r;
}

} // namespace weinstein
