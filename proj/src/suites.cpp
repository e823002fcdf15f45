#include "weinstein/suites.hpp"

#include <array>
#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>

#include "weinstein/lambda.hpp"
#include "weinstein/orthopoly.hpp"
#include "weinstein/parallel.hpp"
#include "weinstein/quadrature.hpp"

namespace weinstein {

namespace {

using Case = std::function<Report()>;

constexpr std::array<std::string_view, 9> kSuites = {
    "representations", "series",     "fourier",    "positivity", "addition",
    "legendre-addition", "ag16",     "quadrature", "expansions"};

SuiteReport run_cases(std::string_view suite, const std::vector<Case>& cases,
                      const SuiteOptions& options) {
  SuiteReport report;
  report.suite = std::string(suite);
  report.cases = parallel_map(cases.size(), [&](std::size_t i) { return cases[i](); },
                              options.threads);
  return report;
}

std::vector<Rational> u_values(const SuiteOptions& options, std::vector<Rational> fallback) {
  return options.u_list ? *options.u_list : std::move(fallback);
}

Rational r(long p, long q = 1) { return Rational(p, q); }

std::string str(unsigned v) { return std::to_string(v); }

// ---- representations -------------------------------------------------------

Report representation_case(unsigned n, unsigned k, const Rational& u) {
  const Rational jac = lambda_jacobi_sum(n, k, u);
  const Rational bin = lambda_binomial(n, k, u);
  const Rational hyp = lambda_3f2(n, k, u);
  const Rational ag = lambda_askey_gasper(n, k, u).total;
  const Rational par = lambda_parity_sums(n, k / 2, k % 2 ? Parity::Odd : Parity::Even, u);
  bool pass = jac == bin && bin == hyp && hyp == ag && ag == par;
  if (k == n)
    pass = pass && bin == u.pow(n);
  Report rep;
  rep.suite = "representations";
  rep.inputs = {{"n", str(n)}, {"k", str(k)}, {"u", u.str()}};
  rep.lhs = jac.str();
  rep.rhs = pass ? bin.str()
                 : "binomial=" + bin.str() + ";hyp3f2=" + hyp.str() + ";askey-gasper=" +
                       ag.str() + ";parity=" + par.str();
  rep.pass = pass;
  rep.discrepancy = pass ? 0.0 : std::abs((jac - bin).to_double());
  return rep;
}

SuiteReport representations_suite(const SuiteOptions& o) {
  const unsigned max_n = o.max_n.value_or(30);
  std::vector<Case> cases;
  for (const auto& u : u_values(o, representation_u_grid()))
    for (unsigned n = 0; n <= max_n; ++n)
      for (unsigned k = 0; k <= n; ++k)
        cases.emplace_back([=] { return representation_case(n, k, u); });
  return run_cases("representations", cases, o);
}

// ---- series oracle -------------------------------------------------------

SuiteReport series_suite(const SuiteOptions& o) {
  const unsigned max_n = o.max_n.value_or(12);
  SuiteReport report;
  report.suite = "series";
  for (const auto& u : u_values(o, {r(1, 3)})) {
    auto rows = parallel_map(
        max_n + 1,
        [&](std::size_t kk) {
          const auto k = static_cast<unsigned>(kk);
          const std::vector<Rational> oracle = lambda_series_oracle(max_n, k, u);
          std::vector<Report> out;
          for (unsigned n = k; n <= max_n; ++n) {
            const Rational expected = lambda_binomial(n, k, u);
            const Rational& got = oracle[n - k];
            Report rep;
            rep.suite = "series";
            rep.inputs = {{"n", str(n)}, {"k", str(k)}, {"u", u.str()}};
            rep.lhs = got.str();
            rep.rhs = expected.str();
            rep.pass = got == expected;
            rep.discrepancy = rep.pass ? 0.0 : std::abs((got - expected).to_double());
            out.push_back(std::move(rep));
          }
          return out;
        },
        o.threads);
    for (auto& row : rows)
      for (auto& rep : row)
        report.cases.push_back(std::move(rep));
  }
  return report;
}

// ---- fourier ---------------------------------------------------------------

SuiteReport fourier_suite(const SuiteOptions& o) {
  const unsigned max_n = o.max_n.value_or(20);
  std::vector<Case> cases;
  for (const auto& u : u_values(o, {r(1, 4), r(1, 2), r(3, 4), r(1)}))
    for (unsigned n = 0; n <= max_n; ++n)
      cases.emplace_back([=] { return fourier_check(n, u); });
  return run_cases("fourier", cases, o);
}

// ---- positivity ------------------------------------------------------------

Report positivity_exact_case(unsigned n, unsigned k, const Rational& u) {
  const Rational value = lambda_binomial(n, k, u);
  const AskeyGasperSum ag = lambda_askey_gasper(n, k, u);
  bool pass = value.sign() >= 0 && ag.total == value;
  for (const auto& term : ag.terms)
    pass = pass && term.sign() >= 0;
  std::string expected = ">= 0";
  if (u == Rational(1)) {
    const Rational boundary((n - k) % 2 == 0 ? 1 : 0);
    pass = pass && value == boundary;
    expected = boundary.str();
  }
  Report rep;
  rep.suite = "positivity";
  rep.inputs = {{"n", str(n)}, {"k", str(k)}, {"u", u.str()}};
  rep.lhs = value.str();
  rep.rhs = expected;
  rep.pass = pass;
  rep.discrepancy = pass ? 0.0 : std::abs(value.to_double());
  return rep;
}

Report positivity_float_case(unsigned max_n, double t, double tol) {
  const double u = std::exp(-t);
  double lowest = INFINITY;
  unsigned arg_n = 0;
  unsigned arg_k = 0;
  for (unsigned n = 0; n <= max_n; ++n)
    for (unsigned k = 0; k <= n; ++k) {
      const double v = lambda_float(n, k, u, Representation::JacobiSum);
      if (v < lowest) {
        lowest = v;
        arg_n = n;
        arg_k = k;
      }
    }
  Report rep;
  rep.suite = "positivity";
  rep.inputs = {{"t", format_double(t)}, {"max_n", str(max_n)}, {"argmin_n", str(arg_n)},
                {"argmin_k", str(arg_k)}, {"representation", "jacobi"}};
  rep.lhs = lowest;
  rep.rhs = -tol;
  rep.pass = lowest >= -tol;
  rep.discrepancy = lowest < 0.0 ? -lowest : 0.0;
  return rep;
}

SuiteReport positivity_suite(const SuiteOptions& o) {
  const unsigned max_n = o.max_n.value_or(30);
  std::vector<Case> cases;
  for (const auto& u : u_values(o, representation_u_grid()))
    for (unsigned n = 0; n <= max_n; ++n)
      for (unsigned k = 0; k <= n; ++k)
        cases.emplace_back([=] { return positivity_exact_case(n, k, u); });
  if (!o.exact_only) {
    const double tol = o.tol.value_or(1e-12);
    for (int i = 1; i <= 500; ++i)
      cases.emplace_back([=] { return positivity_float_case(max_n, 0.01 * i, tol); });
  }
  return run_cases("positivity", cases, o);
}

// ---- addition theorem ------------------------------------------------------

SuiteReport addition_suite(const SuiteOptions& o) {
  const unsigned max_n = o.max_n.value_or(8);
  std::vector<Case> cases;
  const std::array<Rational, 4> nus = {r(1), r(3, 2), r(2), r(5, 2)};
  for (const auto& nu : nus)
    for (const auto& [px, py] : addition_point_pairs())
      for (const auto& zeta : addition_zeta_grid())
        for (unsigned n = 0; n <= max_n; ++n)
          cases.emplace_back([=] { return addition_theorem_check(n, nu, px, py, zeta); });
  if (!o.exact_only) {
    const double tol = o.tol.value_or(1e-9);
    std::mt19937_64 rng(0x5eed'1016ULL);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::uniform_real_distribution<double> nu_dist(1.0, 3.0);
    std::uniform_int_distribution<unsigned> n_dist(0, max_n);
    for (int i = 0; i < 1000; ++i) {
      const unsigned n = n_dist(rng);
      const double nu = nu_dist(rng);
      const double x = unit(rng);
      const double y = unit(rng);
      const double zeta = unit(rng);
      cases.emplace_back(
          [=] { return addition_theorem_float_check(n, nu, x, y, zeta, tol); });
    }
  }
  return run_cases("addition", cases, o);
}

SuiteReport legendre_addition_suite(const SuiteOptions& o) {
  const unsigned max_n = o.max_n.value_or(10);
  std::vector<Case> cases;
  for (const auto& x : {r(3, 5), r(5, 13), r(8, 17)}) {
    const auto px = PythagoreanPoint::make(x);
    for (const auto& zeta : legendre_zeta_grid())
      for (unsigned n = 0; n <= max_n; ++n)
        cases.emplace_back([=] { return legendre_addition_check(n, px, zeta); });
  }
  return run_cases("legendre-addition", cases, o);
}

// ---- Jacobi partial sums, alpha = 2k ----------------------------------------

SuiteReport ag16_suite(const SuiteOptions& o) {
  const unsigned max_n = o.max_n.value_or(20);
  std::vector<Case> cases;
  for (unsigned k = 0; k <= 5; ++k)
    for (const auto& ysq : {r(0), r(1, 4), r(1, 2), r(3, 4), r(1)})
      for (unsigned n = 0; n <= max_n; ++n)
        cases.emplace_back([=] { return ag_1016_check(n, k, ysq); });
  return run_cases("ag16", cases, o);
}

// ---- quadrature ------------------------------------------------------------

Report beta_case(unsigned e) {
  const PiMultiple formula = beta_integral_value(e, Rational(1));
  const Rational direct = beta_integral_by_polynomial(e);
  Report rep;
  rep.suite = "quadrature";
  rep.inputs = {{"identity", "beta-integral"}, {"j", str(e)}, {"nu", "1"}};
  rep.lhs = formula.str();
  rep.rhs = direct.str();
  rep.pass = formula.pi_power == 0 && formula.coefficient == direct;
  return rep;
}

Report beta_half_case(unsigned j, const Rational& nu, double tol) {
  const PiMultiple formula = beta_integral_value(j, nu);
  // n = j makes the Gegenbauer factor C_0 = 1, leaving the bare weight integral.
  const double q = qjn_integral(j, j, nu, 0.0, 0.0);
  Report rep;
  rep.suite = "quadrature";
  rep.inputs = {{"identity", "beta-integral"}, {"j", str(j)}, {"nu", nu.str()},
                {"exact", formula.str()}};
  rep.lhs = q;
  rep.rhs = formula.to_double();
  rep.discrepancy = std::abs(q - formula.to_double()) / std::abs(formula.to_double());
  rep.pass = rep.discrepancy <= tol;
  return rep;
}

Report monomial_case(unsigned m, unsigned d) {
  const auto rule = cached_gauss_legendre(m);
  const double got = integrate([d](double z) { return std::pow(z, d); }, *rule);
  const double exact = d % 2 ? 0.0 : 2.0 / (d + 1.0);
  Report rep;
  rep.suite = "quadrature";
  rep.inputs = {{"identity", "gauss-legendre-exactness"}, {"m", str(m)}, {"degree", str(d)}};
  rep.lhs = got;
  rep.rhs = exact;
  rep.discrepancy = std::abs(got - exact);
  rep.pass = rep.discrepancy <= (d % 2 ? 1e-15 : 1e-13);
  return rep;
}

SuiteReport quadrature_suite(const SuiteOptions& o) {
  const unsigned max_n = o.max_n.value_or(8);
  std::vector<Case> cases;
  for (unsigned e = 0; e <= 10; ++e)
    cases.emplace_back([=] { return beta_case(e); });
  if (!o.exact_only) {
    const std::array<Rational, 4> nus = {r(1), r(2), r(3, 2), r(5, 2)};
    const std::array<std::pair<double, double>, 3> points = {
        {{0.5, 0.5}, {0.3, -0.7}, {-0.9, 0.2}}};
    for (const auto& nu : nus)
      for (const auto& [x, y] : points)
        for (unsigned n = 0; n <= max_n; ++n)
          for (unsigned j = 0; j <= n; ++j)
            cases.emplace_back([=, x = x, y = y] { return qjn_product_check(n, j, nu, x, y, o.tol); });
    for (unsigned j = 0; j <= 4; ++j)
      for (const auto& nu : {r(3, 2), r(5, 2)})
        cases.emplace_back([=] { return beta_half_case(j, nu, o.tol.value_or(1e-8)); });
    for (unsigned m = 2; m <= 20; ++m)
      for (unsigned d = 0; d <= 2 * m - 1; ++d)
        cases.emplace_back([=] { return monomial_case(m, d); });
  }
  return run_cases("quadrature", cases, o);
}

// ---- expansions ------------------------------------------------------------

SuiteReport expansions_suite(const SuiteOptions& o) {
  const unsigned max_n = o.max_n.value_or(20);
  std::vector<Case> cases;
  for (unsigned j = 0; j <= max_n; ++j) {
    cases.emplace_back([=] {
      Report rep = legendre_cos_check(j);
      // coefficients of cos((j-2l)t) are positive, the rest vanish
      const auto c = legendre_cos_coeffs(j);
      for (unsigned k = 0; k <= j; ++k)
        rep.pass = rep.pass && ((j - k) % 2 == 0 ? c[k].sign() > 0 : c[k].is_zero());
      return rep;
    });
    cases.emplace_back([=] {
      Report rep = sin_half_power_check(j);
      const auto c = sin_half_power_expand(j);
      for (unsigned k = 0; k <= j; ++k)
        rep.pass = rep.pass && c[k].sign() == (k % 2 ? -1 : 1);
      return rep;
    });
  }
  return run_cases("expansions", cases, o);
}

} // namespace

std::span<const std::string_view> suite_names() { return kSuites; }

std::vector<Rational> representation_u_grid() {
  return {r(1, 10), r(1, 4), r(1, 3), r(1, 2), r(2, 3), r(3, 4), r(9, 10), r(1)};
}

std::vector<std::pair<PythagoreanPoint, PythagoreanPoint>> addition_point_pairs() {
  const auto p = [](long a, long b) { return PythagoreanPoint::make(Rational(a, b)); };
  return {{p(3, 5), p(5, 13)},  {p(8, 17), p(-4, 5)}, {p(7, 25), p(7, 25)},
          {p(-12, 13), p(3, 5)}, {p(0, 1), p(8, 17)},  {p(1, 1), p(5, 13)}};
}

std::vector<Rational> addition_zeta_grid() {
  return {r(-1), r(-2, 3), r(-1, 3), r(-1, 5), r(0), r(1, 4), r(1, 2), r(3, 4), r(1)};
}

std::vector<Rational> legendre_zeta_grid() {
  return {r(-1),   r(-3, 4), r(-1, 2), r(-1, 3), r(-1, 5), r(0),
          r(1, 5), r(1, 3),  r(1, 2),  r(3, 4),  r(1)};
}

SuiteReport run_suite(std::string_view name, const SuiteOptions& options) {
  if (name == "representations") return representations_suite(options);
  if (name == "series") return series_suite(options);
  if (name == "fourier") return fourier_suite(options);
  if (name == "positivity") return positivity_suite(options);
  if (name == "addition") return addition_suite(options);
  if (name == "legendre-addition") return legendre_addition_suite(options);
  if (name == "ag16") return ag16_suite(options);
  if (name == "quadrature") return quadrature_suite(options);
  if (name == "expansions") return expansions_suite(options);
  if (name == "all") {
    SuiteReport all;
    all.suite = "all";
    for (auto suite : kSuites)
      all.append(run_suite(suite, options));
    return all;
  }
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

} // namespace weinstein
