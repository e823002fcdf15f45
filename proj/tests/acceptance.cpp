// Acceptance gate. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "weinstein/identities.hpp"
#include "weinstein/lambda.hpp"
#include "weinstein/parallel.hpp"
#include "weinstein/suites.hpp"

using namespace weinstein;

namespace {

struct Outcome {
  bool pass = true;
  std::size_t cases = 0;
  std::string detail;

  void expect(bool ok, const std::string& what) {
    ++cases;
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

std::string idx(unsigned n, unsigned k, const Rational& u) {
  return "n=" + std::to_string(n) + " k=" + std::to_string(k) + " u=" + u.str();
}

// All (n, k) with k <= n <= max_n, row by row.
std::vector<std::pair<unsigned, unsigned>> triangle(unsigned max_n) {
  std::vector<std::pair<unsigned, unsigned>> out;
  for (unsigned n = 0; n <= max_n; ++n)
    for (unsigned k = 0; k <= n; ++k)
      out.emplace_back(n, k);
  return out;
}

// Runs fn(i) for every index and folds the per-index outcomes in order.
Outcome gather(std::size_t count, const std::function<Outcome(std::size_t)>& fn) {
  Outcome total;
  for (auto& o : parallel_map(count, fn)) {
    total.cases += o.cases;
    if (!o.pass && total.pass) {
      total.pass = false;
      total.detail = o.detail;
    }
  }
  return total;
}

Outcome representation_equivalence() {
  const auto grid = representation_u_grid();
  const auto tri = triangle(30);
  return gather(tri.size(), [&](std::size_t i) {
    Outcome o;
    const auto [n, k] = tri[i];
    for (const auto& u : grid) {
      const Rational b = lambda_binomial(n, k, u);
      o.expect(lambda_jacobi_sum(n, k, u) == b, "jacobi " + idx(n, k, u));
      o.expect(lambda_3f2(n, k, u) == b, "hyp3f2 " + idx(n, k, u));
      o.expect(lambda_askey_gasper(n, k, u).total == b, "askey-gasper " + idx(n, k, u));
    }
    return o;
  });
}

Outcome series_oracle() {
  const Rational u(1, 3);
  return gather(13, [&](std::size_t k) {
    Outcome o;
    const auto coeffs = lambda_series_oracle(12, k, u);
    o.expect(coeffs.size() == 13 - k, "coefficient count k=" + std::to_string(k));
    for (unsigned n = k; n <= 12 && n - k < coeffs.size(); ++n)
      o.expect(coeffs[n - k] == lambda_binomial(n, k, u), idx(n, k, u));
    return o;
  });
}

Outcome positivity() {
  const auto grid = representation_u_grid();
  const auto tri = triangle(30);
  Outcome exact = gather(tri.size(), [&](std::size_t i) {
    Outcome o;
    const auto [n, k] = tri[i];
    for (const auto& u : grid) {
      o.expect(lambda_binomial(n, k, u).sign() >= 0, "value " + idx(n, k, u));
      for (const auto& term : lambda_askey_gasper(n, k, u).terms)
        o.expect(term.sign() >= 0, "summand " + idx(n, k, u));
    }
    return o;
  });
  Outcome floating = gather(tri.size(), [&](std::size_t i) {
    Outcome o;
    const auto [n, k] = tri[i];
    for (int step = 1; step <= 500; ++step) {
      const double t = 0.01 * step;
      const double v = lambda(n, k, EvalPoint::floating(t), Representation::JacobiSum).as_double();
      o.expect(v >= -1e-12, "float n=" + std::to_string(n) + " k=" + std::to_string(k) +
                                " t=" + std::to_string(t) + " value=" + std::to_string(v));
    }
    return o;
  });
  exact.cases += floating.cases;
  if (exact.pass && !floating.pass) {
    exact.pass = false;
    exact.detail = floating.detail;
  }
  return exact;
}

Outcome fourier() {
  const Rational us[] = {Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1)};
  return gather(21, [&](std::size_t n) {
    Outcome o;
    for (const auto& u : us) {
      const Report r = fourier_check(n, u);
      o.expect(r.pass && r.discrepancy == 0.0, idx(n, 0, u));
    }
    return o;
  });
}

Outcome boundary_values() {
  const auto grid = representation_u_grid();
  Outcome o;
  for (auto [n, k] : triangle(30)) {
    const Rational want((n - k) % 2 == 0 ? 1 : 0);
    for (auto rep : kClosedRepresentations)
      o.expect(lambda(n, k, EvalPoint::exact(Rational(1)), rep).exact() == want,
               std::string(to_string(rep)) + " " + idx(n, k, Rational(1)));
  }
  for (unsigned n = 0; n <= 30; ++n)
    for (const auto& u : grid)
      for (auto rep : kClosedRepresentations)
        o.expect(lambda(n, n, EvalPoint::exact(u), rep).exact() == u.pow(n),
                 std::string(to_string(rep)) + " diagonal " + idx(n, n, u));
  return o;
}

Outcome addition_theorem() {
  const Rational nus[] = {Rational(1), Rational(3, 2), Rational(2), Rational(5, 2)};
  const auto pairs = addition_point_pairs();
  const auto zetas = addition_zeta_grid();
  Outcome o;
  o.expect(zetas.size() >= 9, "need at least n+1 distinct zeta values for n = 8");
  Outcome exact = gather(9, [&](std::size_t n) {
    Outcome e;
    for (const auto& nu : nus)
      for (const auto& [px, py] : pairs)
        for (const auto& zeta : zetas)
          e.expect(addition_theorem_check(n, nu, px, py, zeta).pass,
                   "n=" + std::to_string(n) + " nu=" + nu.str() + " x=" + px.x.str() +
                       " y=" + py.x.str() + " zeta=" + zeta.str());
    return e;
  });
  o.cases += exact.cases;
  if (!exact.pass && o.pass) {
    o.pass = false;
    o.detail = exact.detail;
  }
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<unsigned> deg(0, 8);
  std::uniform_real_distribution<double> nu_dist(0.55, 4.0), unit(-1.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const unsigned n = deg(rng);
    const double nu = nu_dist(rng), x = unit(rng), y = unit(rng), zeta = unit(rng);
    const Report r = addition_theorem_float_check(n, nu, x, y, zeta, 1e-9);
    o.expect(r.pass && r.discrepancy <= 1e-9,
             "float case " + std::to_string(i) + " |lhs-rhs|=" + std::to_string(r.discrepancy));
  }
  return o;
}

Outcome legendre_corollary() {
  const Rational xs[] = {Rational(3, 5), Rational(5, 13), Rational(8, 17)};
  const auto zetas = legendre_zeta_grid();
  return gather(11, [&](std::size_t n) {
    Outcome o;
    for (const auto& x : xs) {
      const auto px = PythagoreanPoint::make(x);
      for (const auto& zeta : zetas)
        o.expect(legendre_addition_check(n, px, zeta).pass,
                 "n=" + std::to_string(n) + " x=" + x.str() + " zeta=" + zeta.str());
    }
    return o;
  });
}

Outcome askey_gasper_sum() {
  const Rational ysqs[] = {Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4),
                           Rational(1)};
  Outcome o = gather(6, [&](std::size_t k) {
    Outcome e;
    for (unsigned n = 0; n <= 20; ++n)
      for (const auto& ysq : ysqs)
        e.expect(ag_1016_check(n, k, ysq).pass,
                 "n=" + std::to_string(n) + " k=" + std::to_string(k) + " ysq=" + ysq.str());
    return e;
  });
  for (unsigned k = 0; k <= 5; ++k)
    for (unsigned n = 0; n <= 20; ++n) {
      Rational want;
      for (unsigned j = 0; j <= n; ++j)
        want += binomial(Rational(j + 2 * k), j);
      o.expect(ag_1016_lhs(n, k, Rational(1)) == want && ag_1016_rhs(n, k, Rational(1)) == want,
               "x=1 anchor n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
  o.expect(ag_1016_rhs(2, 1, Rational(1)) == Rational(48, 5) + Rational(2, 5), "n=2 k=1 anchor");
  return o;
}

Outcome quadrature_checks() {
  const double pts[][2] = {{0.6, 5.0 / 13.0}, {-0.35, 0.8}, {0.9, -0.9}, {0.0, 0.25}};
  Outcome o;
  o.expect(beta_integral_value(1, 1) == PiMultiple{Rational(4, 3), 0}, "beta(1,1) = 4/3");
  for (unsigned j = 0; j <= 10; ++j)
    o.expect(beta_integral_by_polynomial(j) == beta_integral_value(j, 1).coefficient,
             "beta by polynomial j=" + std::to_string(j));
  for (const auto& [nu, tol] : {std::pair{Rational(1), 1e-12}, std::pair{Rational(2), 1e-12},
                                std::pair{Rational(3), 1e-12}, std::pair{Rational(3, 2), 1e-8},
                                std::pair{Rational(5, 2), 1e-8}})
    for (unsigned n = 0; n <= 8; ++n)
      for (unsigned j = 0; j <= n; ++j)
        for (const auto& p : pts) {
          const Report r = qjn_product_check(n, j, nu, p[0], p[1], tol);
          o.expect(r.pass && r.discrepancy <= tol,
                   "n=" + std::to_string(n) + " j=" + std::to_string(j) + " nu=" + nu.str() +
                       " rel=" + std::to_string(r.discrepancy));
        }
  return o;
}

Outcome expansion_identities() {
  Outcome o;
  for (unsigned j = 0; j <= 20; ++j) {
    o.expect(legendre_cos_check(j).pass, "legendre cos j=" + std::to_string(j));
    o.expect(sin_half_power_check(j).pass, "sin half power j=" + std::to_string(j));
  }
  return o;
}

} // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"1 representation equivalence (n<=30, 8 u values, exact)", representation_equivalence},
      {"2 generating-function coefficients (n<=12, u=1/3, exact)", series_oracle},
      {"3 positivity (exact grid, float t=0.01i >= -1e-12, summands >= 0)", positivity},
      {"4 Fourier expansion (n<=20, exact)", fourier},
      {"5 boundary values u=1 and diagonal (n<=30, exact)", boundary_values},
      {"6 Gegenbauer addition theorem (n<=8 exact, 1000 float at 1e-9)", addition_theorem},
      {"7 Legendre addition (n<=10, exact)", legendre_corollary},
      {"8 Jacobi partial sums for even alpha (k<=5, n<=20, exact)", askey_gasper_sum},
      {"9 Q integrals (integer rel 1e-12, half-integer rel 1e-8, beta exact)",
       quadrature_checks},
      {"10 cosine expansions (j<=20, exact)", expansion_identities},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s  %s  [%zu cases, %.2fs]%s%s\n", o.pass ? "PASS" : "FAIL", c.name, o.cases,
                secs, o.pass ? "" : "  first failure: ", o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass)
      ++failures;
  }
  return failures == 0 ? 0 : 1;
}
