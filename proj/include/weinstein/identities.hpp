#ifndef WEINSTEIN_IDENTITIES_HPP
#define WEINSTEIN_IDENTITIES_HPP

#include <optional>
#include <span>
#include <vector>

#include "weinstein/poly.hpp"
#include "weinstein/rational.hpp"
#include "weinstein/report.hpp"

namespace weinstein {

/// Rational x with s = +sqrt(1 - x^2) also rational, e.g. (3/5, 4/5).
struct PythagoreanPoint {
  Rational x;
  Rational s;

  /// Throws std::invalid_argument unless |x| <= 1 and 1 - x^2 is a rational square.
  static PythagoreanPoint make(const Rational& x);
};

/// c * pi^pi_power, for Beta/Gamma values at integer and half-integer arguments.
struct PiMultiple {
  Rational coefficient;
  int pi_power = 0;

  double to_double() const;
  std::string str() const;
  friend bool operator==(const PiMultiple&, const PiMultiple&) = default;
};

// ---- Chebyshev-T basis -------------------------------------------------

/// Coefficients c_0..c_deg with p(x) = sum_k c_k T_k(x). For p(cos t) this is
/// the plain cosine expansion c_0 + sum_{k>=1} c_k cos(k t).
std::vector<Rational> chebyshev_t_expand(const Poly& p);
/// Inverse of chebyshev_t_expand.
Poly chebyshev_t_reconstruct(std::span<const Rational> coeffs);

// ---- Fourier expansion ---------------------------------------------------

/// U_n((1-u) + u cos t) = Lambda_0^n + 2 sum_k Lambda_k^n cos(k t), exactly.
Report fourier_check(unsigned n, const Rational& u);

// ---- cosine expansions ---------------------------------------------------

/// Predicted cos(k t) coefficients of P_j(cos t), k = 0..j, from the weights
/// g_l g_{j-l} (plain convention: no halving at k = 0).
std::vector<Rational> legendre_cos_coeffs(unsigned j);
Report legendre_cos_check(unsigned j);

/// Predicted cos(k t) coefficients of (sin^2(t/2))^j, k = 0..j, from
/// 2 (-1)^k binomial(2j, j-k) / 4^j with the k = 0 term halved.
std::vector<Rational> sin_half_power_expand(unsigned j);
Report sin_half_power_check(unsigned j);

// ---- Gegenbauer addition theorem -----------------------------------------

/// Right-hand side of the addition theorem, with the Gamma ratio written as
/// Gamma(2nu-1)/Gamma(n+2nu+j) = 1/(2nu-1)_{n+j+1}. Requires nu > 1/2.
Rational addition_theorem_rhs(unsigned n, const Rational& nu, const PythagoreanPoint& px,
                              const PythagoreanPoint& py, const Rational& zeta);
Report addition_theorem_check(unsigned n, const Rational& nu, const PythagoreanPoint& px,
                              const PythagoreanPoint& py, const Rational& zeta);
/// Double-precision version at arbitrary x, y in [-1,1]; passes when
/// |lhs - rhs| <= tol.
Report addition_theorem_float_check(unsigned n, double nu, double x, double y, double zeta,
                                    double tol);

/// P_n(x^2 + (1-x^2) zeta) = P_n(x)^2 + 2 sum_j (n-j)!/(n+j)! P_n^j(x)^2 T_j(zeta),
/// together with the termwise agreement of the Gegenbauer and associated
/// Legendre forms of each summand.
Report legendre_addition_check(unsigned n, const PythagoreanPoint& px, const Rational& zeta);

// ---- Askey-Gasper identity, alpha = 2k -----------------------------------

/// sum_{j=0}^n P_j^(2k,0)(2 ysq - 1)
Rational ag_1016_lhs(unsigned n, unsigned k, const Rational& ysq);
/// The double-sum side with (C_{n-2j}^{(2k+1)/2}(sqrt(ysq)))^2 evaluated exactly.
Rational ag_1016_rhs(unsigned n, unsigned k, const Rational& ysq);
/// Also checks lhs against Lambda_k^{n+k}(1-ysq)/(1-ysq)^k when ysq < 1.
Report ag_1016_check(unsigned n, unsigned k, const Rational& ysq);

// ---- Beta integral and Q_j^n ---------------------------------------------

/// int_{-1}^{1} (1-z^2)^{j+nu-1} dz = 2^{2j+2nu-1} Gamma(j+nu)^2 / Gamma(2j+2nu).
/// The exponent must be a nonnegative integer or half-integer.
PiMultiple beta_integral_value(unsigned j, const Rational& nu);
/// Same integral for an integer exponent e, by exact polynomial integration.
Rational beta_integral_by_polynomial(unsigned e);

/// 2^{2j+2nu-1} (n-j)! Gamma(j+nu)^2 / Gamma(n+j+2nu)
PiMultiple qjn_constant(unsigned n, unsigned j, const Rational& nu);

/// Q_j^n(x,y) = int (1-z^2)^{j+nu-1} C_{n-j}^{nu+j}(xy + sqrt(1-x^2) sqrt(1-y^2) z) dz
/// by Gauss-Legendre. Integer exponents use the plain rule with `nodes`
/// points (0: the smallest exact count); half-integer exponents substitute
/// z = sin(pi s / 2) and use `nodes` points (0: 64).
double qjn_integral(unsigned n, unsigned j, const Rational& nu, double x, double y,
                    unsigned nodes = 0);

/// Compares qjn_integral with qjn_constant * C(x) C(y). Discrepancy is
/// relative to the magnitude of the integrand sum. Default tolerance 1e-12
/// for integer exponents and 1e-8 for half-integer ones.
Report qjn_product_check(unsigned n, unsigned j, const Rational& nu, double x, double y,
                         std::optional<double> tol = std::nullopt);

} // namespace weinstein

#endif
