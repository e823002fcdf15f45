#ifndef WEINSTEIN_ORTHOPOLY_HPP
#define WEINSTEIN_ORTHOPOLY_HPP

#include <string_view>

#include "weinstein/poly.hpp"
#include "weinstein/rational.hpp"
#include "weinstein/surd_poly.hpp"
#include "weinstein/trunc_series.hpp"

namespace weinstein {

enum class Family { Jacobi, Gegenbauer, ChebyshevT, ChebyshevU, Legendre, AssocLegendre };

/// Parameters for one polynomial family. Only the fields relevant to the
/// family are read.
struct FamilyParams {
  Family family = Family::Legendre;
  Rational alpha{0};
  Rational beta{0};
  Rational lambda{1};
  unsigned order = 0; ///< superscript j of the associated Legendre function
};

/// Parses the CLI spelling: jacobi, gegenbauer, chebyshevT, chebyshevU,
/// legendre, assocLegendre.
Family parse_family(std::string_view name);

/// Jacobi polynomial P_j^(alpha,beta), normalized by P_j(1) = binomial(j+alpha, j).
/// Requires alpha, beta > -1 (std::invalid_argument otherwise).
Poly jacobi(unsigned j, const Rational& alpha, const Rational& beta);

/// Gegenbauer polynomial C_n^lambda for lambda > 0.
Poly gegenbauer(unsigned n, const Rational& lambda);
Poly chebyshev_t(unsigned n);
Poly chebyshev_u(unsigned n);
Poly legendre(unsigned n);

/// C_n^lambda(1) = binomial(n + 2 lambda - 1, n).
Rational gegenbauer_at_one(unsigned n, const Rational& lambda);
/// C_n^lambda(0): zero for odd n, (-1)^(n/2) (lambda)_{n/2} / (n/2)! for even n.
Rational gegenbauer_at_zero(unsigned n, const Rational& lambda);

/// The polynomial q with q(u) = C_m^lambda(sqrt(1 - u))^2. C_m has the
/// parity of m, so the square only involves even powers of the argument.
Poly gegenbauer_sq_at_sqrt(unsigned m, const Rational& lambda);

/// P_n^j(x) = (-1)^j (1 - x^2)^(j/2) d^j/dx^j P_n(x). Zero for j > n.
SurdPoly assoc_legendre(unsigned n, unsigned j);

/// j-th derivative of C_n^lambda by formal differentiation; zero for j > n.
Poly gegenbauer_derivative(unsigned n, const Rational& lambda, unsigned j);

/// Expansion of 2^alpha / (sqrt(R) (1 - z + sqrt(R))^alpha), R = 1 - 2xz + z^2,
/// through z^order. Its z^j coefficient is P_j^(alpha,0)(x). alpha must be a
/// nonnegative integer.
TruncSeries jacobi_generating_series(const Rational& alpha, const Rational& x,
                                     unsigned order);

/// Builds the degree-n member of a family. AssocLegendre is rejected here;
/// use assoc_legendre.
Poly build_family(const FamilyParams& params, unsigned n);

// Floating-point evaluation by the same recurrences.
double gegenbauer_value(unsigned n, double lambda, double x);
double jacobi_value(unsigned n, double alpha, double beta, double x);

} // namespace weinstein

#endif
