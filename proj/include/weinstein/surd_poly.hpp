#ifndef WEINSTEIN_SURD_POLY_HPP
#define WEINSTEIN_SURD_POLY_HPP

#include <ostream>

#include "weinstein/poly.hpp"

namespace weinstein {

/// p(x) * (1 - x^2)^(j/2), kept canonical with j in {0, 1}: whole powers of
/// (1 - x^2) are folded into p on construction.
class SurdPoly {
public:
  SurdPoly() = default;
  SurdPoly(Poly p, unsigned half_power);

  const Poly& poly() const { return p_; }
  unsigned half_power() const { return half_power_; }
  bool is_zero() const { return p_.is_zero(); }

  /// Value at x, given s = +sqrt(1 - x^2).
  Rational eval(const Rational& x, const Rational& s) const;
  double eval(double x) const;

  /// The square is always a plain polynomial.
  Poly square() const;

  friend SurdPoly operator*(const SurdPoly& a, const SurdPoly& b);
  friend SurdPoly operator*(const Rational& c, const SurdPoly& a);
  friend bool operator==(const SurdPoly&, const SurdPoly&) = default;

private:
  Poly p_;
  unsigned half_power_ = 0;
};

std::ostream& operator<<(std::ostream& os, const SurdPoly& s);

} // namespace weinstein

#endif
