#include "weinstein/surd_poly.hpp"

#include <cmath>

namespace weinstein {

namespace {
const Poly& one_minus_x_squared() {
  static const Poly p{Rational(1), Rational(0), Rational(-1)};
  return p;
}
} // namespace

SurdPoly::SurdPoly(Poly p, unsigned half_power)
    : p_(std::move(p) * one_minus_x_squared().pow(half_power / 2)),
      half_power_(half_power % 2) {
  if (p_.is_zero())
    half_power_ = 0;
}

Rational SurdPoly::eval(const Rational& x, const Rational& s) const {
  Rational v = p_.eval(x);
  if (half_power_ == 1)
    v *= s;
  return v;
}

double SurdPoly::eval(double x) const {
  double v = p_.eval(x);
  if (half_power_ == 1)
    v *= std::sqrt(1.0 - x * x);
  return v;
}

Poly SurdPoly::square() const {
  Poly sq = p_ * p_;
  if (half_power_ == 1)
    sq = sq * one_minus_x_squared();
  return sq;
}

SurdPoly operator*(const SurdPoly& a, const SurdPoly& b) {
  return SurdPoly(a.p_ * b.p_, a.half_power_ + b.half_power_);
}

SurdPoly operator*(const Rational& c, const SurdPoly& a) {
  return SurdPoly(a.p_ * c, a.half_power_);
}

std::ostream& operator<<(std::ostream& os, const SurdPoly& s) {
  os << s.poly();
  if (s.half_power() == 1)
    os << " * (1-x^2)^(1/2)";
  return os;
}

} // namespace weinstein
