#ifndef WEINSTEIN_POLY_HPP
#define WEINSTEIN_POLY_HPP

#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

#include "weinstein/rational.hpp"

namespace weinstein {

/// Dense univariate polynomial over the rationals. coeffs()[i] multiplies
/// x^i; the highest stored coefficient is nonzero (the zero polynomial
/// stores nothing).
class Poly {
public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<Rational> coeffs);

  static Poly constant(const Rational& c) { return Poly{c}; }
  static Poly x() { return Poly{Rational(0), Rational(1)}; }
  /// c * x^power
  static Poly monomial(const Rational& c, unsigned power);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Rational> coeffs() const { return coeffs_; }
  /// Coefficient of x^i; zero past the degree.
  Rational coeff(std::size_t i) const;

  Rational operator()(const Rational& x) const { return eval(x); }
  /// Horner evaluation.
  Rational eval(const Rational& x) const;
  double eval(double x) const;

  Poly derivative() const;
  Poly derivative(unsigned order) const;
  /// p(a + b x)
  Poly compose_affine(const Rational& a, const Rational& b) const;
  /// Definite integral over [lo, hi].
  Rational integrate(const Rational& lo, const Rational& hi) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const { return *this * Rational(-1); }

  Poly pow(unsigned exponent) const;

  friend bool operator==(const Poly&, const Poly&) = default;

private:
  void trim();
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

} // namespace weinstein

#endif
