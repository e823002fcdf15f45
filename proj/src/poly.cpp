#include "weinstein/poly.hpp"

#include <algorithm>

namespace weinstein {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Poly Poly::monomial(const Rational& c, unsigned power) {
  std::vector<Rational> v(power + 1);
  v[power] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero())
    coeffs_.pop_back();
}

Rational Poly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Rational Poly::eval(const Rational& x) const {
  Rational r;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    r = r * x + *it;
  return r;
}

double Poly::eval(double x) const {
  double r = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    r = r * x + it->to_double();
  return r;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1)
    return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    d[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
  return Poly(std::move(d));
}

Poly Poly::derivative(unsigned order) const {
  Poly p = *this;
  for (unsigned i = 0; i < order && !p.is_zero(); ++i)
    p = p.derivative();
  return p;
}

Poly Poly::compose_affine(const Rational& a, const Rational& b) const {
  const Poly inner{a, b};
  Poly r;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    r = r * inner + Poly::constant(*it);
  return r;
}

Rational Poly::integrate(const Rational& lo, const Rational& hi) const {
  std::vector<Rational> anti(coeffs_.size() + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    anti[i + 1] = coeffs_[i] / Rational(static_cast<long>(i + 1));
  const Poly F(std::move(anti));
  return F.eval(hi) - F.eval(lo);
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size())
    coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
    coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size())
    coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
    coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& v : coeffs_)
    v *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero())
    return {};
  std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero())
      continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      r[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(r));
}

Poly Poly::pow(unsigned exponent) const {
  Poly result = Poly::constant(1);
  Poly base = *this;
  while (exponent > 0) {
    if (exponent & 1u)
      result = result * base;
    exponent >>= 1u;
    if (exponent > 0)
      base = base * base;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
  os << '[';
  for (std::size_t i = 0; i < p.coeffs().size(); ++i)
    os << (i ? ", " : "") << p.coeffs()[i];
  return os << ']';
}

} // namespace weinstein
