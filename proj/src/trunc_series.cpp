#include "weinstein/trunc_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace weinstein {

TruncSeries::TruncSeries(unsigned order) : coeffs_(order + 1), order_(order) {}

TruncSeries::TruncSeries(std::vector<Rational> coeffs, unsigned order)
    : coeffs_(std::move(coeffs)), order_(order) {
  coeffs_.resize(order + 1);
}

TruncSeries TruncSeries::from_poly(const Poly& p, unsigned order) {
  TruncSeries s(order);
  for (unsigned i = 0; i <= order; ++i)
    s.coeffs_[i] = p.coeff(i);
  return s;
}

void TruncSeries::reduce_to(unsigned order) {
  if (order < order_) {
    coeffs_.resize(order + 1);
    order_ = order;
    order_reduced_ = true;
  }
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
  reduce_to(o.order_);
  order_reduced_ = order_reduced_ || o.order_reduced_ || o.order_ != order_;
  for (unsigned i = 0; i <= order_; ++i)
    coeffs_[i] += o.coeffs_[i];
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
  reduce_to(o.order_);
  order_reduced_ = order_reduced_ || o.order_reduced_ || o.order_ != order_;
  for (unsigned i = 0; i <= order_; ++i)
    coeffs_[i] -= o.coeffs_[i];
  return *this;
}

TruncSeries& TruncSeries::operator*=(const Rational& c) {
  for (auto& v : coeffs_)
    v *= c;
  return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  const unsigned order = std::min(a.order_, b.order_);
  TruncSeries r(order);
  r.order_reduced_ = a.order_ != b.order_ || a.order_reduced_ || b.order_reduced_;
  for (unsigned i = 0; i <= order; ++i) {
    if (a.coeffs_[i].is_zero())
      continue;
    for (unsigned j = 0; i + j <= order; ++j)
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return r;
}

TruncSeries TruncSeries::pow(unsigned exponent) const {
  TruncSeries r(order_);
  r.coeffs_[0] = Rational(1);
  for (unsigned i = 0; i < exponent; ++i)
    r = r * *this;
  return r;
}

TruncSeries TruncSeries::shift(unsigned k) const {
  TruncSeries r(order_);
  for (unsigned i = 0; i + k <= order_; ++i)
    r.coeffs_[i + k] = coeffs_[i];
  r.order_reduced_ = order_reduced_;
  return r;
}

TruncSeries series_sqrt(const TruncSeries& s) {
  const Rational& c0 = s[0];
  if (c0.is_zero() || !c0.is_square())
    throw std::domain_error("series_sqrt: constant term " + c0.str() +
                            " is not a nonzero rational square");
  // r_0^2 = s_0, and 2 r_0 r_n + sum_{i=1}^{n-1} r_i r_{n-i} = s_n.
  const unsigned N = s.order();
  std::vector<Rational> r(N + 1);
  r[0] = c0.sqrt();
  const Rational twice_r0 = Rational(2) * r[0];
  for (unsigned n = 1; n <= N; ++n) {
    Rational acc = s[n];
    for (unsigned i = 1; i < n; ++i)
      acc -= r[i] * r[n - i];
    r[n] = acc / twice_r0;
  }
  return TruncSeries(std::move(r), N);
}

TruncSeries series_reciprocal(const TruncSeries& s) {
  if (s[0].is_zero())
    throw std::domain_error("series_reciprocal: zero constant term");
  const unsigned N = s.order();
  std::vector<Rational> r(N + 1);
  r[0] = Rational(1) / s[0];
  for (unsigned n = 1; n <= N; ++n) {
    Rational acc;
    for (unsigned i = 1; i <= n; ++i)
      acc += s[i] * r[n - i];
    r[n] = -acc * r[0];
  }
  return TruncSeries(std::move(r), N);
}

} // namespace weinstein
