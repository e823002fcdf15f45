#ifndef WEINSTEIN_TRUNC_SERIES_HPP
#define WEINSTEIN_TRUNC_SERIES_HPP

#include <span>
#include <vector>

#include "weinstein/poly.hpp"
#include "weinstein/rational.hpp"

namespace weinstein {

/// Formal power series in z known through z^order. Always stores exactly
/// order+1 coefficients. Binary operations on series of different order
/// truncate to the smaller order and set order_reduced().
class TruncSeries {
public:
  explicit TruncSeries(unsigned order);
  TruncSeries(std::vector<Rational> coeffs, unsigned order);
  /// Truncation of a polynomial in z.
  static TruncSeries from_poly(const Poly& p, unsigned order);

  unsigned order() const { return order_; }
  std::span<const Rational> coeffs() const { return coeffs_; }
  const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }
  bool order_reduced() const { return order_reduced_; }

  TruncSeries& operator+=(const TruncSeries& o);
  TruncSeries& operator-=(const TruncSeries& o);
  TruncSeries& operator*=(const Rational& c);
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(TruncSeries a, const Rational& c) { return a *= c; }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);

  TruncSeries pow(unsigned exponent) const;
  /// Multiplies by z^k, dropping terms past the order.
  TruncSeries shift(unsigned k) const;

  friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }

private:
  void reduce_to(unsigned order);
  std::vector<Rational> coeffs_;
  unsigned order_;
  bool order_reduced_ = false;
};

/// Square root with positive constant term. The constant term must be a
/// nonzero rational square; throws std::domain_error otherwise.
TruncSeries series_sqrt(const TruncSeries& s);

/// Multiplicative inverse; throws std::domain_error on a zero constant term.
TruncSeries series_reciprocal(const TruncSeries& s);

} // namespace weinstein

#endif
