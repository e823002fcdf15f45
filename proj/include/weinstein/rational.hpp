#ifndef WEINSTEIN_RATIONAL_HPP
#define WEINSTEIN_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace weinstein {

/// Arbitrary-precision signed rational, always in lowest terms with a
/// positive denominator. Zero is 0/1.
class Rational {
public:
  Rational() = default;
  Rational(int v) : value_(v) {}
  Rational(long v) : value_(v) {}
  Rational(long long v);
  Rational(unsigned v) : value_(v) {}
  Rational(unsigned long v) : value_(v) {}
  Rational(long num, long den);
  explicit Rational(mpq_class v);
  explicit Rational(const mpz_class& v) : value_(v) {}

  /// Parses "p", "p/q", "-p/q", "+p/q". Throws std::invalid_argument.
  static Rational parse(std::string_view text);

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  /// Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-value_)); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  /// True for p/2 with odd p.
  bool is_half_odd_integer() const;

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  /// Requires is_integer() and a value that fits in a long.
  long to_long() const;
  double to_double() const { return value_.get_d(); }

  Rational abs() const { return Rational(mpq_class(::abs(value_))); }
  Rational pow(unsigned exponent) const;

  /// Exact square root when this is the square of a rational; throws
  /// std::domain_error otherwise.
  Rational sqrt() const;
  bool is_square() const;

  /// "p/q", or "p" when the denominator is 1.
  std::string str() const { return value_.get_str(); }

  const mpq_class& raw() const { return value_; }

private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Rising factorial a(a+1)...(a+j-1); 1 for j = 0.
Rational pochhammer(const Rational& a, unsigned j);

/// Generalized binomial pochhammer(n-k+1, k)/k!.
Rational binomial(const Rational& n, unsigned k);

mpz_class factorial(unsigned n);

} // namespace weinstein

#endif
