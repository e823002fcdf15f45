#include "weinstein/rational.hpp"

#include <stdexcept>

namespace weinstein {

static_assert(sizeof(long long) == sizeof(long), "LP64 expected");

Rational::Rational(long long v) : value_(static_cast<long>(v)) {}

Rational::Rational(long num, long den) {
  if (den == 0)
    throw std::domain_error("Rational: zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty())
    throw std::invalid_argument("empty rational literal");
  std::size_t start = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  const auto slash = s.find('/');
  auto digits = [&](std::size_t b, std::size_t e) {
    if (b >= e)
      return false;
    for (std::size_t i = b; i < e; ++i)
      if (s[i] < '0' || s[i] > '9')
        return false;
    return true;
  };
  const std::size_t num_end = slash == std::string::npos ? s.size() : slash;
  if (!digits(start, num_end) ||
      (slash != std::string::npos && !digits(slash + 1, s.size())))
    throw std::invalid_argument("malformed rational literal '" + s + "'");
  if (s[0] == '+')
    s.erase(0, 1);
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("malformed rational literal '" + s + "'");
  if (q.get_den() == 0)
    throw std::invalid_argument("zero denominator in '" + s + "'");
  q.canonicalize();
  return Rational(q);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero())
    throw std::domain_error("Rational: division by zero");
  value_ /= o.value_;
  return *this;
}

bool Rational::is_half_odd_integer() const {
  return value_.get_den() == 2;
}

long Rational::to_long() const {
  if (!is_integer() || !value_.get_num().fits_slong_p())
    throw std::domain_error("Rational " + str() + " is not a machine integer");
  return value_.get_num().get_si();
}

Rational Rational::pow(unsigned exponent) const {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), exponent);
  mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), exponent);
  return Rational(mpq_class(n, d));
}

bool Rational::is_square() const {
  return sign() >= 0 && mpz_perfect_square_p(value_.get_num_mpz_t()) &&
         mpz_perfect_square_p(value_.get_den_mpz_t());
}

Rational Rational::sqrt() const {
  if (!is_square())
    throw std::domain_error(str() + " is not the square of a rational");
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), value_.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), value_.get_den_mpz_t());
  return Rational(mpq_class(n, d));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

Rational pochhammer(const Rational& a, unsigned j) {
  Rational r(1);
  for (unsigned i = 0; i < j; ++i)
    r *= a + Rational(i);
  return r;
}

Rational binomial(const Rational& n, unsigned k) {
  return pochhammer(n - Rational(k) + Rational(1), k) / Rational(factorial(k));
}

mpz_class factorial(unsigned n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

} // namespace weinstein
