#ifndef WEINSTEIN_LAMBDA_HPP
#define WEINSTEIN_LAMBDA_HPP

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "weinstein/rational.hpp"

namespace weinstein {

/// Weinstein functions Lambda_k^n, parameterized by u = e^{-t} in (0, 1].
/// Every exact representation is a polynomial in u, so values at rational u
/// are exact rationals and the representations can be compared for equality.
/// The exact routines accept 0 <= u <= 1; u = 0 is the t -> infinity limit.

enum class Representation { JacobiSum, Binomial, Hyp3F2, AskeyGasper, SeriesOracle };

/// CLI/report spelling: jacobi, binomial, hyp3f2, askey-gasper, series.
std::string_view to_string(Representation rep);
Representation parse_representation(std::string_view name);

/// The four closed representations (everything but SeriesOracle).
inline constexpr Representation kClosedRepresentations[] = {
    Representation::JacobiSum, Representation::Binomial, Representation::Hyp3F2,
    Representation::AskeyGasper};

struct WeinsteinIndex {
  unsigned n;
  unsigned k;
  /// Throws std::invalid_argument unless 0 <= k <= n.
  static WeinsteinIndex make(unsigned n, unsigned k);
};

/// Exact mode carries u, float mode carries t >= 0.
class EvalPoint {
public:
  /// Requires 0 < u <= 1.
  static EvalPoint exact(const Rational& u);
  /// Requires finite t >= 0.
  static EvalPoint floating(double t);

  bool is_exact() const { return std::holds_alternative<Rational>(value_); }
  const Rational& u() const { return std::get<Rational>(value_); }
  double t() const { return std::get<double>(value_); }
  /// e^{-t} in float mode, u converted to double in exact mode.
  double u_double() const;

private:
  explicit EvalPoint(std::variant<Rational, double> v) : value_(std::move(v)) {}
  std::variant<Rational, double> value_;
};

struct LambdaValue {
  std::variant<Rational, double> value;
  Representation representation;

  bool is_exact() const { return std::holds_alternative<Rational>(value); }
  const Rational& exact() const { return std::get<Rational>(value); }
  double as_double() const;
  /// Exact as "p/q"; float with 17 significant digits.
  std::string str() const;
};

/// u^k sum_{j=0}^{n-k} P_j^(2k,0)(1 - 2u)
Rational lambda_jacobi_sum(unsigned n, unsigned k, const Rational& u);

/// sum_{j=k}^n (-1)^{j+k} binomial(n+j+1, n-j) binomial(2j, j-k) u^j
Rational lambda_binomial(unsigned n, unsigned k, const Rational& u);

/// u^k binomial(n+k+1, n-k) 3F2(n+k+2, k+1/2, k-n; k+3/2, 2k+1; u), summed
/// as the terminating series.
Rational lambda_3f2(unsigned n, unsigned k, const Rational& u);

struct AskeyGasperSum {
  Rational total;
  /// terms[j] for j = 0..n-k; each one is nonnegative for u in (0, 1].
  std::vector<Rational> terms;
};

/// Nonnegative-summand representation. With m = n - k, the j-th summand is
///   (2j+2k+1) 4^{j+2k} (j+k)!^2 (m-j)! j! ((1/2)_k)^2 / ((2k+m+j+1)! (j+2k)!)
///     * u^{j+k} C_j^{k+1/2}(0)^2 C_{m-j}^{j+k+1}(sqrt(1-u))^2.
AskeyGasperSum lambda_askey_gasper(unsigned n, unsigned k, const Rational& u);

enum class Parity { Even, Odd };

/// Lambda_{2m}^n (Even) or Lambda_{2m+1}^n (Odd) from the Legendre-coefficient
/// sums with weights g_l = (2l)! / (4^l l!^2).
Rational lambda_parity_sums(unsigned n, unsigned m, Parity parity, const Rational& u);

/// g_l = (2l)! / (4^l l!^2)
Rational legendre_cos_weight(unsigned l);

/// Taylor coefficients of W_k(z) = u^k z^{k+1} 4^k / ((1-z) sqrt(R) (1-z+sqrt(R))^{2k}),
/// R = 1 - 2(1-2u)z + z^2, built by series arithmetic. Returns
/// [Lambda_k^k, ..., Lambda_k^{n_max}], read off z^{k+1} .. z^{n_max+1}.
/// Throws std::logic_error if a coefficient below z^{k+1} is nonzero.
std::vector<Rational> lambda_series_oracle(unsigned n_max, unsigned k, const Rational& u);

// Floating-point evaluation at u (not t). SeriesOracle is not available.
double lambda_float(unsigned n, unsigned k, double u, Representation rep);

/// Dispatcher. Exact points go to the exact routines; float points convert
/// t to u = e^{-t} and evaluate the requested representation in double.
LambdaValue lambda(unsigned n, unsigned k, const EvalPoint& point, Representation rep);

} // namespace weinstein

#endif
