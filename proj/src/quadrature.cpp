#include "weinstein/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace weinstein {

namespace {

struct LegendrePair {
  double value;
  double derivative;
};

LegendrePair legendre_with_derivative(unsigned m, double x) {
  double p0 = 1.0;
  double p1 = x;
  for (unsigned k = 2; k <= m; ++k) {
    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  // P_m' = m (x P_m - P_{m-1}) / (x^2 - 1)
  return {p1, m * (x * p1 - p0) / (x * x - 1.0)};
}

} // namespace

QuadRule gauss_legendre(unsigned m) {
  if (m < 1 || m > 256)
    throw std::invalid_argument("gauss_legendre: node count must be in [1, 256], got " +
                                std::to_string(m));
  QuadRule rule;
  rule.nodes.resize(m);
  rule.weights.resize(m);
  if (m == 1) {
    rule.nodes[0] = 0.0;
    rule.weights[0] = 2.0;
    return rule;
  }
  const unsigned half = (m + 1) / 2;
  for (unsigned i = 0; i < half; ++i) {
    // largest roots first
    double x = std::cos(std::numbers::pi * (i + 0.75) / (m + 0.5));
    LegendrePair p{};
    for (int iter = 0; iter < 100; ++iter) {
      p = legendre_with_derivative(m, x);
      const double dx = p.value / p.derivative;
      x -= dx;
      if (std::abs(dx) <= 1e-15)
        break;
    }
    p = legendre_with_derivative(m, x);
    const double w = 2.0 / ((1.0 - x * x) * p.derivative * p.derivative);
    rule.nodes[m - 1 - i] = x;
    rule.nodes[i] = -x;
    rule.weights[m - 1 - i] = w;
    rule.weights[i] = w;
  }
  if (m % 2 == 1)
    rule.nodes[m / 2] = 0.0;
  return rule;
}

std::shared_ptr<const QuadRule> cached_gauss_legendre(unsigned m) {
  static std::mutex mutex;
  static std::map<unsigned, std::shared_ptr<const QuadRule>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[m];
  if (!slot)
    slot = std::make_shared<const QuadRule>(gauss_legendre(m));
  return slot;
}

double integrate(const std::function<double(double)>& f, const QuadRule& rule) {
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double v = f(rule.nodes[i]);
    if (!std::isfinite(v))
      throw std::domain_error("integrate: integrand not finite at node " +
                              std::to_string(rule.nodes[i]));
    sum += rule.weights[i] * v;
  }
  return sum;
}

} // namespace weinstein
