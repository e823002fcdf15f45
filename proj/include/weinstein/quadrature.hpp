#ifndef WEINSTEIN_QUADRATURE_HPP
#define WEINSTEIN_QUADRATURE_HPP

#include <functional>
#include <memory>
#include <vector>

namespace weinstein {

/// Gauss-Legendre rule on [-1, 1]: nodes strictly increasing and symmetric
/// about 0, positive weights summing to 2.
struct QuadRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  std::size_t size() const { return nodes.size(); }
};

/// m-point rule, 1 <= m <= 256. Nodes are the roots of P_m found by Newton
/// iteration from Chebyshev initial guesses; weights 2 / ((1 - x^2) P_m'(x)^2).
QuadRule gauss_legendre(unsigned m);

/// Shared, lazily built rule; repeated calls with the same m return the same
/// immutable object.
std::shared_ptr<const QuadRule> cached_gauss_legendre(unsigned m);

/// sum_i w_i f(x_i). Throws std::domain_error if f is not finite at a node.
double integrate(const std::function<double(double)>& f, const QuadRule& rule);

} // namespace weinstein

#endif
