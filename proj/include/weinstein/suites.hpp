#ifndef WEINSTEIN_SUITES_HPP
#define WEINSTEIN_SUITES_HPP

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "weinstein/identities.hpp"
#include "weinstein/rational.hpp"
#include "weinstein/report.hpp"

namespace weinstein {

/// Overrides for a verification run. Unset fields fall back to each suite's
/// default grid and tolerance.
struct SuiteOptions {
  std::optional<unsigned> max_n;
  std::optional<std::vector<Rational>> u_list;
  /// Replaces the float tolerance of float cases (positivity lower bound
  /// magnitude, addition-theorem absolute error, quadrature relative error).
  std::optional<double> tol;
  /// Skip float cases.
  bool exact_only = false;
  /// 0 = default_thread_count().
  unsigned threads = 0;
};

/// representations, series, fourier, positivity, addition, legendre-addition,
/// ag16, quadrature, expansions
std::span<const std::string_view> suite_names();

/// Runs one suite, or every suite for "all". Throws std::invalid_argument
/// for an unknown name. Case order is deterministic.
SuiteReport run_suite(std::string_view name, const SuiteOptions& options = {});

// Default grids, shared with the acceptance tests.
std::vector<Rational> representation_u_grid();
std::vector<std::pair<PythagoreanPoint, PythagoreanPoint>> addition_point_pairs();
std::vector<Rational> addition_zeta_grid();
std::vector<Rational> legendre_zeta_grid();

} // namespace weinstein

#endif
