#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ecsldg/stepper.hpp"

namespace ecsldg {

struct DiagRecord {
  double t = 0.0;
  double E_E = 0.0;      // lambda^2/2 sum w E^2
  double E_K = 0.0;      // 1/2 sum w w f v^2
  double E_total = 0.0;  // E_E + E_K
  double L1 = 0.0;       // sum w w f
  double P = 0.0;        // sum w w f v
  double gauss_res = 0.0;
  double l2_f = 0.0;     // sum w w f^2
  double min_f = 0.0;
};

/// All sums use physical Gauss weights in ascending (i, p, j, q) order.
DiagRecord observe(const SimState& state);

struct ErrorNorms {
  double L1 = 0.0;
  double L2 = 0.0;
};

/// Quadrature norms of f_num - f_ref on the tensor Gauss grid.
ErrorNorms error_norms(const PhaseSpaceField& f_num, const PhaseSpaceField& f_ref);

/// Broken L2 norm of E_num - E_ref.
double field_error(const DGFunction1D& E_num, const DGFunction1D& E_ref);

/// Amplitude growth/decay rate from the peaks of 1/2 log E_E.
///
/// Peaks are strict maxima over a +-3 sample window, refined by a parabola
/// through the neighbours; the rate is the least-squares slope through them.
/// A constant series gives 0. Throws InputError with fewer than 3 peaks.
double fit_decay_rate(std::span<const double> t, std::span<const double> E_E);

/// Order between consecutive levels, log(e1/e2) / log(h1/h2). Entry i is
/// empty when either error is zero or non-finite.
std::vector<std::optional<double>> convergence_order(std::span<const double> h,
                                                     std::span<const double> errors);

/// Median of pairwise slopes (Theil-Sen estimator).
double theil_sen_slope(std::span<const double> x, std::span<const double> y);

/// Ordinary least-squares slope.
double least_squares_slope(std::span<const double> x, std::span<const double> y);

}  // namespace ecsldg
