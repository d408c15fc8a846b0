#pragma once

#include <cstddef>

#include "deltaspec/mode_solver.hpp"

namespace deltaspec {

struct FitWindow {
    std::size_t j_min = 1;
    std::size_t j_max = 1;
};

/// Result of fitting y_j = j^p s_j ~ C + const / j^{1/(n-1)} on a window.
struct FitReport {
    double exponent_p = 0.0;
    double C_est = 0.0;
    double C_ref = 0.0;
    double relative_error = 0.0;  // |C_est - C_ref| / |C_ref| (0 when C_ref = 0 and C_est = 0)
    double remainder_slope = 0.0; // log-log slope of |j^p s_j - C_ref| over the window
    std::size_t j_min = 0;
    std::size_t j_max = 0;
    int n = 2;
    bool used_median_fallback = false;
    bool constant_ok = false;  // relative_error <= rel_tol used at fit time
    bool remainder_ok = false; // set by check_remainder_order
};

/// Extrapolates the scaled sequence j^p s_j against 1/j^{1/(n-1)} by linear
/// least squares (window median when the regression is ill-conditioned) and
/// measures the remainder decay against C_ref.
FitReport fit_constant(const SingularSpectrum& spectrum, double p, FitWindow window,
                       double C_ref, double rel_tol = 0.01);

/// Pass iff the measured remainder slope is at most expected_slope + 0.15.
bool check_remainder_order(FitReport& report, double expected_slope);

} // namespace deltaspec
