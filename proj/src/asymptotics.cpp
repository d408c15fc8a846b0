#include "deltaspec/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "deltaspec/errors.hpp"

namespace deltaspec {

FitReport fit_constant(const SingularSpectrum& spectrum, double p, FitWindow window,
                       double C_ref, double rel_tol)
{
    if (!(p > 0.0)) throw ConfigError("fit_constant: exponent must be positive");
    if (window.j_min < 1 || window.j_max > spectrum.size() || window.j_min > window.j_max)
        throw ConfigError("fit_constant: window outside the spectrum");
    const std::size_t count = window.j_max - window.j_min + 1;
    if (count < 50) throw ConfigError("fit_constant: window too short (need >= 50 points)");

    FitReport rep;
    rep.exponent_p = p;
    rep.C_ref = C_ref;
    rep.j_min = window.j_min;
    rep.j_max = window.j_max;
    rep.n = spectrum.meta.n;

    std::vector<double> y(count), u(count);
    bool all_zero = true;
    for (std::size_t i = 0; i < count; ++i) {
        const double j = static_cast<double>(window.j_min + i);
        y[i] = std::pow(j, p) * spectrum.values[window.j_min + i - 1];
        u[i] = std::pow(j, -1.0 / (rep.n - 1));
        if (spectrum.values[window.j_min + i - 1] != 0.0) all_zero = false;
    }
    if (all_zero && C_ref != 0.0)
        throw NumericalError("fit_constant: spectrum vanishes on the window but the "
                             "reference constant is non-zero");

    // centered least squares for y = C + B u
    double mu_u = 0.0, mu_y = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
        mu_u += u[i];
        mu_y += y[i];
    }
    mu_u /= count;
    mu_y /= count;
    double suu = 0.0, suy = 0.0, umax = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
        suu += (u[i] - mu_u) * (u[i] - mu_u);
        suy += (u[i] - mu_u) * (y[i] - mu_y);
        umax = std::max(umax, std::abs(u[i]));
    }
    if (suu > 1e-12 * umax * umax * count) {
        const double slope = suy / suu;
        rep.C_est = mu_y - slope * mu_u;
    } else {
        std::vector<double> sorted(y);
        std::nth_element(sorted.begin(), sorted.begin() + count / 2, sorted.end());
        rep.C_est = sorted[count / 2];
        rep.used_median_fallback = true;
    }

    if (C_ref != 0.0)
        rep.relative_error = std::abs(rep.C_est - C_ref) / std::abs(C_ref);
    else
        rep.relative_error = std::abs(rep.C_est);
    rep.constant_ok = rep.relative_error <= rel_tol;

    // remainder decay: log-log regression of |y_j - C_ref| on log j
    double slx = 0.0, sly = 0.0, slxx = 0.0, slxy = 0.0;
    std::size_t m = 0;
    for (std::size_t i = 0; i < count; ++i) {
        const double z = std::abs(y[i] - C_ref);
        if (z < 1e-300) continue;
        const double lx = std::log(static_cast<double>(window.j_min + i));
        const double ly = std::log(z);
        slx += lx;
        sly += ly;
        slxx += lx * lx;
        slxy += lx * ly;
        ++m;
    }
    if (m >= 2 && slxx * m - slx * slx > 0.0)
        rep.remainder_slope = (slxy * m - slx * sly) / (slxx * m - slx * slx);
    else
        rep.remainder_slope = 0.0;
    return rep;
}

bool check_remainder_order(FitReport& report, double expected_slope)
{
    report.remainder_ok = report.remainder_slope <= expected_slope + 0.15;
    return report.remainder_ok;
}

} // namespace deltaspec
