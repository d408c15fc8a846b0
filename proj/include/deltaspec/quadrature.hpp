#pragma once

#include <functional>
#include <vector>

namespace deltaspec {

/// Gauss-Legendre rule on [-1, 1].
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;
    explicit GaussLegendre(int npoints);
};

/// Adaptive composite Gauss-Legendre integration of f on [a, b].
///
/// Panels are bisected until the local refinement estimate fits an error
/// budget of rel_tol * |integral|, distributed proportionally to panel
/// length.  Smooth integrands converge in a handful of panels; integrands
/// with |.|^{1/3}-type points are resolved by local subdivision.
double integrate_adaptive(const std::function<double(double)>& f,
                          double a, double b,
                          double rel_tol = 1e-12,
                          int max_depth = 48);

/// Trapezoidal rule for a periodic smooth integrand on [0, period),
/// doubling the point count from n0 until two successive levels agree to
/// rel_tol (spectrally accurate for smooth periodic functions, exact for
/// trigonometric polynomials of degree < npoints).
double integrate_periodic(const std::function<double(double)>& f,
                          double period,
                          double rel_tol = 1e-13,
                          int n0 = 64);

} // namespace deltaspec
