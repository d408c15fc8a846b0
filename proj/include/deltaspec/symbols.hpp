#pragma once

#include <complex>
#include <functional>
#include <utility>

#include "deltaspec/geometry.hpp"
#include "deltaspec/kinds.hpp"

namespace deltaspec {

/// Boundary symbol data at one (x', xi') with xi' != 0:
/// kappa0 = sqrt(a_nn c - b^2) and the factorization roots
/// kappa_pm = (kappa0 +- i b)/a_nn of
/// a_nn xi_n^2 + 2 b xi_n + c = a_nn (kappa_+ + i xi_n)(kappa_- - i xi_n).
struct LocalSymbolData {
    double a_nn = 1.0;
    double b = 0.0;      // value of the coupling form at xi'
    double c = 1.0;      // value of the tangential form at xi'
    double kappa0 = 1.0;
    std::complex<double> kappa_plus{1.0, 0.0};
    std::complex<double> kappa_minus{1.0, 0.0};
    Eigen::Vector2d xi = Eigen::Vector2d::Zero();
};

enum class Side { interior, exterior };

/// Evaluates the symbol data at a cotangent direction (frame coordinates).
/// Throws AdmissibilityError when a_nn c - b^2 fails to be positive beyond
/// rounding (guard at 1e-14 * a_nn c).
LocalSymbolData kappa(const LocalQuadraticData& local, const Eigen::Vector2d& xi);

/// Leading symbol-kernels of the Dirichlet and Neumann solution operators
/// as functions of the normal distance: (e^{-kappa x_n}, e^{-kappa x_n}/kappa0)
/// with kappa = kappa_+ on the exterior side and kappa_- on the interior.
std::pair<std::function<std::complex<double>(double)>,
          std::function<std::complex<double>(double)>>
poisson_principal_kernels(const LocalSymbolData& sym, Side side);

/// Principal symbols of the Dirichlet-to-Neumann and Neumann-to-Dirichlet
/// maps: (kappa0, 1/kappa0); their product is 1.
std::pair<double, double> dtn_ntd_principal(const LocalSymbolData& sym);

/// Principal symbols of the one-sided compositions K*K for the Dirichlet
/// and Neumann solution operators: (a_nn/(2 kappa0), a_nn/(2 kappa0^3)).
std::pair<double, double> composition_principal(const LocalSymbolData& sym);

/// Principal symbol of the resolvent-difference operator of the given kind
/// (both sides already summed):
///   delta_vs_free:          a_nn * strength / (4 kappa0^3)
///   deltaprime_vs_free:     a_nn / (2 kappa0^2)
///   deltaprime_vs_neumann:  a_nn / (strength * kappa0^3)
/// neumann_vs_free shares the deltaprime_vs_free symbol.
double operator_principal_symbol(Kind kind, const LocalSymbolData& sym, double strength);

} // namespace deltaspec
