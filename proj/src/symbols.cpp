#include "deltaspec/symbols.hpp"

#include <cmath>

#include "deltaspec/errors.hpp"

namespace deltaspec {

LocalSymbolData kappa(const LocalQuadraticData& local, const Eigen::Vector2d& xi)
{
    if (xi.squaredNorm() == 0.0)
        throw NumericalError("kappa: cotangent direction must be non-zero");
    LocalSymbolData s;
    s.xi = xi;
    s.a_nn = local.a_nn;
    s.b = local.b.dot(xi);
    s.c = xi.dot(local.c * xi);
    const double disc = s.a_nn * s.c - s.b * s.b;
    if (!(disc > 1e-14 * s.a_nn * s.c))
        throw AdmissibilityError("kappa: a_nn*c - b^2 is not positive (ellipticity violation)");
    s.kappa0 = std::sqrt(disc);
    s.kappa_plus = {s.kappa0 / s.a_nn, s.b / s.a_nn};
    s.kappa_minus = std::conj(s.kappa_plus);
    return s;
}

std::pair<std::function<std::complex<double>(double)>,
          std::function<std::complex<double>(double)>>
poisson_principal_kernels(const LocalSymbolData& sym, Side side)
{
    const std::complex<double> k = side == Side::exterior ? sym.kappa_plus : sym.kappa_minus;
    const double k0 = sym.kappa0;
    auto dirichlet = [k](double xn) { return std::exp(-k * xn); };
    auto neumann = [k, k0](double xn) { return std::exp(-k * xn) / k0; };
    return {dirichlet, neumann};
}

std::pair<double, double> dtn_ntd_principal(const LocalSymbolData& sym)
{
    return {sym.kappa0, 1.0 / sym.kappa0};
}

std::pair<double, double> composition_principal(const LocalSymbolData& sym)
{
    const double k0 = sym.kappa0;
    return {sym.a_nn / (2.0 * k0), sym.a_nn / (2.0 * k0 * k0 * k0)};
}

double operator_principal_symbol(Kind kind, const LocalSymbolData& sym, double strength)
{
    const double k0 = sym.kappa0;
    switch (kind) {
    case Kind::delta_vs_free:
        return sym.a_nn * strength / (4.0 * k0 * k0 * k0);
    case Kind::deltaprime_vs_free:
    case Kind::neumann_vs_free:
        return sym.a_nn / (2.0 * k0 * k0);
    case Kind::deltaprime_vs_neumann:
        if (strength == 0.0)
            throw AdmissibilityError("deltaprime_vs_neumann: beta must be non-zero");
        return sym.a_nn / (strength * k0 * k0 * k0);
    }
    return 0.0;
}

} // namespace deltaspec
