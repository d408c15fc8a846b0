#include "deltaspec/seeley.hpp"

#include <cmath>

#include "deltaspec/errors.hpp"
#include "deltaspec/quadrature.hpp"
#include "deltaspec/symbols.hpp"

namespace deltaspec {

namespace {

void check_homogeneity(const SymbolSampler& p0, double t, const Hypersurface& surface)
{
    const double scales[] = {0.5, 2.0, 3.7};
    const double dirs[] = {0.3, 1.7, 4.4};
    for (double u : {0.37, 2.1, 5.3}) {
        const BoundaryFrame f = surface.frame_at(
            {u, surface.ambient_dimension() == 3 ? 1.1 : 0.0});
        for (double phi : dirs) {
            Eigen::Vector2d xi{std::cos(phi), std::sin(phi)};
            if (surface.ambient_dimension() == 2) xi = {phi > 3.0 ? -1.0 : 1.0, 0.0};
            const double base = p0(f, xi);
            for (double s : scales) {
                const double scaled = p0(f, (s * xi).eval());
                const double expected = std::pow(s, -t) * base;
                if (std::abs(scaled - expected) > 1e-8 * std::max(std::abs(expected), 1e-300))
                    throw NumericalError("seeley_constant: sampler is not positively "
                                         "homogeneous of degree -t in xi'");
            }
        }
    }
}

} // namespace

double seeley_constant(const SymbolSampler& p0, double t,
                       const Hypersurface& surface, const CoefficientField& coeffs,
                       double rel_tol)
{
    if (!(t > 0.0)) throw NumericalError("seeley_constant: order t must be positive");
    check_homogeneity(p0, t, surface);
    coeffs.check_ellipticity(surface);

    const int n = surface.ambient_dimension();
    const double power = (n - 1) / t;
    const double prefactor = 1.0 / ((n - 1) * std::pow(2.0 * M_PI, n - 1));

    double integral = 0.0;
    if (n == 2) {
        auto density = [&](double u) {
            const BoundaryFrame f = surface.frame_at({u, 0.0});
            double sum = 0.0;
            for (double sgn : {1.0, -1.0})
                sum += std::pow(std::abs(p0(f, Eigen::Vector2d{sgn, 0.0})), power);
            return sum * surface.measure_weight({u, 0.0});
        };
        integral = integrate_adaptive(density, 0.0, surface.u_max(), rel_tol);
    } else {
        auto density_v = [&](double v) {
            auto density_u = [&](double u) {
                const BoundaryFrame f = surface.frame_at({u, v});
                auto circle = [&](double phi) {
                    const Eigen::Vector2d xi{std::cos(phi), std::sin(phi)};
                    return std::pow(std::abs(p0(f, xi)), power);
                };
                return integrate_periodic(circle, 2.0 * M_PI, 0.1 * rel_tol)
                     * surface.measure_weight({u, v});
            };
            return integrate_adaptive(density_u, 0.0, surface.u_max(), 0.25 * rel_tol);
        };
        integral = integrate_adaptive(density_v, 0.0, surface.v_max(), 0.25 * rel_tol);
    }
    return prefactor * integral;
}

AsymptoticLaw predict(Kind kind, const Hypersurface& surface,
                      const CoefficientField& coeffs, const StrengthFn& strength,
                      double rel_tol)
{
    const int n = surface.ambient_dimension();
    AsymptoticLaw law;
    law.n = n;
    law.order_t = decay_order(kind);
    law.exponent = law.order_t / (n - 1);

    // strength sign pattern on a dense grid decides remainder class /
    // admissibility before any quadrature
    const bool is_surface = n == 3;
    const int nu = 512, nv = is_surface ? 128 : 1;
    double min_abs = std::numeric_limits<double>::infinity();
    double max_abs = 0.0;
    bool has_positive = false, has_negative = false;
    for (int i = 0; i < nu; ++i)
        for (int j = 0; j < nv; ++j) {
            const ParamPoint t{(i + 0.5) / nu * surface.u_max(),
                               is_surface ? (j + 0.5) / nv * surface.v_max() : 0.0};
            const double v = strength(t);
            min_abs = std::min(min_abs, std::abs(v));
            max_abs = std::max(max_abs, std::abs(v));
            has_positive = has_positive || v > 0.0;
            has_negative = has_negative || v < 0.0;
        }
    // a sign change forces a zero between grid points
    const bool vanishes =
        min_abs <= 1e-12 * std::max(max_abs, 1e-300) || (has_positive && has_negative);

    const bool needs_beta = kind == Kind::deltaprime_vs_neumann;
    if (needs_beta && vanishes)
        throw AdmissibilityError(to_string(kind) + ": beta must be non-vanishing on the surface");

    if (kind == Kind::delta_vs_free && max_abs == 0.0) {
        law.C_prime = 0.0;
        law.C = 0.0;
        law.remainder_class = RemainderClass::little_o;
        return law;
    }

    auto p0 = [&](const BoundaryFrame& f, const Eigen::Vector2d& xi) {
        const LocalSymbolData sym = kappa(transform_to_frame(coeffs, f), xi);
        const double st = kind == Kind::deltaprime_vs_free || kind == Kind::neumann_vs_free
                              ? 0.0
                              : strength(f.param);
        return operator_principal_symbol(kind, sym, st);
    };
    // |alpha|^{1/3}-type integrands lose smoothness at zeros of alpha;
    // relax the quadrature target there.
    const double tol = (kind == Kind::delta_vs_free && vanishes)
                           ? std::max(rel_tol, 1e-8)
                           : rel_tol;
    law.C_prime = seeley_constant(p0, law.order_t, surface, coeffs, tol);
    law.C = std::pow(law.C_prime, law.order_t / (n - 1));
    law.remainder_class = (kind == Kind::delta_vs_free && vanishes)
                              ? RemainderClass::little_o
                              : RemainderClass::big_O_one_better;
    return law;
}

AsymptoticLaw laplacian_closed_form(Kind kind, const Hypersurface& surface, double strength)
{
    const int n = surface.ambient_dimension();
    const double area = surface.area();
    const double sphere_measure = n == 2 ? 2.0 : 2.0 * M_PI; // |{ |xi'| = 1 }| in R^{n-1}
    const double denom = (n - 1) * std::pow(2.0 * M_PI, n - 1);

    AsymptoticLaw law;
    law.n = n;
    law.order_t = decay_order(kind);
    law.exponent = law.order_t / (n - 1);
    law.remainder_class = RemainderClass::big_O_one_better;

    switch (kind) {
    case Kind::delta_vs_free:
        law.C_prime = sphere_measure / (denom * std::pow(4.0, (n - 1) / 3.0)) * area *
                      std::pow(std::abs(strength), (n - 1) / 3.0);
        if (strength == 0.0) law.remainder_class = RemainderClass::little_o;
        break;
    case Kind::deltaprime_vs_free:
    case Kind::neumann_vs_free:
        law.C_prime = area * sphere_measure / (denom * std::pow(2.0, (n - 1) / 2.0));
        break;
    case Kind::deltaprime_vs_neumann:
        if (strength == 0.0)
            throw AdmissibilityError("deltaprime_vs_neumann: beta must be non-zero");
        law.C_prime = sphere_measure / denom * area /
                      std::pow(std::abs(strength), (n - 1) / 3.0);
        break;
    }
    law.C = std::pow(law.C_prime, law.order_t / (n - 1));
    return law;
}

AsymptoticLaw laplacian_closed_form(Kind kind, const Hypersurface& surface,
                                    const CoefficientField& coeffs, double strength)
{
    if (!coeffs.is_laplacian())
        throw ConfigError("laplacian_closed_form: coefficient family '" + coeffs.family() +
                          "' has no closed form (Laplacian only)");
    return laplacian_closed_form(kind, surface, strength);
}

} // namespace deltaspec
