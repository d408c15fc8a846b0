#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "deltaspec/errors.hpp"
#include "deltaspec/seeley.hpp"

using namespace deltaspec;

TEST_CASE("spectral constant of elementary samplers")
{
    const auto circle = Hypersurface::circle(1.0);
    const auto coeffs = CoefficientField::laplacian(1.0);

    // p0 = 1/|xi|, t = 1: c = (1/(2 pi)) * 2 * (2 pi R) = 2R
    auto inv_norm = [](const BoundaryFrame&, const Eigen::Vector2d& xi) {
        return 1.0 / xi.norm();
    };
    CHECK(seeley_constant(inv_norm, 1.0, circle, coeffs) == doctest::Approx(2.0).epsilon(1e-12));

    // zero symbol
    auto zero = [](const BoundaryFrame&, const Eigen::Vector2d&) { return 0.0; };
    CHECK(seeley_constant(zero, 3.0, circle, coeffs) == doctest::Approx(0.0));

    // p0 = alpha/(4 |xi|^3), t = 3, constant alpha: c = 2R (|alpha|/4)^{1/3}
    for (double alpha : {0.5, 1.0, 3.0}) {
        auto p0 = [alpha](const BoundaryFrame&, const Eigen::Vector2d& xi) {
            const double k0 = xi.norm();
            return alpha / (4.0 * k0 * k0 * k0);
        };
        CHECK(seeley_constant(p0, 3.0, circle, coeffs) ==
              doctest::Approx(2.0 * std::cbrt(alpha / 4.0)).epsilon(1e-10));
    }

    // non-homogeneous sampler is rejected
    auto bad = [](const BoundaryFrame&, const Eigen::Vector2d& xi) {
        return 1.0 / (1.0 + xi.norm());
    };
    CHECK_THROWS_AS(seeley_constant(bad, 1.0, circle, coeffs), NumericalError);
    CHECK_THROWS_AS(seeley_constant(inv_norm, -1.0, circle, coeffs), NumericalError);
}

TEST_CASE("predict matches the closed forms for 20 random radii and strengths")
{
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> uni(0.2, 3.0);
    for (int trial = 0; trial < 20; ++trial) {
        const double R = uni(rng);
        const double alpha = uni(rng) * (trial % 3 == 0 ? -1.0 : 1.0);
        const double beta = uni(rng) * (trial % 2 == 0 ? 1.0 : -1.0);
        const auto coeffs = CoefficientField::laplacian(1.0);
        for (const auto& surface : {Hypersurface::circle(R), Hypersurface::sphere(R)}) {
            {
                const auto law = predict(Kind::delta_vs_free, surface, coeffs,
                                         [alpha](ParamPoint) { return alpha; });
                const auto ref = laplacian_closed_form(Kind::delta_vs_free, surface, alpha);
                CHECK(law.C_prime == doctest::Approx(ref.C_prime).epsilon(1e-10));
                CHECK(law.C == doctest::Approx(ref.C).epsilon(1e-10));
                CHECK(law.exponent == doctest::Approx(3.0 / (law.n - 1)));
            }
            {
                const auto law = predict(Kind::deltaprime_vs_free, surface, coeffs,
                                         [beta](ParamPoint) { return beta; });
                const auto ref =
                    laplacian_closed_form(Kind::deltaprime_vs_free, surface, beta);
                CHECK(law.C == doctest::Approx(ref.C).epsilon(1e-10));
            }
            {
                const auto law = predict(Kind::deltaprime_vs_neumann, surface, coeffs,
                                         [beta](ParamPoint) { return beta; });
                const auto ref =
                    laplacian_closed_form(Kind::deltaprime_vs_neumann, surface, beta);
                CHECK(law.C == doctest::Approx(ref.C).epsilon(1e-10));
            }
        }
    }
}

TEST_CASE("acceptance constants of the built-in geometries")
{
    const auto coeffs = CoefficientField::laplacian(1.0);
    const auto circle = Hypersurface::circle(1.0);
    const auto sphere = Hypersurface::sphere(1.0);
    auto one = [](ParamPoint) { return 1.0; };

    CHECK(predict(Kind::delta_vs_free, circle, coeffs, one).C ==
          doctest::Approx(2.0).epsilon(1e-10));
    CHECK(predict(Kind::deltaprime_vs_free, circle, coeffs, one).C ==
          doctest::Approx(2.0).epsilon(1e-10));
    CHECK(predict(Kind::deltaprime_vs_neumann, circle, coeffs, one).C ==
          doctest::Approx(8.0).epsilon(1e-10));
    CHECK(predict(Kind::delta_vs_free, sphere, coeffs, one).C ==
          doctest::Approx(0.25).epsilon(1e-10));
    CHECK(predict(Kind::deltaprime_vs_free, sphere, coeffs, one).C ==
          doctest::Approx(0.5).epsilon(1e-10));
    CHECK(predict(Kind::deltaprime_vs_neumann, sphere, coeffs, one).C ==
          doctest::Approx(1.0).epsilon(1e-10));

    // Neumann-vs-free shares the delta'-vs-free leading symbol (its
    // beta -> infinity limit)
    CHECK(predict(Kind::neumann_vs_free, circle, coeffs, one).C ==
          doctest::Approx(2.0).epsilon(1e-10));
    CHECK(laplacian_closed_form(Kind::neumann_vs_free, sphere, 0.0).C ==
          doctest::Approx(0.5).epsilon(1e-12));

    // closed-form spot values for C' as well
    const auto law = laplacian_closed_form(Kind::deltaprime_vs_neumann, circle, 1.0);
    CHECK(law.C_prime == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(law.C == doctest::Approx(8.0).epsilon(1e-12));
    const auto law2 = laplacian_closed_form(Kind::deltaprime_vs_free, circle, 1.0);
    CHECK(law2.C_prime == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(law2.C == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("strength scaling, beta independence, monotonicity, zero strength")
{
    const auto coeffs = CoefficientField::laplacian(1.0);
    for (const auto& surface : {Hypersurface::circle(1.4), Hypersurface::sphere(0.8)}) {
        const auto base = predict(Kind::delta_vs_free, surface, coeffs,
                                  [](ParamPoint) { return 0.7; });
        for (double s : {2.0, 5.5}) {
            const auto scaled = predict(Kind::delta_vs_free, surface, coeffs,
                                        [s](ParamPoint) { return 0.7 * s; });
            CHECK(scaled.C == doctest::Approx(s * base.C).epsilon(1e-12));
        }
        // C_{delta'} does not depend on beta
        const auto b1 = predict(Kind::deltaprime_vs_free, surface, coeffs,
                                [](ParamPoint) { return 1.0; });
        const auto b3 = predict(Kind::deltaprime_vs_free, surface, coeffs,
                                [](ParamPoint) { return 3.0; });
        CHECK(b1.C == doctest::Approx(b3.C).epsilon(1e-14));
    }

    // pointwise larger |alpha| cannot decrease the constant
    const auto circle = Hypersurface::circle(1.0);
    const auto small = predict(Kind::delta_vs_free, circle, coeffs,
                               [](ParamPoint t) { return 1.0 + 0.5 * std::sin(t.u); });
    const auto large = predict(Kind::delta_vs_free, circle, coeffs,
                               [](ParamPoint t) { return 1.5 + 0.5 * std::sin(t.u); });
    CHECK(large.C >= small.C);

    // alpha = 0: zero constant, little-o remainder class
    const auto zero = predict(Kind::delta_vs_free, circle, coeffs,
                              [](ParamPoint) { return 0.0; });
    CHECK(zero.C == 0.0);
    CHECK(zero.remainder_class == RemainderClass::little_o);
    // sign-changing alpha is little_o as well
    const auto sc = predict(Kind::delta_vs_free, circle, coeffs,
                            [](ParamPoint t) { return std::cos(t.u); });
    CHECK(sc.remainder_class == RemainderClass::little_o);
    CHECK(sc.C == doctest::Approx(1.1169271288400168).epsilon(1e-6));

    // vanishing beta is rejected for the delta' kinds
    CHECK_THROWS_AS(predict(Kind::deltaprime_vs_neumann, circle, coeffs,
                            [](ParamPoint t) { return std::sin(t.u); }),
                    AdmissibilityError);
    CHECK_THROWS_AS(laplacian_closed_form(Kind::delta_vs_free, circle,
                                          CoefficientField::perturbed_identity(0.1, 1.0), 1.0),
                    ConfigError);
}

TEST_CASE("ellipse: predictions use the quadrature perimeter")
{
    const auto ellipse = Hypersurface::ellipse(2.0, 1.0);
    const auto coeffs = CoefficientField::laplacian(1.0);
    // perimeter of the 2:1 ellipse (complete elliptic integral, frozen
    // from an independent high-precision evaluation)
    const double perimeter = 9.6884482205476762;
    CHECK(ellipse.area() == doctest::Approx(perimeter).epsilon(1e-12));
    const auto law = predict(Kind::deltaprime_vs_free, ellipse, coeffs,
                             [](ParamPoint) { return 1.0; });
    // C' = |Sigma| * 2 / (2 pi sqrt(2)) for the Laplacian on a curve
    CHECK(law.C_prime == doctest::Approx(perimeter / (M_PI * std::sqrt(2.0))).epsilon(1e-10));
    const auto closed = laplacian_closed_form(Kind::deltaprime_vs_free, ellipse, 1.0);
    CHECK(law.C == doctest::Approx(closed.C).epsilon(1e-10));
}

TEST_CASE("isotropic coefficient scaling a = mu * identity")
{
    // kappa0 = mu |xi|, a_nn = mu: the delta symbol picks up mu^{-2} and
    // the delta' symbol mu^{-1} relative to the Laplacian
    const double mu = 2.3;
    const auto scaled = CoefficientField::constant_spd(mu * Mat3::Identity(), 1.0);
    for (const auto& surface : {Hypersurface::circle(1.2), Hypersurface::sphere(0.7)}) {
        const int n = surface.ambient_dimension();
        const auto base_d = laplacian_closed_form(Kind::delta_vs_free, surface, 1.0);
        const auto law_d = predict(Kind::delta_vs_free, surface, scaled,
                                   [](ParamPoint) { return 1.0; });
        CHECK(law_d.C_prime ==
              doctest::Approx(base_d.C_prime * std::pow(mu, -2.0 * (n - 1) / 3.0))
                  .epsilon(1e-10));
        const auto base_p = laplacian_closed_form(Kind::deltaprime_vs_free, surface, 1.0);
        const auto law_p = predict(Kind::deltaprime_vs_free, surface, scaled,
                                   [](ParamPoint) { return 1.0; });
        CHECK(law_p.C_prime ==
              doctest::Approx(base_p.C_prime * std::pow(mu, -0.5 * (n - 1))).epsilon(1e-10));
    }
    // strength scaling holds for genuinely variable coefficients too
    const auto bumpy = CoefficientField::perturbed_identity(0.2, 1.0);
    const auto sphere = Hypersurface::sphere(1.0);
    const auto one = predict(Kind::delta_vs_free, sphere, bumpy,
                             [](ParamPoint) { return 1.0; }, 1e-8);
    const auto four = predict(Kind::delta_vs_free, sphere, bumpy,
                              [](ParamPoint) { return 4.0; }, 1e-8);
    CHECK(four.C == doctest::Approx(4.0 * one.C).epsilon(1e-10));
}

TEST_CASE("variable strength quadrature against independent references")
{
    const auto coeffs = CoefficientField::laplacian(1.0);
    const auto circle = Hypersurface::circle(1.0);
    // alpha = 2 + cos t: C' = (R/(pi 4^{1/3})) Int (2+cos)^{1/3}; reference
    // integral value 7.7976649095251209
    const auto law = predict(Kind::delta_vs_free, circle, coeffs,
                             [](ParamPoint t) { return 2.0 + std::cos(t.u); });
    const double cp = 7.7976649095251209 / (M_PI * std::cbrt(4.0));
    CHECK(law.C_prime == doctest::Approx(cp).epsilon(1e-10));
    CHECK(law.C == doctest::Approx(3.8228221639957974).epsilon(1e-9));
    CHECK(law.remainder_class == RemainderClass::big_O_one_better);
}
