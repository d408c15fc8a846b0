#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "deltaspec/quadrature.hpp"

using namespace deltaspec;

TEST_CASE("gauss-legendre nodes integrate polynomials exactly")
{
    GaussLegendre rule(16);
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        acc += rule.weights[i] * std::pow(rule.nodes[i], 30);
    CHECK(acc == doctest::Approx(2.0 / 31.0).epsilon(1e-13)); // degree 30 < 2*16
}

TEST_CASE("adaptive integration of smooth and kinked integrands")
{
    const double smooth = integrate_adaptive([](double x) { return std::exp(x); }, 0.0, 2.0);
    CHECK(smooth == doctest::Approx(std::exp(2.0) - 1.0).epsilon(1e-13));

    // |cos t|^{1/3} over a period: reference value from an independent
    // high-precision evaluation
    const double kinked = integrate_adaptive(
        [](double t) { return std::cbrt(std::abs(std::cos(t))); }, 0.0, 2.0 * M_PI, 1e-10);
    CHECK(kinked == doctest::Approx(5.1742191184595811).epsilon(2e-9));
}

TEST_CASE("periodic trapezoid is spectrally accurate")
{
    const double v = integrate_periodic(
        [](double t) { return std::exp(std::cos(t)); }, 2.0 * M_PI);
    // 2 pi I_0(1)
    CHECK(v == doctest::Approx(2.0 * M_PI * 1.2660658777520083).epsilon(1e-13));
}
