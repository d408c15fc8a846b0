#include "deltaspec/geometry.hpp"

#include <cmath>

#include "deltaspec/errors.hpp"
#include "deltaspec/quadrature.hpp"

namespace deltaspec {

Hypersurface::Hypersurface(Shape s, double r1, double r2) : shape_(s), r1_(r1), r2_(r2) {}

Hypersurface Hypersurface::circle(double radius)
{
    if (!(radius > 0.0)) throw ConfigError("circle: radius must be positive");
    return Hypersurface(Shape::circle, radius, radius);
}

Hypersurface Hypersurface::ellipse(double semi_a, double semi_b)
{
    if (!(semi_a > 0.0) || !(semi_b > 0.0))
        throw ConfigError("ellipse: semi-axes must be positive");
    return Hypersurface(Shape::ellipse, semi_a, semi_b);
}

Hypersurface Hypersurface::sphere(double radius)
{
    if (!(radius > 0.0)) throw ConfigError("sphere: radius must be positive");
    return Hypersurface(Shape::sphere, radius, radius);
}

Vec3 Hypersurface::point(ParamPoint t) const
{
    switch (shape_) {
    case Shape::circle:
        return {r1_ * std::cos(t.u), r1_ * std::sin(t.u), 0.0};
    case Shape::ellipse:
        return {r1_ * std::cos(t.u), r2_ * std::sin(t.u), 0.0};
    case Shape::sphere:
        return {r1_ * std::sin(t.v) * std::cos(t.u),
                r1_ * std::sin(t.v) * std::sin(t.u),
                r1_ * std::cos(t.v)};
    }
    return Vec3::Zero();
}

BoundaryFrame Hypersurface::frame_at(ParamPoint t) const
{
    BoundaryFrame f;
    f.param = t;
    f.point = point(t);
    f.ambient_dim = ambient_dimension();
    switch (shape_) {
    case Shape::circle:
        f.normal = {std::cos(t.u), std::sin(t.u), 0.0};
        f.tangent1 = {-std::sin(t.u), std::cos(t.u), 0.0};
        break;
    case Shape::ellipse: {
        const Vec3 tau{-r1_ * std::sin(t.u), r2_ * std::cos(t.u), 0.0};
        f.tangent1 = tau.normalized();
        f.normal = {f.tangent1.y(), -f.tangent1.x(), 0.0};
        // orient out of the bounded component
        if (f.normal.dot(f.point) < 0.0) f.normal = -f.normal;
        break;
    }
    case Shape::sphere: {
        f.normal = f.point / r1_;
        // d/dv of the parametrization has constant length R, so it gives a
        // unit tangent everywhere, including the poles.
        f.tangent1 = {std::cos(t.v) * std::cos(t.u),
                      std::cos(t.v) * std::sin(t.u),
                      -std::sin(t.v)};
        f.tangent2 = f.normal.cross(f.tangent1);
        break;
    }
    }
    return f;
}

double Hypersurface::measure_weight(ParamPoint t) const
{
    switch (shape_) {
    case Shape::circle:
        return r1_;
    case Shape::ellipse:
        return std::sqrt(r1_ * r1_ * std::sin(t.u) * std::sin(t.u) +
                         r2_ * r2_ * std::cos(t.u) * std::cos(t.u));
    case Shape::sphere:
        return r1_ * r1_ * std::sin(t.v);
    }
    return 0.0;
}

double Hypersurface::area(double rel_tol) const
{
    switch (shape_) {
    case Shape::circle:
        return 2.0 * M_PI * r1_;
    case Shape::sphere:
        return 4.0 * M_PI * r1_ * r1_;
    case Shape::ellipse:
        return integrate_adaptive(
            [this](double u) { return measure_weight({u, 0.0}); }, 0.0, 2.0 * M_PI, rel_tol);
    }
    return 0.0;
}

std::string Hypersurface::describe() const
{
    switch (shape_) {
    case Shape::circle:  return "circle(R=" + std::to_string(r1_) + ")";
    case Shape::ellipse: return "ellipse(a=" + std::to_string(r1_) + ",b=" + std::to_string(r2_) + ")";
    case Shape::sphere:  return "sphere(R=" + std::to_string(r1_) + ")";
    }
    return "?";
}

CoefficientField::CoefficientField(std::string family, MatrixFn m, ScalarFn s, double m0)
    : family_(std::move(family)), matrix_(std::move(m)), scalar_(std::move(s)), m0_(m0)
{
    if (!(m0_ > 0.0)) throw ConfigError("coefficients: positivity shift m0 must be positive");
}

CoefficientField CoefficientField::laplacian(double m0)
{
    return CoefficientField("laplacian",
                            [](const Vec3&) { return Mat3::Identity().eval(); },
                            [](const Vec3&) { return 0.0; }, m0);
}

CoefficientField CoefficientField::constant_spd(const Mat3& m, double m0)
{
    if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12)
        throw ConfigError("constant_spd: matrix must be symmetric");
    Eigen::SelfAdjointEigenSolver<Mat3> es(m);
    if (es.eigenvalues().minCoeff() <= 0.0)
        throw ConfigError("constant_spd: matrix must be positive definite");
    return CoefficientField("constant_spd",
                            [m](const Vec3&) { return m; },
                            [](const Vec3&) { return 0.0; }, m0);
}

CoefficientField CoefficientField::perturbed_identity(double eps, double m0)
{
    if (std::abs(eps) >= 1.0 / 3.0)
        throw ConfigError("perturbed_identity: |eps| must be < 1/3");
    auto mat = [eps](const Vec3& x) {
        Mat3 a = Mat3::Identity();
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                a(j, k) += eps * std::sin(x[j] + x[k]);
        return a;
    };
    return CoefficientField("perturbed_identity", mat,
                            [](const Vec3&) { return 0.0; }, m0);
}

double CoefficientField::check_ellipticity(const Hypersurface& surface, int samples_per_dim) const
{
    double lambda_min = std::numeric_limits<double>::infinity();
    const bool is_surface = surface.ambient_dimension() == 3;
    const int nv = is_surface ? samples_per_dim : 1;
    for (int i = 0; i < samples_per_dim; ++i) {
        for (int j = 0; j < nv; ++j) {
            ParamPoint t{(i + 0.5) / samples_per_dim * surface.u_max(),
                         is_surface ? (j + 0.5) / nv * surface.v_max() : 0.0};
            const Mat3 a = matrix_at(surface.point(t));
            if ((a - a.transpose()).cwiseAbs().maxCoeff() > 1e-12 * a.cwiseAbs().maxCoeff())
                throw NumericalError("coefficient matrix not symmetric at a sample point");
            Eigen::SelfAdjointEigenSolver<Mat3> es(a);
            lambda_min = std::min(lambda_min, es.eigenvalues().minCoeff());
        }
    }
    if (!(lambda_min > 0.0))
        throw AdmissibilityError("coefficient field is not uniformly elliptic on the sample grid"
                                 " (min eigenvalue " + std::to_string(lambda_min) + ")");
    return lambda_min;
}

LocalQuadraticData transform_to_frame(const CoefficientField& coeffs, const BoundaryFrame& frame)
{
    const Mat3 a = coeffs.matrix_at(frame.point);
    LocalQuadraticData out;
    out.tangent_dim = frame.ambient_dim - 1;
    const Vec3 nu = frame.normal;
    out.a_nn = nu.dot(a * nu);
    const Vec3 t1 = frame.tangent1;
    out.b[0] = t1.dot(a * nu);
    out.c(0, 0) = t1.dot(a * t1);
    if (out.tangent_dim == 2) {
        const Vec3 t2 = frame.tangent2;
        out.b[1] = t2.dot(a * nu);
        out.c(0, 1) = out.c(1, 0) = t1.dot(a * t2);
        out.c(1, 1) = t2.dot(a * t2);
    } else {
        out.b[1] = 0.0;
        out.c(0, 1) = out.c(1, 0) = 0.0;
        out.c(1, 1) = 1.0;
    }
    // ellipticity at the point: a_nn > 0 and a_nn c - b^2 > 0 on unit xi'
    bool ok = out.a_nn > 0.0;
    if (ok) {
        const int nd = out.tangent_dim == 1 ? 2 : 64;
        for (int i = 0; i < nd && ok; ++i) {
            const double phi = 2.0 * M_PI * i / nd;
            Eigen::Vector2d xi{std::cos(phi), std::sin(phi)};
            if (out.tangent_dim == 1) xi = {i == 0 ? 1.0 : -1.0, 0.0};
            const double bv = out.b.dot(xi);
            const double cv = xi.dot(out.c * xi);
            ok = out.a_nn * cv - bv * bv > 0.0;
        }
    }
    if (!ok)
        throw AdmissibilityError("ellipticity violated at boundary point while forming "
                                 "the local quadratic data");
    return out;
}

} // namespace deltaspec
