#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>

namespace deltaspec {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

/// Point in the parameter domain of a surface.  Curves use u only (the
/// angle); the sphere uses (u, v) = (azimuth in [0,2pi), colatitude in
/// [0,pi]).
struct ParamPoint {
    double u = 0.0;
    double v = 0.0;
};

enum class Shape { circle, ellipse, sphere };

/// Orthonormal boundary frame at a surface point.  The normal points out
/// of the bounded component; the exterior domain uses its negative.
struct BoundaryFrame {
    Vec3 point = Vec3::Zero();
    Vec3 normal = Vec3::Zero();
    Vec3 tangent1 = Vec3::Zero();
    Vec3 tangent2 = Vec3::Zero(); // unused for curves
    ParamPoint param;
    int ambient_dim = 2;
};

/// Closed hypersurface separating R^n into a bounded interior and an
/// unbounded exterior: circle/ellipse in the plane, sphere in space.
class Hypersurface {
public:
    static Hypersurface circle(double radius);
    static Hypersurface ellipse(double semi_a, double semi_b);
    static Hypersurface sphere(double radius);

    Shape shape() const { return shape_; }
    int ambient_dimension() const { return shape_ == Shape::sphere ? 3 : 2; }
    double radius() const { return r1_; }
    double semi_a() const { return r1_; }
    double semi_b() const { return r2_; }

    /// Parameter rectangle: u in [0, u_max), v in [0, v_max] (v_max = 0 for curves).
    double u_max() const { return 2.0 * M_PI; }
    double v_max() const { return shape_ == Shape::sphere ? M_PI : 0.0; }

    Vec3 point(ParamPoint t) const;
    BoundaryFrame frame_at(ParamPoint t) const;

    /// Surface measure factor: dsigma = measure_weight(t) du (dv).
    double measure_weight(ParamPoint t) const;

    /// Total surface measure |Sigma| (closed form where available,
    /// quadrature for the ellipse perimeter).
    double area(double rel_tol = 1e-12) const;

    std::string describe() const;

private:
    Hypersurface(Shape s, double r1, double r2);
    Shape shape_;
    double r1_, r2_;
};

/// The symmetric coefficient matrix (a_jk), the zeroth-order coefficient
/// and the positivity shift m0^2 of the elliptic expression
///   A u = -div(a grad u) + (a0 + m0^2) u.
class CoefficientField {
public:
    using MatrixFn = std::function<Mat3(const Vec3&)>;
    using ScalarFn = std::function<double(const Vec3&)>;

    /// a_jk = identity, a0 = 0: the shifted Laplacian -Delta + m0^2.
    static CoefficientField laplacian(double m0);
    /// Constant symmetric positive definite matrix.
    static CoefficientField constant_spd(const Mat3& m, double m0);
    /// Smooth SPD perturbation a_jk(x) = delta_jk + eps sin(x_j + x_k);
    /// requires |eps| < 1/3 for uniform ellipticity.
    static CoefficientField perturbed_identity(double eps, double m0);

    Mat3 matrix_at(const Vec3& x) const { return matrix_(x); }
    double scalar_at(const Vec3& x) const { return scalar_(x); }
    double m0() const { return m0_; }
    double shift() const { return m0_ * m0_; }
    bool is_laplacian() const { return family_ == "laplacian"; }
    const std::string& family() const { return family_; }

    /// Smallest matrix eigenvalue over a dense sample grid on the surface;
    /// throws AdmissibilityError when it is not strictly positive, and
    /// NumericalError when a sampled matrix is not symmetric.
    double check_ellipticity(const Hypersurface& surface, int samples_per_dim = 64) const;

private:
    CoefficientField(std::string family, MatrixFn m, ScalarFn s, double m0);
    std::string family_;
    MatrixFn matrix_;
    ScalarFn scalar_;
    double m0_;
};

/// The boundary-adapted quadratic form of the principal symbol at a frame:
///   a(xi', xi_n) = a_nn xi_n^2 + 2 b(xi') xi_n + c(xi'),
/// with b(xi') = sum_i b_i xi_i and c(xi') = sum_ij c_ij xi_i xi_j in the
/// tangent frame coordinates.
struct LocalQuadraticData {
    double a_nn = 1.0;
    Eigen::Vector2d b = Eigen::Vector2d::Zero();
    Eigen::Matrix2d c = Eigen::Matrix2d::Identity();
    int tangent_dim = 1;
};

/// Evaluates the coefficient matrix at the frame point and expresses it in
/// the frame's tangent/normal coordinates.  Throws AdmissibilityError if
/// ellipticity fails at the point.
LocalQuadraticData transform_to_frame(const CoefficientField& coeffs,
                                      const BoundaryFrame& frame);

} // namespace deltaspec
