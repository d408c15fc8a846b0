#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <utility>
#include <vector>

#include "deltaspec/kinds.hpp"

namespace deltaspec {

/// Radial finite-difference mesh for one angular mode: uniform step h on
/// (0, R) and (R, r_out), interface node duplicated (one-sided limits),
/// homogeneous Dirichlet at the truncation radius r_out.
struct RadialMesh {
    int n = 2;    // ambient dimension (2 = disk, 3 = ball)
    int mode = 0; // Fourier index / spherical-harmonic degree
    double R = 1.0;
    double h = 1e-3;
    double r_out = 21.0;
    int interior_cells = 0; // R / h
    int exterior_cells = 0; // (r_out - R) / h

    /// mu in the radial potential mu / r^2: k^2 (disk), l(l+1) (ball).
    double angular_coefficient() const
    {
        return static_cast<double>(mode) * (mode + n - 2.0);
    }
};

/// Builds a mesh; h must divide R and r_out - R to within rounding.
RadialMesh make_radial_mesh(int n, int mode, double R, double h, double r_out);

/// One-sided Dirichlet-to-Neumann values (p_minus, p_plus) from
/// second-order interior/exterior solves with one-sided conormal stencils.
std::pair<double, double> fd_dtn(const RadialMesh& mesh, double m0);

/// Squared norms of the trace-normalized Dirichlet/Neumann solution
/// operators summed over both sides (discrete counterparts of the
/// mode-solver scalars r_gamma, r_nu).
struct FdPoissonNorms {
    double r_gamma = 0.0;
    double r_nu = 0.0;
};
FdPoissonNorms fd_poisson_norms(const RadialMesh& mesh, double m0);

/// Largest singular value of the discrete resolvent difference of the
/// given kind on the weighted space l2(w), w_i = integral of r^{n-1} over
/// the node cell.  Both realizations are assembled from the same
/// conservative flux form, so the difference is symmetric in the weighted
/// inner product; the value is extracted by Lanczos iteration.
double fd_resolvent_difference(Kind kind, const RadialMesh& mesh, double m0,
                               double strength, std::uint64_t seed = 0x5eed5eedULL);

/// Applies the discrete resolvent difference to nodal values (test hook
/// for symmetry and locality checks).
Eigen::VectorXd fd_resolvent_apply(Kind kind, const RadialMesh& mesh, double m0,
                                   double strength, const Eigen::VectorXd& f);

/// Node radii (interface duplicated: interior copy first) and cell weights.
std::vector<double> fd_nodes(const RadialMesh& mesh);
Eigen::VectorXd fd_node_weights(const RadialMesh& mesh);

/// Relative residuals of the solution-operator adjoint identities
///   (f, K_gamma phi) = -(nu A_gamma^{-1} f) conj(phi),
///   (f, K_nu psi)    =  (gamma A_nu^{-1} f) conj(psi),
/// on each side, for a random discrete f; expected O(h^2).
struct AdjointResiduals {
    double gamma_interior = 0.0;
    double gamma_exterior = 0.0;
    double nu_interior = 0.0;
    double nu_exterior = 0.0;
    double max() const;
};
AdjointResiduals verify_adjoint_identity(const RadialMesh& mesh, double m0,
                                         std::uint64_t seed = 0x5eed5eedULL,
                                         bool support_away_from_interface = false);

} // namespace deltaspec
