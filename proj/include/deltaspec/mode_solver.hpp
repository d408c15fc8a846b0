#pragma once

#include <string>
#include <vector>

#include "deltaspec/kinds.hpp"

namespace deltaspec {

enum class RadialGeometry { disk, ball };

inline int ambient_dim(RadialGeometry g) { return g == RadialGeometry::disk ? 2 : 3; }
inline std::string to_string(RadialGeometry g) { return g == RadialGeometry::disk ? "disk" : "ball"; }

/// Per-mode boundary scalars for -Delta + m0^2 on the disk/ball of radius
/// R and its exterior.  p (q) are the Dirichlet-to-Neumann
/// (Neumann-to-Dirichlet) values; r_gamma and r_nu are the squared
/// L2-norms of the Dirichlet/Neumann solution operators applied to a unit
/// trace basis vector, summed over both sides.
struct ModeScalars {
    int mode = 0;
    int multiplicity = 1;
    double p_minus = 0.0;
    double p_plus = 0.0;
    double q_minus = 0.0;
    double q_plus = 0.0;
    double r_gamma = 0.0;
    double r_nu = 0.0;
};

ModeScalars mode_scalars(RadialGeometry g, double R, double m0, int mode);

/// All modes 0..cutoff from two ratio sweeps (cost O(cutoff)).
std::vector<ModeScalars> mode_scalars_sweep(RadialGeometry g, double R, double m0, int cutoff);

struct SpectrumMeta {
    Kind kind = Kind::delta_vs_free;
    RadialGeometry geometry = RadialGeometry::disk;
    int n = 2;
    double R = 1.0;
    double m0 = 1.0;
    double alpha = 0.0;
    double beta = 0.0;
    int cutoff = 0;
    std::string strength_desc;
};

/// Flat descending singular-value sequence s_1 >= s_2 >= ... with the
/// originating mode and its multiplicity per entry (mode = -1 for Galerkin
/// spectra, where eigenvectors mix modes).
struct SingularSpectrum {
    std::vector<double> values;
    std::vector<int> modes;
    std::vector<int> multiplicities;
    SpectrumMeta meta;
    std::size_t size() const { return values.size(); }
};

/// Exact singular values of the chosen resolvent difference with constant
/// strength, enumerated per mode through the Krein factorizations:
///   delta_vs_free:          r_gamma |alpha| / ((p+ + p- - alpha)(p+ + p-))
///   deltaprime_vs_free:     r_nu |beta| / ((q+ + q-) |beta - (q+ + q-)|)
///   deltaprime_vs_neumann:  r_nu / |beta - (q+ + q-)|
///   neumann_vs_free:        r_nu / (q+ + q-)
/// sorted descending, ties broken by ascending mode.
SingularSpectrum krein_singular_values(Kind kind, RadialGeometry g, double R,
                                       double m0, double strength, int cutoff);

/// Real trigonometric polynomial a0 + sum_m (a_m cos m t + b_m sin m t).
struct TrigPolynomial {
    double a0 = 0.0;
    std::vector<double> cos_coeffs;
    std::vector<double> sin_coeffs;

    static TrigPolynomial constant(double c) { return {c, {}, {}}; }
    int degree() const;
    bool is_constant() const { return degree() == 0; }
    double operator()(double theta) const;
    std::string describe() const;
};

/// Truncated Fourier-basis assembly of the delta resolvent difference on
/// the circle for variable alpha: singular values of
///   R_gamma^{1/2} [(P - M_alpha)^{-1} - P^{-1}] R_gamma^{1/2}
/// on modes |k| <= cutoff, by dense symmetric eigendecomposition.  The
/// reported sequence keeps only the leading 2*(cutoff - guard_band) + 1
/// values; guard_band < 0 selects the default cutoff/4.  When
/// check_sensitivity is set, a reduced-cutoff run must reproduce the
/// retained values, else the cutoff is reported as too small.
SingularSpectrum fourier_galerkin_singular_values(const TrigPolynomial& alpha,
                                                  double R, double m0, int cutoff,
                                                  int guard_band = -1,
                                                  bool check_sensitivity = false);

/// Residuals of the closed-form inverses of the per-mode interface
/// matrices Phi (delta) and Psi (delta'): max |Phi Phi^{-1} - I| and
/// |Psi Psi^{-1} - I|.
struct PhiPsiResidual {
    double phi = 0.0;
    double psi = 0.0;
};

PhiPsiResidual verify_phi_psi_inverse(int mode, double alpha, double beta,
                                      RadialGeometry g, double R, double m0);

} // namespace deltaspec
