#pragma once

#include <functional>

#include "deltaspec/geometry.hpp"
#include "deltaspec/kinds.hpp"

namespace deltaspec {

enum class RemainderClass { little_o, big_O_one_better };

inline std::string to_string(RemainderClass rc)
{
    return rc == RemainderClass::little_o ? "little_o" : "big_O_one_better";
}

/// Predicted singular-value law s_k = C k^{-exponent} with the stated
/// remainder class; C = C_prime^{t/(n-1)} for a difference operator of
/// order -t on the interface.
struct AsymptoticLaw {
    double order_t = 0.0;
    double exponent = 0.0;       // t/(n-1)
    double C_prime = 0.0;
    double C = 0.0;
    RemainderClass remainder_class = RemainderClass::big_O_one_better;
    int n = 2;
};

/// Symbol sample at a boundary frame and cotangent vector (frame coordinates).
using SymbolSampler = std::function<double(const BoundaryFrame&, const Eigen::Vector2d&)>;

/// Real-valued strength on the surface, given in parameter coordinates.
using StrengthFn = std::function<double(ParamPoint)>;

/// Spectral constant of a classical interface operator of order -t:
///   c(P) = 1/((n-1)(2 pi)^{n-1}) * Int_Sigma Int_{|xi'|=1} |p0|^{(n-1)/t}.
/// For curves the inner integral is the two-point sum over xi' = +-1.
/// The sampler must be positively homogeneous of degree -t in xi'
/// (verified by random sampling; rejected otherwise).
double seeley_constant(const SymbolSampler& p0, double t,
                       const Hypersurface& surface, const CoefficientField& coeffs,
                       double rel_tol = 1e-10);

/// Builds the difference-operator symbol for the kind and applies
/// seeley_constant with t = 3, 2, 3 (delta, delta'-vs-free,
/// delta'-vs-Neumann); returns the full law with C = C'^{t/(n-1)}.
AsymptoticLaw predict(Kind kind, const Hypersurface& surface,
                      const CoefficientField& coeffs, const StrengthFn& strength,
                      double rel_tol = 1e-10);

/// Shifted-Laplacian closed forms of the three constants (constant
/// strength), used as oracle for the quadrature path.
AsymptoticLaw laplacian_closed_form(Kind kind, const Hypersurface& surface,
                                    double strength);

/// Same, but validates the coefficient family first; rejects anything
/// other than the Laplacian.
AsymptoticLaw laplacian_closed_form(Kind kind, const Hypersurface& surface,
                                    const CoefficientField& coeffs, double strength);

} // namespace deltaspec
