#pragma once

#include <vector>

namespace deltaspec {

/// One evaluation of a modified Bessel function, with the derivative in
/// the conventions
///   I'_k = I_{k-1} - (k/x) I_k,      K'_k = -K_{k-1} - (k/x) K_k,
///   i'_l = i_{l-1} - ((l+1)/x) i_l,  k'_l = -k_{l-1} - ((l+1)/x) k_l.
/// When scaled is set, I-type values carry the factor e^{-x} and K-type
/// values the factor e^{+x}.
struct BesselValue {
    int order = 0;
    double x = 0.0;
    double value = 0.0;
    double derivative = 0.0;
    bool scaled = false;
};

/// Number carried as mant * 2^exp2, for magnitudes outside double range.
struct ScaledExp {
    double mant = 0.0;
    long exp2 = 0;
    double to_double() const; // clamps to 0 / throws on overflow
};

// -- point evaluation -------------------------------------------------------
// Preconditions: x > 0, order >= 0.  Unscaled evaluation throws
// OverflowError when the result exceeds double range; scaled evaluation
// underflows to zero where e^{-x} I (resp. e^{x} K) falls below double
// range.

BesselValue bessel_I(int k, double x, bool scaled = false);
BesselValue bessel_K(int k, double x, bool scaled = false);
BesselValue spherical_i(int l, double x, bool scaled = false);
BesselValue spherical_k(int l, double x, bool scaled = false);

// -- whole-sequence evaluation ----------------------------------------------
// All orders 0..kmax at a single argument, in exponent-carrying form; this
// is the representation the mode solver consumes (plain doubles would
// under/overflow near order ~200 already).

/// e^{-x} I_k(x), k = 0..kmax, by downward recurrence normalized with
/// e^{-x} (I_0 + 2 sum_{m>=1} I_m) = 1.
std::vector<ScaledExp> bessel_ie_sequence(int kmax, double x);

/// e^{x} K_k(x), k = 0..kmax, by upward recurrence from K_0, K_1.
std::vector<ScaledExp> bessel_ke_sequence(int kmax, double x);

/// e^{-x} i_l(x), normalized with sum_l (2l+1) e^{-x} i_l(x) = 1.
std::vector<ScaledExp> spherical_ie_sequence(int lmax, double x);

/// e^{x} k_l(x) from k_0 = pi/(2x), k_1 = (pi/(2x))(1 + 1/x).
std::vector<ScaledExp> spherical_ke_sequence(int lmax, double x);

// -- ratio sweeps ------------------------------------------------------------
// Consecutive-order ratios stay within double range for any order, which
// is all the Dirichlet-to-Neumann scalars need.

/// r[k] = I_k(x)/I_{k-1}(x) for k = 1..kmax (r[0] unused).
std::vector<double> bessel_i_ratio_sequence(int kmax, double x);
/// r[k] = K_k(x)/K_{k-1}(x) for k = 1..kmax.
std::vector<double> bessel_k_ratio_sequence(int kmax, double x);
/// r[l] = i_l(x)/i_{l-1}(x) for l = 1..lmax.
std::vector<double> spherical_i_ratio_sequence(int lmax, double x);
/// r[l] = k_l(x)/k_{l-1}(x) for l = 1..lmax.
std::vector<double> spherical_k_ratio_sequence(int lmax, double x);

// Scaled seed values (building blocks, exposed for tests):
double bessel_k0e(double x); // e^x K_0(x)
double bessel_k1e(double x); // e^x K_1(x)

} // namespace deltaspec
