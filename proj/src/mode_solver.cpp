#include "deltaspec/mode_solver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "deltaspec/bessel.hpp"
#include "deltaspec/errors.hpp"
#include "deltaspec/parallel.hpp"

namespace deltaspec {

namespace {

void require_radial(double R, double m0, int cutoff)
{
    if (!(R > 0.0)) throw ConfigError("mode solver: R must be positive");
    if (!(m0 > 0.0)) throw ConfigError("mode solver: m0 must be positive");
    if (cutoff < 0) throw ConfigError("mode solver: cutoff must be >= 0");
}

// Weighted radial norms of the normalized solution families follow from
// the antiderivative (Lommel) identities
//   d/dt { t^2/2 [ (1 + nu^2/t^2) C^2 - C'^2 ] }            = t C^2,
//   d/dt { t^3/2 [ (1 + L/t^2) c^2 - c'^2 - c c'/t ] }      = t^2 c^2,
// valid for any solution C of the modified Bessel equation of order nu and
// any solution c of the modified spherical equation with L = l(l+1).
// Evaluating at t = m0 R turns both integrals (0,R) and (R,inf) into
// expressions in the one-sided logarithmic derivatives, i.e. in p_-, p_+.
ModeScalars scalars_from_log_derivatives(RadialGeometry g, double R, double m0,
                                         int mode, double rho_in, double rho_out)
{
    ModeScalars s;
    s.mode = mode;
    const double X = m0 * R;
    s.p_minus = m0 * rho_in;
    s.p_plus = -m0 * rho_out;
    if (!(s.p_minus > 0.0) || !(s.p_plus > 0.0))
        throw NumericalError("mode_scalars: Dirichlet-to-Neumann values must be positive");
    s.q_minus = 1.0 / s.p_minus;
    s.q_plus = 1.0 / s.p_plus;
    if (g == RadialGeometry::disk) {
        s.multiplicity = mode == 0 ? 1 : 2;
        const double k2 = static_cast<double>(mode) * mode;
        s.r_gamma = 0.5 * R * (s.p_plus * s.p_plus - s.p_minus * s.p_minus) / (m0 * m0);
        s.r_nu = 0.5 * R * (1.0 + k2 / (X * X)) *
                 (s.q_minus * s.q_minus - s.q_plus * s.q_plus);
    } else {
        s.multiplicity = 2 * mode + 1;
        const double L = static_cast<double>(mode) * (mode + 1.0);
        s.r_gamma = 0.5 * R / (m0 * m0) * (s.p_plus + s.p_minus) *
                    (s.p_plus - s.p_minus - m0 / X);
        s.r_nu = 0.5 * R * (1.0 + L / (X * X)) *
                     (s.q_minus * s.q_minus - s.q_plus * s.q_plus) -
                 (s.q_minus + s.q_plus) / (2.0 * m0 * m0);
    }
    if (!(s.r_gamma > 0.0) || !(s.r_nu > 0.0))
        throw NumericalError("mode_scalars: solution-operator norms must be positive");
    return s;
}

} // namespace

std::vector<ModeScalars> mode_scalars_sweep(RadialGeometry g, double R, double m0, int cutoff)
{
    require_radial(R, m0, cutoff);
    const double X = m0 * R;
    std::vector<ModeScalars> out;
    out.reserve(static_cast<std::size_t>(cutoff) + 1);
    if (g == RadialGeometry::disk) {
        const auto ri = bessel_i_ratio_sequence(cutoff + 1, X); // I_k/I_{k-1}
        const auto rk = bessel_k_ratio_sequence(cutoff + 1, X); // K_k/K_{k-1}
        for (int k = 0; k <= cutoff; ++k) {
            // I'_k/I_k = I_{k-1}/I_k - k/X ; K'_k/K_k = -(K_{k-1}/K_k + k/X)
            const double rho_in = k == 0 ? ri[1] : 1.0 / ri[k] - k / X;
            const double rho_out = k == 0 ? -rk[1] : -(1.0 / rk[k] + k / X);
            out.push_back(scalars_from_log_derivatives(g, R, m0, k, rho_in, rho_out));
        }
    } else {
        const auto ri = spherical_i_ratio_sequence(cutoff + 1, X);
        const auto rk = spherical_k_ratio_sequence(cutoff + 1, X);
        for (int l = 0; l <= cutoff; ++l) {
            // i'_l/i_l = i_{l-1}/i_l - (l+1)/X, with i'_0/i_0 = coth X - 1/X
            const double rho_in = l == 0 ? 1.0 / std::tanh(X) - 1.0 / X
                                         : 1.0 / ri[l] - (l + 1.0) / X;
            const double rho_out = l == 0 ? -(1.0 + 1.0 / X)
                                          : -(1.0 / rk[l] + (l + 1.0) / X);
            out.push_back(scalars_from_log_derivatives(g, R, m0, l, rho_in, rho_out));
        }
    }
    return out;
}

ModeScalars mode_scalars(RadialGeometry g, double R, double m0, int mode)
{
    if (mode < 0) throw ConfigError("mode_scalars: mode must be >= 0");
    return mode_scalars_sweep(g, R, m0, mode).back();
}

namespace {

double per_mode_singular_value(Kind kind, const ModeScalars& s, double strength)
{
    const double P = s.p_plus + s.p_minus;
    const double Q = s.q_plus + s.q_minus;
    switch (kind) {
    case Kind::delta_vs_free:
        return s.r_gamma * std::abs(strength) / ((P - strength) * P);
    case Kind::deltaprime_vs_free:
        return s.r_nu * std::abs(strength) / (Q * std::abs(strength - Q));
    case Kind::deltaprime_vs_neumann:
        return s.r_nu / std::abs(strength - Q);
    case Kind::neumann_vs_free:
        return s.r_nu / Q;
    }
    return 0.0;
}

bool admissible(Kind kind, const std::vector<ModeScalars>& sweep, double strength,
                int* bad_mode)
{
    for (const auto& s : sweep) {
        bool ok = true;
        if (kind == Kind::delta_vs_free)
            ok = s.p_plus + s.p_minus - strength > 0.0;
        else if (kind == Kind::deltaprime_vs_free || kind == Kind::deltaprime_vs_neumann)
            ok = std::abs(strength - (s.q_plus + s.q_minus)) > 1e-8;
        if (!ok) {
            if (bad_mode) *bad_mode = s.mode;
            return false;
        }
    }
    return true;
}

// Smallest shift restoring admissibility, by geometric scan and bisection
// on the admissibility predicate.
double minimal_admissible_m0(Kind kind, RadialGeometry g, double R, double m0,
                             double strength, int cutoff)
{
    double hi = m0;
    for (int i = 0; i < 60; ++i) {
        hi *= 1.25;
        if (admissible(kind, mode_scalars_sweep(g, R, hi, cutoff), strength, nullptr))
            break;
    }
    double lo = m0;
    for (int i = 0; i < 60; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (admissible(kind, mode_scalars_sweep(g, R, mid, cutoff), strength, nullptr))
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

} // namespace

SingularSpectrum krein_singular_values(Kind kind, RadialGeometry g, double R,
                                       double m0, double strength, int cutoff)
{
    require_radial(R, m0, cutoff);
    if ((kind == Kind::deltaprime_vs_free || kind == Kind::deltaprime_vs_neumann) &&
        strength == 0.0)
        throw ConfigError(to_string(kind) + ": beta required and non-zero");

    const auto sweep = mode_scalars_sweep(g, R, m0, cutoff);

    int bad_mode = -1;
    if (kind != Kind::neumann_vs_free && !admissible(kind, sweep, strength, &bad_mode)) {
        std::ostringstream msg;
        msg << to_string(kind) << ": admissibility fails at mode " << bad_mode;
        if (kind == Kind::delta_vs_free)
            msg << " (p+ + p- - alpha <= 0); smallest restoring shift m0 ~= "
                << minimal_admissible_m0(kind, g, R, m0, strength, cutoff);
        else
            msg << " (|beta - (q+ + q-)| <= 1e-8); a restoring shift is m0 ~= "
                << minimal_admissible_m0(kind, g, R, m0, strength, cutoff);
        throw AdmissibilityError(msg.str());
    }

    // per-mode values are independent; each worker writes its own slot, so
    // the result does not depend on the schedule
    std::vector<std::pair<double, int>> blocks(sweep.size());
    parallel_for(sweep.size(), [&](std::size_t i) {
        blocks[i] = {per_mode_singular_value(kind, sweep[i], strength), sweep[i].mode};
    });
    // sort mode blocks by value descending, ties by ascending mode
    std::stable_sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    });

    SingularSpectrum spec;
    spec.meta.kind = kind;
    spec.meta.geometry = g;
    spec.meta.n = ambient_dim(g);
    spec.meta.R = R;
    spec.meta.m0 = m0;
    spec.meta.cutoff = cutoff;
    if (kind == Kind::delta_vs_free)
        spec.meta.alpha = strength;
    else if (kind != Kind::neumann_vs_free)
        spec.meta.beta = strength;
    spec.meta.strength_desc = std::to_string(strength);

    std::size_t total = 0;
    for (const auto& s : sweep) total += static_cast<std::size_t>(s.multiplicity);
    spec.values.reserve(total);
    spec.modes.reserve(total);
    spec.multiplicities.reserve(total);
    for (const auto& [value, mode] : blocks) {
        const int mult = g == RadialGeometry::disk ? (mode == 0 ? 1 : 2) : 2 * mode + 1;
        for (int i = 0; i < mult; ++i) {
            spec.values.push_back(value);
            spec.modes.push_back(mode);
            spec.multiplicities.push_back(mult);
        }
    }
    return spec;
}

int TrigPolynomial::degree() const
{
    int d = 0;
    for (std::size_t m = 0; m < cos_coeffs.size(); ++m)
        if (cos_coeffs[m] != 0.0) d = static_cast<int>(m) + 1;
    for (std::size_t m = 0; m < sin_coeffs.size(); ++m)
        if (sin_coeffs[m] != 0.0) d = std::max(d, static_cast<int>(m) + 1);
    return d;
}

double TrigPolynomial::operator()(double theta) const
{
    double v = a0;
    for (std::size_t m = 0; m < cos_coeffs.size(); ++m)
        v += cos_coeffs[m] * std::cos((m + 1.0) * theta);
    for (std::size_t m = 0; m < sin_coeffs.size(); ++m)
        v += sin_coeffs[m] * std::sin((m + 1.0) * theta);
    return v;
}

std::string TrigPolynomial::describe() const
{
    std::ostringstream os;
    os << a0;
    for (std::size_t m = 0; m < cos_coeffs.size(); ++m)
        if (cos_coeffs[m] != 0.0) os << (cos_coeffs[m] < 0 ? " - " : " + ")
                                     << std::abs(cos_coeffs[m]) << "*cos(" << m + 1 << "t)";
    for (std::size_t m = 0; m < sin_coeffs.size(); ++m)
        if (sin_coeffs[m] != 0.0) os << (sin_coeffs[m] < 0 ? " - " : " + ")
                                     << std::abs(sin_coeffs[m]) << "*sin(" << m + 1 << "t)";
    return os.str();
}

PhiPsiResidual verify_phi_psi_inverse(int mode, double alpha, double beta,
                                      RadialGeometry g, double R, double m0)
{
    const ModeScalars s = mode_scalars(g, R, m0, mode);
    const double pp = s.p_plus, pm = s.p_minus, qp = s.q_plus, qm = s.q_minus;

    const double det_phi = pp + pm - alpha;
    const double det_psi = qp + qm - beta;
    if (std::abs(det_phi) < 1e-12 * (pp + pm) || std::abs(det_psi) < 1e-12 * (qp + qm))
        throw AdmissibilityError("verify_phi_psi_inverse: interface matrix singular at mode " +
                                 std::to_string(mode));

    // Phi = [[1, -1], [-alpha + p+, p-]],
    // Phi^{-1} = (p+ + p- - alpha)^{-1} [[p-, 1], [alpha - p+, 1]]
    const double phi[2][2] = {{1.0, -1.0}, {-alpha + pp, pm}};
    const double phi_inv[2][2] = {{pm / det_phi, 1.0 / det_phi},
                                  {(alpha - pp) / det_phi, 1.0 / det_phi}};
    // Psi = [[q+ - beta, -q-], [1, 1]],
    // Psi^{-1} = (q+ + q- - beta)^{-1} [[1, q-], [-1, q+ - beta]]
    const double psi[2][2] = {{qp - beta, -qm}, {1.0, 1.0}};
    const double psi_inv[2][2] = {{1.0 / det_psi, qm / det_psi},
                                  {-1.0 / det_psi, (qp - beta) / det_psi}};

    PhiPsiResidual out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            double acc_phi = 0.0, acc_psi = 0.0;
            for (int l = 0; l < 2; ++l) {
                acc_phi += phi[i][l] * phi_inv[l][j];
                acc_psi += psi[i][l] * psi_inv[l][j];
            }
            const double id = i == j ? 1.0 : 0.0;
            out.phi = std::max(out.phi, std::abs(acc_phi - id));
            out.psi = std::max(out.psi, std::abs(acc_psi - id));
        }
    return out;
}

} // namespace deltaspec
