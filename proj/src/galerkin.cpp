#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "deltaspec/errors.hpp"
#include "deltaspec/mode_solver.hpp"

namespace deltaspec {

namespace {

// Real orthonormal trace basis on the circle of radius R:
//   phi_0 = 1/sqrt(2 pi R), phi_{2k-1} = cos(k t)/sqrt(pi R),
//   phi_{2k} = sin(k t)/sqrt(pi R).
int mode_of(int idx) { return (idx + 1) / 2; }
bool is_cos(int idx) { return idx == 0 || idx % 2 == 1; }

// Multiplication by alpha in that basis, from the product-to-sum formulas;
// entries depend only on the mode sum/difference.
Eigen::MatrixXd multiplication_matrix(const TrigPolynomial& alpha, int K)
{
    const int N = 2 * K + 1;
    auto a_coef = [&](int m) {
        m = std::abs(m);
        if (m == 0) return alpha.a0;
        return m <= static_cast<int>(alpha.cos_coeffs.size())
                   ? 0.5 * alpha.cos_coeffs[static_cast<std::size_t>(m) - 1]
                   : 0.0;
    };
    auto b_coef = [&](int m) {
        const double sgn = m < 0 ? -1.0 : 1.0;
        m = std::abs(m);
        if (m == 0 || m > static_cast<int>(alpha.sin_coeffs.size())) return 0.0;
        return sgn * 0.5 * alpha.sin_coeffs[static_cast<std::size_t>(m) - 1];
    };
    const double sqrt2 = std::sqrt(2.0);
    Eigen::MatrixXd M(N, N);
    for (int i = 0; i < N; ++i) {
        for (int j = 0; j <= i; ++j) {
            const int ki = mode_of(i), kj = mode_of(j);
            double v = 0.0;
            if (is_cos(i) && is_cos(j)) {
                if (ki == 0 && kj == 0) v = alpha.a0;
                else if (kj == 0)       v = sqrt2 * a_coef(ki);
                else                    v = a_coef(ki - kj) + a_coef(ki + kj);
            } else if (!is_cos(i) && !is_cos(j)) {
                v = a_coef(ki - kj) - a_coef(ki + kj);
            } else {
                const int ks = is_cos(i) ? kj : ki; // sine index
                const int kc = is_cos(i) ? ki : kj; // cosine index
                if (kc == 0) v = sqrt2 * b_coef(ks);
                else         v = b_coef(ks + kc) + b_coef(ks - kc);
            }
            M(i, j) = v;
            M(j, i) = v;
        }
    }
    return M;
}

struct GalerkinResult {
    std::vector<double> retained;
};

GalerkinResult run_galerkin(const TrigPolynomial& alpha, double R, double m0,
                            int K, int guard)
{
    const int N = 2 * K + 1;
    const auto sweep = mode_scalars_sweep(RadialGeometry::disk, R, m0, K);
    Eigen::VectorXd dtn_sum(N), rg_sqrt(N);
    for (int i = 0; i < N; ++i) {
        const ModeScalars& s = sweep[static_cast<std::size_t>(mode_of(i))];
        dtn_sum[i] = s.p_plus + s.p_minus;
        rg_sqrt[i] = std::sqrt(s.r_gamma);
    }

    Eigen::MatrixXd B = -multiplication_matrix(alpha, K);
    B.diagonal() += dtn_sum;

    Eigen::LLT<Eigen::MatrixXd> llt(B);
    if (llt.info() != Eigen::Success) {
        const double lmin = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(
                                B, Eigen::EigenvaluesOnly)
                                .eigenvalues()
                                .minCoeff();
        std::ostringstream msg;
        msg << "fourier_galerkin: truncated P+ + P- - alpha is not positive definite "
               "(smallest eigenvalue "
            << lmin << "); increase m0 or reduce alpha";
        throw AdmissibilityError(msg.str());
    }

    // (P - M)^{-1} - P^{-1} equals (P - M)^{-1} M P^{-1}; the difference
    // form keeps the assembled matrix exactly symmetric.
    Eigen::MatrixXd G = llt.solve(Eigen::MatrixXd::Identity(N, N));
    G.diagonal() -= dtn_sum.cwiseInverse();
    G = rg_sqrt.asDiagonal() * G * rg_sqrt.asDiagonal();
    G = 0.5 * (G + G.transpose()).eval();

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(G, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
        throw NumericalError("fourier_galerkin: dense eigendecomposition failed");

    std::vector<double> s(es.eigenvalues().data(), es.eigenvalues().data() + N);
    for (double& v : s) v = std::abs(v);
    std::sort(s.begin(), s.end(), std::greater<>());
    const int keep = 2 * (K - guard) + 1;
    s.resize(static_cast<std::size_t>(std::min(keep, N)));
    return {std::move(s)};
}

} // namespace

SingularSpectrum fourier_galerkin_singular_values(const TrigPolynomial& alpha,
                                                  double R, double m0, int cutoff,
                                                  int guard_band, bool check_sensitivity)
{
    if (!(R > 0.0) || !(m0 > 0.0)) throw ConfigError("fourier_galerkin: R, m0 must be positive");
    if (cutoff < 4) throw ConfigError("fourier_galerkin: cutoff too small");
    const int guard = guard_band < 0 ? cutoff / 4 : guard_band;
    if (guard < 0 || guard >= cutoff)
        throw ConfigError("fourier_galerkin: guard band must lie in [0, cutoff)");

    GalerkinResult main = run_galerkin(alpha, R, m0, cutoff, guard);

    if (check_sensitivity) {
        const int k2 = std::max(4 + guard, (3 * cutoff) / 4);
        GalerkinResult probe = run_galerkin(alpha, R, m0, k2, std::min(guard, k2 - 1));
        const std::size_t overlap = std::min(main.retained.size(), probe.retained.size());
        for (std::size_t j = 0; j < overlap; ++j) {
            const double denom = std::max(std::abs(main.retained[j]), 1e-300);
            if (std::abs(main.retained[j] - probe.retained[j]) > 1e-6 * denom)
                throw NumericalError(
                    "fourier_galerkin: cutoff too small; retained singular value " +
                    std::to_string(j + 1) + " moves under cutoff reduction");
        }
    }

    SingularSpectrum spec;
    spec.meta.kind = Kind::delta_vs_free;
    spec.meta.geometry = RadialGeometry::disk;
    spec.meta.n = 2;
    spec.meta.R = R;
    spec.meta.m0 = m0;
    spec.meta.cutoff = cutoff;
    spec.meta.strength_desc = alpha.describe();
    spec.values = std::move(main.retained);
    spec.modes.assign(spec.values.size(), -1);
    spec.multiplicities.assign(spec.values.size(), 1);
    return spec;
}

} // namespace deltaspec
