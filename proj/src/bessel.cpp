#include "deltaspec/bessel.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "deltaspec/errors.hpp"

namespace deltaspec {

namespace {

constexpr double kLog2E = 1.4426950408889634; // log2(e)

void require_domain(int order, double x, const char* fn)
{
    if (order < 0) throw NumericalError(std::string(fn) + ": order must be >= 0");
    if (!(x > 0.0)) throw NumericalError(std::string(fn) + ": argument must be > 0");
}

ScaledExp make_scaled(double v, long shift)
{
    if (v == 0.0) return {0.0, 0};
    int e = 0;
    const double m = std::frexp(v, &e);
    return {m, shift + e};
}

double scaled_to_double(double mant, double exp2, const char* overflow_hint)
{
    if (mant == 0.0) return 0.0;
    if (exp2 < -1100.0) return 0.0;
    if (exp2 > 1100.0)
        throw OverflowError(std::string("bessel: value exceeds double range; ") + overflow_hint);
    const double v = std::ldexp(mant, static_cast<int>(exp2));
    if (!std::isfinite(v))
        throw OverflowError(std::string("bessel: value exceeds double range; ") + overflow_hint);
    return v;
}

// Start order for downward recurrences: enough extra orders that the
// contamination of the minimal solution has decayed below double accuracy.
int miller_start(int kmax, double x)
{
    const double scale = std::max({static_cast<double>(kmax), x, 30.0});
    return kmax + static_cast<int>(2.0 * std::sqrt(52.0 * scale)) + 40;
}

// Ascending series for I_0, I_1 (all terms positive; used for x <= 2 where
// a dozen terms reach machine precision).
void bessel_i01_series(double x, double& i0, double& i1)
{
    const double q = 0.25 * x * x;
    double term0 = 1.0, term1 = 0.5 * x;
    i0 = term0;
    i1 = term1;
    for (int m = 1; m < 40; ++m) {
        term0 *= q / (m * m);
        term1 *= q / (m * (m + 1.0));
        i0 += term0;
        i1 += term1;
        if (term0 < 1e-18 * i0 && term1 < 1e-18 * i1) break;
    }
}

// K_0, K_1 for x <= 2 from the ascending series
//   K_0 = -(log(x/2) + gamma) I_0 + sum_{m>=1} H_m q^m / (m!)^2,
//   K_1 = 1/x + log(x/2) I_1 - (x/4) sum_{m>=0} (H_m + H_{m+1} - 2 gamma)
//                                   q^m / (m! (m+1)!),
// with q = x^2/4 and H_m the harmonic numbers.
void bessel_k01_series(double x, double& k0, double& k1)
{
    constexpr double kEulerGamma = 0.577215664901532860606512;
    const double q = 0.25 * x * x;
    const double lg = std::log(0.5 * x);
    double i0, i1;
    bessel_i01_series(x, i0, i1);

    double sum0 = 0.0;
    double h = 0.0;
    double pw = 1.0; // q^m / (m!)^2
    for (int m = 1; m < 40; ++m) {
        pw *= q / (m * m);
        h += 1.0 / m;
        sum0 += h * pw;
        if (h * pw < 1e-18 * std::max(sum0, 1.0)) break;
    }
    k0 = -(lg + kEulerGamma) * i0 + sum0;

    double sum1 = 0.0;
    double hm = 0.0, hm1 = 1.0;
    double pw1 = 1.0; // q^m / (m! (m+1)!)
    for (int m = 0; m < 40; ++m) {
        if (m > 0) {
            pw1 *= q / (m * (m + 1.0));
            hm += 1.0 / m;
            hm1 += 1.0 / (m + 1.0);
        }
        const double t = (hm + hm1 - 2.0 * kEulerGamma) * pw1;
        sum1 += t;
        if (m > 3 && std::abs(t) < 1e-18 * std::max(std::abs(sum1), 1.0)) break;
    }
    k1 = 1.0 / x + lg * i1 - 0.25 * x * sum1;
}

// e^x K_nu(x) for nu in {0,1} and x > 2, from the even integrand
//   e^x K_nu(x) = int_0^inf exp(-x (cosh t - 1)) cosh(nu t) dt
// by the trapezoidal rule with step halving (geometric convergence for
// this analytic, doubly-exponentially decaying integrand).
double bessel_k_integral_scaled(int nu, double x)
{
    const double cut = 1.0 + 46.0 / x; // exp(-46) below double noise
    const double tmax = std::acosh(cut);
    auto f = [&](double t) { return std::exp(-x * (std::cosh(t) - 1.0)) * std::cosh(nu * t); };
    double h = tmax / 16.0;
    int n = 16;
    double sum = 0.5 * f(0.0);
    for (int i = 1; i <= n; ++i) sum += f(i * h);
    double prev = sum * h;
    for (int level = 0; level < 12; ++level) {
        double extra = 0.0;
        for (int i = 0; i < n; ++i) extra += f((2 * i + 1) * (0.5 * h));
        h *= 0.5;
        n *= 2;
        const double cur = 0.5 * prev + extra * h;
        if (std::abs(cur - prev) <= 1e-15 * cur) return cur;
        prev = cur;
    }
    return prev;
}

struct UpwardSeeds {
    double v0, v1; // scaled values at orders 0 and 1
};

// Generic upward three-term recurrence v_{k+1} = v_{k-1} + c(k) v_k with
// exponent renormalization; returns scaled-exponent values 0..kmax.
template <typename CoefFn>
std::vector<ScaledExp> upward_sequence(int kmax, UpwardSeeds seeds, CoefFn coef)
{
    std::vector<ScaledExp> out(static_cast<std::size_t>(kmax) + 1);
    double a = seeds.v0, b = seeds.v1;
    long shift = 0;
    out[0] = make_scaled(a, 0);
    if (kmax >= 1) out[1] = make_scaled(b, 0);
    for (int k = 1; k < kmax; ++k) {
        const double c = a + coef(k) * b;
        a = b;
        b = c;
        if (std::abs(b) > 0x1p+512) {
            a = std::ldexp(a, -512);
            b = std::ldexp(b, -512);
            shift += 512;
        }
        out[static_cast<std::size_t>(k) + 1] = make_scaled(b, shift);
    }
    return out;
}

// Downward Miller recurrence v_{m-1} = v_{m+1} + c(m) v_m, normalized so
// that sum_m weight(m) v_m = 1; returns scaled-exponent values 0..kmax.
template <typename CoefFn, typename WeightFn>
std::vector<ScaledExp> miller_sequence(int kmax, double x, CoefFn coef, WeightFn weight)
{
    const int start = miller_start(kmax, x);
    std::vector<ScaledExp> raw(static_cast<std::size_t>(kmax) + 1);
    double vp = 0.0;    // v_{m+1}
    double vc = 1e-280; // v_m (arbitrary normalization)
    long shift = 0;     // current frame: true value = stored * 2^{shift}
    double sum = 0.0;   // kept in the same frame as vc
    for (int m = start; m >= 0; --m) {
        if (m <= kmax) raw[m] = make_scaled(vc, shift);
        sum += weight(m) * vc;
        if (m == 0) break;
        const double vn = vp + coef(m) * vc;
        vp = vc;
        vc = vn;
        if (std::abs(vc) > 0x1p+512) {
            vp = std::ldexp(vp, -512);
            vc = std::ldexp(vc, -512);
            sum = std::ldexp(sum, -512);
            shift += 512;
        }
    }
    ScaledExp norm = make_scaled(sum, shift);
    std::vector<ScaledExp> out(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (raw[i].mant == 0.0) { out[i] = {0.0, 0}; continue; }
        out[i] = make_scaled(raw[i].mant / norm.mant, raw[i].exp2 - norm.exp2);
    }
    return out;
}

// Downward ratio sweep r_k = 1 / (c(k) + r_{k+1}) evaluated from a start
// order with r = 0; equivalent to the continued fraction for the minimal
// solution and accurate once the start order is high enough.
template <typename CoefFn>
std::vector<double> downward_ratios(int kmax, double x, CoefFn coef)
{
    const int start = miller_start(kmax, x);
    double r = 0.0;
    std::vector<double> out(static_cast<std::size_t>(kmax) + 1, 0.0);
    for (int k = start; k >= 1; --k) {
        r = 1.0 / (coef(k) + r);
        if (k <= kmax) out[static_cast<std::size_t>(k)] = r;
    }
    return out;
}

} // namespace

double ScaledExp::to_double() const
{
    return scaled_to_double(mant, static_cast<double>(exp2),
                            "work with the (mant, exp2) representation directly");
}

double bessel_k0e(double x)
{
    if (x <= 2.0) {
        double k0, k1;
        bessel_k01_series(x, k0, k1);
        return k0 * std::exp(x);
    }
    return bessel_k_integral_scaled(0, x);
}

double bessel_k1e(double x)
{
    if (x <= 2.0) {
        double k0, k1;
        bessel_k01_series(x, k0, k1);
        return k1 * std::exp(x);
    }
    return bessel_k_integral_scaled(1, x);
}

std::vector<ScaledExp> bessel_ie_sequence(int kmax, double x)
{
    require_domain(kmax, x, "bessel_ie_sequence");
    return miller_sequence(
        kmax, x, [x](int m) { return 2.0 * m / x; },
        [](int m) { return m == 0 ? 1.0 : 2.0; });
}

std::vector<ScaledExp> bessel_ke_sequence(int kmax, double x)
{
    require_domain(kmax, x, "bessel_ke_sequence");
    return upward_sequence(kmax, {bessel_k0e(x), bessel_k1e(x)},
                           [x](int k) { return 2.0 * k / x; });
}

std::vector<ScaledExp> spherical_ie_sequence(int lmax, double x)
{
    require_domain(lmax, x, "spherical_ie_sequence");
    return miller_sequence(
        lmax, x, [x](int m) { return (2.0 * m + 1.0) / x; },
        [](int m) { return 2.0 * m + 1.0; });
}

std::vector<ScaledExp> spherical_ke_sequence(int lmax, double x)
{
    require_domain(lmax, x, "spherical_ke_sequence");
    const double k0 = 0.5 * M_PI / x;
    return upward_sequence(lmax, {k0, k0 * (1.0 + 1.0 / x)},
                           [x](int l) { return (2.0 * l + 1.0) / x; });
}

std::vector<double> bessel_i_ratio_sequence(int kmax, double x)
{
    require_domain(kmax, x, "bessel_i_ratio_sequence");
    return downward_ratios(kmax, x, [x](int k) { return 2.0 * k / x; });
}

std::vector<double> spherical_i_ratio_sequence(int lmax, double x)
{
    require_domain(lmax, x, "spherical_i_ratio_sequence");
    return downward_ratios(lmax, x, [x](int l) { return (2.0 * l + 1.0) / x; });
}

std::vector<double> bessel_k_ratio_sequence(int kmax, double x)
{
    require_domain(kmax, x, "bessel_k_ratio_sequence");
    std::vector<double> out(static_cast<std::size_t>(kmax) + 1, 0.0);
    if (kmax >= 1) out[1] = bessel_k1e(x) / bessel_k0e(x);
    for (int k = 1; k < kmax; ++k)
        out[static_cast<std::size_t>(k) + 1] = 1.0 / out[k] + 2.0 * k / x;
    return out;
}

std::vector<double> spherical_k_ratio_sequence(int lmax, double x)
{
    require_domain(lmax, x, "spherical_k_ratio_sequence");
    std::vector<double> out(static_cast<std::size_t>(lmax) + 1, 0.0);
    if (lmax >= 1) out[1] = 1.0 + 1.0 / x;
    for (int l = 1; l < lmax; ++l)
        out[static_cast<std::size_t>(l) + 1] = 1.0 / out[l] + (2.0 * l + 1.0) / x;
    return out;
}

namespace {

BesselValue from_sequences(int order, double x, bool scaled, bool is_K, bool is_spherical)
{
    const int need = std::max(order, 1);
    std::vector<ScaledExp> seq;
    if (is_spherical)
        seq = is_K ? spherical_ke_sequence(need, x) : spherical_ie_sequence(need, x);
    else
        seq = is_K ? bessel_ke_sequence(need, x) : bessel_ie_sequence(need, x);

    // unscaled values carry e^{+-x}: fold the factor into the exponent and
    // keep the fractional part in the mantissa
    double extra_exp = 0.0, extra_mant = 1.0;
    if (!scaled) {
        const double p = (is_K ? -x : x) * kLog2E;
        extra_exp = std::floor(p);
        extra_mant = std::exp2(p - extra_exp);
    }
    const char* hint = scaled ? "use the exponent-carrying sequence API"
                              : "use the scaled variant";
    auto value_at = [&](int k) {
        const ScaledExp& s = seq[static_cast<std::size_t>(k)];
        if (s.mant == 0.0) return 0.0;
        return scaled_to_double(s.mant * extra_mant, static_cast<double>(s.exp2) + extra_exp,
                                hint);
    };

    BesselValue out;
    out.order = order;
    out.x = x;
    out.scaled = scaled;
    out.value = value_at(order);
    const double prev = value_at(order == 0 ? 1 : order - 1);
    const double sgn = is_K ? -1.0 : 1.0;
    if (order == 0) {
        // I'_0 = I_1, K'_0 = -K_1, i'_0 = i_1, k'_0 = -k_1
        out.derivative = sgn * prev;
    } else {
        const double shift = is_spherical ? (order + 1.0) / x : order / x;
        out.derivative = sgn * prev - shift * out.value;
    }
    return out;
}

} // namespace

BesselValue bessel_I(int k, double x, bool scaled)
{
    require_domain(k, x, "bessel_I");
    return from_sequences(k, x, scaled, false, false);
}

BesselValue bessel_K(int k, double x, bool scaled)
{
    require_domain(k, x, "bessel_K");
    return from_sequences(k, x, scaled, true, false);
}

BesselValue spherical_i(int l, double x, bool scaled)
{
    require_domain(l, x, "spherical_i");
    return from_sequences(l, x, scaled, false, true);
}

BesselValue spherical_k(int l, double x, bool scaled)
{
    require_domain(l, x, "spherical_k");
    return from_sequences(l, x, scaled, true, true);
}

} // namespace deltaspec
