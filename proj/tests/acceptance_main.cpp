// Acceptance suite: one line per criterion, exit code = number of failures.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "deltaspec/asymptotics.hpp"
#include "deltaspec/bessel.hpp"
#include "deltaspec/fd_oracle.hpp"
#include "deltaspec/mode_solver.hpp"
#include "deltaspec/parallel.hpp"
#include "deltaspec/seeley.hpp"
#include "deltaspec/symbols.hpp"

using namespace deltaspec;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
};

void require(Outcome& o, bool cond, const std::string& what)
{
    if (!cond) {
        o.pass = false;
        o.detail << (o.detail.str().empty() ? "" : "; ") << what;
    }
}

std::string fmt(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

FitReport disk_fit(Kind kind, double strength, double C_ref, double rel_tol)
{
    const auto spec = krein_singular_values(kind, RadialGeometry::disk, 1.0, 1.0, strength, 2000);
    const double p = decay_order(kind);
    return fit_constant(spec, p, {500, 4000}, C_ref, rel_tol);
}

Outcome criterion_1(double* elapsed_s)
{
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    const FitReport rep = disk_fit(Kind::delta_vs_free, 1.0, 2.0, 0.01);
    *elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    require(o, rep.relative_error <= 0.01,
            "C_est " + fmt(rep.C_est) + " deviates from 2 by " + fmt(rep.relative_error));
    require(o, *elapsed_s <= 10.0, "runtime " + fmt(*elapsed_s) + " s exceeds 10 s");
    o.detail << "C_est=" << fmt(rep.C_est) << " rel=" << fmt(rep.relative_error)
             << " t=" << fmt(*elapsed_s) << "s";
    return o;
}

Outcome criterion_2()
{
    Outcome o;
    const FitReport rep = disk_fit(Kind::deltaprime_vs_free, 1.0, 2.0, 0.01);
    require(o, rep.relative_error <= 0.01,
            "C_est " + fmt(rep.C_est) + " deviates from 2 by " + fmt(rep.relative_error));
    // the predicted constant is independent of beta
    const auto circle = Hypersurface::circle(1.0);
    const auto coeffs = CoefficientField::laplacian(1.0);
    const auto c1 = predict(Kind::deltaprime_vs_free, circle, coeffs,
                            [](ParamPoint) { return 1.0; });
    const auto c3 = predict(Kind::deltaprime_vs_free, circle, coeffs,
                            [](ParamPoint) { return 3.0; });
    require(o, std::abs(c1.C - c3.C) <= 1e-12, "C_ref depends on beta");
    const FitReport rep3 = disk_fit(Kind::deltaprime_vs_free, 3.0, 2.0, 0.01);
    require(o, rep3.relative_error <= 0.01, "beta=3 fit off by " + fmt(rep3.relative_error));
    o.detail << "C_est(beta=1)=" << fmt(rep.C_est) << " C_est(beta=3)=" << fmt(rep3.C_est);
    return o;
}

Outcome criterion_3()
{
    Outcome o;
    const FitReport rep = disk_fit(Kind::deltaprime_vs_neumann, 1.0, 8.0, 0.01);
    require(o, rep.relative_error <= 0.01,
            "C_est " + fmt(rep.C_est) + " deviates from 8 by " + fmt(rep.relative_error));
    o.detail << "C_est=" << fmt(rep.C_est) << " rel=" << fmt(rep.relative_error);
    return o;
}

Outcome criterion_4()
{
    Outcome o;
    struct Case {
        Kind kind;
        double C_ref;
        const char* label;
    };
    const Case cases[] = {{Kind::delta_vs_free, 0.25, "delta"},
                          {Kind::deltaprime_vs_free, 0.5, "delta'-free"},
                          {Kind::deltaprime_vs_neumann, 1.0, "delta'-neumann"}};
    const std::size_t j_min = 300u * 300u + 1u;
    for (const auto& c : cases) {
        const auto spec =
            krein_singular_values(c.kind, RadialGeometry::ball, 1.0, 1.0, 1.0, 2000);
        const double p = decay_order(c.kind) / 2.0;
        const FitReport rep = fit_constant(spec, p, {j_min, spec.size()}, c.C_ref, 0.02);
        require(o, rep.relative_error <= 0.02,
                std::string(c.label) + " off by " + fmt(rep.relative_error));
        o.detail << c.label << "=" << fmt(rep.C_est) << " ";
    }
    return o;
}

Outcome criterion_5()
{
    Outcome o;
    // non-vanishing alpha = 2 + cos t; shift m0 = 3 keeps p+ + p- above
    // max alpha (the asymptotic constant does not depend on the shift)
    TrigPolynomial alpha;
    alpha.a0 = 2.0;
    alpha.cos_coeffs = {1.0};
    const auto circle = Hypersurface::circle(1.0);
    {
        const double m0 = 3.0;
        const auto law = predict(Kind::delta_vs_free, circle, CoefficientField::laplacian(m0),
                                 [&](ParamPoint t) { return alpha(t.u); });
        const auto spec = fourier_galerkin_singular_values(alpha, 1.0, m0, 1500, -1, true);
        const std::size_t len = spec.size();
        FitReport rep = fit_constant(spec, 3.0, {len / 10, (9 * len) / 10}, law.C, 0.02);
        require(o, rep.relative_error <= 0.02,
                "2+cos: off by " + fmt(rep.relative_error) + " (C_ref " + fmt(law.C) + ")");
        const bool slope_ok = check_remainder_order(rep, -1.0);
        require(o, slope_ok, "2+cos: remainder slope " + fmt(rep.remainder_slope));
        o.detail << "2+cos: C_est=" << fmt(rep.C_est) << " slope=" << fmt(rep.remainder_slope)
                 << "  ";
    }
    {
        TrigPolynomial sc;
        sc.cos_coeffs = {1.0};
        const auto law = predict(Kind::delta_vs_free, circle, CoefficientField::laplacian(1.0),
                                 [&](ParamPoint t) { return sc(t.u); });
        const auto spec = fourier_galerkin_singular_values(sc, 1.0, 1.0, 1500, -1, true);
        const std::size_t len = spec.size();
        const FitReport rep = fit_constant(spec, 3.0, {len / 10, (9 * len) / 10}, law.C, 0.05);
        require(o, rep.relative_error <= 0.05,
                "cos: off by " + fmt(rep.relative_error) + " (C_ref " + fmt(law.C) + ")");
        o.detail << "cos: C_est=" << fmt(rep.C_est) << " C_ref=" << fmt(law.C);
    }
    return o;
}

Outcome criterion_6()
{
    Outcome o;
    FitReport rep = disk_fit(Kind::delta_vs_free, 1.0, 2.0, 0.01);
    require(o, rep.remainder_slope <= -0.85,
            "slope " + fmt(rep.remainder_slope) + " above -0.85");
    o.detail << "slope=" << fmt(rep.remainder_slope);
    return o;
}

Outcome criterion_7()
{
    Outcome o;
    const double m0 = 1.0, R = 1.0, r_out = 21.0;
    const std::vector<double> steps{2e-3, 1e-3, 5e-4};
    struct Job {
        Kind kind;
        double strength;
        int mode;
    };
    std::vector<Job> jobs;
    for (const Kind kind : {Kind::delta_vs_free, Kind::deltaprime_vs_free,
                            Kind::deltaprime_vs_neumann, Kind::neumann_vs_free})
        for (int mode = 0; mode <= 10; ++mode)
            jobs.push_back({kind, kind == Kind::neumann_vs_free ? 0.0 : 1.0, mode});

    std::vector<std::string> failures(jobs.size());
    std::vector<double> worst_order(jobs.size(), 99.0);
    parallel_for(jobs.size(), [&](std::size_t idx) {
        const Job& job = jobs[idx];
        const auto spec =
            krein_singular_values(job.kind, RadialGeometry::disk, R, m0, job.strength, 14);
        double exact = 0.0;
        for (std::size_t i = 0; i < spec.size(); ++i)
            if (spec.modes[i] == job.mode) {
                exact = spec.values[i];
                break;
            }
        std::vector<double> err;
        for (double h : steps) {
            const auto mesh = make_radial_mesh(2, job.mode, R, h, r_out);
            err.push_back(
                std::abs(fd_resolvent_difference(job.kind, mesh, m0, job.strength) - exact));
        }
        double worst = 99.0;
        for (std::size_t i = 1; i < err.size(); ++i)
            worst = std::min(worst, std::log2(err[i - 1] / err[i]));
        worst_order[idx] = worst;
        if (worst < 1.8)
            failures[idx] = to_string(job.kind) + " mode " + std::to_string(job.mode) +
                            " order " + fmt(worst);
    });
    double min_order = 99.0;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        min_order = std::min(min_order, worst_order[i]);
        require(o, failures[i].empty(), failures[i]);
    }
    o.detail << "min observed order " << fmt(min_order) << " over " << jobs.size() << " cases";
    return o;
}

Outcome criterion_8()
{
    Outcome o;
    // symbol factorization + kappa invariants + reciprocity at 1e-10
    std::mt19937_64 rng(2718);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    const auto sphere = Hypersurface::sphere(1.0);
    double worst_fact = 0.0, worst_recip = 0.0, worst_conj = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        Mat3 a = Mat3::Identity();
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j <= i; ++j) a(i, j) = a(j, i) = a(i, j) + 0.3 * uni(rng);
        a = (a * a.transpose()).eval();
        const auto coeffs = CoefficientField::constant_spd(a, 1.0);
        const auto frame =
            sphere.frame_at({(uni(rng) + 1.0) * M_PI, (uni(rng) + 1.0) * M_PI / 2.0});
        const auto local = transform_to_frame(coeffs, frame);
        const double phi = uni(rng) * M_PI;
        const auto sym = kappa(local, {std::cos(phi), std::sin(phi)});
        const double xin = 3.0 * uni(rng);
        const double a0 = sym.a_nn * xin * xin + 2.0 * sym.b * xin + sym.c;
        const std::complex<double> fact =
            sym.a_nn * (sym.kappa_plus + std::complex<double>(0.0, xin)) *
            (sym.kappa_minus - std::complex<double>(0.0, xin));
        worst_fact = std::max(worst_fact, std::abs(fact - a0) / std::abs(a0));
        worst_conj = std::max(worst_conj, std::abs(sym.kappa_minus - std::conj(sym.kappa_plus)));
        const auto [pgn, png] = dtn_ntd_principal(sym);
        worst_recip = std::max(worst_recip, std::abs(pgn * png - 1.0));
    }
    require(o, worst_fact <= 1e-10, "factorization residual " + fmt(worst_fact));
    require(o, worst_conj == 0.0, "conjugacy violated");
    require(o, worst_recip <= 1e-10, "reciprocity residual " + fmt(worst_recip));

    // Wronskians at 1e-10
    double worst_w = 0.0, worst_sw = 0.0;
    for (double x : {0.1, 1.0, 10.0, 50.0}) {
        const auto ie = bessel_ie_sequence(100, x);
        const auto ke = bessel_ke_sequence(100, x);
        for (int k = 0; k <= 100; ++k) {
            const double ik = ie[k].to_double(), kk = ke[k].to_double();
            if (ik == 0.0) continue;
            const double ip = k == 0 ? ie[1].to_double() : ie[k - 1].to_double() - (k / x) * ik;
            const double kp = k == 0 ? -ke[1].to_double() : -ke[k - 1].to_double() - (k / x) * kk;
            worst_w = std::max(worst_w, std::abs(x * (ik * kp - ip * kk) + 1.0));
        }
        const auto sie = spherical_ie_sequence(100, x);
        const auto ske = spherical_ke_sequence(100, x);
        for (int l = 0; l <= 100; ++l) {
            const double il = sie[l].to_double(), kl = ske[l].to_double();
            if (il == 0.0 || !std::isfinite(kl)) continue;
            const double ip =
                l == 0 ? sie[1].to_double() : sie[l - 1].to_double() - ((l + 1.0) / x) * il;
            const double kp =
                l == 0 ? -ske[1].to_double() : -ske[l - 1].to_double() - ((l + 1.0) / x) * kl;
            worst_sw = std::max(worst_sw,
                                std::abs(x * x * (il * kp - ip * kl) + 0.5 * M_PI) / (0.5 * M_PI));
        }
    }
    require(o, worst_w <= 1e-10, "cylinder wronskian " + fmt(worst_w));
    require(o, worst_sw <= 1e-10, "spherical wronskian " + fmt(worst_sw));

    // per-mode interface-matrix inverses at 1e-12
    double worst_phi = 0.0, worst_psi = 0.0;
    for (int mode = 0; mode <= 25; ++mode) {
        const auto res = verify_phi_psi_inverse(mode, 1.0, 1.0, RadialGeometry::disk, 1.0, 1.0);
        worst_phi = std::max(worst_phi, res.phi);
        worst_psi = std::max(worst_psi, res.psi);
    }
    require(o, worst_phi <= 1e-12 && worst_psi <= 1e-12,
            "phi/psi residuals " + fmt(worst_phi) + "/" + fmt(worst_psi));

    // adjoint identities at discrete order 2
    double min_order = 99.0;
    for (int mode : {0, 2}) {
        std::vector<double> res;
        for (double h : {4e-3, 2e-3, 1e-3}) {
            const auto mesh = make_radial_mesh(2, mode, 1.0, h, 21.0);
            res.push_back(verify_adjoint_identity(mesh, 1.0).max());
        }
        for (std::size_t i = 1; i < res.size(); ++i)
            min_order = std::min(min_order, std::log2(res[i - 1] / res[i]));
    }
    require(o, min_order >= 1.8, "adjoint identity order " + fmt(min_order));
    o.detail << "fact=" << fmt(worst_fact) << " wron=" << fmt(std::max(worst_w, worst_sw))
             << " phi/psi=" << fmt(std::max(worst_phi, worst_psi))
             << " adj_order=" << fmt(min_order);
    return o;
}

Outcome criterion_9()
{
    Outcome o;
    std::mt19937_64 rng(31415);
    std::uniform_real_distribution<double> uni(0.2, 3.0);
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const double R = uni(rng);
        const double alpha = uni(rng) * (trial % 2 ? -1.0 : 1.0);
        const double beta = uni(rng) * (trial % 3 ? 1.0 : -1.0);
        const auto coeffs = CoefficientField::laplacian(1.0);
        for (const auto& surface : {Hypersurface::circle(R), Hypersurface::sphere(R)}) {
            const struct {
                Kind kind;
                double strength;
            } cases[] = {{Kind::delta_vs_free, alpha},
                         {Kind::deltaprime_vs_free, beta},
                         {Kind::deltaprime_vs_neumann, beta}};
            for (const auto& c : cases) {
                const auto law = predict(c.kind, surface, coeffs,
                                         [&](ParamPoint) { return c.strength; });
                const auto ref = laplacian_closed_form(c.kind, surface, c.strength);
                worst = std::max(worst, std::abs(law.C - ref.C) / std::abs(ref.C));
            }
        }
    }
    require(o, worst <= 1e-10, "quadrature vs closed form " + fmt(worst));

    // strength-scaling law at 1e-12
    double worst_scale = 0.0;
    for (const auto& surface : {Hypersurface::circle(1.3), Hypersurface::sphere(0.9)}) {
        const auto coeffs = CoefficientField::laplacian(1.0);
        const auto base =
            predict(Kind::delta_vs_free, surface, coeffs, [](ParamPoint) { return 0.8; });
        for (double s : {2.0, 3.7, 10.0}) {
            const auto scaled = predict(Kind::delta_vs_free, surface, coeffs,
                                        [s](ParamPoint) { return 0.8 * s; });
            worst_scale = std::max(worst_scale, std::abs(scaled.C - s * base.C) / (s * base.C));
        }
    }
    require(o, worst_scale <= 1e-12, "strength scaling " + fmt(worst_scale));
    o.detail << "oracle=" << fmt(worst) << " scaling=" << fmt(worst_scale);
    return o;
}

} // namespace

int main()
{
    int failures = 0;
    double t1 = 0.0;
    struct Entry {
        const char* name;
        std::function<Outcome()> run;
    };
    const Entry entries[] = {
        {"AC-1 delta vs free, circle (C=2 within 1%, <= 10 s single-threaded)",
         [&] { return criterion_1(&t1); }},
        {"AC-2 delta' vs free, circle (C=2 within 1%, beta-independent)", criterion_2},
        {"AC-3 delta' vs Neumann, circle (C=8 within 1%)", criterion_3},
        {"AC-4 sphere suite (1/4, 1/2, 1 within 2%)", criterion_4},
        {"AC-5 variable strength Galerkin (2+cos within 2%, cos within 5%)",
         [] {
             set_thread_count(1);
             return criterion_5();
         }},
        {"AC-6 remainder order for AC-1 (slope <= -0.85)", criterion_6},
        {"AC-7 oracle equivalence (order >= 1.8, modes 0..10, all kinds)",
         [] {
             set_thread_count(static_cast<int>(
                 std::max(1u, std::thread::hardware_concurrency())));
             Outcome o = criterion_7();
             set_thread_count(1);
             return o;
         }},
        {"AC-8 identity suites (1e-10 / 1e-12 / discrete order 2)", criterion_8},
        {"AC-9 constant oracle (1e-10) and strength scaling (1e-12)", criterion_9},
    };
    for (const auto& e : entries) {
        Outcome o;
        try {
            o = e.run();
        } catch (const std::exception& ex) {
            o.pass = false;
            o.detail << "exception: " << ex.what();
        }
        std::printf("%s %s  [%s]\n", o.pass ? "PASS" : "FAIL", e.name, o.detail.str().c_str());
        std::fflush(stdout);
        if (!o.pass) ++failures;
    }
    return failures;
}
