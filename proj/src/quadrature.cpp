#include "deltaspec/quadrature.hpp"

#include <cmath>
#include <cstdlib>

#include "deltaspec/errors.hpp"

namespace deltaspec {

GaussLegendre::GaussLegendre(int npoints)
{
    nodes.resize(npoints);
    weights.resize(npoints);
    const int m = (npoints + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Newton iteration on P_n, starting from the Chebyshev estimate.
        double x = std::cos(M_PI * (i + 0.75) / (npoints + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < npoints; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = npoints * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[i] = -x;
        nodes[npoints - 1 - i] = x;
        weights[i] = 2.0 / ((1.0 - x * x) * pp * pp);
        weights[npoints - 1 - i] = weights[i];
    }
}

namespace {

const GaussLegendre& panel_rule()
{
    static const GaussLegendre rule(16);
    return rule;
}

double gl_panel(const std::function<double(double)>& f, double a, double b)
{
    const auto& rule = panel_rule();
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return acc * half;
}

double refine(const std::function<double(double)>& f, double a, double b,
              double coarse, double budget, int depth, int max_depth)
{
    const double mid = 0.5 * (a + b);
    const double left = gl_panel(f, a, mid);
    const double right = gl_panel(f, mid, b);
    const double fine = left + right;
    const double err = std::abs(fine - coarse);
    if (err <= budget || err <= 1e-16 * std::abs(fine) || depth >= max_depth)
        return fine;
    return refine(f, a, mid, left, 0.5 * budget, depth + 1, max_depth)
         + refine(f, mid, b, right, 0.5 * budget, depth + 1, max_depth);
}

} // namespace

double integrate_adaptive(const std::function<double(double)>& f,
                          double a, double b, double rel_tol, int max_depth)
{
    const double coarse = gl_panel(f, a, b);
    // Budget from a two-level scan so a deceptive first panel cannot set it
    // to zero.
    const double mid = 0.5 * (a + b);
    const double scan = std::abs(gl_panel(f, a, mid)) + std::abs(gl_panel(f, mid, b));
    const double budget = rel_tol * std::max(scan, std::abs(coarse)) + 1e-300;
    return refine(f, a, b, coarse, budget, 0, max_depth);
}

double integrate_periodic(const std::function<double(double)>& f,
                          double period, double rel_tol, int n0)
{
    int n = n0;
    const double h0 = period / n;
    double sum = 0.0;
    for (int i = 0; i < n; ++i) sum += f(i * h0);
    double prev = sum * h0;
    for (int level = 0; level < 16; ++level) {
        // add the midpoints of the current grid
        const double h = period / (2 * n);
        double extra = 0.0;
        for (int i = 0; i < n; ++i) extra += f((2 * i + 1) * h);
        n *= 2;
        const double cur = 0.5 * prev + extra * h;
        if (std::abs(cur - prev) <= rel_tol * std::abs(cur) + 1e-300)
            return cur;
        prev = cur;
    }
    throw NumericalError("integrate_periodic: no convergence after 16 doublings");
}

} // namespace deltaspec
