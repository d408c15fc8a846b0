#include "deltaspec/fd_oracle.hpp"

#include <Eigen/SparseCore>
#include <Eigen/SparseLU>
#include <cmath>
#include <functional>
#include <memory>
#include <random>

#include "deltaspec/errors.hpp"

namespace deltaspec {

namespace {

using SpMat = Eigen::SparseMatrix<double>;
using Triplet = Eigen::Triplet<double>;

// exterior truncation must leave only sub-rounding tail mass
void require_truncation(const RadialMesh& mesh, double m0)
{
    if (!(m0 > 0.0)) throw ConfigError("fd_oracle: m0 must be positive");
    if (mesh.r_out < mesh.R + 20.0 / m0 - 1e-12)
        throw ConfigError("fd_oracle: r_out must be at least R + 20/m0");
}

struct Layout {
    // duplicated DOFs: [interior nodes .. u-_R, u+_R, exterior nodes ..]
    int first_interior_index; // 0 for mode 0 (node at r = 0 kept), else 1
    int n_interior;           // including the interface value u-_R
    int n_exterior;           // including u+_R, excluding the Dirichlet node
    int idx_interface_minus;
    int idx_interface_plus;
    int total;
};

Layout layout_of(const RadialMesh& mesh)
{
    Layout l;
    l.first_interior_index = mesh.mode == 0 ? 0 : 1;
    l.n_interior = mesh.interior_cells + 1 - l.first_interior_index;
    l.n_exterior = mesh.exterior_cells; // nodes R + j h, j = 0 .. P-1
    l.idx_interface_minus = l.n_interior - 1;
    l.idx_interface_plus = l.n_interior;
    l.total = l.n_interior + l.n_exterior;
    return l;
}

double node_radius(const RadialMesh& mesh, const Layout& l, int idx)
{
    if (idx < l.n_interior) return (l.first_interior_index + idx) * mesh.h;
    return mesh.R + (idx - l.idx_interface_plus) * mesh.h;
}

double cell_mass(const RadialMesh& mesh, double a, double b)
{
    return (std::pow(b, mesh.n) - std::pow(a, mesh.n)) / mesh.n;
}

Eigen::VectorXd node_weights(const RadialMesh& mesh, const Layout& l)
{
    Eigen::VectorXd w(l.total);
    const double h = mesh.h;
    for (int i = 0; i < l.total; ++i) {
        const double r = node_radius(mesh, l, i);
        double a, b;
        if (i <= l.idx_interface_minus) {
            a = std::max(r - 0.5 * h, 0.0);
            b = std::min(r + 0.5 * h, mesh.R);
        } else {
            a = std::max(r - 0.5 * h, mesh.R);
            b = std::min(r + 0.5 * h, mesh.r_out);
        }
        w[i] = cell_mass(mesh, a, b);
    }
    return w;
}

// Conservative flux-form discretization of
//   -r^{1-n} (r^{n-1} u')' + (mu/r^2 + m0^2) u
// as a quadratic form on the duplicated DOF space: no interface coupling,
// i.e. the Neumann pair.
SpMat neumann_stiffness(const RadialMesh& mesh, const Layout& l,
                        const Eigen::VectorXd& w, double m0)
{
    const double h = mesh.h;
    const double mu = mesh.angular_coefficient();
    std::vector<Triplet> trip;
    trip.reserve(static_cast<std::size_t>(l.total) * 4);
    auto add_cell = [&](int i, int j) {
        const double mid = 0.5 * (node_radius(mesh, l, i) + node_radius(mesh, l, j));
        const double a = std::pow(mid, mesh.n - 1) / h;
        trip.emplace_back(i, i, a);
        trip.emplace_back(j, j, a);
        trip.emplace_back(i, j, -a);
        trip.emplace_back(j, i, -a);
    };
    for (int i = 0; i + 1 <= l.idx_interface_minus; ++i) add_cell(i, i + 1);
    for (int i = l.idx_interface_plus; i + 1 < l.total; ++i) add_cell(i, i + 1);
    // first interior cell against the eliminated u(0) = 0 node (modes >= 1)
    if (l.first_interior_index == 1)
        trip.emplace_back(0, 0, std::pow(0.5 * h, mesh.n - 1) / h);
    // last exterior cell against the Dirichlet node at r_out
    trip.emplace_back(l.total - 1, l.total - 1,
                      std::pow(mesh.r_out - 0.5 * h, mesh.n - 1) / h);
    for (int i = 0; i < l.total; ++i) {
        const double r = node_radius(mesh, l, i);
        const double c = (r > 0.0 ? mu / (r * r) : 0.0) + m0 * m0;
        trip.emplace_back(i, i, w[i] * c);
    }
    SpMat s(l.total, l.total);
    s.setFromTriplets(trip.begin(), trip.end());
    return s;
}

void assert_symmetric(const SpMat& s, const char* what)
{
    const SpMat d = SpMat(s.transpose()) - s;
    double asym = 0.0, scale = 0.0;
    for (int k = 0; k < d.outerSize(); ++k)
        for (SpMat::InnerIterator it(d, k); it; ++it)
            asym = std::max(asym, std::abs(it.value()));
    for (int k = 0; k < s.outerSize(); ++k)
        for (SpMat::InnerIterator it(s, k); it; ++it)
            scale = std::max(scale, std::abs(it.value()));
    if (asym > 1e-12 * scale)
        throw NumericalError(std::string(what) + ": assembled operator lost symmetry");
}

// merge map duplicated -> shared (u+_R folded onto u-_R)
std::vector<int> merge_map(const Layout& l)
{
    std::vector<int> map(static_cast<std::size_t>(l.total));
    for (int i = 0; i < l.total; ++i)
        map[static_cast<std::size_t>(i)] = i <= l.idx_interface_minus ? i : i - 1;
    return map;
}

SpMat merge_to_shared(const SpMat& s, const Layout& l)
{
    const auto map = merge_map(l);
    std::vector<Triplet> trip;
    trip.reserve(static_cast<std::size_t>(s.nonZeros()));
    for (int k = 0; k < s.outerSize(); ++k)
        for (SpMat::InnerIterator it(s, k); it; ++it)
            trip.emplace_back(map[static_cast<std::size_t>(it.row())],
                              map[static_cast<std::size_t>(it.col())], it.value());
    SpMat out(l.total - 1, l.total - 1);
    out.setFromTriplets(trip.begin(), trip.end());
    return out;
}

/// The resolvent of one realization as an operator on duplicated nodal
/// values: f |-> u with the appropriate interface behaviour.
class Resolvent {
public:
    enum class Realization { free, neumann, delta, deltaprime };

    Resolvent(Realization kind, const RadialMesh& mesh, double m0, double strength)
        : layout_(layout_of(mesh)), weights_(node_weights(mesh, layout_))
    {
        const double surf = std::pow(mesh.R, mesh.n - 1);
        SpMat s = neumann_stiffness(mesh, layout_, weights_, m0);
        shared_ = kind == Realization::free || kind == Realization::delta;
        if (kind == Realization::deltaprime) {
            // -(R^{n-1}/beta) (u+ - u-)^2
            const int im = layout_.idx_interface_minus, ip = layout_.idx_interface_plus;
            std::vector<Triplet> trip{{im, im, -surf / strength},
                                      {ip, ip, -surf / strength},
                                      {im, ip, surf / strength},
                                      {ip, im, surf / strength}};
            SpMat d(layout_.total, layout_.total);
            d.setFromTriplets(trip.begin(), trip.end());
            s = s + d;
        }
        if (shared_) {
            s = merge_to_shared(s, layout_);
            if (kind == Realization::delta)
                s.coeffRef(layout_.idx_interface_minus, layout_.idx_interface_minus) -=
                    strength * surf;
        }
        assert_symmetric(s, "fd_oracle");
        s.makeCompressed();
        lu_ = std::make_unique<Eigen::SparseLU<SpMat>>();
        lu_->compute(s);
        if (lu_->info() != Eigen::Success)
            throw AdmissibilityError("fd_oracle: discrete realization is singular "
                                     "(interface operator not invertible)");
    }

    Eigen::VectorXd apply(const Eigen::VectorXd& f) const
    {
        const Eigen::VectorXd load = weights_.cwiseProduct(f);
        if (!shared_) return lu_->solve(load);
        const auto map = merge_map(layout_);
        Eigen::VectorXd g = Eigen::VectorXd::Zero(layout_.total - 1);
        for (int i = 0; i < layout_.total; ++i) g[map[static_cast<std::size_t>(i)]] += load[i];
        const Eigen::VectorXd y = lu_->solve(g);
        Eigen::VectorXd u(layout_.total);
        for (int i = 0; i < layout_.total; ++i) u[i] = y[map[static_cast<std::size_t>(i)]];
        return u;
    }

    const Eigen::VectorXd& weights() const { return weights_; }
    const Layout& layout() const { return layout_; }

private:
    Layout layout_;
    Eigen::VectorXd weights_;
    bool shared_ = false;
    std::unique_ptr<Eigen::SparseLU<SpMat>> lu_;
};

std::pair<Resolvent, Resolvent> resolvent_pair(Kind kind, const RadialMesh& mesh,
                                               double m0, double strength)
{
    using R = Resolvent::Realization;
    if ((kind == Kind::deltaprime_vs_free || kind == Kind::deltaprime_vs_neumann) &&
        strength == 0.0)
        throw ConfigError(to_string(kind) + ": beta required and non-zero");
    switch (kind) {
    case Kind::delta_vs_free:
        return {Resolvent(R::delta, mesh, m0, strength), Resolvent(R::free, mesh, m0, 0.0)};
    case Kind::deltaprime_vs_free:
        return {Resolvent(R::deltaprime, mesh, m0, strength), Resolvent(R::free, mesh, m0, 0.0)};
    case Kind::deltaprime_vs_neumann:
        return {Resolvent(R::deltaprime, mesh, m0, strength), Resolvent(R::neumann, mesh, m0, 0.0)};
    case Kind::neumann_vs_free:
        return {Resolvent(R::neumann, mesh, m0, 0.0), Resolvent(R::free, mesh, m0, 0.0)};
    }
    throw ConfigError("fd_oracle: unknown kind");
}

// Largest |eigenvalue| of a symmetric operator by Lanczos iteration with
// full reorthogonalization and a deterministic start vector.
double lanczos_extreme(const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& op,
                       int dim, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    Eigen::VectorXd v(dim);
    for (int i = 0; i < dim; ++i) v[i] = normal(rng);
    v.normalize();

    const int max_steps = 160;
    std::vector<Eigen::VectorXd> basis;
    std::vector<double> alpha, beta;
    basis.push_back(v);
    double previous = 0.0;
    int stable = 0;
    for (int j = 0; j < max_steps; ++j) {
        Eigen::VectorXd w = op(basis.back());
        const double a = basis.back().dot(w);
        alpha.push_back(a);
        w -= a * basis.back();
        if (j > 0) w -= beta.back() * basis[basis.size() - 2];
        for (const auto& q : basis) w -= q.dot(w) * q; // reorthogonalize
        const double b = w.norm();

        Eigen::MatrixXd t = Eigen::MatrixXd::Zero(j + 1, j + 1);
        for (int i = 0; i <= j; ++i) {
            t(i, i) = alpha[static_cast<std::size_t>(i)];
            if (i > 0) t(i, i - 1) = t(i - 1, i) = beta[static_cast<std::size_t>(i - 1)];
        }
        const Eigen::VectorXd ritz =
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(t, Eigen::EigenvaluesOnly)
                .eigenvalues();
        const double extreme = ritz.cwiseAbs().maxCoeff();
        if (j > 2 && std::abs(extreme - previous) <= 1e-13 * std::abs(extreme)) {
            if (++stable >= 2) return extreme;
        } else {
            stable = 0;
        }
        previous = extreme;
        if (b <= 1e-300) return extreme; // invariant subspace exhausted
        beta.push_back(b);
        basis.push_back(w / b);
    }
    return previous;
}

} // namespace

double AdjointResiduals::max() const
{
    return std::max({gamma_interior, gamma_exterior, nu_interior, nu_exterior});
}

RadialMesh make_radial_mesh(int n, int mode, double R, double h, double r_out)
{
    if (n != 2 && n != 3) throw ConfigError("fd_oracle: ambient dimension must be 2 or 3");
    if (mode < 0) throw ConfigError("fd_oracle: mode must be >= 0");
    if (!(R > 0.0) || !(h > 0.0)) throw ConfigError("fd_oracle: R and h must be positive");
    if (!(r_out > R)) throw ConfigError("fd_oracle: r_out must exceed R");
    RadialMesh mesh;
    mesh.n = n;
    mesh.mode = mode;
    mesh.R = R;
    mesh.h = h;
    mesh.r_out = r_out;
    mesh.interior_cells = static_cast<int>(std::lround(R / h));
    mesh.exterior_cells = static_cast<int>(std::lround((r_out - R) / h));
    if (std::abs(mesh.interior_cells * h - R) > 1e-9 * R ||
        std::abs(mesh.exterior_cells * h - (r_out - R)) > 1e-9 * (r_out - R))
        throw ConfigError("fd_oracle: h must divide R and r_out - R");
    if (mesh.interior_cells < 4 || mesh.exterior_cells < 4)
        throw ConfigError("fd_oracle: mesh too coarse");
    return mesh;
}

std::vector<double> fd_nodes(const RadialMesh& mesh)
{
    const Layout l = layout_of(mesh);
    std::vector<double> out(static_cast<std::size_t>(l.total));
    for (int i = 0; i < l.total; ++i) out[static_cast<std::size_t>(i)] = node_radius(mesh, l, i);
    return out;
}

Eigen::VectorXd fd_node_weights(const RadialMesh& mesh)
{
    const Layout l = layout_of(mesh);
    return node_weights(mesh, l);
}

namespace {

// One-sided second-order conormal stencils at the interface.
double conormal_minus(const RadialMesh& mesh, double uR, double um1, double um2)
{
    return (3.0 * uR - 4.0 * um1 + um2) / (2.0 * mesh.h);
}

double conormal_plus(const RadialMesh& mesh, double uR, double up1, double up2)
{
    return -(-3.0 * uR + 4.0 * up1 - up2) / (2.0 * mesh.h);
}

// Interior/exterior one-sided blocks with Dirichlet data at the interface,
// via the Neumann stiffness restricted to one side.
struct OneSided {
    SpMat stiffness; // full one-sided block including the interface DOF
    Eigen::VectorXd weights;
    int n_dofs;      // interface DOF is the last (interior) / first (exterior)
};

OneSided one_sided(const RadialMesh& mesh, double m0, bool interior)
{
    const Layout l = layout_of(mesh);
    const Eigen::VectorXd w = node_weights(mesh, l);
    SpMat s = neumann_stiffness(mesh, l, w, m0);
    OneSided out;
    if (interior) {
        out.n_dofs = l.n_interior;
        out.stiffness = s.topLeftCorner(l.n_interior, l.n_interior);
        out.weights = w.head(l.n_interior);
    } else {
        out.n_dofs = l.n_exterior;
        out.stiffness = s.bottomRightCorner(l.n_exterior, l.n_exterior);
        out.weights = w.tail(l.n_exterior);
    }
    return out;
}

// Solve the one-sided problem with Dirichlet value phi at the interface.
Eigen::VectorXd dirichlet_solve(const OneSided& os, bool interior, double phi)
{
    const int n = os.n_dofs;
    const int iface = interior ? n - 1 : 0;
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
    for (SpMat::InnerIterator it(os.stiffness, iface); it; ++it)
        rhs[it.row()] = -phi * it.value();
    rhs[iface] = phi;
    std::vector<Triplet> trip;
    for (int k = 0; k < os.stiffness.outerSize(); ++k)
        for (SpMat::InnerIterator it(os.stiffness, k); it; ++it)
            if (it.row() != iface && it.col() != iface)
                trip.emplace_back(it.row(), it.col(), it.value());
    trip.emplace_back(iface, iface, 1.0);
    SpMat a(n, n);
    a.setFromTriplets(trip.begin(), trip.end());
    Eigen::SparseLU<SpMat> lu(a);
    if (lu.info() != Eigen::Success)
        throw NumericalError("fd_oracle: one-sided Dirichlet system is singular");
    return lu.solve(rhs);
}

} // namespace

std::pair<double, double> fd_dtn(const RadialMesh& mesh, double m0)
{
    require_truncation(mesh, m0);
    const OneSided in = one_sided(mesh, m0, true);
    const OneSided ex = one_sided(mesh, m0, false);
    const Eigen::VectorXd ui = dirichlet_solve(in, true, 1.0);
    const Eigen::VectorXd ue = dirichlet_solve(ex, false, 1.0);
    const int ni = in.n_dofs;
    const double p_minus = conormal_minus(mesh, 1.0, ui[ni - 2], ui[ni - 3]);
    const double p_plus = conormal_plus(mesh, 1.0, ue[1], ue[2]);
    return {p_minus, p_plus};
}

FdPoissonNorms fd_poisson_norms(const RadialMesh& mesh, double m0)
{
    require_truncation(mesh, m0);
    const double surf = std::pow(mesh.R, mesh.n - 1);
    const OneSided in = one_sided(mesh, m0, true);
    const OneSided ex = one_sided(mesh, m0, false);

    FdPoissonNorms out;
    const Eigen::VectorXd ui = dirichlet_solve(in, true, 1.0);
    const Eigen::VectorXd ue = dirichlet_solve(ex, false, 1.0);
    out.r_gamma = (ui.cwiseAbs2().dot(in.weights) + ue.cwiseAbs2().dot(ex.weights)) / surf;

    // Neumann data of size 1 enters the weak form as a surface load.
    Eigen::VectorXd load_i = Eigen::VectorXd::Zero(in.n_dofs);
    load_i[in.n_dofs - 1] = surf;
    Eigen::SparseLU<SpMat> lu_i(in.stiffness);
    const Eigen::VectorXd wi = lu_i.solve(load_i);
    Eigen::VectorXd load_e = Eigen::VectorXd::Zero(ex.n_dofs);
    load_e[0] = surf;
    Eigen::SparseLU<SpMat> lu_e(ex.stiffness);
    const Eigen::VectorXd we = lu_e.solve(load_e);
    out.r_nu = (wi.cwiseAbs2().dot(in.weights) + we.cwiseAbs2().dot(ex.weights)) / surf;
    return out;
}

double fd_resolvent_difference(Kind kind, const RadialMesh& mesh, double m0,
                               double strength, std::uint64_t seed)
{
    require_truncation(mesh, m0);
    if (kind == Kind::delta_vs_free && strength == 0.0) return 0.0;
    const auto [star, ref] = resolvent_pair(kind, mesh, m0, strength);
    const Eigen::VectorXd sqrt_w = star.weights().cwiseSqrt();
    auto op = [&](const Eigen::VectorXd& x) -> Eigen::VectorXd {
        const Eigen::VectorXd f = x.cwiseQuotient(sqrt_w);
        return sqrt_w.cwiseProduct(star.apply(f) - ref.apply(f));
    };
    return lanczos_extreme(op, star.layout().total, seed);
}

Eigen::VectorXd fd_resolvent_apply(Kind kind, const RadialMesh& mesh, double m0,
                                   double strength, const Eigen::VectorXd& f)
{
    require_truncation(mesh, m0);
    const auto [star, ref] = resolvent_pair(kind, mesh, m0, strength);
    if (f.size() != star.layout().total)
        throw ConfigError("fd_resolvent_apply: input size does not match the mesh");
    return star.apply(f) - ref.apply(f);
}

AdjointResiduals verify_adjoint_identity(const RadialMesh& mesh, double m0,
                                         std::uint64_t seed,
                                         bool support_away_from_interface)
{
    require_truncation(mesh, m0);
    const double surf = std::pow(mesh.R, mesh.n - 1);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    AdjointResiduals out;

    for (bool interior : {true, false}) {
        const OneSided os = one_sided(mesh, m0, interior);
        const int n = os.n_dofs;
        const int iface = interior ? n - 1 : 0;

        // random smooth data: a sum of Gaussian bumps with mesh-independent
        // parameters, so the residual reflects the discretization alone
        const double lo = interior ? 0.0 : mesh.R;
        const double hi = interior ? mesh.R : std::min(mesh.r_out, mesh.R + 6.0 / m0);
        const double len = hi - lo;
        struct Bump {
            double c, r0, w;
        };
        std::vector<Bump> bumps;
        for (int j = 0; j < 4; ++j) {
            Bump b;
            b.c = uni(rng);
            b.r0 = lo + (0.5 + 0.45 * uni(rng)) * 0.5 * len;
            b.w = (0.12 + 0.05 * uni(rng)) * len;
            if (support_away_from_interface) {
                // keep the bumps (effectively) supported off the interface
                b.r0 = interior ? lo + (0.25 + 0.1 * uni(rng)) * len
                                : hi - (0.25 + 0.1 * uni(rng)) * len;
                b.w = 0.04 * len;
            }
            bumps.push_back(b);
        }
        const auto radii = fd_nodes(mesh);
        const int offset = interior ? 0 : layout_of(mesh).idx_interface_plus;
        Eigen::VectorXd f(n);
        for (int i = 0; i < n; ++i) {
            const double r = radii[static_cast<std::size_t>(offset + i)];
            double v = 0.0;
            for (const auto& b : bumps) v += b.c * std::exp(-std::pow((r - b.r0) / b.w, 2));
            f[i] = v;
        }

        const double phi = 1.0;

        // gamma identity: (f, K_gamma phi) = -(nu A_gamma^{-1} f) phi * R^{n-1}
        const Eigen::VectorXd kg = dirichlet_solve(os, interior, phi);
        const double lhs_g = f.cwiseProduct(os.weights).dot(kg);
        // A_gamma^{-1} f: Dirichlet 0 at interface
        Eigen::VectorXd load = os.weights.cwiseProduct(f);
        load[iface] = 0.0;
        std::vector<Triplet> trip;
        for (int k = 0; k < os.stiffness.outerSize(); ++k)
            for (SpMat::InnerIterator it(os.stiffness, k); it; ++it)
                if (it.row() != iface && it.col() != iface)
                    trip.emplace_back(it.row(), it.col(), it.value());
        trip.emplace_back(iface, iface, 1.0);
        SpMat a(n, n);
        a.setFromTriplets(trip.begin(), trip.end());
        Eigen::SparseLU<SpMat> lu(a);
        const Eigen::VectorXd v = lu.solve(load);
        const double nu_v = interior ? conormal_minus(mesh, 0.0, v[n - 2], v[n - 3])
                                     : conormal_plus(mesh, 0.0, v[1], v[2]);
        const double rhs_g = -nu_v * phi * surf;
        const double res_g = std::abs(lhs_g - rhs_g) / std::max(std::abs(lhs_g), 1e-30);

        // nu identity: (f, K_nu psi) = (gamma A_nu^{-1} f) psi * R^{n-1}.
        // K_nu is discretized independently of the weak form: the PDE rows
        // away from the interface plus the one-sided conormal stencil row.
        const double psi = 1.0;
        std::vector<Triplet> tripn;
        for (int k = 0; k < os.stiffness.outerSize(); ++k)
            for (SpMat::InnerIterator it(os.stiffness, k); it; ++it)
                if (it.row() != iface) tripn.emplace_back(it.row(), it.col(), it.value());
        // Both conormal stencils share the (+3, -4, +1)/(2h) pattern: the
        // sign of the derivative and the outward direction flip together.
        const int i1 = interior ? n - 2 : 1;
        const int i2 = interior ? n - 3 : 2;
        tripn.emplace_back(iface, iface, 3.0 / (2.0 * mesh.h));
        tripn.emplace_back(iface, i1, -4.0 / (2.0 * mesh.h));
        tripn.emplace_back(iface, i2, 1.0 / (2.0 * mesh.h));
        SpMat an(n, n);
        an.setFromTriplets(tripn.begin(), tripn.end());
        Eigen::SparseLU<SpMat> lun(an);
        Eigen::VectorXd rhsn = Eigen::VectorXd::Zero(n);
        rhsn[iface] = psi;
        const Eigen::VectorXd kn = lun.solve(rhsn);
        const double lhs_n = f.cwiseProduct(os.weights).dot(kn);
        // A_nu^{-1} f: natural condition, plain weak solve
        Eigen::SparseLU<SpMat> lunat(os.stiffness);
        const Eigen::VectorXd z = lunat.solve(os.weights.cwiseProduct(f));
        const double rhs_n = z[iface] * psi * surf;
        const double res_n = std::abs(lhs_n - rhs_n) / std::max(std::abs(lhs_n), 1e-30);

        if (interior) {
            out.gamma_interior = res_g;
            out.nu_interior = res_n;
        } else {
            out.gamma_exterior = res_g;
            out.nu_exterior = res_n;
        }
    }
    return out;
}

} // namespace deltaspec
