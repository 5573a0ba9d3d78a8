#include "eulerdual/euler_ref.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "eulerdual/operators.hpp"
#include "eulerdual/rng.hpp"
#include "eulerdual/spectral.hpp"

namespace eulerdual {

namespace {

// All spatial partial derivatives of a vector field: jac[i][j] = dj v_i.
std::vector<std::vector<ScalarField>> jacobian(const VectorField& v) {
    const Grid& g = v.grid;
    auto comps = forward_components(v);
    std::vector<std::vector<ScalarField>> jac(static_cast<std::size_t>(g.d));
    for (int i = 0; i < g.d; ++i) {
        jac[static_cast<std::size_t>(i)].reserve(static_cast<std::size_t>(g.d));
        for (int j = 0; j < g.d; ++j)
            jac[static_cast<std::size_t>(i)].push_back(
                inverse_transform(spectral_derivative(comps[static_cast<std::size_t>(i)], j), g));
    }
    return jac;
}

// advection a_i = v^j dj u_i, dealiased
VectorField advect(const VectorField& v, const VectorField& u) {
    const Grid& g = v.grid;
    auto jac = jacobian(u);
    VectorField a(g);
    const std::size_t np = g.num_points();
    for (std::size_t p = 0; p < np; ++p)
        for (int i = 0; i < g.d; ++i) {
            double s = 0.0;
            for (int j = 0; j < g.d; ++j)
                s += v.at(p, j) * jac[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].data[p];
            a.at(p, i) = s;
        }
    dealias(a);
    return a;
}

VectorField euler_rhs(const VectorField& v) {
    VectorField a = advect(v, v);
    a = leray_project(a);
    scale(a, -1.0);
    return a;
}

void check_blowup(const VectorField& v, double cap, const char* what) {
    if (!all_finite(v.data) || max_abs(v) > cap)
        throw std::runtime_error(std::string(what) + ": blow-up guard tripped");
}

}  // namespace

TimeVectorField solve_euler(const VectorField& p0, const Grid& grid) {
    if (!p0.grid.same_space(grid)) throw std::invalid_argument("solve_euler: grid mismatch");
    TimeVectorField v(grid);
    v[0] = p0;
    v[0].grid = grid;
    const double dt = grid.dt();
    const double cap = 1e3 * std::max(max_abs(p0), 1e-300);
    for (int j = 0; j < grid.n_t; ++j) {
        const VectorField& vj = v[j];
        VectorField k1 = euler_rhs(vj);
        VectorField s = vj;
        add_scaled(s, 0.5 * dt, k1);
        VectorField k2 = euler_rhs(s);
        s = vj;
        add_scaled(s, 0.5 * dt, k2);
        VectorField k3 = euler_rhs(s);
        s = vj;
        add_scaled(s, dt, k3);
        VectorField k4 = euler_rhs(s);
        VectorField next = vj;
        add_scaled(next, dt / 6.0, k1);
        add_scaled(next, dt / 3.0, k2);
        add_scaled(next, dt / 3.0, k3);
        add_scaled(next, dt / 6.0, k4);
        check_blowup(next, cap, "solve_euler");
        v[j + 1] = next;
    }
    return v;
}

namespace {

// RHS of the backward multiplier equation given the local velocity u:
//   dA/dt = -Leray(dealias(u.grad A - A.(grad u)^T) + u)
VectorField fvp_rhs(const VectorField& a, const VectorField& u) {
    const Grid& g = a.grid;
    auto jac_a = jacobian(a);
    auto jac_u = jacobian(u);
    VectorField q(g);
    const std::size_t np = g.num_points();
    for (std::size_t p = 0; p < np; ++p)
        for (int i = 0; i < g.d; ++i) {
            double s = 0.0;
            for (int j = 0; j < g.d; ++j) {
                s += u.at(p, j) * jac_a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].data[p];
                s -= a.at(p, j) * jac_u[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)].data[p];
            }
            q.at(p, i) = s;
        }
    dealias(q);
    add_scaled(q, 1.0, u);
    q = leray_project(q);
    scale(q, -1.0);
    return q;
}

}  // namespace

FvpResult solve_fvp(const TimeVectorField& v, const Grid& grid) {
    if (!(v.grid == grid)) throw std::invalid_argument("solve_fvp: grid mismatch");
    FvpResult res;
    res.a = TimeVectorField(grid);
    res.phi = TimeScalarField(grid);
    const double dt = grid.dt();
    const double vcap = 1e3 * std::max(max_abs(v), 1e-300);
    const double acap = 1e3 * (1.0 + max_abs(v));

    // coupled backward integration of (A, U) from (0, V(T)) with step -dt
    VectorField a(grid);
    VectorField u = v[grid.n_t];
    for (int j = grid.n_t - 1; j >= 0; --j) {
        const double h = -dt;
        VectorField ka1 = fvp_rhs(a, u);
        VectorField ku1 = euler_rhs(u);
        VectorField at = a, ut = u;
        add_scaled(at, 0.5 * h, ka1);
        add_scaled(ut, 0.5 * h, ku1);
        VectorField ka2 = fvp_rhs(at, ut);
        VectorField ku2 = euler_rhs(ut);
        at = a;
        ut = u;
        add_scaled(at, 0.5 * h, ka2);
        add_scaled(ut, 0.5 * h, ku2);
        VectorField ka3 = fvp_rhs(at, ut);
        VectorField ku3 = euler_rhs(ut);
        at = a;
        ut = u;
        add_scaled(at, h, ka3);
        add_scaled(ut, h, ku3);
        VectorField ka4 = fvp_rhs(at, ut);
        VectorField ku4 = euler_rhs(ut);
        add_scaled(a, h / 6.0, ka1);
        add_scaled(a, h / 3.0, ka2);
        add_scaled(a, h / 3.0, ka3);
        add_scaled(a, h / 6.0, ka4);
        add_scaled(u, h / 6.0, ku1);
        add_scaled(u, h / 3.0, ku2);
        add_scaled(u, h / 3.0, ku3);
        add_scaled(u, h / 6.0, ku4);
        check_blowup(u, vcap, "solve_fvp");
        check_blowup(a, acap, "solve_fvp");
        res.a[j] = a;
    }
    // a[n_t] is exactly zero already

    // phi recovery at nodes from the Leray potential of the node RHS, with the
    // caller's velocity: r = V.grad A - A.(grad V)^T + V, grad q = (I - P)r,
    // psi = -q, phi = psi - A.V.
    for (int j = 0; j <= grid.n_t; ++j) {
        const VectorField& aj = res.a[j];
        const VectorField& vj = v[j];
        auto jac_a = jacobian(aj);
        auto jac_v = jacobian(vj);
        VectorField r(grid);
        const std::size_t np = grid.num_points();
        for (std::size_t p = 0; p < np; ++p)
            for (int i = 0; i < grid.d; ++i) {
                double s = 0.0;
                for (int jj = 0; jj < grid.d; ++jj) {
                    s += vj.at(p, jj) * jac_a[static_cast<std::size_t>(i)][static_cast<std::size_t>(jj)].data[p];
                    s -= aj.at(p, jj) * jac_v[static_cast<std::size_t>(jj)][static_cast<std::size_t>(i)].data[p];
                }
                r.at(p, i) = s;
            }
        dealias(r);
        add_scaled(r, 1.0, vj);
        // q-hat = -i (k . r-hat) / (2 pi |k|^2); psi = -q
        auto comps = forward_components(r);
        SpectralScalar q;
        q.d = grid.d;
        q.n = grid.n;
        q.coef.assign(comps[0].coef.size(), 0.0);
        const double two_pi = 2.0 * std::numbers::pi;
        for (std::size_t s = 0; s < q.coef.size(); ++s) {
            auto k = wavevector(grid.d, grid.n, s);
            if ((k[0] == 0 && k[1] == 0 && k[2] == 0) || has_nyquist(k, grid.n)) continue;
            double ksq = 0.0;
            std::complex<double> kdotr = 0.0;
            for (int i = 0; i < grid.d; ++i) {
                ksq += static_cast<double>(k[i]) * k[i];
                kdotr += static_cast<double>(k[i]) * comps[static_cast<std::size_t>(i)].coef[s];
            }
            q.coef[s] = std::complex<double>(0.0, -1.0) * kdotr / (two_pi * ksq);
        }
        ScalarField qf = inverse_transform(q, grid);
        ScalarField& phi = res.phi[j];
        for (std::size_t p = 0; p < np; ++p) {
            double av = 0.0;
            for (int i = 0; i < grid.d; ++i) av += aj.at(p, i) * vj.at(p, i);
            phi.data[p] = -qf.data[p] - av;
        }
    }
    return res;
}

DualPair build_dual_from_A(const TimeVectorField& a, const TimeScalarField& phi) {
    const Grid& g = a.grid;
    DualPair out;
    out.e = TimeVectorField(g);
    out.b = TimeSymTensorField(g);
    const double dt = g.dt();

    // B = sym grad A, spectrally, per node
    for (int j = 0; j <= g.n_t; ++j) {
        auto comps = forward_components(a[j]);
        std::vector<SpectralScalar> bc(static_cast<std::size_t>(g.num_sym()));
        for (auto& c : bc) {
            c.d = g.d;
            c.n = g.n;
            c.coef.assign(comps[0].coef.size(), 0.0);
        }
        const double pi = std::numbers::pi;
        for (std::size_t s = 0; s < comps[0].coef.size(); ++s) {
            auto k = wavevector(g.d, g.n, s);
            if (has_nyquist(k, g.n)) continue;
            for (int i = 0, e = 0; i < g.d; ++i)
                for (int jj = i; jj < g.d; ++jj, ++e)
                    bc[static_cast<std::size_t>(e)].coef[s] =
                        std::complex<double>(0.0, pi) *
                        (static_cast<double>(k[jj]) * comps[static_cast<std::size_t>(i)].coef[s] +
                         static_cast<double>(k[i]) * comps[static_cast<std::size_t>(jj)].coef[s]);
        }
        out.b[j] = inverse_sym(bc, g);
    }

    // trapezoid-compatible time derivative of A
    std::vector<VectorField> da(static_cast<std::size_t>(g.num_nodes()), VectorField(g));
    if (g.n_t == 1) {
        VectorField d0 = a[1];
        add_scaled(d0, -1.0, a[0]);
        scale(d0, 1.0 / dt);
        da[0] = d0;
        da[1] = d0;
    } else {
        VectorField d0 = a[0];
        scale(d0, -3.0);
        add_scaled(d0, 4.0, a[1]);
        add_scaled(d0, -1.0, a[2]);
        scale(d0, 1.0 / (2.0 * dt));
        da[0] = d0;
        for (int j = 0; j < g.n_t; ++j) {
            VectorField next = a[j + 1];
            add_scaled(next, -1.0, a[j]);
            scale(next, 2.0 / dt);
            add_scaled(next, -1.0, da[static_cast<std::size_t>(j)]);
            da[static_cast<std::size_t>(j + 1)] = next;
        }
    }

    for (int j = 0; j <= g.n_t; ++j) {
        VectorField e = gradient_field(phi[j]);
        add_scaled(e, 1.0, da[static_cast<std::size_t>(j)]);
        out.e[j] = e;
    }
    return out;
}

double weak_residual(const TimeVectorField& v, const VectorField& p0, const TestBattery& battery) {
    const Grid& g = v.grid;
    double worst = 0.0;
    const std::size_t np = g.num_points();
    for (const auto& pair : battery.eb_pairs) {
        double acc = 0.0;
        for (int j = 0; j <= g.n_t; ++j) {
            const VectorField& vj = v[j];
            const SymTensorField& bj = pair.b[j];
            const VectorField& ej = pair.e[j];
            double s = 0.0;
            for (std::size_t p = 0; p < np; ++p) {
                for (int i = 0; i < g.d; ++i)
                    for (int jj = 0; jj < g.d; ++jj)
                        s += vj.at(p, i) * vj.at(p, jj) * bj.at(p, i, jj);
                for (int i = 0; i < g.d; ++i)
                    s += (vj.at(p, i) - p0.at(p, i)) * ej.at(p, i);
            }
            acc += trapezoid_weight(g, j) * s / static_cast<double>(np);
        }
        worst = std::max(worst, std::abs(acc));
    }
    return worst;
}

std::vector<double> kinetic_energy(const TimeVectorField& v) {
    std::vector<double> e;
    e.reserve(v.snaps.size());
    for (const auto& s : v.snaps) e.push_back(0.5 * spatial_inner(s, s));
    return e;
}

namespace {

// zeta family: smooth profiles vanishing at t = 0
double zeta_value(int kind, double t, double T) {
    const double u = t / T;
    switch (kind % 5) {
        case 0: return u;
        case 1: return u * u;
        case 2: return u * u * u;
        case 3: return std::sin(0.5 * std::numbers::pi * u);
        default: return 1.0 - std::cos(std::numbers::pi * u);
    }
}

std::string zeta_name(int kind) {
    switch (kind % 5) {
        case 0: return "t";
        case 1: return "t^2";
        case 2: return "t^3";
        case 3: return "sin(pi t/2T)";
        default: return "1-cos(pi t/T)";
    }
}

}  // namespace

TestBattery make_battery(const Grid& grid, const BatteryOptions& opts) {
    TestBattery bat;
    bat.grid = grid;
    Rng rng(opts.seed);
    const int kmax = default_band_limit(grid.n);

    for (int a = 0; a < opts.n_zeta; ++a) {
        TestBattery::Zeta z;
        z.name = zeta_name(a);
        z.values.resize(static_cast<std::size_t>(grid.num_nodes()));
        for (int j = 0; j <= grid.n_t; ++j)
            z.values[static_cast<std::size_t>(j)] = zeta_value(a, grid.time_node(j), grid.T);
        z.values[0] = 0.0;  // exact by family choice; pin it anyway
        bat.zetas.push_back(std::move(z));
    }

    for (int b = 0; b < opts.n_psi; ++b) {
        SymTensorField psi = random_sym(grid, rng, kmax);
        const double nrm = std::sqrt(spatial_inner(psi, psi));
        if (nrm > 0.0)
            for (double& x : psi.data) x /= nrm;
        bat.psis.push_back(std::move(psi));
    }

    // smooth E members: sum of band-limited spatial fields times gentle time
    // profiles, normalized in the space-time L2 norm; B closes the constraint.
    for (int m = 0; m < opts.n_eb; ++m) {
        TimeVectorField e(grid);
        const int nprof = 3;
        std::vector<VectorField> shapes;
        std::vector<int> kinds;
        std::vector<double> phases;
        for (int p = 0; p < nprof; ++p) {
            shapes.push_back(random_vector(grid, rng, kmax));
            kinds.push_back(static_cast<int>(rng.uniform() * 4.0));
            phases.push_back(rng.uniform());
        }
        for (int j = 0; j <= grid.n_t; ++j) {
            const double u = grid.time_node(j) / grid.T;
            for (int p = 0; p < nprof; ++p) {
                double c = 0.0;
                switch (kinds[static_cast<std::size_t>(p)] % 4) {
                    case 0: c = 1.0; break;
                    case 1: c = u; break;
                    case 2: c = u * u; break;
                    default: c = std::cos(std::numbers::pi * (u + phases[static_cast<std::size_t>(p)])); break;
                }
                add_scaled(e[j], c, shapes[static_cast<std::size_t>(p)]);
            }
        }
        const double nrm = l2_norm(e);
        if (nrm > 0.0) scale(e, 1.0 / nrm);
        TestBattery::EbPair pair;
        pair.b = integrate_constraint(e);
        pair.e = std::move(e);
        bat.eb_pairs.push_back(std::move(pair));
    }
    return bat;
}

}  // namespace eulerdual
