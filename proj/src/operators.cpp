#include "eulerdual/operators.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include "eulerdual/euler_ref.hpp"
#include "eulerdual/spectral.hpp"

namespace eulerdual {

MultiplierTable::MultiplierTable(int d, int n) : d_(d), n_(n) {
    const int nsym = d * (d + 1) / 2;
    const std::size_t nspec = spectral_size(d, n);
    stride_ = static_cast<std::size_t>(nsym * d);
    g_.assign(nspec * stride_, 0.0);

    const double pi = std::numbers::pi;
    for (std::size_t s = 0; s < nspec; ++s) {
        auto k = wavevector(d, n, s);
        if ((k[0] == 0 && k[1] == 0 && k[2] == 0) || has_nyquist(k, n)) continue;
        double ksq = 0.0;
        for (int i = 0; i < d; ++i) ksq += static_cast<double>(k[i]) * k[i];
        double* G = g_.data() + s * stride_;
        // raw rows: G[(i,j)][m] = pi*(k_j delta_im + k_i delta_jm) - 2*pi*k_i*k_j*k_m/|k|^2
        for (int i = 0, e = 0; i < d; ++i)
            for (int j = i; j < d; ++j, ++e)
                for (int m = 0; m < d; ++m) {
                    double v = -2.0 * pi * k[i] * k[j] * k[m] / ksq;
                    if (i == m) v += pi * k[j];
                    if (j == m) v += pi * k[i];
                    G[e * d + m] = v;
                }
        // Rebalance diagonal rows so each column of the diagonal block sums to
        // an exact floating-point zero (trace-free output to roundoff).
        for (int m = 0; m < d; ++m) {
            if (d == 2) {
                const int e00 = sym_index(2, 0, 0), e11 = sym_index(2, 1, 1);
                const double dev = 0.5 * (G[e00 * d + m] - G[e11 * d + m]);
                G[e00 * d + m] = dev;
                G[e11 * d + m] = -dev;
            } else {
                const int e00 = sym_index(3, 0, 0), e11 = sym_index(3, 1, 1), e22 = sym_index(3, 2, 2);
                const double mu = (G[e00 * d + m] + G[e11 * d + m] + G[e22 * d + m]) / 3.0;
                const double b0 = G[e00 * d + m] - mu;
                const double b1 = G[e11 * d + m] - mu;
                G[e00 * d + m] = b0;
                G[e11 * d + m] = b1;
                G[e22 * d + m] = -(b0 + b1);
            }
        }
    }
}

void MultiplierTable::corrupt_for_testing() {
    // flip the first nonzero entry
    for (double& v : g_)
        if (v != 0.0) {
            v = -1.5 * v;
            return;
        }
}

const MultiplierTable& multiplier_table(const Grid& grid) {
    static std::mutex mtx;
    static std::map<std::pair<int, int>, std::unique_ptr<MultiplierTable>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(grid.d, grid.n);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::make_unique<MultiplierTable>(grid.d, grid.n)).first;
    return *it->second;
}

SymTensorField apply_L(const VectorField& e, const MultiplierTable& table) {
    const Grid& g = e.grid;
    const int d = g.d, nsym = g.num_sym();
    auto in = forward_components(e);
    std::vector<SpectralScalar> out(static_cast<std::size_t>(nsym));
    for (auto& c : out) {
        c.d = d;
        c.n = g.n;
        c.coef.assign(in[0].coef.size(), 0.0);
    }
    const std::complex<double> iu(0.0, 1.0);
    for (std::size_t s = 0; s < in[0].coef.size(); ++s) {
        const double* G = table.block(s);
        for (int ee = 0; ee < nsym; ++ee) {
            std::complex<double> acc = 0.0;
            for (int m = 0; m < d; ++m)
                acc += G[ee * d + m] * in[static_cast<std::size_t>(m)].coef[s];
            out[static_cast<std::size_t>(ee)].coef[s] = iu * acc;
        }
    }
    return inverse_sym(out, g);
}

VectorField apply_L_star(const SymTensorField& psi, const MultiplierTable& table) {
    const Grid& g = psi.grid;
    const int d = g.d, nsym = g.num_sym();
    auto in = forward_components(psi);
    std::vector<SpectralScalar> out(static_cast<std::size_t>(d));
    for (auto& c : out) {
        c.d = d;
        c.n = g.n;
        c.coef.assign(in[0].coef.size(), 0.0);
    }
    const std::complex<double> miu(0.0, -1.0);
    std::vector<double> w(static_cast<std::size_t>(nsym));
    for (int ee = 0; ee < nsym; ++ee) w[static_cast<std::size_t>(ee)] = sym_weight(d, ee);
    for (std::size_t s = 0; s < in[0].coef.size(); ++s) {
        const double* G = table.block(s);
        for (int m = 0; m < d; ++m) {
            std::complex<double> acc = 0.0;
            for (int ee = 0; ee < nsym; ++ee)
                acc += w[static_cast<std::size_t>(ee)] * G[ee * d + m] * in[static_cast<std::size_t>(ee)].coef[s];
            out[static_cast<std::size_t>(m)].coef[s] = miu * acc;
        }
    }
    return inverse_vector(out, g);
}

SymTensorField apply_L(const VectorField& e) { return apply_L(e, multiplier_table(e.grid)); }
VectorField apply_L_star(const SymTensorField& psi) { return apply_L_star(psi, multiplier_table(psi.grid)); }

VectorField leray_project(const VectorField& v) {
    const Grid& g = v.grid;
    auto comps = forward_components(v);
    for (std::size_t s = 0; s < comps[0].coef.size(); ++s) {
        auto k = wavevector(g.d, g.n, s);
        if (k[0] == 0 && k[1] == 0 && k[2] == 0) {
            for (int i = 0; i < g.d; ++i) comps[static_cast<std::size_t>(i)].coef[s] = 0.0;
            continue;
        }
        if (has_nyquist(k, g.n)) {
            for (int i = 0; i < g.d; ++i) comps[static_cast<std::size_t>(i)].coef[s] = 0.0;
            continue;
        }
        double ksq = 0.0;
        std::complex<double> kdotv = 0.0;
        for (int i = 0; i < g.d; ++i) {
            ksq += static_cast<double>(k[i]) * k[i];
            kdotv += static_cast<double>(k[i]) * comps[static_cast<std::size_t>(i)].coef[s];
        }
        const std::complex<double> c = kdotv / ksq;
        for (int i = 0; i < g.d; ++i)
            comps[static_cast<std::size_t>(i)].coef[s] -= static_cast<double>(k[i]) * c;
    }
    return inverse_vector(comps, g);
}

TimeSymTensorField integrate_constraint(const TimeVectorField& e) {
    const Grid& g = e.grid;
    TimeSymTensorField b(g);
    std::vector<SymTensorField> le;
    le.reserve(static_cast<std::size_t>(g.num_nodes()));
    const MultiplierTable& table = multiplier_table(g);
    for (int j = 0; j <= g.n_t; ++j) le.push_back(apply_L(e[j], table));
    const double half_dt = 0.5 * g.dt();
    // b[n_t] stays exactly zero
    for (int j = g.n_t - 1; j >= 0; --j) {
        SymTensorField& bj = b[j];
        const SymTensorField& bnext = b[j + 1];
        for (std::size_t i = 0; i < bj.data.size(); ++i)
            bj.data[i] = bnext.data[i] - half_dt * (le[static_cast<std::size_t>(j)].data[i] +
                                                    le[static_cast<std::size_t>(j + 1)].data[i]);
    }
    return b;
}

double constraint_residual(const TimeVectorField& e, const TimeSymTensorField& b,
                           const TestBattery& battery) {
    const Grid& g = e.grid;
    const MultiplierTable& table = multiplier_table(g);
    double worst = 0.0;
    for (const auto& psi : battery.psis) {
        VectorField lstar_psi = apply_L_star(psi, table);
        std::vector<double> bp(static_cast<std::size_t>(g.num_nodes()));
        std::vector<double> el(static_cast<std::size_t>(g.num_nodes()));
        for (int j = 0; j <= g.n_t; ++j) {
            bp[static_cast<std::size_t>(j)] = spatial_inner(b[j], psi);
            el[static_cast<std::size_t>(j)] = spatial_inner(e[j], lstar_psi);
        }
        const double dt = g.dt();
        for (const auto& zeta : battery.zetas) {
            double r = 0.0;
            for (int j = 0; j < g.n_t; ++j) {
                const double z0 = zeta.values[static_cast<std::size_t>(j)];
                const double z1 = zeta.values[static_cast<std::size_t>(j + 1)];
                r += (z1 - z0) * 0.5 * (bp[static_cast<std::size_t>(j)] + bp[static_cast<std::size_t>(j + 1)]);
                r += 0.25 * dt * (z1 + z0) * (el[static_cast<std::size_t>(j)] + el[static_cast<std::size_t>(j + 1)]);
            }
            worst = std::max(worst, std::abs(r));
        }
    }
    return worst;
}

}  // namespace eulerdual
