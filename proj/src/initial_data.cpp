#include "eulerdual/initial_data.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "eulerdual/operators.hpp"
#include "eulerdual/rng.hpp"

namespace eulerdual {

namespace {

VectorField taylor_green(const Grid& grid, double amp) {
    VectorField v(grid);
    const double two_pi = 2.0 * std::numbers::pi;
    const int n = grid.n;
    for (int mx = 0; mx < n; ++mx) {
        const double x = static_cast<double>(mx) / n;
        for (int my = 0; my < n; ++my) {
            const double y = static_cast<double>(my) / n;
            const std::size_t p = static_cast<std::size_t>(mx) * n + my;
            v.at(p, 0) = -amp * std::cos(two_pi * x) * std::sin(two_pi * y);
            v.at(p, 1) = amp * std::sin(two_pi * x) * std::cos(two_pi * y);
        }
    }
    return v;
}

VectorField shear(const Grid& grid, double amp, int k) {
    VectorField v(grid);
    const double two_pi = 2.0 * std::numbers::pi;
    const int n = grid.n;
    for (int mx = 0; mx < n; ++mx)
        for (int my = 0; my < n; ++my) {
            const double y = static_cast<double>(my) / n;
            const std::size_t p = static_cast<std::size_t>(mx) * n + my;
            v.at(p, 0) = amp * std::sin(two_pi * k * y);
            v.at(p, 1) = 0.0;
        }
    return v;
}

VectorField random_divfree(const Grid& grid, double amp, int kmax, std::uint64_t seed) {
    Rng rng(seed);
    VectorField v = random_vector(grid, rng, kmax);
    v = leray_project(v);
    const double nrm = l2_norm(v);
    if (nrm > 0.0) scale(v, amp / nrm);
    return v;
}

}  // namespace

VectorField sample_initial_data(const std::string& name, const Grid& grid,
                                const InitialDataParams& params, std::uint64_t seed) {
    if (name == "taylor_green") {
        if (grid.d != 2) throw std::invalid_argument("initial_data: taylor_green requires d=2");
        return taylor_green(grid, params.amp);
    }
    if (name == "shear") {
        if (grid.d != 2) throw std::invalid_argument("initial_data: shear requires d=2");
        return shear(grid, params.amp, params.shear_k);
    }
    if (name == "random_divfree") {
        const int kmax = params.kmax > 0 ? params.kmax : default_band_limit(grid.n);
        return random_divfree(grid, params.amp, kmax, seed);
    }
    throw std::invalid_argument("initial_data: unknown name '" + name + "'");
}

}  // namespace eulerdual
