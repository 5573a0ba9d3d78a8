#include "eulerdual/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "eulerdual/spectral.hpp"

namespace eulerdual {

double Rng::gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = 0.0;
    do {
        u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
}

int default_band_limit(int n) { return std::max(1, std::min(n / 3, 4)); }

namespace {

void band_limit(SpectralScalar& c, int kmax) {
    for (std::size_t s = 0; s < c.coef.size(); ++s) {
        auto k = wavevector(c.d, c.n, s);
        if (std::abs(k[0]) > kmax || std::abs(k[1]) > kmax || std::abs(k[2]) > kmax)
            c.coef[s] = 0.0;
    }
}

}  // namespace

ScalarField random_scalar(const Grid& grid, Rng& rng, int kmax) {
    ScalarField f(grid);
    for (double& v : f.data) v = rng.gaussian();
    SpectralScalar c = forward_transform(f);
    band_limit(c, kmax);
    return inverse_transform(c, grid);
}

VectorField random_vector(const Grid& grid, Rng& rng, int kmax) {
    VectorField f(grid);
    const std::size_t np = grid.num_points();
    for (int i = 0; i < grid.d; ++i) {
        ScalarField comp = random_scalar(grid, rng, kmax);
        for (std::size_t p = 0; p < np; ++p) f.data[p * grid.d + i] = comp.data[p];
    }
    return f;
}

SymTensorField random_sym(const Grid& grid, Rng& rng, int kmax) {
    SymTensorField f(grid);
    const int nsym = grid.num_sym();
    const std::size_t np = grid.num_points();
    for (int e = 0; e < nsym; ++e) {
        ScalarField comp = random_scalar(grid, rng, kmax);
        for (std::size_t p = 0; p < np; ++p) f.data[p * nsym + e] = comp.data[p];
    }
    return f;
}

}  // namespace eulerdual
