#pragma once

#include <cstdint>
#include <random>

#include "eulerdual/field.hpp"
#include "eulerdual/grid.hpp"

namespace eulerdual {

// Deterministic random streams. Mapping from engine output to doubles is
// hand-rolled (std:: distributions are implementation-defined), so identical
// seeds give identical fields on any platform with the same FFT build.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    // uniform in [0, 1)
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
    // uniform in [-1, 1)
    double uniform_pm1() { return 2.0 * uniform() - 1.0; }
    // standard normal via Box-Muller
    double gaussian();

private:
    std::mt19937_64 eng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// Random band-limited fields: white noise truncated to |k_i| <= kmax.
ScalarField random_scalar(const Grid& grid, Rng& rng, int kmax);
VectorField random_vector(const Grid& grid, Rng& rng, int kmax);
SymTensorField random_sym(const Grid& grid, Rng& rng, int kmax);

// Default band limit for test/battery fields: n/3 capped at 4, at least 1.
int default_band_limit(int n);

}  // namespace eulerdual
