#pragma once

#include <cstdint>
#include <string>

#include "eulerdual/field.hpp"
#include "eulerdual/grid.hpp"

namespace eulerdual {

struct InitialDataParams {
    double amp = 1.0;
    int shear_k = 1;  // shear: V = (amp*sin(2*pi*shear_k*y), 0)
    int kmax = 0;     // random_divfree band limit; 0 means default_band_limit(n)
};

// Divergence-free, zero-mean initial velocity fields on the torus.
// Names: taylor_green, shear (d = 2 only), random_divfree.
// Throws std::invalid_argument on unknown name or dimension mismatch.
VectorField sample_initial_data(const std::string& name, const Grid& grid,
                                const InitialDataParams& params, std::uint64_t seed);

}  // namespace eulerdual
