#pragma once

#include <array>
#include <complex>
#include <vector>

#include "eulerdual/field.hpp"
#include "eulerdual/grid.hpp"

namespace eulerdual {

// Half-spectrum (r2c) coefficients of a real scalar field, row-major
// [n]^(d-1) x (n/2+1): the last axis holds k_d = 0..n/2, the others hold
// signed wavevectors with wraparound. Coefficients are true Fourier-series
// coefficients: f(x) = sum_k coef_k exp(2*pi*i k.x), so coef_0 is the mean.
struct SpectralScalar {
    int d = 2;
    int n = 0;
    std::vector<std::complex<double>> coef;
};

std::size_t spectral_size(int d, int n);

// Decoded integer wavevector of a flat spectral index (k[2] = 0 when d = 2).
std::array<int, 3> wavevector(int d, int n, std::size_t s);

// True if any component sits on the Nyquist plane |k_i| = n/2, where odd
// derivative symbols are ill-defined and zeroed.
bool has_nyquist(const std::array<int, 3>& k, int n);

// Parseval weight of a half-spectrum entry (2 for modes whose conjugate
// partner was dropped by the r2c layout, 1 otherwise).
double hermitian_weight(int d, int n, std::size_t s);

SpectralScalar forward_transform(const ScalarField& f);
ScalarField inverse_transform(const SpectralScalar& c, const Grid& grid);

// Component-wise transforms.
std::vector<SpectralScalar> forward_components(const VectorField& f);
std::vector<SpectralScalar> forward_components(const SymTensorField& f);
VectorField inverse_vector(const std::vector<SpectralScalar>& comps, const Grid& grid);
SymTensorField inverse_sym(const std::vector<SpectralScalar>& comps, const Grid& grid);

// Spectral partial derivative d/dx_axis (multiplier 2*pi*i*k_axis, Nyquist zeroed).
SpectralScalar spectral_derivative(const SpectralScalar& c, int axis);

// max_p |div f|(p) computed spectrally; the divergence-free check.
double divergence_max_norm(const VectorField& f);

// Gradient of a scalar field, spectral.
VectorField gradient_field(const ScalarField& phi);

// 2/3-rule dealiasing: zero every mode with any |k_i| > n/3 (in place).
void dealias(SpectralScalar& c);
void dealias(VectorField& f);

}  // namespace eulerdual
