#include "eulerdual/spectral.hpp"

#include <fftw3.h>

#include <cstring>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace eulerdual {

namespace {

// Cached FFTW plans per (d, n), executing on internal fftw-aligned buffers.
// Access is serialized; the solver itself is single-threaded.
struct PlanEntry {
    int d, n;
    std::size_t nreal, ncplx;
    double* rbuf = nullptr;
    fftw_complex* cbuf = nullptr;
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;

    PlanEntry(int d_, int n_) : d(d_), n(n_) {
        nreal = 1;
        for (int i = 0; i < d; ++i) nreal *= static_cast<std::size_t>(n);
        ncplx = spectral_size(d, n);
        rbuf = fftw_alloc_real(nreal);
        cbuf = fftw_alloc_complex(ncplx);
        if (d == 2) {
            fwd = fftw_plan_dft_r2c_2d(n, n, rbuf, cbuf, FFTW_ESTIMATE);
            bwd = fftw_plan_dft_c2r_2d(n, n, cbuf, rbuf, FFTW_ESTIMATE);
        } else {
            fwd = fftw_plan_dft_r2c_3d(n, n, n, rbuf, cbuf, FFTW_ESTIMATE);
            bwd = fftw_plan_dft_c2r_3d(n, n, n, cbuf, rbuf, FFTW_ESTIMATE);
        }
        if (!fwd || !bwd) throw std::runtime_error("fftw plan creation failed");
    }
    ~PlanEntry() {
        if (fwd) fftw_destroy_plan(fwd);
        if (bwd) fftw_destroy_plan(bwd);
        if (rbuf) fftw_free(rbuf);
        if (cbuf) fftw_free(cbuf);
    }
    PlanEntry(const PlanEntry&) = delete;
    PlanEntry& operator=(const PlanEntry&) = delete;
};

std::mutex g_fft_mutex;

PlanEntry& plan_for(int d, int n) {
    static std::map<std::pair<int, int>, std::unique_ptr<PlanEntry>> cache;
    auto key = std::make_pair(d, n);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::make_unique<PlanEntry>(d, n)).first;
    return *it->second;
}

}  // namespace

std::size_t spectral_size(int d, int n) {
    std::size_t s = static_cast<std::size_t>(n / 2 + 1);
    for (int i = 0; i < d - 1; ++i) s *= static_cast<std::size_t>(n);
    return s;
}

std::array<int, 3> wavevector(int d, int n, std::size_t s) {
    const int nh = n / 2 + 1;
    std::array<int, 3> k{0, 0, 0};
    int last = static_cast<int>(s % nh);
    std::size_t rest = s / nh;
    if (d == 2) {
        int k0 = static_cast<int>(rest);
        k[0] = k0 <= n / 2 ? k0 : k0 - n;
        k[1] = last;
    } else {
        int k1 = static_cast<int>(rest % n);
        int k0 = static_cast<int>(rest / n);
        k[0] = k0 <= n / 2 ? k0 : k0 - n;
        k[1] = k1 <= n / 2 ? k1 : k1 - n;
        k[2] = last;
    }
    return k;
}

bool has_nyquist(const std::array<int, 3>& k, int n) {
    const int ny = n / 2;
    return k[0] == ny || k[0] == -ny || k[1] == ny || k[1] == -ny || k[2] == ny || k[2] == -ny;
}

double hermitian_weight(int d, int n, std::size_t s) {
    const int nh = n / 2 + 1;
    int last = static_cast<int>(s % nh);
    return (last == 0 || last == n / 2) ? 1.0 : 2.0;
}

SpectralScalar forward_transform(const ScalarField& f) {
    std::lock_guard<std::mutex> lock(g_fft_mutex);
    PlanEntry& pe = plan_for(f.grid.d, f.grid.n);
    if (f.data.size() != pe.nreal) throw std::invalid_argument("forward_transform: bad field size");
    std::memcpy(pe.rbuf, f.data.data(), pe.nreal * sizeof(double));
    fftw_execute(pe.fwd);
    SpectralScalar out;
    out.d = f.grid.d;
    out.n = f.grid.n;
    out.coef.resize(pe.ncplx);
    const double inv_n = 1.0 / static_cast<double>(pe.nreal);
    for (std::size_t s = 0; s < pe.ncplx; ++s)
        out.coef[s] = std::complex<double>(pe.cbuf[s][0], pe.cbuf[s][1]) * inv_n;
    return out;
}

ScalarField inverse_transform(const SpectralScalar& c, const Grid& grid) {
    if (c.d != grid.d || c.n != grid.n) throw std::invalid_argument("inverse_transform: grid mismatch");
    std::lock_guard<std::mutex> lock(g_fft_mutex);
    PlanEntry& pe = plan_for(grid.d, grid.n);
    for (std::size_t s = 0; s < pe.ncplx; ++s) {
        pe.cbuf[s][0] = c.coef[s].real();
        pe.cbuf[s][1] = c.coef[s].imag();
    }
    fftw_execute(pe.bwd);
    ScalarField out(grid);
    std::memcpy(out.data.data(), pe.rbuf, pe.nreal * sizeof(double));
    return out;
}

namespace {

ScalarField extract_component(const Grid& g, const std::vector<double>& data, int ncomp, int c) {
    ScalarField f(g);
    const std::size_t np = g.num_points();
    for (std::size_t p = 0; p < np; ++p) f.data[p] = data[p * ncomp + c];
    return f;
}

}  // namespace

std::vector<SpectralScalar> forward_components(const VectorField& f) {
    std::vector<SpectralScalar> out;
    out.reserve(f.grid.d);
    for (int c = 0; c < f.grid.d; ++c)
        out.push_back(forward_transform(extract_component(f.grid, f.data, f.grid.d, c)));
    return out;
}

std::vector<SpectralScalar> forward_components(const SymTensorField& f) {
    std::vector<SpectralScalar> out;
    const int nsym = f.grid.num_sym();
    out.reserve(nsym);
    for (int c = 0; c < nsym; ++c)
        out.push_back(forward_transform(extract_component(f.grid, f.data, nsym, c)));
    return out;
}

VectorField inverse_vector(const std::vector<SpectralScalar>& comps, const Grid& grid) {
    VectorField out(grid);
    const std::size_t np = grid.num_points();
    for (int c = 0; c < grid.d; ++c) {
        ScalarField f = inverse_transform(comps[static_cast<std::size_t>(c)], grid);
        for (std::size_t p = 0; p < np; ++p) out.data[p * grid.d + c] = f.data[p];
    }
    return out;
}

SymTensorField inverse_sym(const std::vector<SpectralScalar>& comps, const Grid& grid) {
    SymTensorField out(grid);
    const int nsym = grid.num_sym();
    const std::size_t np = grid.num_points();
    for (int c = 0; c < nsym; ++c) {
        ScalarField f = inverse_transform(comps[static_cast<std::size_t>(c)], grid);
        for (std::size_t p = 0; p < np; ++p) out.data[p * nsym + c] = f.data[p];
    }
    return out;
}

SpectralScalar spectral_derivative(const SpectralScalar& c, int axis) {
    SpectralScalar out = c;
    const double two_pi = 2.0 * std::numbers::pi;
    for (std::size_t s = 0; s < out.coef.size(); ++s) {
        auto k = wavevector(c.d, c.n, s);
        if (has_nyquist(k, c.n)) {
            out.coef[s] = 0.0;
            continue;
        }
        // multiply by 2*pi*i*k_axis
        out.coef[s] *= std::complex<double>(0.0, two_pi * k[static_cast<std::size_t>(axis)]);
    }
    return out;
}

double divergence_max_norm(const VectorField& f) {
    auto comps = forward_components(f);
    const double two_pi = 2.0 * std::numbers::pi;
    SpectralScalar div;
    div.d = f.grid.d;
    div.n = f.grid.n;
    div.coef.assign(comps[0].coef.size(), 0.0);
    for (std::size_t s = 0; s < div.coef.size(); ++s) {
        auto k = wavevector(f.grid.d, f.grid.n, s);
        if (has_nyquist(k, f.grid.n)) continue;
        std::complex<double> acc = 0.0;
        for (int i = 0; i < f.grid.d; ++i)
            acc += std::complex<double>(0.0, two_pi * k[static_cast<std::size_t>(i)]) * comps[static_cast<std::size_t>(i)].coef[s];
        div.coef[s] = acc;
    }
    return max_abs(inverse_transform(div, f.grid));
}

VectorField gradient_field(const ScalarField& phi) {
    SpectralScalar c = forward_transform(phi);
    std::vector<SpectralScalar> comps;
    comps.reserve(phi.grid.d);
    for (int i = 0; i < phi.grid.d; ++i) comps.push_back(spectral_derivative(c, i));
    return inverse_vector(comps, phi.grid);
}

void dealias(SpectralScalar& c) {
    const int kcut = c.n / 3;
    for (std::size_t s = 0; s < c.coef.size(); ++s) {
        auto k = wavevector(c.d, c.n, s);
        if (std::abs(k[0]) > kcut || std::abs(k[1]) > kcut || std::abs(k[2]) > kcut)
            c.coef[s] = 0.0;
    }
}

void dealias(VectorField& f) {
    auto comps = forward_components(f);
    for (auto& c : comps) dealias(c);
    f = inverse_vector(comps, f.grid);
}

}  // namespace eulerdual
