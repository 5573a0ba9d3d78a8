#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eulerdual/field.hpp"
#include "eulerdual/grid.hpp"

namespace eulerdual {

// Test machinery for the weak-form identities: smooth time profiles zeta with
// zeta(0) = 0, band-limited symmetric tensor test fields psi, and a family of
// constraint-satisfying pairs (E, B) built by integrating random smooth E.
struct TestBattery {
    struct Zeta {
        std::string name;
        std::vector<double> values;  // zeta(t_j) at the grid's time nodes
    };
    struct EbPair {
        TimeVectorField e;
        TimeSymTensorField b;
    };

    Grid grid;
    std::vector<Zeta> zetas;
    std::vector<SymTensorField> psis;
    std::vector<EbPair> eb_pairs;
};

struct BatteryOptions {
    int n_zeta = 5;
    int n_psi = 10;
    int n_eb = 10;
    std::uint64_t seed = 7;
};

TestBattery make_battery(const Grid& grid, const BatteryOptions& opts);

// Pseudo-spectral incompressible Euler solver: RK4 over the node grid,
// RHS = -Leray(dealias(V.grad V)), V(0) = P0.
// Throws std::runtime_error if |V|_inf exceeds 1e3 * |P0|_inf.
TimeVectorField solve_euler(const VectorField& p0, const Grid& grid);

struct FvpResult {
    TimeVectorField a;      // divergence-free multiplier, a(T) = 0
    TimeScalarField phi;    // pressure-like potential entering E = dA/dt + grad(phi)
};

// Linear final-value problem for the multiplier A given a smooth velocity V:
//   dA_i/dt + V^j dj A_i - A_j di V^j + di psi + V_i = 0, div A = 0, A(T) = 0,
// integrated backward with RK4; each stage is Leray-projected; the velocity is
// co-integrated backward from V(T) so RK4 stages see consistent values.
FvpResult solve_fvp(const TimeVectorField& v, const Grid& grid);

// (E, B) from (A, phi): B = sym grad A spectrally; E = dA/dt + grad phi with
// the trapezoid-compatible time derivative, so the pair satisfies the
// discrete constraint to roundoff.
struct DualPair {
    TimeVectorField e;
    TimeSymTensorField b;
};
DualPair build_dual_from_A(const TimeVectorField& a, const TimeScalarField& phi);

// Max over battery (E,B) members of |int V.B.V + (V - P0).E|; small iff V is
// a discrete weak solution with initial data P0.
double weak_residual(const TimeVectorField& v, const VectorField& p0, const TestBattery& battery);

// Kinetic energy (1/2)|V(t_j)|^2_{L2} per node; diagnostics for summaries.
std::vector<double> kinetic_energy(const TimeVectorField& v);

}  // namespace eulerdual
