#pragma once

#include <vector>

#include "eulerdual/field.hpp"
#include "eulerdual/grid.hpp"

namespace eulerdual {

struct TestBattery;  // euler_ref.hpp

// Per-wavevector table of the order-1 operator
//   (LE)_ij = (1/2)(dj E_i + di E_j) + di dj (-Lap)^{-1} dk E_k
// and of its exact L2 adjoint L*. Both are purely imaginary multipliers,
// stored as the real matrix G(k): (LE-hat)_e = i * sum_m G[e][m] Ehat_m with
// e running over the d(d+1)/2 upper-triangle entries. The adjoint follows as
// (L*psi-hat)_m = -i * sum_e w_e G[e][m] psihat_e (w_e = spatial contraction
// weight), so adjointness holds in exact arithmetic by construction.
// Diagonal rows are assembled so their column sums cancel exactly in floating
// point, keeping trace(LE) at roundoff level. k = 0 and Nyquist modes are the
// zero map.
class MultiplierTable {
public:
    MultiplierTable(int d, int n);

    int d() const { return d_; }
    int n() const { return n_; }

    // G[e][m] block of spectral index s.
    const double* block(std::size_t s) const { return g_.data() + s * stride_; }

    // Fault-injection hook for the verification suite: perturbs one table
    // entry so adjointness visibly fails.
    void corrupt_for_testing();

private:
    int d_, n_;
    std::size_t stride_;
    std::vector<double> g_;
};

const MultiplierTable& multiplier_table(const Grid& grid);

// Snapshot-wise operator applications (spectral).
SymTensorField apply_L(const VectorField& e);
VectorField apply_L_star(const SymTensorField& psi);
// Variants for the fault-injection hook and for table reuse.
SymTensorField apply_L(const VectorField& e, const MultiplierTable& table);
VectorField apply_L_star(const SymTensorField& psi, const MultiplierTable& table);

// Orthogonal projection onto divergence-free zero-mean fields.
VectorField leray_project(const VectorField& v);

// Backward trapezoid for dB/dt = LE with B(T) = 0:
//   B_j = B_{j+1} - (dt/2)(LE_{j+1} + LE_j), B_{n_t} = 0 exactly.
TimeSymTensorField integrate_constraint(const TimeVectorField& e);

// Weak-form residual of the constraint over a battery of (zeta, psi) pairs.
// The discrete pairing telescopes exactly for pairs produced by
// integrate_constraint, so the residual is roundoff-level iff (E,B) satisfies
// the discrete constraint.
double constraint_residual(const TimeVectorField& e, const TimeSymTensorField& b,
                           const TestBattery& battery);

}  // namespace eulerdual
