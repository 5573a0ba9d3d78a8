#pragma once

#include <cstddef>
#include <vector>

#include "eulerdual/grid.hpp"

namespace eulerdual {

// Fields are plain value types: a grid descriptor plus a flat data array in
// C order (space indices, then component), matching the FLD1 payload layout.
// Symmetric tensors store the d(d+1)/2 upper-triangle entries row-major:
// d=2: (00,01,11); d=3: (00,01,02,11,12,22).

int sym_index(int d, int i, int j);
// contraction weight of upper-triangle entry e: 1 on the diagonal, 2 off it
double sym_weight(int d, int e);

struct ScalarField {
    Grid grid;
    std::vector<double> data;

    ScalarField() = default;
    explicit ScalarField(const Grid& g) : grid(g), data(g.num_points(), 0.0) {}
    double& at(std::size_t p) { return data[p]; }
    double at(std::size_t p) const { return data[p]; }
};

struct VectorField {
    Grid grid;
    std::vector<double> data;

    VectorField() = default;
    explicit VectorField(const Grid& g) : grid(g), data(g.num_points() * g.d, 0.0) {}
    double& at(std::size_t p, int i) { return data[p * grid.d + i]; }
    double at(std::size_t p, int i) const { return data[p * grid.d + i]; }
};

struct SymTensorField {
    Grid grid;
    std::vector<double> data;

    SymTensorField() = default;
    explicit SymTensorField(const Grid& g) : grid(g), data(g.num_points() * g.num_sym(), 0.0) {}
    double& at(std::size_t p, int e) { return data[p * grid.num_sym() + e]; }
    double at(std::size_t p, int e) const { return data[p * grid.num_sym() + e]; }
    double at(std::size_t p, int i, int j) const { return data[p * grid.num_sym() + sym_index(grid.d, i, j)]; }
};

template <class Snapshot>
struct TimeField {
    Grid grid;
    std::vector<Snapshot> snaps;  // n_t + 1 snapshots, index j <-> node t_j

    TimeField() = default;
    explicit TimeField(const Grid& g) : grid(g), snaps(g.num_nodes(), Snapshot(g)) {}
    Snapshot& operator[](int j) { return snaps[static_cast<std::size_t>(j)]; }
    const Snapshot& operator[](int j) const { return snaps[static_cast<std::size_t>(j)]; }
};

using TimeScalarField = TimeField<ScalarField>;
using TimeVectorField = TimeField<VectorField>;
using TimeSymTensorField = TimeField<SymTensorField>;

// Spatial L2 inner products on the unit torus: (1/N) sum over grid points,
// full tensor contraction for symmetric tensors.
double spatial_inner(const ScalarField& a, const ScalarField& b);
double spatial_inner(const VectorField& a, const VectorField& b);
double spatial_inner(const SymTensorField& a, const SymTensorField& b);

// Trapezoidal-in-time space-time inner product over [0,T] x D.
// Throws std::invalid_argument on grid mismatch.
double space_time_inner(const TimeScalarField& a, const TimeScalarField& b);
double space_time_inner(const TimeVectorField& a, const TimeVectorField& b);
double space_time_inner(const TimeSymTensorField& a, const TimeSymTensorField& b);

double l2_norm(const VectorField& a);
double l2_norm(const TimeVectorField& a);
double max_abs(const ScalarField& a);
double max_abs(const VectorField& a);
double max_abs(const SymTensorField& a);
double max_abs(const TimeVectorField& a);
double max_abs(const TimeSymTensorField& a);

bool all_finite(const std::vector<double>& v);

// In-place linear algebra used by the optimizer: y += alpha * x, y *= alpha.
void add_scaled(TimeVectorField& y, double alpha, const TimeVectorField& x);
void scale(TimeVectorField& y, double alpha);
void add_scaled(VectorField& y, double alpha, const VectorField& x);
void scale(VectorField& y, double alpha);

// trapezoid weight of node j: dt * {1/2, 1, ..., 1, 1/2}
double trapezoid_weight(const Grid& g, int j);

}  // namespace eulerdual
