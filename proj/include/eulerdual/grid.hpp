#pragma once

#include <cstddef>

namespace eulerdual {

// Uniform space-time discretization of [0,T] x D, D = R^d/Z^d the unit torus.
// Spatial points x_m = m/n per axis; time nodes t_j = j T/n_t, j = 0..n_t.
struct Grid {
    int d = 2;       // spatial dimension, 2 or 3
    int n = 16;      // points per spatial axis, power of two, >= 4
    int n_t = 8;     // time intervals; nodes = n_t + 1
    double T = 1.0;  // time horizon

    std::size_t num_points() const {
        std::size_t p = 1;
        for (int i = 0; i < d; ++i) p *= static_cast<std::size_t>(n);
        return p;
    }
    int num_nodes() const { return n_t + 1; }
    double dt() const { return T / n_t; }
    double time_node(int j) const { return T * static_cast<double>(j) / n_t; }
    int num_sym() const { return d * (d + 1) / 2; }

    bool same_space(const Grid& o) const { return d == o.d && n == o.n; }
    bool operator==(const Grid& o) const {
        return d == o.d && n == o.n && n_t == o.n_t && T == o.T;
    }
};

// Validates all Grid invariants; throws std::invalid_argument naming the bad field.
Grid make_grid(int d, int n, int n_t, double T);

bool is_power_of_two(int n);

}  // namespace eulerdual
