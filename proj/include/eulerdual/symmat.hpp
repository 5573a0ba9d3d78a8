#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>

namespace eulerdual {

// Closed-form kernels for symmetric 2x2 / 3x3 matrices stored as upper
// triangles (a[3] = {00,01,11}, a[6] = {00,01,02,11,12,22}).

inline double eig_min_sym2(const double a[3]) {
    const double mean = 0.5 * (a[0] + a[2]);
    const double rad = std::hypot(0.5 * (a[0] - a[2]), a[1]);
    return mean - rad;
}

inline double eig_max_sym2(const double a[3]) {
    const double mean = 0.5 * (a[0] + a[2]);
    const double rad = std::hypot(0.5 * (a[0] - a[2]), a[1]);
    return mean + rad;
}

// Trigonometric method for 3x3 symmetric eigenvalues, eigs[0] >= eigs[1] >= eigs[2].
inline void eig_sym3(const double a[6], double eigs[3]) {
    const double a00 = a[0], a01 = a[1], a02 = a[2], a11 = a[3], a12 = a[4], a22 = a[5];
    const double p1 = a01 * a01 + a02 * a02 + a12 * a12;
    if (p1 == 0.0) {
        eigs[0] = std::max({a00, a11, a22});
        eigs[2] = std::min({a00, a11, a22});
        eigs[1] = a00 + a11 + a22 - eigs[0] - eigs[2];
        return;
    }
    const double q = (a00 + a11 + a22) / 3.0;
    const double b00 = a00 - q, b11 = a11 - q, b22 = a22 - q;
    const double p2 = b00 * b00 + b11 * b11 + b22 * b22 + 2.0 * p1;
    const double p = std::sqrt(p2 / 6.0);
    // r = det(B/p)/2, clamped against roundoff
    const double detb = b00 * (b11 * b22 - a12 * a12) - a01 * (a01 * b22 - a12 * a02) +
                        a02 * (a01 * a12 - b11 * a02);
    double r = detb / (2.0 * p * p * p);
    r = std::clamp(r, -1.0, 1.0);
    const double phi = std::acos(r) / 3.0;
    const double two_pi_3 = 2.0 * std::numbers::pi / 3.0;
    eigs[0] = q + 2.0 * p * std::cos(phi);
    eigs[2] = q + 2.0 * p * std::cos(phi + two_pi_3);
    eigs[1] = 3.0 * q - eigs[0] - eigs[2];
}

inline double eig_min_sym3(const double a[6]) {
    double e[3];
    eig_sym3(a, e);
    return e[2];
}

inline double eig_max_sym3(const double a[6]) {
    double e[3];
    eig_sym3(a, e);
    return e[0];
}

// Solve A x = b for symmetric positive definite A (caller guarantees
// definiteness through the feasibility margin).
inline void solve_sym2(const double a[3], const double b[2], double x[2]) {
    const double det = a[0] * a[2] - a[1] * a[1];
    x[0] = (a[2] * b[0] - a[1] * b[1]) / det;
    x[1] = (a[0] * b[1] - a[1] * b[0]) / det;
}

inline void solve_sym3(const double a[6], const double b[3], double x[3]) {
    const double a00 = a[0], a01 = a[1], a02 = a[2], a11 = a[3], a12 = a[4], a22 = a[5];
    const double c00 = a11 * a22 - a12 * a12;
    const double c01 = a02 * a12 - a01 * a22;
    const double c02 = a01 * a12 - a02 * a11;
    const double det = a00 * c00 + a01 * c01 + a02 * c02;
    const double c11 = a00 * a22 - a02 * a02;
    const double c12 = a01 * a02 - a00 * a12;
    const double c22 = a00 * a11 - a01 * a01;
    x[0] = (c00 * b[0] + c01 * b[1] + c02 * b[2]) / det;
    x[1] = (c01 * b[0] + c11 * b[1] + c12 * b[2]) / det;
    x[2] = (c02 * b[0] + c12 * b[1] + c22 * b[2]) / det;
}

}  // namespace eulerdual
