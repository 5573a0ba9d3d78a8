#include "eulerdual/field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace eulerdual {

int sym_index(int d, int i, int j) {
    if (i > j) std::swap(i, j);
    // row-major upper triangle: offset of row i is i*d - i(i-1)/2
    return i * d - i * (i - 1) / 2 + (j - i);
}

double sym_weight(int d, int e) {
    for (int i = 0, idx = 0; i < d; ++i)
        for (int j = i; j < d; ++j, ++idx)
            if (idx == e) return i == j ? 1.0 : 2.0;
    throw std::out_of_range("sym_weight: bad entry index");
}

double trapezoid_weight(const Grid& g, int j) {
    const double dt = g.dt();
    return (j == 0 || j == g.n_t) ? 0.5 * dt : dt;
}

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

void check_same_space(const Grid& a, const Grid& b, const char* what) {
    if (!a.same_space(b)) throw std::invalid_argument(std::string(what) + ": grid mismatch");
}

void check_same_grid(const Grid& a, const Grid& b, const char* what) {
    if (!(a == b)) throw std::invalid_argument(std::string(what) + ": grid mismatch");
}

}  // namespace

double spatial_inner(const ScalarField& a, const ScalarField& b) {
    check_same_space(a.grid, b.grid, "spatial_inner");
    return dot(a.data, b.data) / static_cast<double>(a.grid.num_points());
}

double spatial_inner(const VectorField& a, const VectorField& b) {
    check_same_space(a.grid, b.grid, "spatial_inner");
    return dot(a.data, b.data) / static_cast<double>(a.grid.num_points());
}

double spatial_inner(const SymTensorField& a, const SymTensorField& b) {
    check_same_space(a.grid, b.grid, "spatial_inner");
    const int nsym = a.grid.num_sym();
    const std::size_t np = a.grid.num_points();
    double s = 0.0;
    for (std::size_t p = 0; p < np; ++p)
        for (int e = 0; e < nsym; ++e)
            s += sym_weight(a.grid.d, e) * a.at(p, e) * b.at(p, e);
    return s / static_cast<double>(np);
}

template <class Snapshot>
static double space_time_inner_impl(const TimeField<Snapshot>& a, const TimeField<Snapshot>& b) {
    check_same_grid(a.grid, b.grid, "space_time_inner");
    double s = 0.0;
    for (int j = 0; j <= a.grid.n_t; ++j)
        s += trapezoid_weight(a.grid, j) * spatial_inner(a[j], b[j]);
    return s;
}

double space_time_inner(const TimeScalarField& a, const TimeScalarField& b) { return space_time_inner_impl(a, b); }
double space_time_inner(const TimeVectorField& a, const TimeVectorField& b) { return space_time_inner_impl(a, b); }
double space_time_inner(const TimeSymTensorField& a, const TimeSymTensorField& b) { return space_time_inner_impl(a, b); }

double l2_norm(const VectorField& a) { return std::sqrt(spatial_inner(a, a)); }
double l2_norm(const TimeVectorField& a) { return std::sqrt(space_time_inner(a, a)); }

namespace {
double max_abs_vec(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}
}  // namespace

double max_abs(const ScalarField& a) { return max_abs_vec(a.data); }
double max_abs(const VectorField& a) { return max_abs_vec(a.data); }
double max_abs(const SymTensorField& a) { return max_abs_vec(a.data); }

double max_abs(const TimeVectorField& a) {
    double m = 0.0;
    for (const auto& s : a.snaps) m = std::max(m, max_abs(s));
    return m;
}

double max_abs(const TimeSymTensorField& a) {
    double m = 0.0;
    for (const auto& s : a.snaps) m = std::max(m, max_abs(s));
    return m;
}

bool all_finite(const std::vector<double>& v) {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

void add_scaled(VectorField& y, double alpha, const VectorField& x) {
    for (std::size_t i = 0; i < y.data.size(); ++i) y.data[i] += alpha * x.data[i];
}

void scale(VectorField& y, double alpha) {
    for (double& v : y.data) v *= alpha;
}

void add_scaled(TimeVectorField& y, double alpha, const TimeVectorField& x) {
    for (int j = 0; j <= y.grid.n_t; ++j) add_scaled(y[j], alpha, x[j]);
}

void scale(TimeVectorField& y, double alpha) {
    for (auto& s : y.snaps) scale(s, alpha);
}

}  // namespace eulerdual
