#include "eulerdual/grid.hpp"

#include <stdexcept>
#include <string>

namespace eulerdual {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

Grid make_grid(int d, int n, int n_t, double T) {
    if (d != 2 && d != 3)
        throw std::invalid_argument("grid.d must be 2 or 3, got " + std::to_string(d));
    if (n < 4 || !is_power_of_two(n))
        throw std::invalid_argument("grid.n must be a power of two >= 4, got " + std::to_string(n));
    if (n_t < 1)
        throw std::invalid_argument("grid.n_t must be >= 1, got " + std::to_string(n_t));
    if (!(T > 0.0))
        throw std::invalid_argument("grid.T must be positive, got " + std::to_string(T));
    return Grid{d, n, n_t, T};
}

}  // namespace eulerdual
