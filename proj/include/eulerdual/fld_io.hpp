#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "eulerdual/field.hpp"
#include "eulerdual/grid.hpp"

namespace eulerdual {

// FLD1 binary field format (little-endian):
//   magic "FLD1", u32 d, u32 rank (0 scalar / 1 vector / 2 symtensor),
//   u32 n, u32 n_t_plus_1, f64 T, then f64 payload in C order
//   (time, space indices, component). Snapshots carry n_t_plus_1 = 1.

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_fld(const std::string& path, const VectorField& f);
void write_fld(const std::string& path, const TimeVectorField& f);
void write_fld(const std::string& path, const TimeSymTensorField& f);
void write_fld(const std::string& path, const TimeScalarField& f);

// Snapshot read; n_t/T of the returned grid are taken from `grid`, which must
// match the file's d, n.
VectorField read_vector_snapshot(const std::string& path, const Grid& grid);

// Time-field reads reconstruct the grid from the header.
TimeVectorField read_time_vector(const std::string& path);
TimeSymTensorField read_time_sym(const std::string& path);
TimeScalarField read_time_scalar(const std::string& path);

}  // namespace eulerdual
