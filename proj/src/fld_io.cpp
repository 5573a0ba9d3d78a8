#include "eulerdual/fld_io.hpp"

#include <cstring>
#include <fstream>
#include <vector>

namespace eulerdual {

namespace {

constexpr char kMagic[4] = {'F', 'L', 'D', '1'};

struct Header {
    std::uint32_t d = 0;
    std::uint32_t rank = 0;
    std::uint32_t n = 0;
    std::uint32_t nt_plus_1 = 0;
    double T = 0.0;
};

void write_header(std::ofstream& out, const Header& h) {
    out.write(kMagic, 4);
    out.write(reinterpret_cast<const char*>(&h.d), 4);
    out.write(reinterpret_cast<const char*>(&h.rank), 4);
    out.write(reinterpret_cast<const char*>(&h.n), 4);
    out.write(reinterpret_cast<const char*>(&h.nt_plus_1), 4);
    out.write(reinterpret_cast<const char*>(&h.T), 8);
}

Header read_header(std::ifstream& in, const std::string& path) {
    char magic[4];
    Header h;
    in.read(magic, 4);
    in.read(reinterpret_cast<char*>(&h.d), 4);
    in.read(reinterpret_cast<char*>(&h.rank), 4);
    in.read(reinterpret_cast<char*>(&h.n), 4);
    in.read(reinterpret_cast<char*>(&h.nt_plus_1), 4);
    in.read(reinterpret_cast<char*>(&h.T), 8);
    if (!in) throw IoError("fld: truncated header in " + path);
    if (std::memcmp(magic, kMagic, 4) != 0) throw IoError("fld: bad magic in " + path);
    if (h.d != 2 && h.d != 3) throw IoError("fld: bad dimension in " + path);
    if (h.rank > 2) throw IoError("fld: bad rank in " + path);
    if (h.n < 4 || !is_power_of_two(static_cast<int>(h.n))) throw IoError("fld: bad n in " + path);
    if (h.nt_plus_1 < 1) throw IoError("fld: bad node count in " + path);
    if (!(h.T > 0.0)) throw IoError("fld: bad horizon in " + path);
    return h;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("fld: cannot open " + path + " for writing");
    return out;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("fld: cannot open " + path);
    return in;
}

void write_payload(std::ofstream& out, const std::vector<double>& v) {
    out.write(reinterpret_cast<const char*>(v.data()),
              static_cast<std::streamsize>(v.size() * sizeof(double)));
}

void read_payload(std::ifstream& in, std::vector<double>& v, const std::string& path) {
    in.read(reinterpret_cast<char*>(v.data()),
            static_cast<std::streamsize>(v.size() * sizeof(double)));
    if (!in) throw IoError("fld: truncated payload in " + path);
    if (!all_finite(v)) throw IoError("fld: non-finite values in " + path);
}

template <class TimeFieldT>
void write_time_field(const std::string& path, const TimeFieldT& f, std::uint32_t rank) {
    auto out = open_out(path);
    Header h{static_cast<std::uint32_t>(f.grid.d), rank, static_cast<std::uint32_t>(f.grid.n),
             static_cast<std::uint32_t>(f.grid.num_nodes()), f.grid.T};
    write_header(out, h);
    for (const auto& s : f.snaps) write_payload(out, s.data);
    if (!out) throw IoError("fld: write failed for " + path);
}

template <class TimeFieldT>
TimeFieldT read_time_field(const std::string& path, std::uint32_t rank) {
    auto in = open_in(path);
    Header h = read_header(in, path);
    if (h.rank != rank) throw IoError("fld: rank mismatch in " + path);
    if (h.nt_plus_1 < 2) throw IoError("fld: time field expected in " + path);
    Grid g = make_grid(static_cast<int>(h.d), static_cast<int>(h.n),
                       static_cast<int>(h.nt_plus_1) - 1, h.T);
    TimeFieldT f(g);
    for (auto& s : f.snaps) read_payload(in, s.data, path);
    return f;
}

}  // namespace

void write_fld(const std::string& path, const VectorField& f) {
    auto out = open_out(path);
    Header h{static_cast<std::uint32_t>(f.grid.d), 1, static_cast<std::uint32_t>(f.grid.n), 1,
             f.grid.T};
    write_header(out, h);
    write_payload(out, f.data);
    if (!out) throw IoError("fld: write failed for " + path);
}

void write_fld(const std::string& path, const TimeVectorField& f) { write_time_field(path, f, 1); }
void write_fld(const std::string& path, const TimeSymTensorField& f) { write_time_field(path, f, 2); }
void write_fld(const std::string& path, const TimeScalarField& f) { write_time_field(path, f, 0); }

VectorField read_vector_snapshot(const std::string& path, const Grid& grid) {
    auto in = open_in(path);
    Header h = read_header(in, path);
    if (h.rank != 1) throw IoError("fld: vector snapshot expected in " + path);
    if (h.nt_plus_1 != 1) throw IoError("fld: single snapshot expected in " + path);
    if (static_cast<int>(h.d) != grid.d || static_cast<int>(h.n) != grid.n)
        throw IoError("fld: grid mismatch in " + path);
    VectorField f(grid);
    read_payload(in, f.data, path);
    return f;
}

TimeVectorField read_time_vector(const std::string& path) {
    return read_time_field<TimeVectorField>(path, 1);
}
TimeSymTensorField read_time_sym(const std::string& path) {
    return read_time_field<TimeSymTensorField>(path, 2);
}
TimeScalarField read_time_scalar(const std::string& path) {
    return read_time_field<TimeScalarField>(path, 0);
}

}  // namespace eulerdual
