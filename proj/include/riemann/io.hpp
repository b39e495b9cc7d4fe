#pragma once

#include <cstdio>
#include <ostream>
#include <string>

#include <riemann/function_spec.hpp>

namespace riemann {

// Fixed 12-significant-digit, locale-independent rendering; identical bytes
// for identical inputs on every platform.
inline std::string format_real(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

// CSV path export: one row per lattice point, ascending.
inline void write_path_csv(std::ostream& os, const GridPath& path) {
    os << "point,value\n";
    for (std::size_t i = 0; i < path.points.size(); ++i)
        os << format_real(path.points[i]) << ',' << format_real(path.values[i]) << '\n';
}

}  // namespace riemann
