#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include <riemann/function_spec.hpp>
#include <riemann/quadrature.hpp>
#include <riemann/summation.hpp>

// The Riemann-sum increment sequence:
//   x_n = sum_{k=1}^{n-1} f(k/n),   y_n = x_{n+1} - x_n,
// and the absolutely-continuous decomposition y_n = f(0) + I_n - J_n with
//   I_n = f(n/(n+1)) - f(0),
//   J_n = sum_k integral of g over [k/(n+1), k/n),
// where g = f' a.e.

namespace riemann {

inline double x_n(const FunctionSpec& spec, std::uint64_t n) {
    if (n < 1) throw std::invalid_argument("x_n: n must be >= 1");
    KahanSum acc;
    for (std::uint64_t k = 1; k < n; ++k)
        acc.add(spec.eval(static_cast<double>(k) / static_cast<double>(n)));
    return acc;
}

inline double y_n(const FunctionSpec& spec, std::uint64_t n) {
    return x_n(spec, n + 1) - x_n(spec, n);
}

// Indicator of the window union: 1 iff u lies in some [k/(n+1), k/n) with
// 1 <= k <= n-1. The windows are disjoint since [k/(n+1), k/n) sits inside
// [(k-1)/n, k/n), so a hit requires an integer k with u*n < k <= u*(n+1).
inline int h_n(double u, std::uint64_t n) {
    if (!(u >= 0.0 && u < 1.0)) throw std::domain_error("h_n: u must be in [0,1)");
    if (n < 1) throw std::invalid_argument("h_n: n must be >= 1");
    auto k = static_cast<std::uint64_t>(u * static_cast<double>(n + 1));
    if (k < 1 || k > n - 1) return 0;
    return u * static_cast<double>(n) < static_cast<double>(k) ? 1 : 0;
}

// |y_n - (f(0) + I_n - J_n)|, J_n by per-window fixed-order Gauss-Legendre.
// Per-window integration keeps each quadrature panel clear of the window
// endpoints where g * h_n jumps.
inline double decomposition_residual(const FunctionSpec& spec, std::uint64_t n,
                                     unsigned quadrature_points = 8) {
    if (!spec.derivative_available())
        throw std::invalid_argument("decomposition_residual: spec has no a.e.-derivative");
    if (quadrature_points < 2)
        throw std::invalid_argument("decomposition_residual: need >= 2 quadrature points");
    GaussLegendreRule rule(quadrature_points);
    const double f0 = spec.eval(0.0);
    const double i_n =
        spec.eval(static_cast<double>(n) / static_cast<double>(n + 1)) - f0;
    KahanSum j_n;
    for (std::uint64_t k = 1; k < n; ++k) {
        double lo = static_cast<double>(k) / static_cast<double>(n + 1);
        double hi = static_cast<double>(k) / static_cast<double>(n);
        j_n.add(rule.integrate([&spec](double u) { return spec.derivative(u); }, lo, hi));
    }
    return std::abs(y_n(spec, n) - (f0 + i_n - double(j_n)));
}

// Tabulated x_n, y_n, x_n/n over an index range, with the max-min spread of
// y over the last tail_window indices.
struct SequenceReport {
    std::vector<std::uint64_t> n_values;
    std::vector<double> x_values;
    std::vector<double> y_values;
    std::vector<double> mean_values;  // x_n / n
    double oscillation = 0.0;
    std::uint64_t tail_window = 0;
};

inline SequenceReport sequence_report(const FunctionSpec& spec, std::uint64_t n_min,
                                      std::uint64_t n_max, std::uint64_t tail_window) {
    if (n_min < 1 || n_min > n_max)
        throw std::invalid_argument("sequence_report: need 1 <= n_min <= n_max");
    if (tail_window < 1)
        throw std::invalid_argument("sequence_report: tail_window must be >= 1");
    SequenceReport rep;
    rep.tail_window = tail_window;
    double x_prev = x_n(spec, n_min);
    for (std::uint64_t n = n_min; n <= n_max; ++n) {
        double x_next = x_n(spec, n + 1);
        rep.n_values.push_back(n);
        rep.x_values.push_back(x_prev);
        rep.y_values.push_back(x_next - x_prev);
        rep.mean_values.push_back(x_prev / static_cast<double>(n));
        x_prev = x_next;
    }
    std::size_t count = rep.y_values.size();
    std::size_t start = count > tail_window ? count - tail_window : 0;
    double lo = rep.y_values[start], hi = rep.y_values[start];
    for (std::size_t i = start; i < count; ++i) {
        lo = std::min(lo, rep.y_values[i]);
        hi = std::max(hi, rep.y_values[i]);
    }
    rep.oscillation = hi - lo;
    return rep;
}

}  // namespace riemann
