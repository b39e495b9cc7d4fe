#pragma once

#include <array>
#include <cstdint>

#include <riemann/rational.hpp>

// Gaussian covariance quantities for the lattice sums
//   x_n = sum_{k=1}^{n-1} W(k/n),   E W(u)W(v) = min(u, v),
// evaluated exactly as rationals. Every closed form here has an independent
// brute-force route through min_sum, so each identity can be checked as an
// exact rational equality.

namespace riemann {

// Above this many term-pairs min_sum switches from the O(n*m) double loop to
// the O(n+m) split-at-diagonal regrouping.
inline constexpr std::uint64_t kMinSumBruteForceLimit = 10'000'000;

namespace detail {

// Direct double loop. Terms are j/n or k/m, so the sum is accumulated as two
// integer numerators over the fixed denominators n and m.
inline Rational min_sum_brute(std::uint64_t n, std::uint64_t m) {
    BigInt over_n = 0;  // numerators of terms equal to j/n
    BigInt over_m = 0;  // numerators of terms equal to k/m
    for (std::uint64_t j = 1; j < n; ++j) {
        for (std::uint64_t k = 1; k < m; ++k) {
            if (j * m < k * n)
                over_n += j;
            else
                over_m += k;
        }
    }
    return Rational(over_n, BigInt(n)) + Rational(over_m, BigInt(m));
}

// Split sum: for fixed k, min(j/n, k/m) equals j/n for j <= n*k/m and k/m
// beyond, giving a triangular-number block plus a constant block per k.
inline Rational min_sum_split(std::uint64_t n, std::uint64_t m) {
    BigInt tri = 0;    // sum of t(t+1)/2 blocks, over denominator n
    BigInt flat = 0;   // sum of k * (count of j with min = k/m)
    for (std::uint64_t k = 1; k < m; ++k) {
        std::uint64_t t = (n * k) / m;
        if (t > n - 1) t = n - 1;
        tri += BigInt(t) * (t + 1) / 2;
        flat += BigInt(k) * (n - 1 - t);
    }
    return Rational(tri, BigInt(n)) + Rational(flat, BigInt(m));
}

}  // namespace detail

// E x_n x_m = sum_{j=1}^{n-1} sum_{k=1}^{m-1} min(j/n, k/m), exact.
// Empty sums (n = 1 or m = 1) are 0.
inline Rational min_sum(std::uint64_t n, std::uint64_t m) {
    if (n < 1 || m < 1) throw std::invalid_argument("min_sum: n, m must be >= 1");
    if (n == 1 || m == 1) return Rational(0);
    if (n <= kMinSumBruteForceLimit / m) return detail::min_sum_brute(n, m);
    return detail::min_sum_split(n, m);
}

// E x_n^2 = (2n^2 - 3n + 1)/6.
inline Rational ex_n_squared(std::uint64_t n) {
    if (n < 1) throw std::invalid_argument("ex_n_squared: n must be >= 1");
    BigInt nn(n);
    return Rational(2 * nn * nn - 3 * nn + 1, 6);
}

// E x_n x_{n+1} = (2n^2 - n - 1)/6.
inline Rational ex_n_xnp1(std::uint64_t n) {
    if (n < 1) throw std::invalid_argument("ex_n_xnp1: n must be >= 1");
    BigInt nn(n);
    return Rational(2 * nn * nn - nn - 1, 6);
}

struct CrossCovariances {
    Rational x4s_x2s;      // E x_{4s}   x_{2s}   = (32s^2 - 18s + 1)/12
    Rational x4s1_x2s1;    // E x_{4s+1} x_{2s+1} = (32s^3 + 14s^2)/(12s + 3)
    Rational x4s1_x2s;     // E x_{4s+1} x_{2s}   = (32s^3 - 2s^2 - 5s - 1)/(12s + 3)
    Rational x4s_x2s1;     // E x_{4s}   x_{2s+1} = (64s^3 + 28s^2 - 7s - 1)/(24s + 12)
};

inline CrossCovariances cross_covariances(std::uint64_t s) {
    if (s < 1) throw std::invalid_argument("cross_covariances: s must be >= 1");
    BigInt ss(s);
    BigInt s2 = ss * ss;
    BigInt s3 = s2 * ss;
    CrossCovariances c;
    c.x4s_x2s = Rational(32 * s2 - 18 * ss + 1, 12);
    c.x4s1_x2s1 = Rational(32 * s3 + 14 * s2, 12 * ss + 3);
    c.x4s1_x2s = Rational(32 * s3 - 2 * s2 - 5 * ss - 1, 12 * ss + 3);
    c.x4s_x2s1 = Rational(64 * s3 + 28 * s2 - 7 * ss - 1, 24 * ss + 12);
    return c;
}

// E y_n^2 = E x_{n+1}^2 + E x_n^2 - 2 E x_n x_{n+1}; equals 1/2 for every n.
inline Rational ey_n_squared(std::uint64_t n) {
    return ex_n_squared(n + 1) + ex_n_squared(n) - 2 * ex_n_xnp1(n);
}

// E y_{4s} y_{2s} = (12s^2 + 9s + 2)/(32s^2 + 24s + 4); tends to 12/32 = 3/8.
inline Rational ey4s_y2s(std::uint64_t s) {
    if (s < 1) throw std::invalid_argument("ey4s_y2s: s must be >= 1");
    BigInt ss(s);
    BigInt s2 = ss * ss;
    return Rational(12 * s2 + 9 * ss + 2, 32 * s2 + 24 * ss + 4);
}

// Var(y_{4s} - y_{2s}) = E y_{4s}^2 + E y_{2s}^2 - 2 E y_{4s} y_{2s}
//                      = 1 - 2 * ey4s_y2s(s); tends to 1/4 as s grows.
inline Rational var_ydiff(std::uint64_t s) {
    return Rational(1) - 2 * ey4s_y2s(s);
}

// E y_n y_m for arbitrary indices via inclusion-exclusion over min_sum.
// No closed form is provided for the general pair; derived combination only.
inline Rational ey_n_ym(std::uint64_t n, std::uint64_t m) {
    return min_sum(n + 1, m + 1) + min_sum(n, m) - min_sum(n + 1, m) - min_sum(n, m + 1);
}

}  // namespace riemann
