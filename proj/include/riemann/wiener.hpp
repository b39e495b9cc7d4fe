#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <set>
#include <stdexcept>
#include <vector>

#include <riemann/exact_covariance.hpp>
#include <riemann/function_spec.hpp>
#include <riemann/rational.hpp>
#include <riemann/rng.hpp>
#include <riemann/summation.hpp>

// Exact finite-dimensional Wiener sampling: W at a lattice is the running sum
// of independent centered Gaussian increments with variance equal to the
// spacing, which reproduces the covariance E W(u)W(v) = min(u,v).

namespace riemann {

// One increment per lattice point; variances come in as exact rational
// spacings and are converted to double only at the last step.
inline GridPath sample_grid_path_rational(const std::vector<Rational>& points,
                                          std::uint64_t seed, std::uint64_t stream_id) {
    GridPath path;
    path.seed = seed;
    path.stream_id = stream_id;
    path.points.reserve(points.size());
    path.values.reserve(points.size());
    CounterRng rng(seed, stream_id);
    Rational prev(0);
    double w = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const Rational& p = points[i];
        if (!(p > prev) || p > 1)
            throw std::invalid_argument(
                "sample_grid_path: points must be strictly increasing in (0,1]");
        double spacing = to_double(p - prev);
        w += std::sqrt(spacing) * rng.gaussian(i);
        path.points.push_back(to_double(p));
        path.values.push_back(w);
        prev = p;
    }
    return path;
}

inline GridPath sample_grid_path(const std::vector<double>& points, std::uint64_t seed,
                                 std::uint64_t stream_id) {
    std::vector<Rational> rats;
    rats.reserve(points.size());
    for (double p : points) rats.emplace_back(p);
    return sample_grid_path_rational(rats, seed, stream_id);
}

// Sorted deduplicated union of {k/n : 1 <= k <= n-1} for
// n in {2s, 2s+1, 4s, 4s+1}, merged as exact rationals (k/(2s) and 2k/(4s)
// must collapse to one point).
inline std::vector<Rational> union_lattice_rational(std::uint64_t s) {
    if (s < 1) throw std::invalid_argument("union_lattice: s must be >= 1");
    std::set<Rational> pts;
    for (std::uint64_t n : {2 * s, 2 * s + 1, 4 * s, 4 * s + 1})
        for (std::uint64_t k = 1; k < n; ++k) pts.insert(Rational(k, n));
    return {pts.begin(), pts.end()};
}

inline std::vector<double> union_lattice(std::uint64_t s) {
    std::vector<double> out;
    for (const Rational& r : union_lattice_rational(s)) out.push_back(to_double(r));
    return out;
}

struct YPairSample {
    std::uint64_t s = 0;
    double y2s = 0.0;
    double y4s = 0.0;
};

namespace detail {

// x_n from a path sampled on a lattice containing every k/n.
inline double x_n_from_path(const GridPath& path, const std::vector<Rational>& lattice,
                            std::uint64_t n) {
    KahanSum acc;
    for (std::uint64_t k = 1; k < n; ++k) {
        Rational target(k, n);
        auto it = std::lower_bound(lattice.begin(), lattice.end(), target);
        if (it == lattice.end() || *it != target)
            throw std::logic_error("x_n_from_path: lattice missing abscissa");
        acc.add(path.values[static_cast<std::size_t>(it - lattice.begin())]);
    }
    return acc;
}

}  // namespace detail

// Precomputed lattice geometry for repeated (y_{2s}, y_{4s}) replicates:
// the rational lattice, sqrt spacings, and per-n index lists are built once,
// so each replicate is just Gaussian draws and compensated sums.
class YPairSampler {
public:
    explicit YPairSampler(std::uint64_t s) : s_(s), lattice_(union_lattice_rational(s)) {
        Rational prev(0);
        sqrt_spacing_.reserve(lattice_.size());
        for (const Rational& p : lattice_) {
            sqrt_spacing_.push_back(std::sqrt(to_double(p - prev)));
            prev = p;
        }
        for (std::uint64_t n : {2 * s, 2 * s + 1, 4 * s, 4 * s + 1}) {
            std::vector<std::size_t> idx;
            idx.reserve(n - 1);
            for (std::uint64_t k = 1; k < n; ++k) {
                Rational target(k, n);
                auto it = std::lower_bound(lattice_.begin(), lattice_.end(), target);
                idx.push_back(static_cast<std::size_t>(it - lattice_.begin()));
            }
            indices_.push_back(std::move(idx));
        }
    }

    std::uint64_t s() const { return s_; }
    const std::vector<Rational>& lattice() const { return lattice_; }

    YPairSample sample(std::uint64_t seed, std::uint64_t stream_id) const {
        CounterRng rng(seed, stream_id);
        std::vector<double> values(lattice_.size());
        double w = 0.0;
        for (std::size_t i = 0; i < values.size(); ++i) {
            w += sqrt_spacing_[i] * rng.gaussian(i);
            values[i] = w;
        }
        auto x_at = [&values](const std::vector<std::size_t>& idx) {
            KahanSum acc;
            for (std::size_t i : idx) acc.add(values[i]);
            return double(acc);
        };
        YPairSample out;
        out.s = s_;
        out.y2s = x_at(indices_[1]) - x_at(indices_[0]);
        out.y4s = x_at(indices_[3]) - x_at(indices_[2]);
        return out;
    }

private:
    std::uint64_t s_;
    std::vector<Rational> lattice_;
    std::vector<double> sqrt_spacing_;
    std::vector<std::vector<std::size_t>> indices_;  // for n = 2s, 2s+1, 4s, 4s+1
};

// One Wiener path on union_lattice(s), reduced to the Lemma 1 pair
// (y_{2s}, y_{4s}) with y_n = x_{n+1} - x_n.
inline YPairSample sample_y_pair(std::uint64_t s, std::uint64_t seed,
                                 std::uint64_t stream_id) {
    return YPairSampler(s).sample(seed, stream_id);
}

// One draw from N(0, var_ydiff(s)) — the exact law of y_{4s} - y_{2s}, which
// is itself a centered Gaussian. Serves as a same-distribution oracle.
inline double sample_gaussian_oracle(std::uint64_t s, std::uint64_t seed,
                                     std::uint64_t stream_id) {
    double sd = std::sqrt(to_double(var_ydiff(s)));
    return sd * CounterRng(seed, stream_id).gaussian(0);
}

}  // namespace riemann
