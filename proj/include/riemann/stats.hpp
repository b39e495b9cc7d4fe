#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include <riemann/exact_covariance.hpp>
#include <riemann/normal.hpp>
#include <riemann/sequences.hpp>
#include <riemann/wiener.hpp>

namespace riemann {

// SE of a Gaussian sample variance is sigma^2 * sqrt(2/N); the confidence
// radius is 3 SE and the hard-fail gate 5 SE, both calibrated because the
// statistic is exactly Gaussian.
struct MonteCarloSummary {
    std::uint64_t s = 0;
    std::uint64_t n_samples = 0;
    double mean = 0.0;
    double variance = 0.0;
    double variance_ci_radius = 0.0;  // 3 SE
    double ks_statistic = 0.0;
    bool ks_pass = false;
    std::optional<Rational> exact_target;
    bool pass = false;       // |variance - target| <= 3 SE
    bool hard_fail = false;  // |variance - target| > 5 SE
};

// One-sample KS statistic against the standard normal CDF.
inline double ks_statistic_normal(std::vector<double> samples) {
    if (samples.empty()) throw std::invalid_argument("ks_statistic: empty sample");
    std::sort(samples.begin(), samples.end());
    double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        double cdf = norm_cdf(samples[i]);
        d = std::max(d, (static_cast<double>(i) + 1.0) / n - cdf);
        d = std::max(d, cdf - static_cast<double>(i) / n);
    }
    return d;
}

// Two-sample KS statistic.
inline double ks_statistic_two_sample(std::vector<double> a, std::vector<double> b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("ks_statistic: empty sample");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double d = 0.0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] <= b[j])
            ++i;
        else
            ++j;
        d = std::max(d, std::abs(static_cast<double>(i) / a.size() -
                                 static_cast<double>(j) / b.size()));
    }
    return d;
}

namespace detail {

inline MonteCarloSummary summarize_ydiff(std::uint64_t s, std::uint64_t n_samples,
                                         std::uint64_t seed) {
    YPairSampler sampler(s);
    KahanSum sum, sum_sq;
    std::vector<double> diffs;
    diffs.reserve(n_samples);
    for (std::uint64_t r = 0; r < n_samples; ++r) {
        YPairSample p = sampler.sample(seed, r);
        double d = p.y4s - p.y2s;
        diffs.push_back(d);
        sum.add(d);
        sum_sq.add(d * d);
    }
    MonteCarloSummary out;
    out.s = s;
    out.n_samples = n_samples;
    double n = static_cast<double>(n_samples);
    out.mean = double(sum) / n;
    out.variance = (double(sum_sq) - n * out.mean * out.mean) / (n - 1.0);
    out.exact_target = var_ydiff(s);
    double target = to_double(*out.exact_target);
    double se = target * std::sqrt(2.0 / n);
    out.variance_ci_radius = 3.0 * se;
    out.pass = std::abs(out.variance - target) <= out.variance_ci_radius;
    out.hard_fail = std::abs(out.variance - target) > 5.0 * se;
    double sd = std::sqrt(target);
    for (double& d : diffs) d /= sd;
    out.ks_statistic = ks_statistic_normal(std::move(diffs));
    out.ks_pass = out.ks_statistic <=
                  kolmogorov_critical(0.01) / std::sqrt(n);
    return out;
}

}  // namespace detail

// One summary per s, each checked against the exact variance var_ydiff(s).
inline std::vector<MonteCarloSummary> variance_convergence_study(
    const std::vector<std::uint64_t>& s_values, std::uint64_t n_samples,
    std::uint64_t seed) {
    if (n_samples < 100)
        throw std::invalid_argument("variance_convergence_study: need >= 100 samples");
    std::vector<MonteCarloSummary> out;
    out.reserve(s_values.size());
    for (std::uint64_t s : s_values)
        out.push_back(detail::summarize_ydiff(s, n_samples, seed));
    return out;
}

// Empirical P(|y_{4s} - y_{2s}| > threshold). At threshold 0.5 the limit law
// N(0, 1/4) gives 2 Phi(-1) ~ 0.3173.
inline double tail_probability_check(std::uint64_t s, double threshold,
                                     std::uint64_t n_samples, std::uint64_t seed) {
    if (!(threshold > 0.0))
        throw std::invalid_argument("tail_probability_check: threshold must be positive");
    if (std::abs(to_double(var_ydiff(s)) - 0.25) >= 1e-3)
        throw std::invalid_argument(
            "tail_probability_check: s too small, var not yet within 1e-3 of 1/4");
    YPairSampler sampler(s);
    std::uint64_t hits = 0;
    for (std::uint64_t r = 0; r < n_samples; ++r) {
        YPairSample p = sampler.sample(seed, r);
        if (std::abs(p.y4s - p.y2s) > threshold) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(n_samples);
}

// Discrete L'Hopital consistency: with a_n = x_n and b_n = n, compare the
// tail ratio a_n/b_n against the tail-averaged increment ratio
// (a_{n+1}-a_n)/(b_{n+1}-b_n) = y_n.
struct StolzCesaroCheck {
    std::uint64_t n_max = 0;
    std::uint64_t tail_window = 0;
    double ratio_tail = 0.0;      // x_n / n at n = n_max
    double increment_tail = 0.0;  // mean of y_n over the tail window
    double discrepancy = 0.0;
};

inline StolzCesaroCheck stolz_cesaro_check(const FunctionSpec& spec, std::uint64_t n_max,
                                           std::uint64_t tail_window) {
    if (tail_window < 1 || n_max < 2 * tail_window)
        throw std::invalid_argument("stolz_cesaro_check: need n_max >= 2*tail_window");
    StolzCesaroCheck out;
    out.n_max = n_max;
    out.tail_window = tail_window;
    out.ratio_tail = x_n(spec, n_max) / static_cast<double>(n_max);
    KahanSum acc;
    double x_prev = x_n(spec, n_max - tail_window + 1);
    for (std::uint64_t n = n_max - tail_window + 1; n <= n_max; ++n) {
        double x_next = x_n(spec, n + 1);
        acc.add(x_next - x_prev);
        x_prev = x_next;
    }
    out.increment_tail = double(acc) / static_cast<double>(tail_window);
    out.discrepancy = std::abs(out.ratio_tail - out.increment_tail);
    return out;
}

// The dyadic contrast y_{4s} - y_{2s} for a deterministic spec: the quantity
// whose non-vanishing limit law drives the divergence argument.
inline std::vector<std::pair<std::uint64_t, double>> oscillation_profile(
    const FunctionSpec& spec, const std::vector<std::uint64_t>& s_values) {
    std::vector<std::pair<std::uint64_t, double>> out;
    out.reserve(s_values.size());
    for (std::uint64_t s : s_values)
        out.emplace_back(s, y_n(spec, 4 * s) - y_n(spec, 2 * s));
    return out;
}

}  // namespace riemann
