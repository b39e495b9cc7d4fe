#pragma once

#include <cmath>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <riemann/exact_covariance.hpp>
#include <riemann/io.hpp>
#include <riemann/sequences.hpp>
#include <riemann/stats.hpp>
#include <riemann/wiener.hpp>

// The full verification battery: every check the artifact makes against the
// closed forms, the simulator, and the deterministic sequences, with one
// pass/fail line per criterion. --quick shrinks the Monte Carlo sample
// counts and rescales the statistical tolerances by sqrt(N_full / N_quick);
// exact-identity criteria run at full scale either way.

namespace riemann {

struct CriterionResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

namespace detail {

inline void report(std::vector<CriterionResult>& out, std::ostream& os, std::string name,
                   bool pass, std::string detail) {
    os << (pass ? "ok   " : "FAIL ") << name << ": " << detail << "\n";
    out.push_back({std::move(name), pass, std::move(detail)});
}

}  // namespace detail

inline std::vector<CriterionResult> run_verification(std::ostream& os, bool quick = false,
                                                     std::uint64_t seed = 0) {
    std::vector<CriterionResult> results;

    // 1. brute-force min_sum vs the two diagonal closed forms, n up to 200
    {
        bool ok = true;
        std::uint64_t bad = 0;
        for (std::uint64_t n = 2; n <= 200; ++n) {
            if (detail::min_sum_brute(n, n) != ex_n_squared(n) ||
                detail::min_sum_brute(n, n + 1) != ex_n_xnp1(n)) {
                ok = false;
                bad = n;
                break;
            }
        }
        detail::report(results, os, "exact-identity-diagonal", ok,
                       ok ? "min_sum equals E x_n^2 and E x_n x_{n+1} closed forms, n=2..200"
                          : "first mismatch at n=" + std::to_string(bad));
    }

    // 2. the four cross-covariance closed forms and E y_4s y_2s, s up to 100
    {
        bool ok = true;
        std::uint64_t bad = 0;
        for (std::uint64_t s = 1; s <= 100; ++s) {
            CrossCovariances c = cross_covariances(s);
            if (c.x4s_x2s != min_sum(4 * s, 2 * s) ||
                c.x4s1_x2s1 != min_sum(4 * s + 1, 2 * s + 1) ||
                c.x4s1_x2s != min_sum(4 * s + 1, 2 * s) ||
                c.x4s_x2s1 != min_sum(4 * s, 2 * s + 1) ||
                ey4s_y2s(s) != c.x4s_x2s + c.x4s1_x2s1 - c.x4s1_x2s - c.x4s_x2s1) {
                ok = false;
                bad = s;
                break;
            }
        }
        detail::report(results, os, "exact-identity-cross", ok,
                       ok ? "four cross covariances and E y_4s y_2s exact, s=1..100"
                          : "first mismatch at s=" + std::to_string(bad));
    }

    // 3. E y_n^2 = 1/2 and the variance limit at s = 10^4
    {
        bool half_ok = true;
        for (std::uint64_t n = 1; n <= 200; ++n)
            if (ey_n_squared(n) != Rational(1, 2)) half_ok = false;
        Rational v = var_ydiff(10'000);
        bool limit_ok = v < Rational(1, 4) && v > Rational(1, 4) - Rational(1, 10'000'000);
        detail::report(results, os, "variance-law", half_ok && limit_ok,
                       "E y_n^2 = 1/2 for n=1..200; var_ydiff(10^4) = " +
                           format_real(to_double(v)) + " in (1/4 - 1e-7, 1/4)");
    }

    const std::uint64_t mc_full = 100'000;
    const std::uint64_t mc_n = quick ? 10'000 : mc_full;
    const double mc_scale = std::sqrt(double(mc_full) / double(mc_n));

    // 4. Monte Carlo variance of y_4s - y_2s at s=100 plus KS normality
    {
        auto rows = variance_convergence_study({100}, mc_n, seed);
        const MonteCarloSummary& m = rows[0];
        double target = to_double(*m.exact_target);
        bool ok = m.pass && m.ks_pass;
        detail::report(results, os, "monte-carlo-variance", ok,
                       "s=100, N=" + std::to_string(mc_n) + ": var " +
                           format_real(m.variance) + " vs exact " + format_real(target) +
                           " (3SE " + format_real(m.variance_ci_radius) + "), KS " +
                           format_real(m.ks_statistic) +
                           (m.ks_pass ? " pass" : " reject"));
    }

    // 5. tail functional P(|y_4s - y_2s| > 0.5) vs 2 Phi(-1)
    {
        double p = tail_probability_check(100, 0.5, mc_n, seed + 1);
        double target = 2.0 * norm_cdf(-1.0);
        double tol = 0.005 * mc_scale;
        bool ok = std::abs(p - target) <= tol;
        detail::report(results, os, "limit-law-tail", ok,
                       "P(|ydiff|>0.5) = " + format_real(p) + " vs " + format_real(target) +
                           " (tol " + format_real(tol) + ")");
    }

    // 6. deterministic convergence: x^2 and kink rates, sine decomposition
    {
        FunctionSpec square(Polynomial{{0.0, 0.0, 1.0}});
        FunctionSpec kink(Kink{0.5});
        bool ok = true;
        for (std::uint64_t n : {100ULL, 1'000ULL, 10'000ULL}) {
            if (std::abs(y_n(square, n) - 1.0 / 3.0) > 1.0 / (2.0 * double(n) * double(n)))
                ok = false;
            if (std::abs(y_n(kink, n) - 0.25) > 1.0 / double(n)) ok = false;
        }
        double resid = decomposition_residual(FunctionSpec(Sine{1.0, 1.0}), 50, 8);
        bool resid_ok = resid < 1e-10;
        detail::report(results, os, "riemann-convergence", ok && resid_ok,
                       "y_n rates for x^2 and |x-1/2| at n=1e2..1e4; sine residual " +
                           format_real(resid));
    }

    // 7. Stolz-Cesaro consistency and its O(1/n) decay
    {
        FunctionSpec square(Polynomial{{0.0, 0.0, 1.0}});
        FunctionSpec ident(Polynomial{{0.0, 1.0}});
        double d1 = stolz_cesaro_check(square, 10'000, 1'000).discrepancy;
        double d1i = stolz_cesaro_check(ident, 10'000, 1'000).discrepancy;
        double d2 = stolz_cesaro_check(square, 20'000, 2'000).discrepancy;
        bool ok = d1 < 1e-3 && d1i < 1e-3 && std::abs(d2 - d1 / 2.0) <= 0.2 * (d1 / 2.0);
        detail::report(results, os, "stolz-cesaro", ok,
                       "discrepancy " + format_real(d1) + " at n=1e4, " + format_real(d2) +
                           " at 2e4");
    }

    // 8. non-shrinking Brownian contrast envelope at s=500
    {
        const std::uint64_t paths_full = 1'000;
        const std::uint64_t paths = quick ? 250 : paths_full;
        double tol = 0.05 * std::sqrt(double(paths_full) / double(paths));
        YPairSampler sampler(500);
        std::uint64_t hits = 0;
        for (std::uint64_t r = 0; r < paths; ++r) {
            YPairSample p = sampler.sample(seed + 2, r);
            if (std::abs(p.y4s - p.y2s) > 0.5) ++hits;
        }
        double frac = double(hits) / double(paths);
        bool ok = std::abs(frac - 0.32) <= tol;
        detail::report(results, os, "brownian-contrast", ok,
                       "fraction |y_4s - y_2s| > 0.5 at s=500: " + format_real(frac) +
                           " vs 0.32 (tol " + format_real(tol) + ")");
    }

    // 9. determinism: an identically seeded quick study renders byte-identically
    {
        auto render = [seed] {
            std::ostringstream ss;
            auto rows = variance_convergence_study({1, 10}, 1'000, seed);
            for (const auto& m : rows)
                ss << m.s << ',' << format_real(m.mean) << ',' << format_real(m.variance)
                   << ',' << format_real(m.ks_statistic) << '\n';
            return ss.str();
        };
        std::string a = render();
        std::string b = render();
        bool ok = a == b;
        detail::report(results, os, "determinism", ok,
                       ok ? "repeated seeded runs render byte-identically"
                          : "outputs differ between identical runs");
    }

    return results;
}

inline bool all_passed(const std::vector<CriterionResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

}  // namespace riemann
