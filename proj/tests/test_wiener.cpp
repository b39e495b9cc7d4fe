#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <set>

#include <riemann/stats.hpp>
#include <riemann/wiener.hpp>

using namespace riemann;

TEST_CASE("single-point path is one N(0,1) draw") {
    GridPath p = sample_grid_path({1.0}, 42, 0);
    CHECK(p.points.size() == 1);
    CHECK(std::isfinite(p.values[0]));
    // matches the generator's first standardized draw exactly
    CHECK(p.values[0] == CounterRng(42, 0).gaussian(0));
}

TEST_CASE("determinism: identical (seed, stream) reproduces bit-identically") {
    GridPath a = sample_grid_path({0.25, 0.5, 0.75, 1.0}, 42, 0);
    GridPath b = sample_grid_path({0.25, 0.5, 0.75, 1.0}, 42, 0);
    CHECK(a.values == b.values);
    GridPath c = sample_grid_path({0.25, 0.5, 0.75, 1.0}, 42, 1);
    CHECK(a.values != c.values);

    YPairSample p1 = sample_y_pair(3, 7, 11);
    YPairSample p2 = sample_y_pair(3, 7, 11);
    CHECK(p1.y2s == p2.y2s);
    CHECK(p1.y4s == p2.y4s);
}

TEST_CASE("invalid grids are rejected") {
    CHECK_THROWS_AS(sample_grid_path({0.5, 0.5}, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(sample_grid_path({0.5, 0.25}, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(sample_grid_path({0.0, 0.5}, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(sample_grid_path({0.5, 1.5}, 1, 0), std::invalid_argument);
}

TEST_CASE("empirical covariance E W(u)W(v) = min(u,v)") {
    const std::uint64_t N = 100'000;
    KahanSum acc;
    for (std::uint64_t r = 0; r < N; ++r) {
        GridPath p = sample_grid_path({0.25, 0.75}, 2024, r);
        acc.add(p.values[0] * p.values[1]);
    }
    double est = double(acc) / double(N);
    // Var(W(u)W(v)) = u v + (u ^ v)^2 -> SE = sqrt(0.25), 3 SE band
    double se = std::sqrt((0.25 * 0.75 + 0.25 * 0.25) / double(N));
    CHECK(std::abs(est - 0.25) <= 3.0 * se);
}

TEST_CASE("union_lattice at s=1 has the 9 distinct fractions") {
    std::vector<Rational> pts = union_lattice_rational(1);
    CHECK(pts.size() == 9);
    CHECK(std::count(pts.begin(), pts.end(), Rational(1, 2)) == 1);
    CHECK(std::is_sorted(pts.begin(), pts.end()));
    std::vector<double> dbl = union_lattice(1);
    CHECK(dbl.size() == 9);
    CHECK(dbl.front() == Catch::Approx(0.2));
    CHECK(dbl.back() == Catch::Approx(0.8));
}

TEST_CASE("union_lattice size: every k/(2s) merges into k'/(4s)") {
    for (std::uint64_t s : {1ULL, 2ULL, 5ULL, 20ULL, 137ULL}) {
        std::set<Rational> expect;
        for (std::uint64_t n : {2 * s, 2 * s + 1, 4 * s, 4 * s + 1})
            for (std::uint64_t k = 1; k < n; ++k) expect.insert(Rational(k, n));
        CHECK(union_lattice_rational(s).size() == expect.size());
        // all of {k/(2s)} lies inside {k/(4s)}: union is at most
        // (4s-1) + (2s) + (4s) distinct points
        CHECK(expect.size() <= 10 * s);
    }
}

TEST_CASE("rational-to-double conversion keeps lattice points distinct") {
    for (std::uint64_t s : {1ULL, 10ULL, 1000ULL, 20'000ULL}) {
        std::vector<double> pts = union_lattice(s);
        bool distinct = true;
        for (std::size_t i = 1; i < pts.size(); ++i)
            if (!(pts[i] > pts[i - 1])) distinct = false;
        CHECK(distinct);
    }
}

TEST_CASE("sampler agrees with the grid-path route") {
    std::uint64_t s = 4, seed = 99;
    std::vector<Rational> lattice = union_lattice_rational(s);
    YPairSampler sampler(s);
    for (std::uint64_t r = 0; r < 5; ++r) {
        GridPath path = sample_grid_path_rational(lattice, seed, r);
        double y2s = detail::x_n_from_path(path, lattice, 2 * s + 1) -
                     detail::x_n_from_path(path, lattice, 2 * s);
        double y4s = detail::x_n_from_path(path, lattice, 4 * s + 1) -
                     detail::x_n_from_path(path, lattice, 4 * s);
        YPairSample p = sampler.sample(seed, r);
        CHECK(p.y2s == y2s);
        CHECK(p.y4s == y4s);
    }
}

TEST_CASE("Var(y_2s) is 1/2 and Var(y4s - y2s) matches the exact value") {
    const std::uint64_t N = 100'000;
    for (std::uint64_t s : {1ULL, 10ULL}) {
        YPairSampler sampler(s);
        KahanSum sum2, sq2, sumd, sqd;
        for (std::uint64_t r = 0; r < N; ++r) {
            YPairSample p = sampler.sample(3 + s, r);
            sum2.add(p.y2s);
            sq2.add(p.y2s * p.y2s);
            double d = p.y4s - p.y2s;
            sumd.add(d);
            sqd.add(d * d);
        }
        double n = double(N);
        double var2 = (double(sq2) - double(sum2) * double(sum2) / n) / (n - 1.0);
        double vard = (double(sqd) - double(sumd) * double(sumd) / n) / (n - 1.0);
        CHECK(std::abs(var2 - 0.5) <= 3.0 * 0.5 * std::sqrt(2.0 / n));
        double target = to_double(var_ydiff(s));
        CHECK(std::abs(vard - target) <= 3.0 * target * std::sqrt(2.0 / n));
        CHECK(std::abs(double(sumd) / n) <= 3.0 * std::sqrt(target / n));
    }
}

TEST_CASE("empirical 2x2 covariance of (y2s, y4s)") {
    const std::uint64_t N = 100'000;
    for (std::uint64_t s : {1ULL, 2ULL, 5ULL}) {
        YPairSampler sampler(s);
        KahanSum s2, s4, s22, s44, s24;
        for (std::uint64_t r = 0; r < N; ++r) {
            YPairSample p = sampler.sample(17, r);
            s2.add(p.y2s);
            s4.add(p.y4s);
            s22.add(p.y2s * p.y2s);
            s44.add(p.y4s * p.y4s);
            s24.add(p.y2s * p.y4s);
        }
        double n = double(N);
        double m2 = double(s2) / n, m4 = double(s4) / n;
        double c22 = double(s22) / n - m2 * m2;
        double c44 = double(s44) / n - m4 * m4;
        double c24 = double(s24) / n - m2 * m4;
        double cross = to_double(ey4s_y2s(s));
        // SE of a Gaussian covariance entry: sqrt((sii sjj + sij^2)/N)
        CHECK(std::abs(c22 - 0.5) <= 4.0 * std::sqrt((0.25 + 0.25) / n));
        CHECK(std::abs(c44 - 0.5) <= 4.0 * std::sqrt((0.25 + 0.25) / n));
        CHECK(std::abs(c24 - cross) <= 4.0 * std::sqrt((0.25 + cross * cross) / n));
    }
}

TEST_CASE("gaussian oracle: mean, variance, and same-distribution KS") {
    const std::uint64_t N = 10'000;
    KahanSum sum, sq;
    std::vector<double> oracle, sim;
    for (std::uint64_t r = 0; r < N; ++r) {
        double z = sample_gaussian_oracle(1, 5, r);
        sum.add(z);
        sq.add(z * z);
        oracle.push_back(z);
    }
    double n = double(N);
    double var = (double(sq) - double(sum) * double(sum) / n) / (n - 1.0);
    double target = to_double(var_ydiff(1));  // 7/30
    CHECK(std::abs(var - target) <= 3.0 * target * std::sqrt(2.0 / n));
    CHECK(std::abs(double(sum) / n) <= 3.0 * std::sqrt(target / n));

    YPairSampler sampler(10);
    for (std::uint64_t r = 0; r < N; ++r) {
        YPairSample p = sampler.sample(6, r);
        sim.push_back(p.y4s - p.y2s);
        oracle[r] = sample_gaussian_oracle(10, 7, r);
    }
    double d = ks_statistic_two_sample(oracle, sim);
    double crit = kolmogorov_critical(0.01) * std::sqrt(2.0 / n);
    CHECK(d <= crit);
}
