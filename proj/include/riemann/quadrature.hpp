#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace riemann {

// Gauss-Legendre nodes and weights on [-1,1], computed by Newton iteration
// on the Legendre polynomial from Chebyshev initial guesses.
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    explicit GaussLegendreRule(unsigned order) {
        if (order < 1) throw std::invalid_argument("gauss-legendre: order must be >= 1");
        nodes.resize(order);
        weights.resize(order);
        const unsigned n = order;
        for (unsigned i = 0; i < (n + 1) / 2; ++i) {
            double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
            double dp = 0.0;
            for (int iter = 0; iter < 100; ++iter) {
                // P_n(x) and P_n'(x) by the three-term recurrence
                double p0 = 1.0, p1 = x;
                for (unsigned k = 2; k <= n; ++k) {
                    double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n * (x * p1 - p0) / (x * x - 1.0);
                double dx = p1 / dp;
                x -= dx;
                if (std::abs(dx) < 1e-15) break;
            }
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            double w = 2.0 / ((1.0 - x * x) * dp * dp);
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
    }

    template <typename F>
    double integrate(F&& f, double a, double b) const {
        double mid = 0.5 * (a + b);
        double half = 0.5 * (b - a);
        double acc = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i)
            acc += weights[i] * f(mid + half * nodes[i]);
        return half * acc;
    }
};

}  // namespace riemann
