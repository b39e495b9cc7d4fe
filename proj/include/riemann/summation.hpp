#pragma once

namespace riemann {

// Kahan compensated accumulator.
struct KahanSum {
    double sum = 0.0;
    double compensation = 0.0;

    void add(double value) {
        double y = value - compensation;
        double t = sum + y;
        compensation = (t - sum) - y;
        sum = t;
    }

    operator double() const { return sum; }
};

}  // namespace riemann
