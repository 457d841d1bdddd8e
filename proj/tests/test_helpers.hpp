#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "balkit/balkit.hpp"

namespace testutil {

inline bool rel_close(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

inline std::mt19937_64 rng(unsigned long long seed) { return std::mt19937_64(seed); }

// Brute-force one-sided interval sum, written independently of the library's
// accumulation path (modulus/filter recomputed from scratch).
inline double oracle_log_interval(const balkit::DiscreteCharge& nu, balkit::Side side, double r,
                                  double R) {
    double s = 0.0;
    for (const balkit::Atom& a : nu.atoms()) {
        double mod = std::sqrt(a.location.re * a.location.re + a.location.im * a.location.im);
        if (!(mod > r && mod <= R)) continue;
        double re_inv = a.location.re / (mod * mod);
        if (side == balkit::Side::right && a.location.re > 0.0) s += a.mass * re_inv;
        if (side == balkit::Side::left && a.location.re < 0.0) s -= a.mass * re_inv;
    }
    return s;
}

inline std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> out;
    for (int i = 0; i < n; ++i) out.push_back(a + (b - a) * i / (n - 1));
    return out;
}

} // namespace testutil
