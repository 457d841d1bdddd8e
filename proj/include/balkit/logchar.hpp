#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "balkit/charge.hpp"
#include "balkit/report.hpp"

namespace balkit {

enum class Side { right, left, sub };

inline const char* to_string(Side s) {
    switch (s) {
        case Side::right: return "right";
        case Side::left: return "left";
        default: return "sub";
    }
}

/// Annulus (r, R] of radii. Reversed endpoints are legal and flip the sign of
/// every interval function, so normalizing reports to r0 = 1 is a no-op.
struct IntervalPair {
    double r = 0.0;
    double R = 0.0;
};

inline std::vector<IntervalPair> pairs_from(const GridSpec& grid) {
    std::vector<double> radii = grid.radii();
    std::vector<IntervalPair> out;
    for (std::size_t i = 0; i < radii.size(); ++i)
        for (std::size_t j = i + 1; j < radii.size(); ++j)
            out.push_back({radii[i], radii[j]});
    return out;
}

namespace detail {

inline double re_inv(const PlanePoint& z) {
    return z.re / (z.re * z.re + z.im * z.im);
}

// signed contribution of one atom to the requested one-sided interval function
inline double side_weight(const Atom& a, Side side) {
    if (side == Side::right) return a.location.re > 0.0 ? a.mass * re_inv(a.location) : 0.0;
    return a.location.re < 0.0 ? -a.mass * re_inv(a.location) : 0.0;
}

} // namespace detail

/// Right/left logarithmic interval function of a charge over (r, R]; the sub
/// variant is the pairwise max and requires a positive measure. Atoms on the
/// imaginary axis contribute zero, the empty charge gives zero on every side.
inline double log_interval(const DiscreteCharge& nu, Side side, IntervalPair iv) {
    if (iv.r == iv.R) return 0.0;
    if (iv.r > iv.R) return -log_interval(nu, side, {iv.R, iv.r});
    if (!(iv.r > 0.0)) throw precondition_error("log_interval: need 0 < r < R");
    if (side == Side::sub) {
        if (!nu.is_positive())
            throw precondition_error("log_interval: sub submeasure requires a positive measure");
        return std::max(log_interval(nu, Side::right, iv), log_interval(nu, Side::left, iv));
    }
    double s = 0.0;
    for (const Atom& a : nu.atoms()) {
        double t = a.location.modulus();
        if (t > iv.r && t <= iv.R) s += detail::side_weight(a, side);
    }
    return s;
}

/// Smoothed variant: the integral of nu(t; cos+-)/t^2 over (r, R], exact for
/// atoms since the weighted counting function is a step function. Satisfies
/// l(r,R) = n(R)/R - n(r)/r + breve l(r,R) with n the cos+- counting function.
inline double breve_log_interval(const DiscreteCharge& nu, Side side, IntervalPair iv) {
    if (iv.r == iv.R) return 0.0;
    if (iv.r > iv.R) return -breve_log_interval(nu, side, {iv.R, iv.r});
    if (!(iv.r > 0.0)) throw precondition_error("breve_log_interval: need 0 < r < R");
    if (side == Side::sub) {
        if (!nu.is_positive())
            throw precondition_error("breve_log_interval: sub requires a positive measure");
        return std::max(breve_log_interval(nu, Side::right, iv),
                        breve_log_interval(nu, Side::left, iv));
    }
    // jumps of nu(t; cos+ / cos-) at the atom moduli
    struct Jump {
        double t, w;
    };
    std::vector<Jump> jumps;
    jumps.reserve(nu.size());
    for (const Atom& a : nu.atoms()) {
        double c = std::cos(a.location.arg_principal());  // arg 0 := 0, so cos+ weighs an origin atom fully
        double w = side == Side::right ? std::max(c, 0.0) : std::max(-c, 0.0);
        if (w != 0.0) jumps.push_back({a.location.modulus(), a.mass * w});
    }
    std::sort(jumps.begin(), jumps.end(), [](const Jump& a, const Jump& b) { return a.t < b.t; });
    double value = 0.0;   // running nu(t; k)
    double integral = 0.0;
    double cursor = iv.r;
    std::size_t i = 0;
    for (; i < jumps.size() && jumps[i].t <= iv.r; ++i) value += jumps[i].w;
    for (; i < jumps.size() && jumps[i].t < iv.R; ++i) {
        if (jumps[i].t > cursor) {
            integral += value * (1.0 / cursor - 1.0 / jumps[i].t);
            cursor = jumps[i].t;
        }
        value += jumps[i].w;
    }
    integral += value * (1.0 / cursor - 1.0 / iv.R);
    return integral;
}

/// Characteristic logarithm l(0, R]: the r -> 0 limit of the interval
/// function, which is the plain sum over 0 < |z| <= R for finite atom lists.
/// Requires 0 not in supp nu.
inline double characteristic_log(const DiscreteCharge& nu, Side side, double R) {
    if (!(R > 0.0)) throw precondition_error("characteristic_log: R must be positive");
    if (nu.has_origin_atom())
        throw precondition_error("characteristic_log: charge has an atom at the origin");
    if (side == Side::sub) {
        if (!nu.is_positive())
            throw precondition_error("characteristic_log: sub requires a positive measure");
        return std::max(characteristic_log(nu, Side::right, R),
                        characteristic_log(nu, Side::left, R));
    }
    double s = 0.0;
    for (const Atom& a : nu.atoms()) {
        double t = a.location.modulus();
        if (t > 0.0 && t <= R) s += detail::side_weight(a, side);
    }
    return s;
}

/// Tabulated interval functions over a pair grid. values_sub is NaN for
/// signed charges (the submeasure is defined for positive measures only).
struct LogCharTable {
    std::vector<IntervalPair> grid;
    std::vector<double> values_right;
    std::vector<double> values_left;
    std::vector<double> values_sub;
    std::string charge_id;
    bool charge_positive = false;
};

inline LogCharTable make_logchar_table(const DiscreteCharge& nu,
                                       const std::vector<IntervalPair>& pairs,
                                       std::string charge_id = {}) {
    LogCharTable t;
    t.grid = pairs;
    t.charge_id = std::move(charge_id);
    t.charge_positive = nu.is_positive();
    t.values_right.reserve(pairs.size());
    t.values_left.reserve(pairs.size());
    t.values_sub.reserve(pairs.size());
    for (const IntervalPair& iv : pairs) {
        double r = log_interval(nu, Side::right, iv);
        double l = log_interval(nu, Side::left, iv);
        t.values_right.push_back(r);
        t.values_left.push_back(l);
        t.values_sub.push_back(t.charge_positive ? std::max(r, l)
                                                 : std::numeric_limits<double>::quiet_NaN());
    }
    return t;
}

/// Log-domination check nu <= mu along the real directions: per-pair excesses
/// l_nu - l_mu with the decade trend standing in for the sup over all (r, R).
inline DominationReport dominates(const DiscreteCharge& nu, const DiscreteCharge& mu,
                                  const std::vector<IntervalPair>& pairs,
                                  double slope_tol = default_slope_tol) {
    if (!nu.is_positive() || !mu.is_positive())
        throw precondition_error("dominates: both charges must be positive measures");
    std::vector<PairPoint> pts;
    pts.reserve(pairs.size());
    for (const IntervalPair& iv : pairs) {
        if (!(iv.r >= 1.0) || !(iv.r < iv.R))
            throw precondition_error("dominates: grid pairs must satisfy 1 <= r < R");
        pts.push_back({iv.r, iv.R,
                       log_interval(nu, Side::sub, iv) - log_interval(mu, Side::sub, iv)});
    }
    return DominationReport::from_pairs(std::move(pts), slope_tol);
}

/// Geometric-sequence form of the domination criterion: windows (r_n, r_N]
/// with r_n = r0 * ratio^n, reported as a running max over growing N.
inline DominationReport sequence_criterion(const DiscreteCharge& nu, const DiscreteCharge& mu,
                                           double ratio_bound, int n_max,
                                           double slope_tol = default_slope_tol,
                                           double r0 = 1.0) {
    if (!(ratio_bound > 1.0)) throw precondition_error("sequence_criterion: ratio_bound > 1 required");
    if (n_max < 1) throw precondition_error("sequence_criterion: n_max >= 1 required");
    if (!nu.is_positive() || !mu.is_positive())
        throw precondition_error("sequence_criterion: both charges must be positive measures");
    std::vector<double> radii;
    radii.reserve(n_max + 1);
    for (int n = 0; n <= n_max; ++n) radii.push_back(r0 * std::pow(ratio_bound, n));

    DominationReport rep;
    rep.slope_tol = slope_tol;
    std::vector<ProfilePoint> running;
    double run_max = -std::numeric_limits<double>::infinity();
    bool first = true;
    for (int N = 1; N <= n_max; ++N) {
        for (int n = 0; n < N; ++n) {
            IntervalPair iv{radii[n], radii[N]};
            double ex = log_interval(nu, Side::sub, iv) - log_interval(mu, Side::sub, iv);
            rep.excess.push_back({iv.r, iv.R, ex});
            run_max = std::max(run_max, ex);
            if (first || ex > rep.sup_excess) {
                rep.sup_excess = ex;
                rep.sup_r = iv.r;
                rep.sup_R = iv.R;
                first = false;
            }
        }
        running.push_back({radii[N], run_max});
    }
    rep.trend = compute_trend(running, /*use_abs=*/false);
    rep.verdict = bound_verdict(rep.trend, slope_tol);
    return rep;
}

} // namespace balkit
