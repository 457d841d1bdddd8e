#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "balkit/logchar.hpp"
#include "balkit/quadrature.hpp"
#include "balkit/report.hpp"

namespace balkit {

/// Samples a function v on the imaginary axis: value(y) is v(iy). Hints mark
/// ordinates where v may be -infinity (e.g. axis zeros of ln|g|); the declared
/// growth bound is informational.
struct BoundarySampler {
    std::function<double(double)> value;
    std::vector<double> singularity_hints;
    double growth_bound = std::numeric_limits<double>::infinity();

    double operator()(double y) const { return value(y); }

    static BoundarySampler zero() {
        return {[](double) { return 0.0; }, {}, 0.0};
    }
};

struct JIntegralResult {
    double value = 0.0;
    double achieved_error = 0.0;
    int panels = 0;
};

/// Logarithmic integral J(r, R; v) = (1/2pi) int_r^R (v(-iy)+v(iy))/y^2 dy by
/// adaptive quadrature with absolute target tol; singular samples are refined
/// to the minimum panel width and clipped there.
inline JIntegralResult j_integral(const BoundarySampler& v, IntervalPair iv, double tol,
                                  QuadratureOptions opts = {}) {
    if (!(0.0 < iv.r && iv.r < iv.R)) throw precondition_error("j_integral: need 0 < r < R");
    if (!(tol > 0.0)) throw precondition_error("j_integral: tol must be positive");
    opts.abs_tol = tol;
    auto integrand = [&v](double y) { return (v.value(-y) + v.value(y)) / (y * y); };
    std::vector<double> hints;
    for (double h : v.singularity_hints) hints.push_back(std::abs(h));
    QuadratureResult q = adaptive_integrate(integrand, iv.r, iv.R, opts, hints);
    return {q.value / (2 * pi), q.error_estimate / (2 * pi), q.panels};
}

/// Interval-function provider used by comparisons that accept either a
/// discrete charge or an analytic fixture with closed-form l-values.
struct LogFunctions {
    std::function<double(IntervalPair)> right;
    std::function<double(IntervalPair)> left;
    std::function<double(IntervalPair)> sub;

    static LogFunctions from_charge(const DiscreteCharge& mu) {
        bool positive = mu.is_positive();
        LogFunctions lf;
        lf.right = [mu](IntervalPair iv) { return log_interval(mu, Side::right, iv); };
        lf.left = [mu](IntervalPair iv) { return log_interval(mu, Side::left, iv); };
        if (positive)
            lf.sub = [mu](IntervalPair iv) { return log_interval(mu, Side::sub, iv); };
        return lf;
    }
};

struct JllComponent {
    std::string tag;
    std::vector<PairPoint> diff;  // J - l per pair
    TrendSummary trend;           // trend of |diff| keyed by R/r
    BoundVerdict verdict = BoundVerdict::inconclusive;
};

/// Comparison of the boundary log integral with the three interval functions
/// of the matching Riesz measure; each component tracks sup |J - l| and its
/// decade trend.
struct JllReport {
    JllComponent right, left, sub;
    BoundVerdict verdict = BoundVerdict::inconclusive;
    double total_quadrature_error = 0.0;
};

inline JllReport jll_compare(const BoundarySampler& M, const LogFunctions& mu,
                             const std::vector<IntervalPair>& pairs, double tol,
                             double slope_tol = default_slope_tol) {
    if (!mu.right || !mu.left) throw precondition_error("jll_compare: right/left providers required");
    JllReport rep;
    rep.right.tag = "jll.right";
    rep.left.tag = "jll.left";
    rep.sub.tag = "jll.sub";
    for (const IntervalPair& iv : pairs) {
        JIntegralResult j = j_integral(M, iv, tol);
        rep.total_quadrature_error += j.achieved_error;
        rep.right.diff.push_back({iv.r, iv.R, j.value - mu.right(iv)});
        rep.left.diff.push_back({iv.r, iv.R, j.value - mu.left(iv)});
        if (mu.sub) rep.sub.diff.push_back({iv.r, iv.R, j.value - mu.sub(iv)});
    }
    auto finish = [&](JllComponent& c) {
        std::vector<ProfilePoint> prof;
        prof.reserve(c.diff.size());
        for (const PairPoint& p : c.diff) prof.push_back({p.R / p.r, p.value});
        c.trend = compute_trend(prof, /*use_abs=*/true);
        c.verdict = bound_verdict(c.trend, slope_tol);
    };
    finish(rep.right);
    finish(rep.left);
    if (!rep.sub.diff.empty()) finish(rep.sub);
    auto worst = [](BoundVerdict a, BoundVerdict b) {
        if (a == BoundVerdict::diverging || b == BoundVerdict::diverging)
            return BoundVerdict::diverging;
        if (a == BoundVerdict::inconclusive || b == BoundVerdict::inconclusive)
            return BoundVerdict::inconclusive;
        return BoundVerdict::bounded;
    };
    rep.verdict = worst(rep.right.verdict, rep.left.verdict);
    if (!rep.sub.diff.empty()) rep.verdict = worst(rep.verdict, rep.sub.verdict);
    return rep;
}

inline JllReport jll_compare(const BoundarySampler& M, const DiscreteCharge& mu,
                             const std::vector<IntervalPair>& pairs, double tol,
                             double slope_tol = default_slope_tol) {
    if (!mu.is_positive())
        throw precondition_error("jll_compare: mu must be a positive measure");
    return jll_compare(M, LogFunctions::from_charge(mu), pairs, tol, slope_tol);
}

} // namespace balkit
