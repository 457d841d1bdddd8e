#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "balkit/errors.hpp"

namespace balkit {

inline constexpr double default_slope_tol = 0.05;  // excess per decade

enum class BoundVerdict { bounded, diverging, inconclusive };
enum class HoldVerdict { holds_on_range, fails, inconclusive };

inline const char* to_string(BoundVerdict v) {
    switch (v) {
        case BoundVerdict::bounded: return "bounded";
        case BoundVerdict::diverging: return "diverging";
        default: return "inconclusive";
    }
}

inline const char* to_string(HoldVerdict v) {
    switch (v) {
        case HoldVerdict::holds_on_range: return "holds_on_range";
        case HoldVerdict::fails: return "fails";
        default: return "inconclusive";
    }
}

/// Log-spaced radius grid. step_ratio 2 reproduces the default 1,2,4,...,2^14;
/// per_decade(...) gives the CLI's rmin:rmax:ppd spelling.
struct GridSpec {
    double r_min = 1.0;
    double r_max = 16384.0;
    double step_ratio = 2.0;

    static GridSpec per_decade(double r_min, double r_max, int points_per_decade) {
        if (points_per_decade < 1) throw input_error("GridSpec: points_per_decade must be >= 1");
        return GridSpec{r_min, r_max, std::pow(10.0, 1.0 / points_per_decade)};
    }

    std::vector<double> radii() const {
        if (!(r_min > 0.0) || !(r_max > r_min) || !(step_ratio > 1.0))
            throw input_error("GridSpec: need 0 < r_min < r_max and step_ratio > 1");
        std::vector<double> out;
        for (double r = r_min; r <= r_max * (1.0 + 1e-12); r *= step_ratio)
            out.push_back(std::min(r, r_max));
        if (out.back() < r_max * (1.0 - 1e-12)) out.push_back(r_max);
        return out;
    }
};

struct ProfilePoint {
    double key = 0.0;    // radius, or window ratio for pair profiles
    double value = 0.0;
};

struct TrendSummary {
    double sup = 0.0;               // max of the tracked statistic over the profile
    double argmax_key = 0.0;
    double slope_per_decade = 0.0;  // least-squares slope of per-decade maxima
    int decades = 0;                // number of populated decade buckets
};

/// Decade-bucketed trend of a profile keyed by a positive quantity; use_abs
/// tracks |value| instead of the signed value. The slope is a least-squares
/// fit of (bucket index, bucket max) over the trailing half of the decades
/// (at least three), a limsup-style statistic: a profile that stabilizes
/// after an initial rise reads as flat, sustained growth does not.
inline TrendSummary compute_trend(const std::vector<ProfilePoint>& profile, bool use_abs) {
    TrendSummary t;
    if (profile.empty()) return t;
    std::map<int, double> bucket_max;
    bool first = true;
    for (const ProfilePoint& p : profile) {
        if (!(p.key > 0.0)) throw input_error("compute_trend: keys must be positive");
        double v = use_abs ? std::abs(p.value) : p.value;
        if (first || v > t.sup) {
            t.sup = v;
            t.argmax_key = p.key;
            first = false;
        }
        int b = static_cast<int>(std::floor(std::log10(p.key) + 1e-12));
        auto it = bucket_max.find(b);
        if (it == bucket_max.end())
            bucket_max[b] = v;
        else
            it->second = std::max(it->second, v);
    }
    t.decades = static_cast<int>(bucket_max.size());
    if (t.decades >= 2) {
        std::size_t window = std::max<std::size_t>(3, (bucket_max.size() + 1) / 2);
        std::size_t skip = bucket_max.size() > window ? bucket_max.size() - window : 0;
        double sx = 0, sy = 0, sxx = 0, sxy = 0, n = 0;
        std::size_t idx = 0;
        for (auto& [b, v] : bucket_max) {
            if (idx++ < skip) continue;
            double x = b + 0.5;
            sx += x;
            sy += v;
            sxx += x * x;
            sxy += x * v;
            n += 1;
        }
        double denom = n * sxx - sx * sx;
        if (denom != 0.0) t.slope_per_decade = (n * sxy - sx * sy) / denom;
    }
    return t;
}

inline BoundVerdict bound_verdict(const TrendSummary& t, double slope_tol) {
    if (t.decades < 3) return BoundVerdict::inconclusive;
    return t.slope_per_decade <= slope_tol ? BoundVerdict::bounded : BoundVerdict::diverging;
}

inline HoldVerdict hold_verdict(const TrendSummary& t, double slope_tol) {
    if (t.decades < 3) return HoldVerdict::inconclusive;
    return t.slope_per_decade <= slope_tol ? HoldVerdict::holds_on_range : HoldVerdict::fails;
}

/// Range-qualified condition report: raw partial values plus the decade trend
/// of |partial|. Never an absolute claim; callers may apply stricter policies
/// to the raw profile.
struct ConditionReport {
    std::string tag;
    std::vector<ProfilePoint> profile;  // (r, partial value), signed
    TrendSummary trend;                 // trend of |partial|
    double slope_tol = default_slope_tol;
    HoldVerdict verdict = HoldVerdict::inconclusive;
    std::vector<std::string> notes;

    static ConditionReport from_profile(std::string tag, std::vector<ProfilePoint> profile,
                                        double slope_tol = default_slope_tol) {
        ConditionReport r;
        r.tag = std::move(tag);
        r.profile = std::move(profile);
        r.slope_tol = slope_tol;
        r.trend = compute_trend(r.profile, /*use_abs=*/true);
        r.verdict = hold_verdict(r.trend, slope_tol);
        return r;
    }
};

struct PairPoint {
    double r = 0.0;
    double R = 0.0;
    double value = 0.0;
};

/// Report for the log-domination preorder: per-pair excesses, their sup, and
/// the trend of the signed per-decade maxima keyed by the window ratio R/r.
struct DominationReport {
    std::vector<PairPoint> excess;
    double sup_excess = 0.0;
    double sup_r = 0.0, sup_R = 0.0;
    TrendSummary trend;
    double slope_tol = default_slope_tol;
    BoundVerdict verdict = BoundVerdict::inconclusive;
    std::vector<std::string> notes;

    static DominationReport from_pairs(std::vector<PairPoint> pairs,
                                       double slope_tol = default_slope_tol) {
        DominationReport rep;
        rep.excess = std::move(pairs);
        rep.slope_tol = slope_tol;
        std::vector<ProfilePoint> prof;
        prof.reserve(rep.excess.size());
        bool first = true;
        for (const PairPoint& p : rep.excess) {
            prof.push_back({p.R / p.r, p.value});
            if (first || p.value > rep.sup_excess) {
                rep.sup_excess = p.value;
                rep.sup_r = p.r;
                rep.sup_R = p.R;
                first = false;
            }
        }
        rep.trend = compute_trend(prof, /*use_abs=*/false);
        rep.verdict = bound_verdict(rep.trend, slope_tol);
        return rep;
    }
};

} // namespace balkit
