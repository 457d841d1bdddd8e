#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "balkit/logchar.hpp"
#include "balkit/report.hpp"

namespace balkit {

namespace detail {

// Cumulative partial over 1 < |z| <= r at each grid radius; atoms are walked
// once in canonical (modulus-ascending) order.
template <class Weight>
std::vector<ProfilePoint> partial_profile(const DiscreteCharge& nu,
                                          const std::vector<double>& radii, Weight w) {
    std::vector<ProfilePoint> out;
    out.reserve(radii.size());
    double acc = 0.0;
    std::size_t i = 0;
    const auto& atoms = nu.atoms();
    for (double r : radii) {
        if (!(r >= 1.0)) throw precondition_error("condition profiles require radii >= 1");
        while (i < atoms.size() && atoms[i].location.modulus() <= r) {
            if (atoms[i].location.modulus() > 1.0) acc += w(atoms[i]);
            ++i;
        }
        out.push_back({r, acc});
    }
    return out;
}

} // namespace detail

/// Classical Blaschke condition in one half-plane: partials l^side_{|nu|}(1, r).
inline ConditionReport blaschke_classical(const DiscreteCharge& nu, Side side,
                                          const std::vector<double>& radii,
                                          double slope_tol = default_slope_tol) {
    if (side == Side::sub) throw precondition_error("blaschke_classical: side must be right or left");
    DiscreteCharge tv = total_variation(nu);
    auto prof = detail::partial_profile(
        tv, radii, [side](const Atom& a) { return detail::side_weight(a, side); });
    return ConditionReport::from_profile(
        std::string("blaschke.classical.") + to_string(side), std::move(prof), slope_tol);
}

/// Genus-1 Blaschke condition: signed partials l^side_nu(1, r).
inline ConditionReport blaschke_genus1(const DiscreteCharge& nu, Side side,
                                       const std::vector<double>& radii,
                                       double slope_tol = default_slope_tol) {
    if (side == Side::sub) throw precondition_error("blaschke_genus1: side must be right or left");
    auto prof = detail::partial_profile(
        nu, radii, [side](const Atom& a) { return detail::side_weight(a, side); });
    return ConditionReport::from_profile(std::string("blaschke.genus1.") + to_string(side),
                                         std::move(prof), slope_tol);
}

/// Two-sided Blaschke condition: partials l^r_nu(1, r) + l^l_nu(1, r), which
/// vanish identically for odd and iR-antimirror charges.
inline ConditionReport blaschke_two_sided(const DiscreteCharge& nu,
                                          const std::vector<double>& radii,
                                          double slope_tol = default_slope_tol) {
    auto prof = detail::partial_profile(nu, radii, [](const Atom& a) {
        return detail::side_weight(a, Side::right) + detail::side_weight(a, Side::left);
    });
    return ConditionReport::from_profile("blaschke.two_sided", std::move(prof), slope_tol);
}

/// Genus-1 Lindelof condition: |S(r)| with S(r) the complex partial sum of
/// 1/z over 1 < |z| <= r. The real/imaginary partial profiles ride along.
struct LindelofReport {
    ConditionReport report;                // profile of |S(r)|
    std::vector<ProfilePoint> re_profile;  // sum of Re(m/z)
    std::vector<ProfilePoint> im_profile;  // sum of Im(m/z)
};

inline LindelofReport lindelof_genus1(const DiscreteCharge& nu, const std::vector<double>& radii,
                                      double slope_tol = default_slope_tol) {
    LindelofReport rep;
    rep.re_profile = detail::partial_profile(nu, radii, [](const Atom& a) {
        double d = a.location.re * a.location.re + a.location.im * a.location.im;
        return a.mass * a.location.re / d;
    });
    rep.im_profile = detail::partial_profile(nu, radii, [](const Atom& a) {
        double d = a.location.re * a.location.re + a.location.im * a.location.im;
        return a.mass * (-a.location.im) / d;
    });
    std::vector<ProfilePoint> abs_prof;
    abs_prof.reserve(radii.size());
    for (std::size_t i = 0; i < rep.re_profile.size(); ++i)
        abs_prof.push_back({rep.re_profile[i].key,
                            std::hypot(rep.re_profile[i].value, rep.im_profile[i].value)});
    rep.report = ConditionReport::from_profile("lindelof.genus1", std::move(abs_prof), slope_tol);
    return rep;
}

/// Imaginary-part Lindelof variant: partial sums of Im(m/z) over 1 < |z| <= r.
inline ConditionReport lindelof_im(const DiscreteCharge& nu, const std::vector<double>& radii,
                                   double slope_tol = default_slope_tol) {
    auto prof = detail::partial_profile(nu, radii, [](const Atom& a) {
        double d = a.location.re * a.location.re + a.location.im * a.location.im;
        return a.mass * (-a.location.im) / d;
    });
    return ConditionReport::from_profile("lindelof.im", std::move(prof), slope_tol);
}

/// The split of the Lindelof condition into the real-part pair (a Blaschke
/// style difference of the two one-sided partials) and the imaginary-part
/// condition, together with the genus-1 verdict they should reproduce.
struct LindelofRelationCheck {
    ConditionReport real_part;   // l^r(1,r) - l^l(1,r)
    ConditionReport imag_part;   // lindelof_im
    LindelofReport genus1;
    bool verdicts_consistent = false;
};

inline LindelofRelationCheck lindelof_relation_check(const DiscreteCharge& nu,
                                                     const std::vector<double>& radii,
                                                     double slope_tol = default_slope_tol) {
    LindelofRelationCheck chk;
    auto re_prof = detail::partial_profile(nu, radii, [](const Atom& a) {
        return detail::side_weight(a, Side::right) - detail::side_weight(a, Side::left);
    });
    chk.real_part =
        ConditionReport::from_profile("lindelof.real_pair", std::move(re_prof), slope_tol);
    chk.imag_part = lindelof_im(nu, radii, slope_tol);
    chk.genus1 = lindelof_genus1(nu, radii, slope_tol);
    HoldVerdict combined = HoldVerdict::holds_on_range;
    for (HoldVerdict v : {chk.real_part.verdict, chk.imag_part.verdict}) {
        if (v == HoldVerdict::fails) combined = HoldVerdict::fails;
        if (v == HoldVerdict::inconclusive && combined != HoldVerdict::fails)
            combined = HoldVerdict::inconclusive;
    }
    chk.verdicts_consistent = combined == chk.genus1.report.verdict;
    return chk;
}

struct LindelofLogcharComponent {
    std::string tag;
    std::vector<PairPoint> diff;
    TrendSummary trend;
    HoldVerdict verdict = HoldVerdict::inconclusive;
};

/// Lindelof via interval functions: the four sup expressions (right-left and
/// right-sub differences for mu and its quarter turn) evaluated on a pair grid.
struct LindelofLogcharReport {
    LindelofLogcharComponent components[4];
    HoldVerdict verdict = HoldVerdict::inconclusive;
};

inline LindelofLogcharReport lindelof_via_logchar(const DiscreteCharge& mu,
                                                  const std::vector<IntervalPair>& pairs,
                                                  double slope_tol = default_slope_tol) {
    if (!mu.is_positive())
        throw precondition_error("lindelof_via_logchar: mu must be a positive measure");
    DiscreteCharge rot = rotate(mu, pi / 2);
    const DiscreteCharge* charges[2] = {&mu, &rot};
    const char* names[2] = {"unrotated", "rotated"};
    LindelofLogcharReport rep;
    for (int c = 0; c < 2; ++c) {
        std::vector<PairPoint> d_rl, d_rs;
        d_rl.reserve(pairs.size());
        d_rs.reserve(pairs.size());
        for (const IntervalPair& iv : pairs) {
            double lr = log_interval(*charges[c], Side::right, iv);
            double ll = log_interval(*charges[c], Side::left, iv);
            d_rl.push_back({iv.r, iv.R, lr - ll});
            d_rs.push_back({iv.r, iv.R, lr - std::max(lr, ll)});
        }
        for (int k = 0; k < 2; ++k) {
            LindelofLogcharComponent& comp = rep.components[2 * c + k];
            comp.tag = std::string("lindelof.logchar.") + names[c] + (k == 0 ? ".rl" : ".rsub");
            comp.diff = k == 0 ? d_rl : d_rs;
            std::vector<ProfilePoint> prof;
            prof.reserve(comp.diff.size());
            for (const PairPoint& p : comp.diff) prof.push_back({p.R / p.r, p.value});
            comp.trend = compute_trend(prof, /*use_abs=*/true);
            comp.verdict = hold_verdict(comp.trend, slope_tol);
        }
    }
    rep.verdict = HoldVerdict::holds_on_range;
    for (const auto& comp : rep.components) {
        if (comp.verdict == HoldVerdict::fails) rep.verdict = HoldVerdict::fails;
        if (comp.verdict == HoldVerdict::inconclusive && rep.verdict != HoldVerdict::fails)
            rep.verdict = HoldVerdict::inconclusive;
    }
    return rep;
}

} // namespace balkit
