#pragma once

#include <atomic>
#include <cmath>
#include <memory>
#include <string>
#include <vector>

#include "balkit/axis_charge.hpp"
#include "balkit/charge.hpp"
#include "balkit/conditions.hpp"
#include "balkit/report.hpp"

namespace balkit {

/// Two-sided harmonic measure of the interval (iy1, iy2] for C \ iR, seen
/// from z: the subtended angle over pi. Values lie in [0, 1]. For z on the
/// axis the radial limit is used (1/2 at an endpoint, 0 outside the closed
/// segment); z strictly inside the open segment is rejected.
inline double harmonic_measure(PlanePoint z, double y1, double y2) {
    if (!(y1 < y2)) throw precondition_error("harmonic_measure: need y1 < y2");
    if (z.re == 0.0) {
        if (z.im > y1 && z.im < y2)
            throw precondition_error("harmonic_measure: z lies on the open target segment");
        return (z.im == y1 || z.im == y2) ? 0.5 : 0.0;
    }
    double ax = std::abs(z.re);
    return (std::atan((y2 - z.im) / ax) - std::atan((y1 - z.im) / ax)) / pi;
}

/// Two-sided harmonic charge of genus 1: the harmonic measure minus the
/// first-order correction (y2-y1)/pi * |Re(1/z)|. May be negative; vanishes
/// into the harmonic measure on the axis (where Re(1/z) = 0).
inline double harmonic_charge_genus1(PlanePoint z, double y1, double y2) {
    if (z.is_origin()) throw precondition_error("harmonic_charge_genus1: z must be nonzero");
    double corr = std::abs(z.re) / (z.re * z.re + z.im * z.im);
    return harmonic_measure(z, y1, y2) - (y2 - y1) / pi * corr;
}

enum class BalayageGenus { zero, one_right, one_left, one_two_sided };
enum class BalayageMode { right, left, two_sided };

inline const char* to_string(BalayageGenus g) {
    switch (g) {
        case BalayageGenus::zero: return "zero";
        case BalayageGenus::one_right: return "one_right";
        case BalayageGenus::one_left: return "one_left";
        default: return "one_two_sided";
    }
}

struct BalayageOptions {
    // Atoms exactly on |z| = 1 take the genus-1 correction branch by default;
    // flip to route them through the plain harmonic measure instead.
    bool unit_circle_to_omega = false;
    double min_modulus = 1e-9;  // genus-1 kernels are singular at the origin
};

/// Result of sweeping a discrete charge onto the imaginary axis. The output
/// oracle is exact for discrete inputs (finite sums of closed-form kernels);
/// input atoms already on the axis pass through unchanged.
struct BalayageResult {
    AxisCharge output;                 // axis = imaginary
    std::vector<Atom> kept_atoms;      // input atoms on iR
    BalayageGenus genus = BalayageGenus::zero;
    DiscreteCharge input;
    std::vector<std::string> warnings;
    std::shared_ptr<std::atomic<long long>> kernel_calls =
        std::make_shared<std::atomic<long long>>(0);

    long long kernel_call_count() const { return kernel_calls->load(); }
};

namespace detail {

struct SweepAtom {
    PlanePoint z;
    double mass;
    bool genus1;  // apply the first-order correction
};

inline AxisCharge make_swept_axis_charge(std::vector<Atom> axis_atoms,
                                         std::vector<SweepAtom> swept,
                                         std::shared_ptr<std::atomic<long long>> counter) {
    std::vector<AxisAtom> atoms;
    atoms.reserve(axis_atoms.size());
    for (const Atom& a : axis_atoms) atoms.push_back({a.location.im, a.mass});
    double scale = 0.0;
    for (const SweepAtom& s : swept) scale += std::abs(s.mass);
    auto shared = std::make_shared<const std::vector<SweepAtom>>(std::move(swept));
    AxisCharge::IntervalMassFn smooth, err;
    AxisCharge::DensityFn density;
    if (!shared->empty()) {
        smooth = [shared, counter](double y1, double y2) {
            double s = 0.0;
            for (const SweepAtom& a : *shared)
                s += a.mass * (a.genus1 ? harmonic_charge_genus1(a.z, y1, y2)
                                        : harmonic_measure(a.z, y1, y2));
            counter->fetch_add(static_cast<long long>(shared->size()),
                               std::memory_order_relaxed);
            return s;
        };
        err = [shared, scale](double, double) {
            return 1e-15 * (1.0 + scale) * static_cast<double>(shared->size());
        };
        density = [shared](double y) {
            double s = 0.0;
            for (const SweepAtom& a : *shared) {
                double ax = std::abs(a.z.re);
                double dy = y - a.z.im;
                double k = ax / (ax * ax + dy * dy) / pi;
                if (a.genus1) k -= ax / (a.z.re * a.z.re + a.z.im * a.z.im) / pi;
                s += a.mass * k;
            }
            return s;
        };
    }
    return AxisCharge(Axis::imaginary, std::move(atoms), std::move(smooth), std::move(err),
                      std::move(density));
}

} // namespace detail

/// Classical (genus 0) balayage onto iR: every off-axis atom spreads as its
/// harmonic-measure profile; the classical Blaschke condition for |nu| is
/// checked in both half-planes and a warning is attached when it fails.
inline BalayageResult balayage_genus0(const DiscreteCharge& nu,
                                      const std::vector<double>& blaschke_grid = GridSpec{}.radii()) {
    BalayageResult res;
    res.genus = BalayageGenus::zero;
    res.input = nu;
    std::vector<Atom> kept;
    std::vector<detail::SweepAtom> swept;
    for (const Atom& a : nu.atoms()) {
        if (a.location.on_imaginary_axis())
            kept.push_back(a);
        else
            swept.push_back({a.location, a.mass, false});
    }
    for (Side side : {Side::right, Side::left}) {
        ConditionReport rep = blaschke_classical(nu, side, blaschke_grid);
        if (rep.verdict != HoldVerdict::holds_on_range)
            res.warnings.push_back(std::string("classical Blaschke ") + to_string(side) +
                                   " half-plane: " + to_string(rep.verdict));
    }
    res.kept_atoms = kept;
    res.output = detail::make_swept_axis_charge(std::move(kept), std::move(swept), res.kernel_calls);
    return res;
}

/// Genus-1 balayage onto iR per half-plane or two-sided: inside the unit disc
/// the harmonic measure applies, outside the genus-1 harmonic charge.
inline BalayageResult balayage_genus1(const DiscreteCharge& nu, BalayageMode mode,
                                      const BalayageOptions& opts = {}) {
    BalayageResult res;
    res.genus = mode == BalayageMode::right  ? BalayageGenus::one_right
                : mode == BalayageMode::left ? BalayageGenus::one_left
                                             : BalayageGenus::one_two_sided;
    res.input = nu;
    std::vector<Atom> kept;
    std::vector<detail::SweepAtom> swept;
    for (const Atom& a : nu.atoms()) {
        if (a.location.on_imaginary_axis()) {
            kept.push_back(a);
            continue;
        }
        if ((mode == BalayageMode::right && a.location.re < 0.0) ||
            (mode == BalayageMode::left && a.location.re > 0.0))
            continue;  // other half-plane is untouched by a one-sided sweep
        double mod = a.location.modulus();
        if (mod < opts.min_modulus)
            throw precondition_error("balayage_genus1: atom closer to the origin than min_modulus");
        bool outside = opts.unit_circle_to_omega ? mod > 1.0 : mod >= 1.0;
        swept.push_back({a.location, a.mass, outside});
    }
    res.kept_atoms = kept;
    res.output = detail::make_swept_axis_charge(std::move(kept), std::move(swept), res.kernel_calls);
    return res;
}

/// Cross-check evaluation path for the two-sided sweep through the
/// iR-symmetrization: right-balayage of nu + nu_mirror minus the axis trace
/// of nu. Agrees with balayage_genus1(nu, two_sided) exactly.
inline BalayageResult balayage_two_sided_via_symmetrization(const DiscreteCharge& nu,
                                                            const BalayageOptions& opts = {}) {
    DiscreteCharge doubled = nu + symmetrize(nu, SymmetryKind::mirror);
    BalayageResult right = balayage_genus1(doubled, BalayageMode::right, opts);
    AxisCharge axis_trace = axis_distribution(nu, Axis::imaginary);
    BalayageResult res;
    res.genus = BalayageGenus::one_two_sided;
    res.input = nu;
    res.kernel_calls = right.kernel_calls;
    for (const Atom& a : nu.atoms())
        if (a.location.on_imaginary_axis()) res.kept_atoms.push_back(a);
    res.output = right.output - axis_trace;
    res.warnings.push_back("evaluated via right sweep of the iR-symmetrized charge");
    return res;
}

/// Total variation of an axis charge over the closed symmetric window [-r, r]
/// via the partition-refinement split.
inline double radial_total_variation(const AxisCharge& sigma, double r,
                                     const VariationSplitOptions& opt = {}) {
    if (!(r >= 0.0)) throw precondition_error("radial_total_variation: r >= 0 required");
    if (r == 0.0) return 0.0;
    IntervalVariation v = variation_split(sigma, -r, r, opt);
    double s = v.total();
    for (const AxisAtom& a : sigma.atoms())
        if (a.coordinate == -r) s += std::abs(a.mass);
    return s;
}

/// Integral of f over the axis annulus 1 < |y| <= r with exact atom handling.
inline double axis_annulus_integral(const AxisCharge& sigma,
                                    const std::function<double(double)>& f, double r,
                                    double tol = 1e-9) {
    if (!(r > 1.0)) return 0.0;
    double pos = sigma.weighted_integral(f, 1.0, r, tol);
    double neg = sigma.weighted_integral(f, -r, -1.0, tol);
    for (const AxisAtom& a : sigma.atoms()) {
        if (a.coordinate == -1.0) neg -= a.mass * f(-1.0);  // |y| = 1 is excluded
        if (a.coordinate == -r) neg += a.mass * f(-r);      // |y| = r belongs to the annulus
    }
    return pos + neg;
}

struct BalayageGrowthOptions {
    std::vector<double> small_radii = {1e-3, 3e-3, 1e-2, 3e-2, 1e-1};
    std::vector<double> window_widths = {0.05, 0.1, 0.25, 0.5, 1.0};
    std::vector<double> window_centers;  // default: derived from the output support
    double slope_tol = default_slope_tol;
    double integral_tol = 1e-8;
    VariationSplitOptions split;
};

/// Growth diagnostics of a balayage output: the O(r log r) profile at large r,
/// the O(r^2) profile near zero, the unit-window density sup, and the Lindelof
/// profile of input minus output.
struct BalayageGrowthReport {
    std::vector<ProfilePoint> large_r;  // tv(r) / (r ln r)
    TrendSummary large_r_trend;
    std::vector<ProfilePoint> small_r;  // tv(r) / r^2
    double small_r_constant = 0.0;
    std::vector<ProfilePoint> unit_window;  // (t, sup_y tv([y-t, y+t]) / t)
    double unit_window_sup = 0.0;
    ConditionReport lindelof_diff;  // |partial Lindelof sums| of input - output
    std::vector<std::string> notes;
};

inline BalayageGrowthReport balayage_growth_report(const BalayageResult& result,
                                                   const std::vector<double>& radii,
                                                   const BalayageGrowthOptions& opts = {}) {
    BalayageGrowthReport rep;
    const AxisCharge& out = result.output;

    for (double r : radii) {
        if (!(r > 1.0)) continue;
        double tv = radial_total_variation(out, r, opts.split);
        rep.large_r.push_back({r, tv / (r * std::log(r))});
    }
    rep.large_r_trend = compute_trend(rep.large_r, /*use_abs=*/true);

    if (!result.input.has_origin_atom()) {
        for (double r : opts.small_radii) {
            double tv = radial_total_variation(out, r, opts.split);
            rep.small_r.push_back({r, tv / (r * r)});
            rep.small_r_constant = std::max(rep.small_r_constant, tv / (r * r));
        }
    } else {
        rep.notes.push_back("small-r profile skipped: origin in the input support");
    }

    std::vector<double> centers = opts.window_centers;
    if (centers.empty()) {
        double span = std::max(1.0, result.input.max_modulus());
        for (int k = -8; k <= 8; ++k) centers.push_back(span * k / 8.0);
    }
    for (double t : opts.window_widths) {
        double sup = 0.0;
        for (double y : centers) {
            IntervalVariation v = variation_split(out, y - t, y + t, opts.split);
            sup = std::max(sup, v.total() / t);
        }
        rep.unit_window.push_back({t, sup});
        rep.unit_window_sup = std::max(rep.unit_window_sup, sup);
    }

    // Lindelof partial sums of input - output over 1 < |z| <= r
    std::vector<ProfilePoint> prof;
    prof.reserve(radii.size());
    for (double r : radii) {
        if (!(r >= 1.0)) throw precondition_error("balayage_growth_report: radii must be >= 1");
        double re = 0.0, im = 0.0;
        for (const Atom& a : result.input.atoms()) {
            double mod = a.location.modulus();
            if (mod <= 1.0 || mod > r) continue;
            double d = a.location.re * a.location.re + a.location.im * a.location.im;
            re += a.mass * a.location.re / d;
            im += a.mass * (-a.location.im) / d;
        }
        if (r > 1.0) {
            // minus the output part: 1/(iy) = -i/y contributes only to Im
            double w = axis_annulus_integral(out, [](double y) { return 1.0 / y; }, r,
                                             opts.integral_tol);
            im += w;
        }
        prof.push_back({r, std::hypot(re, im)});
    }
    rep.lindelof_diff =
        ConditionReport::from_profile("balayage.lindelof_diff", std::move(prof), opts.slope_tol);
    return rep;
}

} // namespace balkit
