#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "balkit/balayage.hpp"
#include "balkit/conditions.hpp"
#include "balkit/logchar.hpp"

namespace balkit {

/// Angle separation from the imaginary axis: every atom must satisfy
/// |Re z| >= d |z|.
struct SeparationCheck {
    double d_min = 1.0;      // min over atoms of |Re z| / |z|
    bool separated = false;
    double threshold = 0.0;
};

inline SeparationCheck separation_check(const DiscreteCharge& nu, double d_threshold) {
    if (!(d_threshold > 0.0 && d_threshold <= 1.0))
        throw precondition_error("separation_check: threshold must lie in (0, 1]");
    SeparationCheck chk;
    chk.threshold = d_threshold;
    for (const Atom& a : nu.atoms()) {
        double mod = a.location.modulus();
        if (mod == 0.0) {
            chk.d_min = 0.0;
            break;
        }
        chk.d_min = std::min(chk.d_min, std::abs(a.location.re) / mod);
    }
    chk.separated = chk.d_min >= d_threshold;
    return chk;
}

/// One piece of the compensator's nondecreasing function a(t): the value held
/// on (t_from, t_to].
struct StepPiece {
    double t_from = 0.0;
    double t_to = 0.0;
    double value = 0.0;
};

/// Compensating measure for one half-plane: alpha kills the negative excursions
/// of the one-sided characteristic logarithm of eta, leaving |l| <= 2 M_side.
struct CompensatorResult {
    AxisCharge alpha;               // positive, on the real axis
    DiscreteCharge alpha_charge;    // same atoms as plane points
    std::vector<StepPiece> a_function;
    double M_side = 0.0;            // exact sup over all interval pairs of l^side_eta
    double achieved_bound = 0.0;    // exact sup over all pairs of |l^side_{eta+alpha}|
    double eta_upper_density = 0.0;
    double alpha_upper_density = 0.0;
};

inline CompensatorResult compensator_alpha(const DiscreteCharge& eta, Side side,
                                           const std::vector<double>& density_grid = GridSpec{}.radii()) {
    if (side == Side::sub) throw precondition_error("compensator_alpha: side must be right or left");
    if (eta.has_origin_atom())
        throw precondition_error("compensator_alpha: 0 must not lie in supp eta");

    // jump radii and jump sizes of the one-sided characteristic logarithm
    struct Jump {
        double t, w;
    };
    std::vector<Jump> jumps;
    for (const Atom& a : eta.atoms()) {
        double w = detail::side_weight(a, side);
        if (w != 0.0) {
            double t = a.location.modulus();
            if (!jumps.empty() && jumps.back().t == t)
                jumps.back().w += w;
            else
                jumps.push_back({t, w});  // atoms come sorted by modulus
        }
    }
    std::size_t m = jumps.size();
    std::vector<double> plateau(m + 1, 0.0);  // L_0 = 0 before the first jump
    for (std::size_t k = 0; k < m; ++k) plateau[k + 1] = plateau[k] + jumps[k].w;

    std::vector<double> suffix_max(m + 1);
    suffix_max[m] = plateau[m];
    for (std::size_t k = m; k-- > 0;) suffix_max[k] = std::max(plateau[k], suffix_max[k + 1]);

    CompensatorResult res;
    // exact sup over all interval pairs: max spread L_b - min_{a <= b} L_a
    double prefix_min = 0.0;
    for (std::size_t k = 0; k <= m; ++k) {
        prefix_min = std::min(prefix_min, plateau[k]);
        res.M_side = std::max(res.M_side, plateau[k] - prefix_min);
    }

    std::vector<AxisAtom> alpha_atoms;
    std::vector<Atom> alpha_plane;
    double prev_t = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
        res.a_function.push_back({prev_t, jumps[k].t, -suffix_max[k]});
        double jump_up = suffix_max[k] - suffix_max[k + 1];
        if (jump_up > 0.0) {
            double coord = side == Side::right ? jumps[k].t : -jumps[k].t;
            alpha_atoms.push_back({coord, jumps[k].t * jump_up});
            alpha_plane.emplace_back(coord, 0.0, jumps[k].t * jump_up);
        }
        prev_t = jumps[k].t;
    }
    res.a_function.push_back({prev_t, std::numeric_limits<double>::infinity(),
                              -(m == 0 ? 0.0 : suffix_max[m])});
    res.alpha = AxisCharge(Axis::real, std::move(alpha_atoms));
    res.alpha_charge = DiscreteCharge(std::move(alpha_plane), /*origin_excluded=*/true);

    // exact bound on eta + alpha via the compensated plateaus
    double lo = 0.0, hi = 0.0;
    for (std::size_t k = 0; k <= m; ++k) {
        double compensated = plateau[k] + suffix_max[0] - suffix_max[k];
        lo = std::min(lo, compensated);
        hi = std::max(hi, compensated);
    }
    res.achieved_bound = hi - lo;

    if (!eta.empty()) res.eta_upper_density = upper_density(eta, density_grid).value;
    if (!res.alpha_charge.empty())
        res.alpha_upper_density = upper_density(res.alpha_charge, density_grid).value;
    return res;
}

struct Pr52Options {
    bool uniform_gamma = false;
    double separation_threshold = 0.1;          // applies when uniform_gamma is set
    std::vector<double> probe_widths = {0.05, 0.1, 0.2, 0.5, 0.9};
    int probe_centers = 33;
    double residual_tol = 1e-9;
    double slope_tol = default_slope_tol;
    double integral_tol = 1e-8;
    VariationSplitOptions split;
};

/// Decomposition pipeline: compensator alpha on both sides, two-sided balayage
/// theta of nu + alpha - mu, the Hahn split theta = theta+ - theta-, and the
/// derived measures beta = theta- + (theta+)x, gamma = theta+ + (theta+)x.
struct Pr52Result {
    DiscreteCharge alpha_charge;  // on R
    AxisCharge alpha;
    CompensatorResult comp_right, comp_left;
    BalayageResult theta;
    AxisCharge theta_plus, theta_minus;  // positive oracles on iR
    AxisCharge beta, gamma;              // positive measures on iR
    double residual_asg_max = 0.0;       // |(theta + beta)(I) - gamma(I)|
    double residual_even_max = 0.0;      // |gamma(I) - gamma(-I)|
    ConditionReport lindelof_sum;        // profile for nu + alpha + beta - mu
    std::optional<double> c_uniform;
    std::optional<double> beta_prime_density_sup;
    std::vector<std::string> warnings;
};

namespace detail {

inline AxisCharge smooth_only(const AxisCharge& sigma) {
    AxisCharge copy = sigma;
    AxisCharge::DensityFn de;
    if (sigma.has_density()) de = [copy](double y) { return copy.density(y); };
    return AxisCharge(sigma.axis(), {},
                      [copy](double y1, double y2) { return copy.smooth_mass(y1, y2); }, {},
                      std::move(de));
}

/// One variation of a signed axis charge: interval masses come from the
/// sign-stable bisection split, the pointwise density (when available) is the
/// corresponding one-sided part of the signed density.
inline AxisCharge signed_part(const AxisCharge& sigma, bool positive,
                              const VariationSplitOptions& opt) {
    std::vector<AxisAtom> atoms;
    for (const AxisAtom& a : sigma.atoms()) {
        if (positive && a.mass > 0.0) atoms.push_back(a);
        if (!positive && a.mass < 0.0) atoms.push_back({a.coordinate, -a.mass});
    }
    AxisCharge base = smooth_only(sigma);
    AxisCharge::IntervalMassFn smooth;
    AxisCharge::DensityFn de;
    if (sigma.has_smooth_part())
        smooth = [base, positive, opt](double y1, double y2) {
            IntervalVariation v = variation_split(base, y1, y2, opt);
            return positive ? v.positive : v.negative;
        };
    if (sigma.has_density()) {
        AxisCharge copy = sigma;
        de = [copy, positive](double y) {
            double g = copy.density(y);
            return positive ? std::max(g, 0.0) : std::max(-g, 0.0);
        };
    }
    return AxisCharge(sigma.axis(), std::move(atoms), std::move(smooth), {}, std::move(de));
}

} // namespace detail

inline Pr52Result pr52_pipeline(const DiscreteCharge& nu, const DiscreteCharge& mu,
                                const std::vector<IntervalPair>& grid,
                                const Pr52Options& opts = {}) {
    if (!nu.is_positive() || !mu.is_positive())
        throw precondition_error("pr52_pipeline: nu and mu must be positive measures");
    if (nu.has_origin_atom() || mu.has_origin_atom())
        throw precondition_error("pr52_pipeline: 0 must not lie in the supports");

    Pr52Result res;
    if (!nu.empty() && !mu.empty()) {
        DominationReport dom = dominates(nu, mu, grid, opts.slope_tol);
        if (dom.verdict == BoundVerdict::diverging)
            res.warnings.push_back("log-domination check diverging: nu is not dominated by mu on the grid");
    }

    DiscreteCharge eta = nu - mu;
    res.comp_right = compensator_alpha(eta, Side::right);
    res.comp_left = compensator_alpha(eta + res.comp_right.alpha_charge, Side::left);
    res.alpha_charge = res.comp_right.alpha_charge + res.comp_left.alpha_charge;
    res.alpha = AxisCharge(Axis::real) + res.comp_right.alpha + res.comp_left.alpha;

    DiscreteCharge swept_input = eta + res.alpha_charge;  // nu + alpha - mu
    res.theta = balayage_genus1(swept_input, BalayageMode::two_sided);

    res.theta_plus = detail::signed_part(res.theta.output, true, opts.split);
    res.theta_minus = detail::signed_part(res.theta.output, false, opts.split);
    AxisCharge theta_plus_refl = res.theta_plus.central_reflection();
    res.beta = res.theta_minus + theta_plus_refl;
    res.gamma = res.theta_plus + theta_plus_refl;

    // probe the identity theta + beta = gamma and the evenness of gamma
    double span = std::max(2.0, 2.0 * swept_input.max_modulus());
    std::vector<std::pair<double, double>> probes;
    for (int k = 0; k < opts.probe_centers; ++k) {
        double y = -span + 2.0 * span * k / (opts.probe_centers - 1);
        for (double w : opts.probe_widths) probes.emplace_back(y - w, y + w);
    }
    for (auto [y1, y2] : probes) {
        double th = res.theta.output.interval_mass(y1, y2);
        double be = res.beta.interval_mass(y1, y2);
        double ga = res.gamma.interval_mass(y1, y2);
        double ga_refl = res.gamma.interval_mass(-y2, -y1);
        res.residual_asg_max =
            std::max(res.residual_asg_max, std::abs(th + be - ga) / (1.0 + std::abs(ga)));
        res.residual_even_max =
            std::max(res.residual_even_max, std::abs(ga - ga_refl) / (1.0 + std::abs(ga)));
    }

    // Lindelof profile of nu + alpha + beta - mu over 1 < |z| <= r
    std::vector<double> radii;
    for (const IntervalPair& iv : grid) {
        radii.push_back(iv.r);
        radii.push_back(iv.R);
    }
    std::sort(radii.begin(), radii.end());
    radii.erase(std::unique(radii.begin(), radii.end()), radii.end());
    AxisCharge beta_smooth = detail::smooth_only(res.beta);
    std::vector<ProfilePoint> prof;
    double w_beta = 0.0;  // running integral of 1/y against beta over 1 < |y| <= r
    double prev_r = 1.0;
    auto inv = [](double y) { return 1.0 / y; };
    for (double r : radii) {
        if (!(r >= 1.0)) throw precondition_error("pr52_pipeline: grid radii must be >= 1");
        if (r > prev_r) {
            w_beta += beta_smooth.weighted_integral(inv, prev_r, r, opts.integral_tol);
            w_beta += beta_smooth.weighted_integral(inv, -r, -prev_r, opts.integral_tol);
            prev_r = r;
        }
        double re = 0.0, im = 0.0;
        for (const Atom& a : swept_input.atoms()) {
            double mod = a.location.modulus();
            if (mod <= 1.0 || mod > r) continue;
            double d = a.location.re * a.location.re + a.location.im * a.location.im;
            re += a.mass * a.location.re / d;
            im += a.mass * (-a.location.im) / d;
        }
        for (const AxisAtom& a : res.beta.atoms())
            if (std::abs(a.coordinate) > 1.0 && std::abs(a.coordinate) <= r)
                im += a.mass * (-1.0 / a.coordinate);
        im += -w_beta;
        prof.push_back({r, std::hypot(re, im)});
    }
    res.lindelof_sum =
        ConditionReport::from_profile("pr52.lindelof_sum", std::move(prof), opts.slope_tol);

    if (opts.uniform_gamma) {
        SeparationCheck s_nu = separation_check(nu, opts.separation_threshold);
        SeparationCheck s_mu = separation_check(mu, opts.separation_threshold);
        if (!s_nu.separated || !s_mu.separated)
            res.warnings.push_back("uniform gamma requested but inputs are not angle-separated");
        double c = 0.0;
        std::vector<double> centers;
        for (int k = 0; k < opts.probe_centers; ++k)
            centers.push_back(-span + 2.0 * span * k / (opts.probe_centers - 1));
        for (double t : opts.probe_widths)
            for (double y : centers)
                c = std::max(c, res.gamma.interval_mass(y - t, y + t) / t);
        res.c_uniform = c;
        double sup = 0.0;
        for (double t : opts.probe_widths)
            for (double y : centers) {
                double beta_prime = res.beta.interval_mass(y - t, y + t) + c * 2.0 * t -
                                    res.gamma.interval_mass(y - t, y + t);
                sup = std::max(sup, beta_prime / t);
            }
        res.beta_prime_density_sup = sup;
    }
    return res;
}

/// One equalized dyadic annulus (2^{n-1}, 2^n].
struct EqualizerAnnulus {
    int n = 0;
    double l_right_rot = 0.0;   // of the rotated mu
    double l_left_rot = 0.0;
    double b_right = 0.0;       // mass correcting the right deficiency
    double b_left = 0.0;
    double common_value = 0.0;  // l of the rotated mu on the annulus
    double residual = 0.0;      // max deviation of the equalized sides
};

struct EqualizerResult {
    AxisCharge beta;              // positive, supported on {+-i 2^n}
    DiscreteCharge beta_charge;
    std::vector<EqualizerAnnulus> annuli;
    ConditionReport r_condition;  // recorded [R] profile of mu
    double mus_residual = 0.0;    // off-axis interval functions of mu vs mu + beta
    std::optional<DiscreteCharge> even_alternative;
    std::optional<LindelofReport> even_alternative_lindelof;
};

/// Lindelof equalizer: atoms on the imaginary axis at the dyadic radii that
/// equalize the right and left interval functions of the quarter-turned
/// measure annulus by annulus. The deficiency masses follow the rotated
/// charge's own bookkeeping: a mass at -i 2^n turns into +2^n and feeds the
/// right side, one at +i 2^n feeds the left side.
inline EqualizerResult lindelof_equalizer(const DiscreteCharge& mu, int n_max,
                                          double slope_tol = default_slope_tol) {
    if (!mu.is_positive())
        throw precondition_error("lindelof_equalizer: mu must be a positive measure");
    if (n_max < 1) throw precondition_error("lindelof_equalizer: n_max >= 1 required");

    EqualizerResult res;
    DiscreteCharge rot = rotate(mu, pi / 2);

    std::vector<AxisAtom> beta_atoms;
    std::vector<Atom> beta_plane;
    for (int n = 1; n <= n_max; ++n) {
        double lo = std::ldexp(1.0, n - 1), hi = std::ldexp(1.0, n);
        EqualizerAnnulus ann;
        ann.n = n;
        ann.l_right_rot = log_interval(rot, Side::right, {lo, hi});
        ann.l_left_rot = log_interval(rot, Side::left, {lo, hi});
        ann.common_value = std::max(ann.l_right_rot, ann.l_left_rot);
        ann.b_right = hi * std::max(ann.l_left_rot - ann.l_right_rot, 0.0);
        ann.b_left = hi * std::max(ann.l_right_rot - ann.l_left_rot, 0.0);
        if (ann.b_right > 0.0) {
            beta_atoms.push_back({-hi, ann.b_right});
            beta_plane.emplace_back(0.0, -hi, ann.b_right);
        }
        if (ann.b_left > 0.0) {
            beta_atoms.push_back({hi, ann.b_left});
            beta_plane.emplace_back(0.0, hi, ann.b_left);
        }
        res.annuli.push_back(ann);
    }
    res.beta = AxisCharge(Axis::imaginary, std::move(beta_atoms));
    res.beta_charge = DiscreteCharge(std::move(beta_plane), /*origin_excluded=*/true);

    // verify the per-annulus equalities for mu + beta
    DiscreteCharge equalized_rot = rotate(mu + res.beta_charge, pi / 2);
    for (EqualizerAnnulus& ann : res.annuli) {
        double lo = std::ldexp(1.0, ann.n - 1), hi = std::ldexp(1.0, ann.n);
        double lr = log_interval(equalized_rot, Side::right, {lo, hi});
        double ll = log_interval(equalized_rot, Side::left, {lo, hi});
        ann.residual = std::max(std::abs(lr - ann.common_value), std::abs(ll - ann.common_value));
    }

    // record the [R] condition profile of mu
    std::vector<double> radii;
    for (int n = 0; n <= n_max; ++n) radii.push_back(std::ldexp(1.0, n));
    auto r_prof = detail::partial_profile(mu, radii, [](const Atom& a) {
        return detail::side_weight(a, Side::right) - detail::side_weight(a, Side::left);
    });
    res.r_condition = ConditionReport::from_profile("equalizer.r_condition", std::move(r_prof),
                                                    slope_tol);

    // both-ways domination: beta sits on iR, so off-axis interval functions
    // of mu + beta match mu exactly
    DiscreteCharge mu_prime = mu + res.beta_charge;
    for (int n = 1; n <= n_max; ++n) {
        IntervalPair iv{std::ldexp(1.0, n - 1), std::ldexp(1.0, n)};
        res.mus_residual = std::max(
            res.mus_residual, std::abs(log_interval(mu_prime, Side::right, iv) -
                                       log_interval(mu, Side::right, iv)));
        res.mus_residual = std::max(
            res.mus_residual, std::abs(log_interval(mu_prime, Side::left, iv) -
                                       log_interval(mu, Side::left, iv)));
    }

    bool right_half = true, left_half = true;
    for (const Atom& a : mu.atoms()) {
        if (a.location.re < 0.0) right_half = false;
        if (a.location.re > 0.0) left_half = false;
    }
    if (!mu.empty() && (right_half || left_half)) {
        res.even_alternative = mu + symmetrize(mu, SymmetryKind::central);
        double top = std::max(4.0, 2.0 * mu.max_modulus());
        res.even_alternative_lindelof =
            lindelof_genus1(*res.even_alternative, GridSpec{1.0, top, 2.0}.radii(), slope_tol);
    }
    return res;
}

} // namespace balkit
