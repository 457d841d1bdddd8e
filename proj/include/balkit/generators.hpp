#pragma once

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "balkit/charge.hpp"

namespace balkit {
namespace gen {

/// Unit atoms at the integers start, start+stride, ..., up to limit.
inline DiscreteCharge integers(int limit, int start = 1, int stride = 1) {
    if (limit < start) return DiscreteCharge({}, true);
    std::vector<Atom> atoms;
    for (int k = start; k <= limit; k += stride) atoms.emplace_back(double(k), 0.0, 1.0);
    return DiscreteCharge(std::move(atoms), true);
}

/// Unit atoms at all nonzero integers with |k| <= limit.
inline DiscreteCharge nonzero_integers(int limit) {
    std::vector<Atom> atoms;
    for (int k = 1; k <= limit; ++k) {
        atoms.emplace_back(double(k), 0.0, 1.0);
        atoms.emplace_back(double(-k), 0.0, 1.0);
    }
    return DiscreteCharge(std::move(atoms), true);
}

/// Alternating charge +1 at 2k, -1 at 2k+1 (k = 1..n): its signed one-sided
/// partials telescope while the absolute partials grow like the harmonic sum.
inline DiscreteCharge alternating_sign(int n) {
    std::vector<Atom> atoms;
    for (int k = 1; k <= n; ++k) {
        atoms.emplace_back(2.0 * k, 0.0, 1.0);
        atoms.emplace_back(2.0 * k + 1.0, 0.0, -1.0);
    }
    return DiscreteCharge(std::move(atoms), true);
}

/// Odd charge +1 at k, -1 at -k (k = 1..n): two-sided partials vanish while
/// each one-sided partial grows.
inline DiscreteCharge odd_harmonic(int n) {
    std::vector<Atom> atoms;
    for (int k = 1; k <= n; ++k) {
        atoms.emplace_back(double(k), 0.0, 1.0);
        atoms.emplace_back(double(-k), 0.0, -1.0);
    }
    return DiscreteCharge(std::move(atoms), true);
}

inline double m_log(double x) { return x / std::log(std::exp(1.0) + x); }

/// Discretization of the measure on R with distribution x / ln(e + x) (odd
/// extension on the negative half-axis): geometric grid, cell masses at the
/// right endpoints.
inline DiscreteCharge m_log_density(double x_max, int points_per_decade = 8,
                                    double x_min = 1.0) {
    if (!(x_min > 0.0) || !(x_max > x_min))
        throw precondition_error("m_log_density: need 0 < x_min < x_max");
    std::vector<Atom> atoms;
    double ratio = std::pow(10.0, 1.0 / points_per_decade);
    double prev = 0.0;
    for (double x = x_min; prev < x_max; x *= ratio) {
        double xr = std::min(x, x_max);
        double dm = m_log(xr) - m_log(prev);
        atoms.emplace_back(xr, 0.0, dm);
        atoms.emplace_back(-xr, 0.0, dm);
        prev = xr;
        if (xr >= x_max) break;
    }
    return DiscreteCharge(std::move(atoms), true);
}

/// The rotated-measure example: mu - mu rotated by theta, with mu the
/// m_log_density discretization. Kept as a generator; its interval functions
/// are reported from direct sums, not from any closed-form claim.
inline DiscreteCharge ex31(double theta, double x_max = 1e4, int points_per_decade = 8) {
    DiscreteCharge mu = m_log_density(x_max, points_per_decade);
    return mu - rotate(mu, theta);
}

struct RandomChargeSpec {
    int atom_count = 50;
    double modulus_min = 0.5;
    double modulus_max = 100.0;
    double mass_max = 2.0;
    bool positive = false;
    bool avoid_axis = true;       // keep |Re z| and |Im z| away from zero
    double separation = 0.0;      // > 0: enforce |Re z| >= separation * |z|
};

/// Deterministic random charge: log-uniform moduli, uniform angles restricted
/// by the separation parameter, masses uniform in (0.1, mass_max].
inline DiscreteCharge random_charge(std::mt19937_64& rng, const RandomChargeSpec& spec) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Atom> atoms;
    atoms.reserve(spec.atom_count);
    double theta_max = spec.separation > 0.0 ? std::acos(std::min(spec.separation, 1.0))
                                             : pi / 2 * 0.999;
    double theta_min = spec.avoid_axis ? 1e-3 : 0.0;
    for (int i = 0; i < spec.atom_count; ++i) {
        double mod = spec.modulus_min *
                     std::pow(spec.modulus_max / spec.modulus_min, unit(rng));
        double phi = theta_min + (theta_max - theta_min) * unit(rng);
        if (unit(rng) < 0.5) phi = -phi;      // lower vs upper
        if (unit(rng) < 0.5) phi = pi - phi;  // left vs right half-plane
        double mass = 0.1 + (spec.mass_max - 0.1) * unit(rng);
        if (!spec.positive && unit(rng) < 0.5) mass = -mass;
        atoms.emplace_back(mod * std::cos(phi), mod * std::sin(phi), mass);
    }
    return DiscreteCharge(std::move(atoms), true);
}

/// Mirror-symmetric positive measure: pairs {z, -conj z} with equal masses.
inline DiscreteCharge random_mirror_measure(std::mt19937_64& rng, RandomChargeSpec spec) {
    spec.positive = true;
    spec.atom_count = (spec.atom_count + 1) / 2;
    DiscreteCharge half = random_charge(rng, spec);
    return half + symmetrize(half, SymmetryKind::mirror);
}

/// Even positive measure: pairs {z, -z} with equal masses.
inline DiscreteCharge random_even_measure(std::mt19937_64& rng, RandomChargeSpec spec) {
    spec.positive = true;
    spec.atom_count = (spec.atom_count + 1) / 2;
    DiscreteCharge half = random_charge(rng, spec);
    return half + symmetrize(half, SymmetryKind::central);
}

} // namespace gen
} // namespace balkit
