#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "balkit/errors.hpp"

namespace balkit {

inline constexpr double pi = 3.141592653589793238462643383279502884;

/// A point of the complex plane. Arguments follow the convention
/// arg z in [-pi/2, 3*pi/2) so that the imaginary axis splits angles
/// symmetrically; arg 0 is defined as 0.
struct PlanePoint {
    double re = 0.0;
    double im = 0.0;

    PlanePoint() = default;
    PlanePoint(double re_, double im_) : re(re_), im(im_) {
        if (!std::isfinite(re) || !std::isfinite(im))
            throw input_error("PlanePoint: coordinates must be finite");
    }
    explicit PlanePoint(std::complex<double> z) : PlanePoint(z.real(), z.imag()) {}

    double modulus() const { return std::hypot(re, im); }

    double arg_principal() const {
        if (re == 0.0 && im == 0.0) return 0.0;
        double a = std::atan2(im, re);   // (-pi, pi]
        if (a < -pi / 2) a += 2 * pi;    // -> [-pi/2, 3*pi/2)
        return a;
    }

    std::complex<double> as_complex() const { return {re, im}; }

    bool on_real_axis() const { return im == 0.0; }
    bool on_imaginary_axis() const { return re == 0.0; }
    bool is_origin() const { return re == 0.0 && im == 0.0; }

    friend bool operator==(const PlanePoint& a, const PlanePoint& b) {
        return a.re == b.re && a.im == b.im;
    }
};

/// Weighted Dirac atom. Zero-mass atoms never survive charge construction.
struct Atom {
    PlanePoint location;
    double mass = 0.0;

    Atom() = default;
    Atom(PlanePoint loc, double m) : location(loc), mass(m) {
        if (!std::isfinite(mass)) throw input_error("Atom: mass must be finite");
    }
    Atom(double re, double im, double m) : Atom(PlanePoint(re, im), m) {}
};

enum class SymmetryKind { central, mirror, iR_symmetrization, even_part, odd_part };

/// Finite signed charge: a canonically ordered atom list. Construction merges
/// coincident locations, drops zero masses and sorts by (|z|, arg z, re, im)
/// so charge equality is decidable. Immutable after construction.
class DiscreteCharge {
public:
    DiscreteCharge() = default;

    explicit DiscreteCharge(std::vector<Atom> atoms, bool origin_excluded = false)
        : origin_excluded_(origin_excluded) {
        canonicalize(std::move(atoms));
        if (origin_excluded_)
            for (const Atom& a : atoms_)
                if (a.location.is_origin())
                    throw precondition_error("DiscreteCharge: atom at origin with origin_excluded set");
    }

    const std::vector<Atom>& atoms() const { return atoms_; }
    bool origin_excluded() const { return origin_excluded_; }
    bool empty() const { return atoms_.empty(); }
    std::size_t size() const { return atoms_.size(); }

    bool has_origin_atom() const {
        return !atoms_.empty() && atoms_.front().location.is_origin();
    }

    bool is_positive() const {
        return std::all_of(atoms_.begin(), atoms_.end(),
                           [](const Atom& a) { return a.mass > 0.0; });
    }

    double total_mass() const {
        double s = 0.0;
        for (const Atom& a : atoms_) s += a.mass;
        return s;
    }

    double min_modulus() const {
        double m = std::numeric_limits<double>::infinity();
        for (const Atom& a : atoms_) m = std::min(m, a.location.modulus());
        return m;
    }

    double max_modulus() const {
        double m = 0.0;
        for (const Atom& a : atoms_) m = std::max(m, a.location.modulus());
        return m;
    }

    DiscreteCharge restricted(const std::function<bool(const Atom&)>& keep) const {
        std::vector<Atom> out;
        for (const Atom& a : atoms_)
            if (keep(a)) out.push_back(a);
        return DiscreteCharge(std::move(out), origin_excluded_);
    }

    friend bool operator==(const DiscreteCharge& a, const DiscreteCharge& b) {
        if (a.atoms_.size() != b.atoms_.size()) return false;
        for (std::size_t i = 0; i < a.atoms_.size(); ++i)
            if (!(a.atoms_[i].location == b.atoms_[i].location) ||
                a.atoms_[i].mass != b.atoms_[i].mass)
                return false;
        return true;
    }

    friend DiscreteCharge operator+(const DiscreteCharge& a, const DiscreteCharge& b) {
        std::vector<Atom> merged = a.atoms_;
        merged.insert(merged.end(), b.atoms_.begin(), b.atoms_.end());
        return DiscreteCharge(std::move(merged), a.origin_excluded_ && b.origin_excluded_);
    }

    friend DiscreteCharge operator*(double c, const DiscreteCharge& nu) {
        std::vector<Atom> scaled;
        scaled.reserve(nu.atoms_.size());
        if (c != 0.0)
            for (const Atom& a : nu.atoms_) scaled.emplace_back(a.location, c * a.mass);
        return DiscreteCharge(std::move(scaled), nu.origin_excluded_);
    }

    friend DiscreteCharge operator-(const DiscreteCharge& nu) { return -1.0 * nu; }

    friend DiscreteCharge operator-(const DiscreteCharge& a, const DiscreteCharge& b) {
        return a + (-b);
    }

private:
    void canonicalize(std::vector<Atom> atoms) {
        struct Keyed {
            double mod, arg;
            Atom atom;
        };
        std::vector<Keyed> keyed;
        keyed.reserve(atoms.size());
        for (Atom& a : atoms) {
            if (a.mass == 0.0) continue;
            keyed.push_back({a.location.modulus(), a.location.arg_principal(), a});
        }
        std::sort(keyed.begin(), keyed.end(), [](const Keyed& x, const Keyed& y) {
            if (x.mod != y.mod) return x.mod < y.mod;
            if (x.arg != y.arg) return x.arg < y.arg;
            if (x.atom.location.re != y.atom.location.re)
                return x.atom.location.re < y.atom.location.re;
            if (x.atom.location.im != y.atom.location.im)
                return x.atom.location.im < y.atom.location.im;
            return x.atom.mass < y.atom.mass;
        });
        atoms_.clear();
        for (const Keyed& k : keyed) {
            if (!atoms_.empty() && atoms_.back().location == k.atom.location) {
                atoms_.back().mass += k.atom.mass;
                if (atoms_.back().mass == 0.0) atoms_.pop_back();
            } else {
                atoms_.push_back(k.atom);
            }
        }
    }

    std::vector<Atom> atoms_;
    bool origin_excluded_ = false;
};

/// 2*pi-periodic Borel weight for weighted counting functions. Periodicity is
/// spot-checked on construction.
struct WeightFunction {
    std::function<double(double)> fn;
    std::string name;

    WeightFunction(std::function<double(double)> f, std::string n)
        : fn(std::move(f)), name(std::move(n)) {
        for (double theta : {-1.234, 0.0, 0.7, 2.9}) {
            double d = fn(theta) - fn(theta + 2 * pi);
            if (!(std::abs(d) <= 1e-9 * (1.0 + std::abs(fn(theta)))))
                throw input_error("WeightFunction '" + name + "' is not 2*pi-periodic");
        }
    }

    double operator()(double theta) const { return fn(theta); }

    static WeightFunction one() {
        return WeightFunction([](double) { return 1.0; }, "one");
    }
    static WeightFunction cos_plus() {
        return WeightFunction([](double t) { return std::max(std::cos(t), 0.0); }, "cos+");
    }
    static WeightFunction cos_minus() {
        return WeightFunction([](double t) { return std::max(-std::cos(t), 0.0); }, "cos-");
    }
};

struct Variations {
    DiscreteCharge positive;  // upper variation
    DiscreteCharge negative;  // lower variation
    DiscreteCharge total;     // total variation
};

/// Upper, lower and total variation; atomwise exact for atom lists.
inline Variations variations(const DiscreteCharge& nu) {
    std::vector<Atom> pos, neg, tot;
    for (const Atom& a : nu.atoms()) {
        if (a.mass > 0.0)
            pos.push_back(a);
        else
            neg.emplace_back(a.location, -a.mass);
        tot.emplace_back(a.location, std::abs(a.mass));
    }
    return {DiscreteCharge(std::move(pos), nu.origin_excluded()),
            DiscreteCharge(std::move(neg), nu.origin_excluded()),
            DiscreteCharge(std::move(tot), nu.origin_excluded())};
}

inline DiscreteCharge total_variation(const DiscreteCharge& nu) {
    return variations(nu).total;
}

/// Symmetry images: central z -> -z, mirror z -> -conj(z), and the standard
/// half-sum decompositions derived from them.
inline DiscreteCharge symmetrize(const DiscreteCharge& nu, SymmetryKind kind) {
    auto mapped = [&](auto f) {
        std::vector<Atom> out;
        out.reserve(nu.size());
        for (const Atom& a : nu.atoms()) {
            auto [p, m] = f(a);
            out.emplace_back(p, m);
        }
        return DiscreteCharge(std::move(out), nu.origin_excluded());
    };
    switch (kind) {
        case SymmetryKind::central:
            return mapped([](const Atom& a) {
                return std::pair<PlanePoint, double>({-a.location.re, -a.location.im}, a.mass);
            });
        case SymmetryKind::mirror:
            return mapped([](const Atom& a) {
                return std::pair<PlanePoint, double>({-a.location.re, a.location.im}, a.mass);
            });
        case SymmetryKind::iR_symmetrization:
            return 0.5 * (nu + symmetrize(nu, SymmetryKind::mirror));
        case SymmetryKind::even_part:
            return 0.5 * (nu + symmetrize(nu, SymmetryKind::central));
        case SymmetryKind::odd_part:
            return 0.5 * (nu - symmetrize(nu, SymmetryKind::central));
    }
    throw input_error("symmetrize: unknown kind");
}

/// Counterclockwise rotation by alpha. Exact multiples of pi/2 rotate by
/// coordinate swaps so that rotate(nu, pi) coincides atomwise with the
/// central symmetrization.
inline DiscreteCharge rotate(const DiscreteCharge& nu, double alpha) {
    const double quarter = pi / 2;
    double k = std::round(alpha / quarter);
    bool exact = (alpha == k * quarter);
    std::vector<Atom> out;
    out.reserve(nu.size());
    if (exact) {
        int q = static_cast<int>(std::fmod(std::fmod(k, 4.0) + 4.0, 4.0));
        for (const Atom& a : nu.atoms()) {
            double x = a.location.re, y = a.location.im;
            PlanePoint p;
            switch (q) {
                case 0: p = {x, y}; break;
                case 1: p = {-y, x}; break;
                case 2: p = {-x, -y}; break;
                default: p = {y, -x}; break;
            }
            out.emplace_back(p, a.mass);
        }
    } else {
        double c = std::cos(alpha), s = std::sin(alpha);
        for (const Atom& a : nu.atoms()) {
            double x = a.location.re, y = a.location.im;
            out.emplace_back(PlanePoint{c * x - s * y, s * x + c * y}, a.mass);
        }
    }
    return DiscreteCharge(std::move(out), nu.origin_excluded());
}

/// nu(closed disc of radius r); ties |z| == r are inclusive.
inline double radial_counting(const DiscreteCharge& nu, double r) {
    if (!(r >= 0.0)) throw precondition_error("radial_counting: r must be >= 0");
    double s = 0.0;
    for (const Atom& a : nu.atoms())
        if (a.location.modulus() <= r) s += a.mass;
    return s;
}

/// Weighted counting function: integral of k(arg z) over the closed disc.
inline double weighted_counting(const DiscreteCharge& nu, const WeightFunction& k, double r) {
    if (!(r >= 0.0)) throw precondition_error("weighted_counting: r must be >= 0");
    double s = 0.0;
    for (const Atom& a : nu.atoms())
        if (a.location.modulus() <= r) s += a.mass * k(a.location.arg_principal());
    return s;
}

struct UpperDensityEstimate {
    double value = 0.0;
    double radius = 0.0;  // maximizing radius
};

/// Desk-scale lower estimate of type_1[nu]: max over the grid of |nu|(r)/r.
inline UpperDensityEstimate upper_density(const DiscreteCharge& nu,
                                          const std::vector<double>& grid) {
    if (grid.empty()) throw precondition_error("upper_density: empty grid");
    double prev = 0.0;
    for (double r : grid) {
        if (!(r > 0.0) || r <= prev)
            throw precondition_error("upper_density: grid must be strictly increasing and positive");
        prev = r;
    }
    DiscreteCharge tv = total_variation(nu);
    UpperDensityEstimate best{0.0, grid.front()};
    for (double r : grid) {
        double q = radial_counting(tv, r) / r;
        if (q > best.value) best = {q, r};
    }
    return best;
}

} // namespace balkit
