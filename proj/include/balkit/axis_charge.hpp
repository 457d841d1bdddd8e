#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "balkit/charge.hpp"
#include "balkit/errors.hpp"
#include "balkit/quadrature.hpp"

namespace balkit {

enum class Axis { real, imaginary };

/// Atom on an axis: signed mass at a real coordinate.
struct AxisAtom {
    double coordinate = 0.0;
    double mass = 0.0;
};

/// Charge supported on the real or imaginary axis: an explicit atom list plus
/// an interval-mass oracle for the smooth part. All interval masses follow the
/// half-open convention (a, b]: the right endpoint belongs to the interval.
class AxisCharge {
public:
    using IntervalMassFn = std::function<double(double, double)>;
    using DensityFn = std::function<double(double)>;

    AxisCharge() = default;

    explicit AxisCharge(Axis axis, std::vector<AxisAtom> atoms = {},
                        IntervalMassFn smooth = {}, IntervalMassFn smooth_error = {},
                        DensityFn density = {})
        : axis_(axis), smooth_(std::move(smooth)), smooth_error_(std::move(smooth_error)),
          density_(std::move(density)) {
        for (const AxisAtom& a : atoms) {
            if (!std::isfinite(a.coordinate) || !std::isfinite(a.mass))
                throw input_error("AxisCharge: atom coordinate/mass must be finite");
            if (a.mass != 0.0) atoms_.push_back(a);
        }
        std::sort(atoms_.begin(), atoms_.end(), [](const AxisAtom& x, const AxisAtom& y) {
            return x.coordinate < y.coordinate;
        });
        // merge coincident coordinates
        std::vector<AxisAtom> merged;
        for (const AxisAtom& a : atoms_) {
            if (!merged.empty() && merged.back().coordinate == a.coordinate) {
                merged.back().mass += a.mass;
                if (merged.back().mass == 0.0) merged.pop_back();
            } else {
                merged.push_back(a);
            }
        }
        atoms_ = std::move(merged);
    }

    Axis axis() const { return axis_; }
    const std::vector<AxisAtom>& atoms() const { return atoms_; }
    bool has_smooth_part() const { return static_cast<bool>(smooth_); }
    bool has_density() const { return static_cast<bool>(density_); }
    double density(double y) const {
        if (!density_) throw precondition_error("AxisCharge: no pointwise density available");
        return density_(y);
    }
    bool empty() const { return atoms_.empty() && !smooth_; }

    /// Mass of (y1, y2]; y1 <= y2 required, equal endpoints give 0.
    double interval_mass(double y1, double y2) const {
        if (!(y1 <= y2)) throw precondition_error("AxisCharge: interval must have y1 <= y2");
        if (y1 == y2) return 0.0;
        double s = atom_mass(y1, y2);
        if (smooth_) s += smooth_(y1, y2);
        return s;
    }

    /// Atom-only part of the interval mass (exact).
    double atom_mass(double y1, double y2) const {
        double s = 0.0;
        auto lo = std::upper_bound(atoms_.begin(), atoms_.end(), y1,
                                   [](double v, const AxisAtom& a) { return v < a.coordinate; });
        for (auto it = lo; it != atoms_.end() && it->coordinate <= y2; ++it) s += it->mass;
        return s;
    }

    double smooth_mass(double y1, double y2) const {
        return smooth_ ? smooth_(y1, y2) : 0.0;
    }

    /// Stated absolute error bound for one oracle call.
    double error_bound(double y1, double y2) const {
        if (smooth_error_) return smooth_error_(y1, y2);
        if (!smooth_) return 0.0;
        return 1e-13 * (1.0 + std::abs(smooth_(y1, y2)));
    }

    /// Distribution function normalized to F(0) = 0.
    double distribution(double y) const {
        if (y == 0.0) return 0.0;
        return y > 0.0 ? interval_mass(0.0, y) : -interval_mass(y, 0.0);
    }

    double total_atom_mass() const {
        double s = 0.0;
        for (const AxisAtom& a : atoms_) s += a.mass;
        return s;
    }

    /// Central reflection: atoms at -c, smooth part evaluated on the mirrored
    /// interval. Endpoint transfer is exact for atoms and null for the smooth part.
    AxisCharge central_reflection() const {
        std::vector<AxisAtom> refl;
        refl.reserve(atoms_.size());
        for (const AxisAtom& a : atoms_) refl.push_back({-a.coordinate, a.mass});
        IntervalMassFn sm, se;
        DensityFn de;
        if (smooth_) {
            auto base = smooth_;
            sm = [base](double y1, double y2) { return base(-y2, -y1); };
        }
        if (smooth_error_) {
            auto baseE = smooth_error_;
            se = [baseE](double y1, double y2) { return baseE(-y2, -y1); };
        }
        if (density_) {
            auto baseD = density_;
            de = [baseD](double y) { return baseD(-y); };
        }
        return AxisCharge(axis_, std::move(refl), std::move(sm), std::move(se), std::move(de));
    }

    /// Pointwise sum of two axis charges on the same axis.
    friend AxisCharge operator+(const AxisCharge& a, const AxisCharge& b) {
        if (a.axis_ != b.axis_) throw input_error("AxisCharge: axis mismatch in sum");
        std::vector<AxisAtom> atoms = a.atoms_;
        atoms.insert(atoms.end(), b.atoms_.begin(), b.atoms_.end());
        IntervalMassFn sm, se;
        DensityFn de;
        if (a.smooth_ && b.smooth_) {
            auto f = a.smooth_, g = b.smooth_;
            sm = [f, g](double y1, double y2) { return f(y1, y2) + g(y1, y2); };
        } else if (a.smooth_ || b.smooth_) {
            sm = a.smooth_ ? a.smooth_ : b.smooth_;
        }
        if (a.smooth_error_ || b.smooth_error_) {
            auto fa = a.smooth_error_, fb = b.smooth_error_;
            se = [fa, fb](double y1, double y2) {
                return (fa ? fa(y1, y2) : 0.0) + (fb ? fb(y1, y2) : 0.0);
            };
        }
        if (a.density_ && b.density_) {
            auto da = a.density_, db = b.density_;
            de = [da, db](double y) { return da(y) + db(y); };
        } else if ((a.density_ && !b.smooth_) || (b.density_ && !a.smooth_)) {
            de = a.density_ ? a.density_ : b.density_;
        }
        return AxisCharge(a.axis_, std::move(atoms), std::move(sm), std::move(se), std::move(de));
    }

    friend AxisCharge operator*(double c, const AxisCharge& x) {
        std::vector<AxisAtom> atoms;
        atoms.reserve(x.atoms_.size());
        for (const AxisAtom& a : x.atoms_) atoms.push_back({a.coordinate, c * a.mass});
        IntervalMassFn sm, se;
        DensityFn de;
        if (x.smooth_) {
            auto f = x.smooth_;
            sm = [f, c](double y1, double y2) { return c * f(y1, y2); };
        }
        if (x.smooth_error_) {
            auto fe = x.smooth_error_;
            se = [fe, c](double y1, double y2) { return std::abs(c) * fe(y1, y2); };
        }
        if (x.density_) {
            auto fd = x.density_;
            de = [fd, c](double y) { return c * fd(y); };
        }
        return AxisCharge(x.axis_, std::move(atoms), std::move(sm), std::move(se), std::move(de));
    }

    friend AxisCharge operator-(const AxisCharge& a, const AxisCharge& b) {
        return a + (-1.0 * b);
    }

    /// Integral of a smooth f against the charge over (y1, y2]. Atoms are summed
    /// exactly; the smooth part goes through Gauss-Kronrod quadrature when a
    /// pointwise density is available and adaptive midpoint refinement otherwise.
    double weighted_integral(const std::function<double(double)>& f, double y1, double y2,
                             double abs_tol = 1e-9) const {
        if (!(y1 <= y2)) throw precondition_error("weighted_integral: y1 <= y2 required");
        double s = 0.0;
        auto lo = std::upper_bound(atoms_.begin(), atoms_.end(), y1,
                                   [](double v, const AxisAtom& a) { return v < a.coordinate; });
        for (auto it = lo; it != atoms_.end() && it->coordinate <= y2; ++it)
            s += it->mass * f(it->coordinate);
        if (y1 == y2) return s;
        if (density_) {
            QuadratureOptions opts;
            opts.abs_tol = abs_tol;
            opts.clip_floor = -std::numeric_limits<double>::max();
            auto d = density_;
            s += adaptive_integrate([d, &f](double y) { return d(y) * f(y); }, y1, y2, opts).value;
        } else if (smooth_) {
            s += smooth_weighted(f, y1, y2, abs_tol, 0);
        }
        return s;
    }

private:
    double smooth_weighted(const std::function<double(double)>& f, double y1, double y2,
                           double tol, int depth) const {
        double m = smooth_(y1, y2);
        double mid = 0.5 * (y1 + y2);
        if (mid <= y1 || mid >= y2) return m * f(mid);  // width underflow
        double whole = m * f(mid);
        double left = smooth_(y1, mid) * f(0.5 * (y1 + mid));
        double right = smooth_(mid, y2) * f(0.5 * (mid + y2));
        double err = std::abs(whole - (left + right));
        if ((err <= tol && depth >= 2) || depth >= 48) return left + right;
        return smooth_weighted(f, y1, mid, tol / 2, depth + 1) +
               smooth_weighted(f, mid, y2, tol / 2, depth + 1);
    }

    Axis axis_ = Axis::real;
    std::vector<AxisAtom> atoms_;
    IntervalMassFn smooth_;
    IntervalMassFn smooth_error_;
    DensityFn density_;
};

/// Restriction of a plane charge to an axis, repackaged with an exact atom
/// list and no smooth part. Off-axis atoms are ignored.
inline AxisCharge axis_distribution(const DiscreteCharge& nu, Axis axis) {
    std::vector<AxisAtom> atoms;
    for (const Atom& a : nu.atoms()) {
        if (axis == Axis::real && a.location.on_real_axis())
            atoms.push_back({a.location.re, a.mass});
        else if (axis == Axis::imaginary && a.location.on_imaginary_axis())
            atoms.push_back({a.location.im, a.mass});
    }
    return AxisCharge(axis, std::move(atoms));
}

struct VariationSplitOptions {
    double min_width = 1e-6;
    int max_depth = 60;
};

struct IntervalVariation {
    double positive = 0.0;
    double negative = 0.0;
    double total() const { return positive + negative; }
};

/// Sign-stable piece of the smooth part produced by the bisection split.
struct VariationLeaf {
    double y1 = 0.0;
    double y2 = 0.0;
    double mass = 0.0;
};

namespace detail {
inline void split_rec(const AxisCharge& sigma, double y1, double y2, double m,
                      const VariationSplitOptions& opt, int depth,
                      std::vector<VariationLeaf>& out) {
    double mid = 0.5 * (y1 + y2);
    if (y2 - y1 < opt.min_width || depth >= opt.max_depth || mid <= y1 || mid >= y2) {
        out.push_back({y1, y2, m});
        return;
    }
    double m1 = sigma.smooth_mass(y1, mid);
    double m2 = sigma.smooth_mass(mid, y2);
    // sign stable under one further bisection -> accept both halves as leaves
    if ((m1 >= 0.0) == (m >= 0.0) && (m2 >= 0.0) == (m >= 0.0)) {
        double m11 = sigma.smooth_mass(y1, 0.5 * (y1 + mid));
        double m12 = m1 - m11;
        double m21 = sigma.smooth_mass(mid, 0.5 * (mid + y2));
        double m22 = m2 - m21;
        bool stable = ((m11 >= 0.0) == (m >= 0.0)) && ((m12 >= 0.0) == (m >= 0.0)) &&
                      ((m21 >= 0.0) == (m >= 0.0)) && ((m22 >= 0.0) == (m >= 0.0));
        if (stable) {
            out.push_back({y1, mid, m1});
            out.push_back({mid, y2, m2});
            return;
        }
    }
    split_rec(sigma, y1, mid, m1, opt, depth + 1, out);
    split_rec(sigma, mid, y2, m2, opt, depth + 1, out);
}
} // namespace detail

/// Bisection of the smooth part of sigma over (y1, y2] into sign-stable
/// leaves; atoms are not included.
inline std::vector<VariationLeaf> variation_leaves(const AxisCharge& sigma, double y1, double y2,
                                                   const VariationSplitOptions& opt = {}) {
    if (!(y1 <= y2)) throw precondition_error("variation_leaves: y1 <= y2 required");
    std::vector<VariationLeaf> out;
    if (sigma.has_smooth_part() && y1 < y2)
        detail::split_rec(sigma, y1, y2, sigma.smooth_mass(y1, y2), opt, 0, out);
    return out;
}

/// Hahn-style split of the signed charge over (y1, y2]: positive/negative mass
/// by recursive bisection of the smooth part; atoms enter exactly by sign.
inline IntervalVariation variation_split(const AxisCharge& sigma, double y1, double y2,
                                         const VariationSplitOptions& opt = {}) {
    if (!(y1 <= y2)) throw precondition_error("variation_split: y1 <= y2 required");
    IntervalVariation out;
    for (const AxisAtom& a : sigma.atoms()) {
        if (a.coordinate <= y1 || a.coordinate > y2) continue;
        if (a.mass >= 0.0)
            out.positive += a.mass;
        else
            out.negative += -a.mass;
    }
    for (const VariationLeaf& leaf : variation_leaves(sigma, y1, y2, opt)) {
        if (leaf.mass >= 0.0)
            out.positive += leaf.mass;
        else
            out.negative += -leaf.mass;
    }
    return out;
}

/// Integral of f against one signed part (positive or negative variation) of
/// sigma over (y1, y2]. Within a sign-stable leaf the signed charge and its
/// variation coincide, so f is refined there against the cheap signed oracle.
inline double signed_part_weighted_integral(const AxisCharge& sigma, bool positive_part,
                                            const std::function<double(double)>& f, double y1,
                                            double y2, double f_tol = 1e-9,
                                            const VariationSplitOptions& opt = {}) {
    if (!(y1 <= y2)) throw precondition_error("signed_part_weighted_integral: y1 <= y2 required");
    double s = 0.0;
    for (const AxisAtom& a : sigma.atoms()) {
        if (a.coordinate <= y1 || a.coordinate > y2) continue;
        if (positive_part && a.mass >= 0.0) s += a.mass * f(a.coordinate);
        if (!positive_part && a.mass < 0.0) s += -a.mass * f(a.coordinate);
    }
    std::function<double(double, double, double, int)> refine =
        [&](double a, double b, double m, int depth) -> double {
        double mid = 0.5 * (a + b);
        if (mid <= a || mid >= b) return m * f(mid);
        double whole = m * f(mid);
        double mL = sigma.smooth_mass(a, mid);
        double mR = m - mL;
        double split = mL * f(0.5 * (a + mid)) + mR * f(0.5 * (mid + b));
        if ((std::abs(whole - split) <= f_tol && depth >= 1) || depth >= 40) return split;
        return refine(a, mid, mL, depth + 1) + refine(mid, b, mR, depth + 1);
    };
    for (const VariationLeaf& leaf : variation_leaves(sigma, y1, y2, opt)) {
        bool is_pos = leaf.mass >= 0.0;
        if (is_pos != positive_part) continue;
        double v = refine(leaf.y1, leaf.y2, leaf.mass, 0);
        s += positive_part ? v : -v;
    }
    return s;
}

} // namespace balkit
