#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "balkit/charge.hpp"
#include "balkit/report.hpp"

namespace balkit {

enum class ProductGenus { zero, one };

/// Zero set with integer multiplicities, truncated to a finite radius. A zero
/// at the origin must be carried by the explicit z^m prefactor flag.
class ZeroSequence {
public:
    struct Zero {
        PlanePoint point;
        int multiplicity = 1;
    };

    ZeroSequence() = default;

    ZeroSequence(std::vector<Zero> zeros, double truncation_radius,
                 int origin_power = 0)
        : truncation_radius_(truncation_radius), origin_power_(origin_power) {
        if (!(truncation_radius_ > 0.0))
            throw precondition_error("ZeroSequence: truncation radius must be positive");
        if (origin_power_ < 0)
            throw precondition_error("ZeroSequence: origin power must be >= 0");
        for (const Zero& z : zeros) {
            if (z.multiplicity < 1)
                throw precondition_error("ZeroSequence: multiplicities must be >= 1");
            if (z.point.is_origin())
                throw precondition_error(
                    "ZeroSequence: origin zeros are carried by the z^m prefactor flag");
            if (z.point.modulus() > truncation_radius_)
                throw precondition_error("ZeroSequence: zero beyond the truncation radius");
            zeros_.push_back(z);
        }
        std::sort(zeros_.begin(), zeros_.end(), [](const Zero& a, const Zero& b) {
            double ma = a.point.modulus(), mb = b.point.modulus();
            if (ma != mb) return ma < mb;
            if (a.point.re != b.point.re) return a.point.re < b.point.re;
            return a.point.im < b.point.im;
        });
    }

    const std::vector<Zero>& zeros() const { return zeros_; }
    double truncation_radius() const { return truncation_radius_; }
    int origin_power() const { return origin_power_; }
    bool empty() const { return zeros_.empty() && origin_power_ == 0; }

    DiscreteCharge counting_charge() const {
        std::vector<Atom> atoms;
        atoms.reserve(zeros_.size());
        for (const Zero& z : zeros_) atoms.emplace_back(z.point, double(z.multiplicity));
        if (origin_power_ > 0) atoms.emplace_back(PlanePoint{0, 0}, double(origin_power_));
        return DiscreteCharge(std::move(atoms));
    }

    /// Multiset inclusion within the common truncation radius.
    bool contained_in(const ZeroSequence& other) const {
        for (const Zero& z : zeros_) {
            int found = 0;
            for (const Zero& w : other.zeros_)
                if (w.point == z.point) found += w.multiplicity;
            if (found < z.multiplicity) return false;
        }
        return origin_power_ <= other.origin_power_;
    }

private:
    std::vector<Zero> zeros_;
    double truncation_radius_ = 1.0;
    int origin_power_ = 0;
};

/// ln|product of primary factors E_q(z / z_k)| with E_0(w) = 1 - w and
/// E_1(w) = (1 - w) e^w, summed in ascending |z_k| order for reproducibility.
/// Returns -infinity when z hits a zero exactly.
inline double log_abs_product(const ZeroSequence& Z, PlanePoint z, ProductGenus genus) {
    std::complex<double> w0 = z.as_complex();
    double acc = 0.0;
    if (Z.origin_power() > 0) {
        if (z.is_origin()) return -std::numeric_limits<double>::infinity();
        acc += Z.origin_power() * std::log(std::abs(w0));
    }
    for (const ZeroSequence::Zero& zk : Z.zeros()) {
        std::complex<double> w = w0 / zk.point.as_complex();
        std::complex<double> one_minus = 1.0 - w;
        if (one_minus == std::complex<double>(0.0, 0.0))
            return -std::numeric_limits<double>::infinity();
        double term = std::log(std::abs(one_minus));
        if (genus == ProductGenus::one) term += w.real();
        acc += zk.multiplicity * term;
    }
    return acc;
}

struct CircleMeanOptions {
    int max_nodes = 1 << 18;
    double clip_floor = -1e6;
    bool clip_at_cap = true;  // false: throw convergence_error instead
};

/// Trapezoid mean of v over the circle |w - z| = r. Non-finite samples double
/// the node count; at the cap they are clipped at the floor (or rejected).
inline double circle_mean(const std::function<double(PlanePoint)>& v, PlanePoint z, double r,
                          int nodes = 256, const CircleMeanOptions& opts = {}) {
    if (!(r > 0.0)) throw precondition_error("circle_mean: radius must be positive");
    if (nodes < 16) throw precondition_error("circle_mean: at least 16 nodes required");
    for (int n = nodes; n <= opts.max_nodes; n *= 2) {
        double sum = 0.0;
        bool bad = false;
        for (int i = 0; i < n; ++i) {
            double theta = 2 * pi * i / n;
            double s = v(PlanePoint{z.re + r * std::cos(theta), z.im + r * std::sin(theta)});
            if (!std::isfinite(s)) {
                if (n * 2 <= opts.max_nodes) {
                    bad = true;
                    break;
                }
                if (!opts.clip_at_cap)
                    throw convergence_error("circle_mean: singular samples at node cap", sum / n, 0.0);
                s = opts.clip_floor;
            }
            sum += std::max(s, opts.clip_floor);
        }
        if (!bad) return sum / n;
    }
    throw convergence_error("circle_mean: node cap exceeded", 0.0, 0.0);
}

/// Growth functionals sampled on circles: sup estimates M_v(r), means C_v(r),
/// the type fit at order 1 and the order fit.
struct GrowthReport {
    std::vector<double> radii;
    std::vector<double> sup_values;   // lower estimates of M_v(r)
    std::vector<double> mean_values;  // C_v(r)
    double type_order1 = 0.0;         // max over the top decade of M_v(r)/r
    double order_estimate = 0.0;      // slope of ln(1 + M^+) vs ln r
    int samples_per_circle = 0;
};

inline GrowthReport growth_report(const std::function<double(PlanePoint)>& v,
                                  const std::vector<double>& radii, int samples_per_circle = 4096,
                                  int mean_nodes = 512) {
    if (radii.empty()) throw precondition_error("growth_report: radii must not be empty");
    double prev = 0.0;
    for (double r : radii) {
        if (!(r > prev)) throw precondition_error("growth_report: radii must increase");
        prev = r;
    }
    GrowthReport rep;
    rep.radii = radii;
    rep.samples_per_circle = samples_per_circle;
    rep.sup_values.resize(radii.size());
    rep.mean_values.resize(radii.size());
    for (std::size_t i = 0; i < radii.size(); ++i) {
        double r = radii[i];
        double sup = -std::numeric_limits<double>::infinity();
        for (int k = 0; k < samples_per_circle; ++k) {
            double theta = 2 * pi * k / samples_per_circle;
            double s = v(PlanePoint{r * std::cos(theta), r * std::sin(theta)});
            if (std::isfinite(s)) sup = std::max(sup, s);
        }
        rep.sup_values[i] = sup;
        rep.mean_values[i] = circle_mean(v, PlanePoint{0, 0}, r, mean_nodes);
    }
    double top = radii.back();
    for (std::size_t i = 0; i < radii.size(); ++i)
        if (radii[i] >= top / 10.0)
            rep.type_order1 = std::max(rep.type_order1, rep.sup_values[i] / radii[i]);
    // order: least-squares slope of ln(1 + M^+) against ln r
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (!(radii[i] > 0.0)) continue;
        double x = std::log(radii[i]);
        double y = std::log(1.0 + std::max(rep.sup_values[i], 0.0));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++n;
    }
    if (n >= 2 && n * sxx - sx * sx != 0.0)
        rep.order_estimate = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    return rep;
}

/// Pointwise comparison of two truncated products along the imaginary axis.
struct DominationWitness {
    std::vector<ProfilePoint> delta;  // (y, ln|W| - ln|Z| at iy)
    bool subset_checked = false;      // Z was verified to be contained in W
    bool all_nonnegative = false;     // asserted only in the subset regime
    double min_delta = 0.0;
    double negative_set_measure = 0.0;  // grid estimate of {y : delta(y) < 0}
};

inline DominationWitness domination_witness(const ZeroSequence& Z, const ZeroSequence& W,
                                            const std::vector<double>& y_grid) {
    if (y_grid.size() < 2) throw precondition_error("domination_witness: need a y grid");
    DominationWitness rep;
    rep.subset_checked = Z.contained_in(W);
    rep.min_delta = std::numeric_limits<double>::infinity();
    for (double y : y_grid) {
        PlanePoint iy{0.0, y};
        double d = log_abs_product(W, iy, ProductGenus::one) -
                   log_abs_product(Z, iy, ProductGenus::one);
        rep.delta.push_back({y, d});
        rep.min_delta = std::min(rep.min_delta, d);
    }
    // grid-cell estimate of the exceptional set where the comparison fails
    for (std::size_t i = 0; i + 1 < y_grid.size(); ++i) {
        if (rep.delta[i].value < 0.0 || rep.delta[i + 1].value < 0.0)
            rep.negative_set_measure += std::abs(y_grid[i + 1] - y_grid[i]);
    }
    rep.all_nonnegative = rep.subset_checked && rep.min_delta >= 0.0;
    return rep;
}

} // namespace balkit
