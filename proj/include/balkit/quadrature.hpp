#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <vector>

#include "balkit/errors.hpp"

namespace balkit {

struct QuadratureOptions {
    double abs_tol = 1e-9;
    int max_panels = 40000;
    double clip_floor = -1e6;          // floor applied to singular samples
    double min_panel_width_rel = 1e-9; // relative to the full integration range
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;  // sum of per-panel estimates
    int panels = 0;
};

namespace detail {

// Gauss-Kronrod 7-15 nodes/weights on [-1, 1].
inline constexpr double gk_nodes[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double k15_weights[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double g7_weights[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct GkPanel {
    double a, b, value, error;
    bool had_clip;
    bool operator<(const GkPanel& o) const { return error < o.error; }
};

inline GkPanel gk15_clipped(const std::function<double(double)>& f, double a, double b,
                            double floor_value) {
    double c = 0.5 * (a + b), h = 0.5 * (b - a);
    bool clipped = false;
    auto g = [&](double x) {
        double v = f(x);
        if (!std::isfinite(v) || v < floor_value) {
            clipped = true;
            return floor_value;
        }
        return v;
    };
    double fk = 0.0, fg = 0.0;
    for (int i = 0; i < 8; ++i) {
        double fv = (i == 7) ? g(c) : g(c - h * gk_nodes[i]) + g(c + h * gk_nodes[i]);
        fk += k15_weights[i] * fv;
        if (i % 2 == 1) fg += g7_weights[i / 2] * fv;
    }
    return {a, b, fk * h, std::abs((fk - fg) * h), clipped};
}

} // namespace detail

/// Adaptive Gauss-Kronrod (7-15) integration. Non-finite or below-floor
/// samples force bisection down to the minimum panel width and are clipped at
/// the floor there; logarithmic boundary singularities integrate this way.
/// Exhausting the panel budget throws convergence_error with the partial value.
inline QuadratureResult adaptive_integrate(const std::function<double(double)>& f, double a,
                                           double b, const QuadratureOptions& opts = {},
                                           const std::vector<double>& split_hints = {}) {
    if (!(a < b)) throw precondition_error("adaptive_integrate: need a < b");
    const double min_width = std::max(opts.min_panel_width_rel * (b - a),
                                      4 * std::numeric_limits<double>::epsilon() * std::max(std::abs(a), std::abs(b)));

    double done_value = 0.0, done_error = 0.0;
    double heap_value = 0.0, heap_err_finite = 0.0;
    int heap_unresolved = 0;  // panels still carrying a singular sample
    std::priority_queue<detail::GkPanel> heap;
    int panels = 0;

    auto place = [&](double x1, double x2) {
        detail::GkPanel p = detail::gk15_clipped(f, x1, x2, opts.clip_floor);
        ++panels;
        if (x2 - x1 <= min_width) {  // clipped at minimum width: accept as-is
            done_value += p.value;
            done_error += p.error;
            return;
        }
        if (p.had_clip) {
            p.error = std::numeric_limits<double>::infinity();  // force refinement first
            ++heap_unresolved;
        } else {
            heap_err_finite += p.error;
        }
        heap_value += p.value;
        heap.push(p);
    };

    std::vector<double> cuts{a, b};
    for (double h : split_hints)
        if (h > a && h < b) cuts.push_back(h);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) place(cuts[i], cuts[i + 1]);

    while ((heap_unresolved > 0 || done_error + heap_err_finite > opts.abs_tol) && !heap.empty()) {
        if (panels >= opts.max_panels)
            throw convergence_error("adaptive_integrate: panel budget exhausted",
                                    done_value + heap_value, done_error + heap_err_finite);
        detail::GkPanel worst = heap.top();
        heap.pop();
        heap_value -= worst.value;
        if (std::isinf(worst.error))
            --heap_unresolved;
        else
            heap_err_finite -= worst.error;
        double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {  // width underflow: freeze the clipped value
            done_value += worst.value;
            if (!std::isinf(worst.error)) done_error += worst.error;
            continue;
        }
        place(worst.a, mid);
        place(mid, worst.b);
    }
    return {done_value + heap_value, done_error + heap_err_finite, panels};
}

} // namespace balkit
