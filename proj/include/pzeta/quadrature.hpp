#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "pzeta/common.hpp"

namespace pzeta {

struct QuadratureResult {
    Complex value;
    double error_estimate;
    int evaluations;
};

namespace detail {

// 15-point Kronrod / 7-point Gauss pair on [-1, 1] (QUADPACK dqk15 nodes).
inline constexpr double gk15_nodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0};
inline constexpr double gk15_kronrod_weights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
inline constexpr double gk15_gauss_weights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

// Single GK15 panel: returns the Kronrod value and |K15 - G7| as error proxy.
template <typename F>
std::pair<Complex, double> gk15_panel(F&& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    Complex fc = f(center);
    Complex kronrod = gk15_kronrod_weights[7] * fc;
    Complex gauss = gk15_gauss_weights[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double offset = half * gk15_nodes[j];
        Complex pair_sum = f(center - offset) + f(center + offset);
        kronrod += gk15_kronrod_weights[j] * pair_sum;
        if (j % 2 == 1) gauss += gk15_gauss_weights[j / 2] * pair_sum;
    }
    kronrod *= half;
    gauss *= half;
    return {kronrod, std::abs(kronrod - gauss)};
}

struct Segment {
    double a, b;
    Complex value;
    double error;
};

}  // namespace detail

// Globally adaptive Gauss-Kronrod integration of f : double -> Complex over
// [a, b]. Splits the worst segment until the summed error estimate drops
// below max(abs_tol, rel_tol * |integral|). Throws on stall.
template <typename F>
QuadratureResult integrate_adaptive(F&& f, double a, double b,
                                    double abs_tol = 1e-12,
                                    double rel_tol = 1e-12,
                                    int max_segments = 4000) {
    if (!(a < b)) throw std::invalid_argument("integrate_adaptive: requires a < b");

    std::vector<detail::Segment> segments;
    auto [v0, e0] = detail::gk15_panel(f, a, b);
    segments.push_back({a, b, v0, e0});
    int evaluations = 15;

    while (true) {
        Complex total{};
        double total_error = 0.0;
        for (const auto& seg : segments) {
            total += seg.value;
            total_error += seg.error;
        }
        if (total_error <= std::max(abs_tol, rel_tol * std::abs(total)))
            return {total, total_error, evaluations};
        if (static_cast<int>(segments.size()) >= max_segments)
            throw std::runtime_error("integrate_adaptive: refinement stalled");

        auto worst = std::max_element(
            segments.begin(), segments.end(),
            [](const auto& x, const auto& y) { return x.error < y.error; });
        const double mid = 0.5 * (worst->a + worst->b);
        auto [vl, el] = detail::gk15_panel(f, worst->a, mid);
        auto [vr, er] = detail::gk15_panel(f, mid, worst->b);
        evaluations += 30;
        detail::Segment right{mid, worst->b, vr, er};
        *worst = {worst->a, mid, vl, el};
        segments.push_back(right);
    }
}

}  // namespace pzeta
