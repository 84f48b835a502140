// Adaptive Gauss-Kronrod integration of complex-valued functions on [0, 1], and
// the guarded sin(pi a n u) cot(pi a u) kernel.
#pragma once

#include "hpsum/scalar_core.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <queue>
#include <string_view>
#include <vector>

namespace hpsum {

enum class quadrature_status {
    converged,
    /// Every remaining interval sits at the rounding floor; the estimate cannot be improved in double.
    roundoff_limited,
    /// Subdivision budget exhausted before the tolerance was met.
    budget_exhausted,
};

inline std::string_view to_string(quadrature_status s) {
    switch (s) {
        case quadrature_status::converged: return "converged";
        case quadrature_status::roundoff_limited: return "roundoff_limited";
        case quadrature_status::budget_exhausted: return "budget_exhausted";
    }
    return "?";
}

struct quadrature_result {
    complex_t value{};
    double error_estimate = 0.0;
    std::size_t evaluations = 0;
    std::size_t subdivisions = 0;
    quadrature_status status = quadrature_status::converged;

    bool converged() const noexcept { return status != quadrature_status::budget_exhausted; }
};

struct quadrature_options {
    double tol = 1e-10;
    std::size_t max_subdivisions = 10000;
    /// The interval starts out split into 2^min_depth equal pieces.
    unsigned min_depth = 1;
};

/// Depth floor for integrands oscillating with frequency ~n.
inline unsigned oscillation_depth(std::uint64_t n) {
    return static_cast<unsigned>(std::ceil(std::log2(static_cast<double>(n) + 2.0)));
}

namespace detail {

// 21-point Kronrod rule with its embedded 10-point Gauss rule; no endpoint nodes.
inline constexpr std::array<double, 11> kronrod_nodes{
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
inline constexpr std::array<double, 11> kronrod_weights{
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208745478940, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
// Gauss weights for kronrod_nodes[1], [3], ..., [9].
inline constexpr std::array<double, 5> gauss_weights{
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct interval {
    double lo;
    double hi;
    complex_t value;
    double error;
    double abs_integral;
    bool at_floor;

    bool operator<(const interval& o) const noexcept { return error < o.error; }
};

template <class F>
interval apply_rule(F& f, double lo, double hi) {
    constexpr double eps = std::numeric_limits<double>::epsilon();
    const double centre = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);

    std::array<complex_t, 21> fv;
    for (std::size_t i = 0; i < 10; ++i) {
        fv[2 * i] = f(centre - half * kronrod_nodes[i]);
        fv[2 * i + 1] = f(centre + half * kronrod_nodes[i]);
    }
    fv[20] = f(centre);

    complex_t kronrod = kronrod_weights[10] * fv[20];
    complex_t gauss{0.0, 0.0};
    double abs_sum = kronrod_weights[10] * std::abs(fv[20]);
    for (std::size_t i = 0; i < 10; ++i) {
        const complex_t pair = fv[2 * i] + fv[2 * i + 1];
        kronrod += kronrod_weights[i] * pair;
        abs_sum += kronrod_weights[i] * (std::abs(fv[2 * i]) + std::abs(fv[2 * i + 1]));
        if (i % 2 == 1) gauss += gauss_weights[i / 2] * pair;
    }
    const complex_t mean = 0.5 * kronrod;
    double asc = kronrod_weights[10] * std::abs(fv[20] - mean);
    for (std::size_t i = 0; i < 10; ++i)
        asc += kronrod_weights[i] * (std::abs(fv[2 * i] - mean) + std::abs(fv[2 * i + 1] - mean));

    const double width = std::abs(half);
    double err = std::abs((kronrod - gauss) * half);
    const double resasc = asc * width;
    const double resabs = abs_sum * width;
    if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double floor = 50.0 * eps * resabs;
    bool at_floor = false;
    if (err <= floor) {
        err = floor;
        at_floor = true;
    }
    // no room left to bisect in double
    if (half <= 4.0 * eps * std::max(std::abs(lo), std::abs(hi))) at_floor = true;
    return {lo, hi, kronrod * half, err, resabs, at_floor};
}

}  // namespace detail

/// Integrate f over [0, 1]. The integrand is never sampled at either endpoint.
/// Error is controlled on the complex modulus; a result that misses the tolerance
/// within the subdivision budget is returned with status budget_exhausted.
template <class F>
quadrature_result integrate(F&& f, const quadrature_options& opts = {}) {
    std::priority_queue<detail::interval> open;
    std::vector<detail::interval> done;
    quadrature_result res;

    const std::size_t pieces = std::size_t{1} << std::min(opts.min_depth, 20U);
    double total_err = 0.0;
    for (std::size_t i = 0; i < pieces; ++i) {
        const double lo = static_cast<double>(i) / static_cast<double>(pieces);
        const double hi = static_cast<double>(i + 1) / static_cast<double>(pieces);
        auto iv = detail::apply_rule(f, lo, hi);
        res.evaluations += 21;
        total_err += iv.error;
        if (iv.at_floor)
            done.push_back(iv);
        else
            open.push(iv);
    }

    while (total_err > opts.tol) {
        if (open.empty()) {
            res.status = quadrature_status::roundoff_limited;
            break;
        }
        if (res.subdivisions >= opts.max_subdivisions) {
            res.status = quadrature_status::budget_exhausted;
            break;
        }
        const detail::interval worst = open.top();
        open.pop();
        const double mid = 0.5 * (worst.lo + worst.hi);
        const auto left = detail::apply_rule(f, worst.lo, mid);
        const auto right = detail::apply_rule(f, mid, worst.hi);
        res.evaluations += 42;
        ++res.subdivisions;
        total_err += left.error + right.error - worst.error;
        for (const auto& iv : {left, right}) {
            if (iv.at_floor)
                done.push_back(iv);
            else
                open.push(iv);
        }
    }

    // final sums are recomputed to avoid drift in the running totals
    res.value = complex_t{0.0, 0.0};
    res.error_estimate = 0.0;
    for (const auto& iv : done) {
        res.value += iv.value;
        res.error_estimate += iv.error;
    }
    while (!open.empty()) {
        res.value += open.top().value;
        res.error_estimate += open.top().error;
        open.pop();
    }
    return res;
}

template <class F>
quadrature_result integrate(F&& f, double tol) {
    quadrature_options opts;
    opts.tol = tol;
    return integrate(std::forward<F>(f), opts);
}

inline constexpr double kernel_guard = 1e-8;

/// sin(pi a n u) cot(pi a u) on [0, 1], total through the removable singularities at u = m/a.
///
/// Writing |a| u = m + v with m the nearest integer, the kernel is
/// (-1)^{mn} sin(pi n v) cot(pi v), whose limit at v = 0 is n (-1)^{mn}.
inline double kernel_sin_cot(std::uint64_t n, long a, double u) {
    if (n == 0) return 0.0;
    const double abs_a = static_cast<double>(a < 0 ? -a : a);
    const double m = std::nearbyint(abs_a * u);
    const double v = std::fma(abs_a, u, -m);
    const bool odd = (static_cast<std::int64_t>(m) % 2 != 0) && (n % 2 != 0);
    const double sign = odd ? -1.0 : 1.0;
    const double nd = static_cast<double>(n);
    if (std::abs(pi * v) < kernel_guard) return sign * nd;
    // reduce n v modulo 2 before scaling by pi
    const double nv = std::fmod(nd * v, 2.0);
    return sign * std::sin(pi * nv) * std::cos(pi * v) / std::sin(pi * v);
}

}  // namespace hpsum
