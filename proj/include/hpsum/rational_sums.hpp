// sum_{j=1}^{n} 1/p(j) for complex polynomials p with simple roots, via partial fractions
// c_m / (j - r_m) evaluated as c_m i / (i j - i r_m), an order-1 harmonic progression with b = -i r_m.
#pragma once

#include "hpsum/hp_formulas.hpp"
#include "hpsum/hp_params.hpp"
#include "hpsum/quadrature.hpp"
#include "hpsum/scalar_core.hpp"
#include "hpsum/upolynomial.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace hpsum {

/// Polynomial in x, ascending coefficients.
using polynomial = basic_upolynomial<complex_t>;

class root_finding_error : public std::runtime_error {
public:
    enum class kind { no_convergence, repeated_roots, bad_polynomial };

    root_finding_error(kind k, const std::string& what) : std::runtime_error(what), kind_(k) {}
    kind error_kind() const noexcept { return kind_; }

private:
    kind kind_;
};

struct root_options {
    double tol = 1e-12;
    unsigned max_iterations = 500;
    unsigned max_degree = 16;
};

namespace detail {

inline double min_pairwise_distance(const std::vector<complex_t>& z) {
    double d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < z.size(); ++i)
        for (std::size_t j = i + 1; j < z.size(); ++j) d = std::min(d, std::abs(z[i] - z[j]));
    return d;
}

}  // namespace detail

/// All roots of p by Weierstrass (Durand-Kerner) simultaneous iteration from a perturbed circle.
inline std::vector<complex_t> find_roots(const polynomial& p, const root_options& opts = {}) {
    const int deg = p.degree();
    if (deg < 1) throw root_finding_error(root_finding_error::kind::bad_polynomial, "find_roots: degree must be >= 1");
    if (deg > static_cast<int>(opts.max_degree))
        throw root_finding_error(root_finding_error::kind::bad_polynomial,
                                 "find_roots: degree " + std::to_string(deg) + " exceeds " +
                                     std::to_string(opts.max_degree));
    const complex_t lead = p[static_cast<std::size_t>(deg)];
    if (deg == 1) return {-p[0] / lead};

    std::vector<complex_t> monic(static_cast<std::size_t>(deg) + 1);
    for (int i = 0; i <= deg; ++i) monic[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(i)] / lead;
    const polynomial q(monic);

    // Fujiwara bound on root moduli
    double radius = 0.0;
    for (int i = 0; i < deg; ++i) {
        const double c = std::abs(monic[static_cast<std::size_t>(i)]);
        if (c == 0.0) continue;
        const double r = std::pow(i == 0 ? c / 2.0 : c, 1.0 / (deg - i));
        radius = std::max(radius, r);
    }
    radius = std::max(2.0 * radius, 1e-3);

    std::vector<complex_t> z(static_cast<std::size_t>(deg));
    for (int i = 0; i < deg; ++i) z[static_cast<std::size_t>(i)] = std::polar(radius, 2.0 * pi * i / deg + 0.4);

    bool converged = false;
    for (unsigned it = 0; it < opts.max_iterations && !converged; ++it) {
        converged = true;
        for (std::size_t i = 0; i < z.size(); ++i) {
            complex_t denom{1.0, 0.0};
            for (std::size_t j = 0; j < z.size(); ++j)
                if (j != i) denom *= z[i] - z[j];
            const complex_t step = q(z[i]) / denom;
            z[i] -= step;
            if (!(std::abs(step) <= opts.tol * std::max(1.0, std::abs(z[i])))) converged = false;
        }
    }

    const double scale = std::max(1.0, radius);
    if (!converged) {
        if (detail::min_pairwise_distance(z) < 1e-5 * scale)
            throw root_finding_error(root_finding_error::kind::repeated_roots, "find_roots: repeated roots");
        throw root_finding_error(root_finding_error::kind::no_convergence,
                                 "find_roots: no convergence after " + std::to_string(opts.max_iterations) +
                                     " iterations");
    }
    // a double root only resolves to about sqrt(eps), so the cluster threshold has a floor
    if (detail::min_pairwise_distance(z) < std::max(100.0 * opts.tol, 1e-6) * scale)
        throw root_finding_error(root_finding_error::kind::repeated_roots, "find_roots: repeated roots");
    return z;
}

/// Term c / (x - r).
struct partial_fraction_term {
    complex_t weight;
    complex_t root;

    /// b of the order-1 progression with a = 1 that this term maps to: c/(j - r) = c i / (i j + b).
    complex_t hp_shift() const { return -imag_unit * root; }
};

/// c_m = 1/p'(r_m) for simple roots.
inline std::vector<partial_fraction_term> partial_fractions(const polynomial& p, const std::vector<complex_t>& roots) {
    const polynomial dp = p.derivative();
    std::vector<partial_fraction_term> terms;
    terms.reserve(roots.size());
    for (const complex_t r : roots) {
        const complex_t d = dp(r);
        double magnitude = 0.0;  // scale of p'(r) without cancellation
        for (std::size_t i = 1; i < p.size(); ++i)
            magnitude += static_cast<double>(i) * std::abs(p[i]) * std::pow(std::abs(r), static_cast<double>(i - 1));
        if (std::abs(d) <= 1e-8 * magnitude)
            throw root_finding_error(root_finding_error::kind::repeated_roots,
                                     "partial_fractions: p'(r) vanishes at a root (repeated root)");
        terms.push_back({1.0 / d, r});
    }
    return terms;
}

struct rational_sum_result {
    std::vector<partial_fraction_term> terms;
    method_report report;
};

/// sum_{j=1}^{n} 1/p(j) from the partial-fraction terms. Non-integer roots use the exponential formula
/// (a = 1, b = -i r); integer roots use the integer fallback for sum 1/(j - r).
inline rational_sum_result sum_reciprocal_poly(const polynomial& p, std::uint64_t n, double tol = 1e-10,
                                               bool skip_singular = false, const root_options& ropts = {}) {
    rational_sum_result out;
    out.terms = partial_fractions(p, find_roots(p, ropts));
    out.report.method = hp_method::exp;

    quadrature_result agg;
    agg.value = complex_t{};
    const double per_term_tol = tol / static_cast<double>(out.terms.size());
    for (const auto& t : out.terms) {
        method_report r;
        complex_t factor;
        const complex_t nearest = std::nearbyint(t.root.real());
        if (std::abs(t.root - nearest) <= integer_tolerance) {
            const long r_int = static_cast<long>(nearest.real());
            r = integer_shift_sum(r_int, 1, n, per_term_tol / std::abs(t.weight), skip_singular);
            factor = t.weight;
            out.report.notes.push_back("root " + std::to_string(r_int) + " routed to integer fallback");
        } else {
            r = hpk_exponential(hp_params{1, t.hp_shift(), 1, n}, per_term_tol / std::abs(t.weight));
            factor = t.weight * imag_unit;
        }
        out.report.value += factor * r.value;
        if (r.quadrature) {
            agg.error_estimate += std::abs(factor) * r.quadrature->error_estimate;
            agg.evaluations += r.quadrature->evaluations;
            agg.subdivisions += r.quadrature->subdivisions;
            if (static_cast<int>(r.quadrature->status) > static_cast<int>(agg.status)) agg.status = r.quadrature->status;
        }
        for (auto& note : r.notes) out.report.notes.push_back(std::move(note));
    }
    if (skip_singular) {
        // the skipped j drops 1/p(j) as a whole, so the regular terms at that j come out too
        for (const auto& t : out.terms) {
            const double r = std::nearbyint(t.root.real());
            if (std::abs(t.root - r) > integer_tolerance || r < 1.0 || r > static_cast<double>(n)) continue;
            for (const auto& o : out.terms)
                if (&o != &t) out.report.value -= o.weight / (r - o.root);
        }
    }
    agg.value = out.report.value;
    out.report.quadrature = agg;
    return out;
}

/// Oracle: sum_{j=1}^{n} 1/p(j) term by term.
inline complex_t reciprocal_poly_direct(const polynomial& p, std::uint64_t n, bool skip_singular = false) {
    complex_t sum{};
    for (std::uint64_t j = 1; j <= n; ++j) {
        const complex_t v = p(static_cast<double>(j));
        if (v == complex_t{}) {
            if (skip_singular) continue;
            throw singular_term_error("reciprocal_poly_direct: p(" + std::to_string(j) + ") = 0");
        }
        sum += 1.0 / v;
    }
    return sum;
}

}  // namespace hpsum
