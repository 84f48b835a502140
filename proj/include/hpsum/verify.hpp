// Verification sweeps: every closed form against its oracle over fixed parameter grids.
#pragma once

#include "hpsum/hp_formulas.hpp"
#include "hpsum/rational_sums.hpp"
#include "hpsum/series_engine.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <limits>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace hpsum {

struct family_result {
    std::string name;
    double bound = 0.0;
    double max_residual = 0.0;
    std::size_t cases = 0;
    std::string worst_case;

    family_result(std::string family_name, double max_allowed) : name(std::move(family_name)), bound(max_allowed) {}

    bool passed() const { return max_residual <= bound; }

    void record(double residual, const std::string& label) {
        ++cases;
        // NaN never compares greater, so it is folded in explicitly
        if (residual > max_residual || residual != residual) {
            max_residual = residual != residual ? std::numeric_limits<double>::infinity() : residual;
            worst_case = label;
        }
    }
};

struct suite_report {
    std::string suite;
    std::vector<family_result> families;

    bool passed() const {
        return std::all_of(families.begin(), families.end(), [](const auto& f) { return f.passed(); });
    }
};

namespace verify_grid {

inline const std::array<long, 3> exp_a{1, 2, 3};
inline const std::array<complex_t, 4> exp_b{complex_t(0.5, 0.0), complex_t(0.3, 0.7), complex_t(-1.25, 0.5),
                                            complex_t(2.0, 0.1)};
inline const std::array<std::uint64_t, 5> exp_n{0, 1, 2, 5, 20};
inline const std::array<complex_t, 4> shift_b{complex_t(0.3, 0.0), complex_t(0.7, 0.0), complex_t(1.0 / 3.0, 0.0),
                                              complex_t(0.3, 0.2)};
inline const std::array<std::uint64_t, 6> shift_n{0, 1, 2, 5, 10, 20};
inline const std::array<complex_t, 5> series_b{complex_t(0.3, 0.0), complex_t(0.5, 0.25), complex_t(0.2, -0.4),
                                               complex_t(-0.35, 0.15), complex_t(0.75, 0.6)};

// (a, b, k, n) with a zero denominator among b, a n + b, a j + b
inline const std::array<std::tuple<long, long, unsigned, std::uint64_t>, 10> singular_configs{{
    {1, 0, 1, 10}, {1, 0, 2, 7}, {1, -2, 1, 5}, {1, -2, 2, 5}, {2, -4, 3, 5},
    {3, -6, 4, 3}, {1, -5, 1, 5}, {-1, 3, 1, 6}, {-2, 0, 3, 4}, {2, -2, 2, 6},
}};

inline const std::array<std::tuple<long, long, std::uint64_t>, 8> forward_difference_configs{{
    {2, 1, 3}, {1, -3, 3}, {1, 0, 1}, {2, -4, 2}, {3, 5, 2}, {2, -2, 2}, {-1, 4, 3}, {4, 7, 5},
}};

}  // namespace verify_grid

inline std::string label(long a, complex_t b, unsigned k, std::uint64_t n) {
    return "a=" + std::to_string(a) + " b=(" + std::to_string(b.real()) + "," + std::to_string(b.imag()) +
           ") k=" + std::to_string(k) + " n=" + std::to_string(n);
}

inline double relative_residual(complex_t value, complex_t reference) {
    return std::abs(value - reference) / (1.0 + std::abs(reference));
}

inline suite_report verify_oracle(double tol = 1e-10) {
    family_result exp_fam{"exp vs direct", 1e-8};
    family_result k1_fam{"exp k=1 vs unreduced k=1", 1e-9};
    family_result tele_fam{"exp telescoping", 1e-8};
    for (long a : verify_grid::exp_a)
        for (complex_t b : verify_grid::exp_b)
            for (unsigned k = 1; k <= 5; ++k)
                for (std::uint64_t n : verify_grid::exp_n) {
                    const hp_params p{a, b, k, n};
                    const complex_t v = hpk_exponential(p, tol).value;
                    exp_fam.record(relative_residual(v, hp_direct(a, b, k, n)), label(a, b, k, n));
                    if (k == 1) k1_fam.record(std::abs(v - hp1_exponential(a, b, n, tol).value), label(a, b, k, n));
                    if (n >= 1) {
                        const complex_t prev = hpk_exponential({a, b, k, n - 1}, tol).value;
                        const complex_t term = 1.0 / ipow(imag_unit * static_cast<double>(a * static_cast<long>(n)) + b, k);
                        tele_fam.record(std::abs(v - prev - term), label(a, b, k, n));
                    }
                }

    family_result rs_fam{"real_shift vs direct", 1e-7};
    family_result cos_fam{"cos vs direct", 1e-7};
    family_result sin_fam{"sin vs direct", 1e-7};
    family_result cross_fam{"pairwise method agreement", 2e-7};
    for (complex_t b : verify_grid::shift_b)
        for (unsigned k = 1; k <= 5; ++k)
            for (std::uint64_t n : verify_grid::shift_n) {
                const complex_t d = shifted_direct(b, k, n);
                const std::string lbl = label(1, b, k, n);
                std::vector<complex_t> values;
                // the exponential value in shifted form: sum 1/(j+b)^k = i^k HP_k(a=1, b'=ib)
                values.push_back(ipow(imag_unit, k) * hpk_exponential({1, imag_unit * b, k, n}, tol).value);
                const complex_t rs = hpk_real_shift(b, k, n, tol).value;
                rs_fam.record(relative_residual(rs, d), lbl);
                values.push_back(rs);
                const hp_params p{1, b, k, n};
                const bool cos_ok = p.valid_trig() && (k % 2 == 1 || p.valid_trig_divided());
                const bool sin_ok = p.valid_trig() && (k % 2 == 0 || p.valid_trig_divided());
                if (cos_ok) {
                    const complex_t c = hpk_cosine(b, k, n, tol).value;
                    cos_fam.record(relative_residual(c, d), lbl);
                    values.push_back(c);
                }
                if (sin_ok) {
                    const complex_t s = hpk_sine(b, k, n, tol).value;
                    sin_fam.record(relative_residual(s, d), lbl);
                    values.push_back(s);
                }
                for (std::size_t i = 0; i < values.size(); ++i)
                    for (std::size_t j = i + 1; j < values.size(); ++j)
                        cross_fam.record(relative_residual(values[i], values[j]), lbl);
            }
    return {"oracle", {exp_fam, k1_fam, tele_fam, rs_fam, cos_fam, sin_fam, cross_fam}};
}

inline suite_report verify_series() {
    family_result routes{"p_k three-route agreement", 1e-10};
    family_result qk{"q_k recurrence vs cos_f", 1e-10};
    family_result parity{"trig generating-function parity", 1e-14};
    family_result indep{"independent-term series", 1e-10};
    for (complex_t b : verify_grid::series_b) {
        const auto gen = p_generating_series(b);
        for (unsigned k = 1; k <= 8; ++k) {
            const upolynomial rec = pk_from_recurrence(k, b);
            const std::string lbl = label(1, b, k, 0);
            routes.record(max_coeff_distance(rec, gen.coeff(k)), lbl + " recurrence/generating");
            routes.record(max_coeff_distance(rec, pk_closed_form(k, b)), lbl + " recurrence/closed");
        }
        const auto cos_f = trig_generating_series(trig_function::cos_f, b);
        for (unsigned k = 0; k <= 4; ++k)
            qk.record(max_coeff_distance(qk_from_recurrence(k, b), cos_f.coeff(2 * k + 1)), label(1, b, k, 0));
        for (auto which : {trig_function::cos_f, trig_function::cos_g, trig_function::sin_f, trig_function::sin_g}) {
            const auto s = trig_generating_series(which, b);
            // cos_f and sin_g are odd in x; cos_g and sin_f are even
            const bool odd = which == trig_function::cos_f || which == trig_function::sin_g;
            for (unsigned k = 0; k <= 10; ++k)
                if ((k % 2 == 0) == odd)
                    parity.record(max_coeff_distance(s.coeff(k), upolynomial{}),
                                  std::string(to_string(which)) + " " + label(1, b, k, 0));
        }
    }
    for (complex_t b : {complex_t(0.5, 0.0), complex_t(-1.0, 0.0), complex_t(0.3, 0.7), complex_t(0.0, 1.0),
                        complex_t(-0.6, -0.6), complex_t(0.05, 0.0)}) {
        const complex_t closed = -(exp_2pi(b) - 1.0) / (2.0 * b);
        indep.record(std::abs(independent_term_series(b, 40) - closed), label(1, b, 0, 0));
    }
    return {"series", {routes, qk, parity, indep}};
}

inline suite_report verify_lagrange() {
    family_result fam{"Lagrange identities", 1e-10};
    for (auto which : {lagrange_kind::cos, lagrange_kind::sin})
        for (unsigned k = 1; k <= 6; ++k)
            for (std::uint64_t n = 1; n <= 4; ++n)
                for (long a : {1L, 2L})
                    for (complex_t b : {complex_t(0.0), complex_t(0.3), complex_t(0.5, 0.2)})
                        fam.record(lagrange_identity_check(which, k, n, a, b).residual,
                                   std::string(which == lagrange_kind::cos ? "cos " : "sin ") + label(a, b, k, n));
    return {"lagrange", {fam}};
}

inline suite_report verify_singular(double tol = 1e-10) {
    family_result harmonic{"integer fallback b=0 k=1 vs H_n", 1e-8};
    family_result singular{"skip-singular integer fallback vs direct", 1e-7};
    family_result forward{"forward-difference identity", 1e-9};
    double h = 0.0;
    for (std::uint64_t n = 1; n <= 50; ++n) {
        h += 1.0 / static_cast<double>(n);
        harmonic.record(std::abs(hpk_integer(1, 0, 1, n, tol, true).value - h), "n=" + std::to_string(n));
    }
    for (const auto& [a, b, k, n] : verify_grid::singular_configs) {
        const double d = integer_direct(a, b, k, n, true);
        singular.record(relative_residual(hpk_integer(a, b, k, n, tol, true).value, d),
                        label(a, static_cast<double>(b), k, n));
    }
    for (const auto& [a, b, n] : verify_grid::forward_difference_configs)
        forward.record(forward_difference_check(a, b, n).residual, label(a, static_cast<double>(b), 1, n));
    return {"singular", {harmonic, singular, forward}};
}

}  // namespace hpsum
