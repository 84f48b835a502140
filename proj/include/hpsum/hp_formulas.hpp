// Integral representations of HP_k(n) = sum_{j=1}^{n} 1/(a i j + b)^k and of sum 1/(j + b)^k.
//
// Every evaluator returns the boundary terms -1/(2 b^k) + 1/(2 (last term)^k) plus a prefactor
// times an integral over [0, 1] whose kernel is built on kernel_sin_cot.
#pragma once

#include "hpsum/hp_params.hpp"
#include "hpsum/quadrature.hpp"
#include "hpsum/scalar_core.hpp"
#include "hpsum/series_engine.hpp"
#include "hpsum/upolynomial.hpp"

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hpsum {

enum class hp_method { direct, exp, real_shift, cos, sin, integer_even, integer_odd };

inline std::string_view to_string(hp_method m) {
    switch (m) {
        case hp_method::direct: return "direct";
        case hp_method::exp: return "exp";
        case hp_method::real_shift: return "real_shift";
        case hp_method::cos: return "cos";
        case hp_method::sin: return "sin";
        case hp_method::integer_even: return "integer_even";
        case hp_method::integer_odd: return "integer_odd";
    }
    return "?";
}

struct method_report {
    complex_t value{};
    hp_method method = hp_method::direct;
    std::optional<quadrature_result> quadrature;
    std::vector<std::string> notes;

    bool converged() const { return !quadrature || quadrature->converged(); }
};

namespace detail {

inline void note_near_integer(std::vector<std::string>& notes, complex_t z, std::string_view what) {
    const double d = distance_to_integer(z);
    if (d > integer_tolerance && d <= near_integer_warning)
        notes.push_back(std::string(what) + " is within " + std::to_string(d) +
                        " of an integer; accuracy degrades near forbidden parameters");
}

inline void note_quadrature(std::vector<std::string>& notes, const quadrature_result& q) {
    if (q.status != quadrature_status::converged)
        notes.push_back("quadrature: " + std::string(to_string(q.status)));
}

inline quadrature_options options_for(double tol, double prefactor_magnitude, std::uint64_t frequency) {
    quadrature_options opts;
    opts.tol = prefactor_magnitude > 0.0 ? tol / prefactor_magnitude : tol;
    opts.min_depth = oscillation_depth(frequency);
    return opts;
}

// -1/(2 first^k) + 1/(2 last^k), each dropped when its base is zero and dropping is allowed.
inline complex_t boundary_terms(complex_t first, complex_t last, unsigned k, bool drop_zero = false) {
    complex_t v{0.0, 0.0};
    if (!(drop_zero && first == complex_t{})) v -= 0.5 / ipow(first, k);
    if (!(drop_zero && last == complex_t{})) v += 0.5 / ipow(last, k);
    return v;
}

inline std::uint64_t abs_long(long a) { return static_cast<std::uint64_t>(a < 0 ? -a : a); }

template <class Weight>
method_report integral_report(hp_method method, complex_t boundary, complex_t prefactor, Weight&& weight,
                              double tol, std::uint64_t frequency, std::vector<std::string> notes) {
    const auto q = integrate(std::forward<Weight>(weight), options_for(tol, std::abs(prefactor), frequency));
    note_quadrature(notes, q);
    return {boundary + prefactor * q.value, method, q, std::move(notes)};
}

// (cos 2 pi (n+b) u - cos 2 pi b u) cot pi u
inline complex_t cos_difference_kernel(complex_t b, std::uint64_t n, double u) {
    return -2.0 * std::sin(pi * (static_cast<double>(n) + 2.0 * b) * u) * kernel_sin_cot(n, 1, u);
}

// (sin 2 pi (n+b) u - sin 2 pi b u) cot pi u
inline complex_t sin_difference_kernel(complex_t b, std::uint64_t n, double u) {
    return 2.0 * std::cos(pi * (static_cast<double>(n) + 2.0 * b) * u) * kernel_sin_cot(n, 1, u);
}

inline std::uint64_t shift_frequency(complex_t b, std::uint64_t n) {
    return n + static_cast<std::uint64_t>(2.0 * std::abs(b.real()));
}

}  // namespace detail

/// Direct summation wrapped as a report.
inline method_report hp_direct_report(const hp_params& p, bool skip_singular = false) {
    return {hp_direct(p.a, p.b, p.k, p.n, skip_singular), hp_method::direct, std::nullopt, {}};
}

/// k = 1 closed form with integer a, unreduced:
/// -1/(2b) + 1/(2(ain+b)) + 2 pi/(e^{2 pi b} - 1) int_0^1 e^{pi(ain+2b)u} sin(pi a n u) cot(pi a u) du.
inline method_report hp1_exponential(long a, complex_t b, std::uint64_t n, double tol = 1e-10) {
    if (a == 0) throw std::invalid_argument("hp1_exponential: a must be nonzero");
    const complex_t ib = imag_unit * b;
    if (is_integer(ib)) throw validity_error("hp1_exponential: i b is an integer");
    std::vector<std::string> notes;
    detail::note_near_integer(notes, ib, "i b");
    const double nd = static_cast<double>(n);
    const complex_t last = imag_unit * static_cast<double>(a) * nd + b;
    const complex_t prefactor = 2.0 * pi / (exp_2pi(b) - 1.0);
    const complex_t rate = pi * last + pi * b;  // pi (a i n + 2b)
    auto weight = [&](double u) { return std::exp(rate * u) * kernel_sin_cot(n, a, u); };
    return detail::integral_report(hp_method::exp, detail::boundary_terms(b, last, 1), prefactor, weight, tol,
                                   detail::abs_long(a) * n, std::move(notes));
}

/// General order in reduced variables b/a:
/// -1/(2b^k) + 1/(2(ain+b)^k) + (2 pi/a)^k int_0^1 p_k(u) e^{pi u (i n + 2b/a)} sin(pi n u) cot(pi u) du,
/// with p_k from pk_closed_form(k, b/a).
inline method_report hpk_exponential(const hp_params& p, double tol = 1e-10) {
    p.validate();
    if (!p.valid_exp()) throw validity_error("hpk_exponential: i b / a is an integer");
    std::vector<std::string> notes;
    detail::note_near_integer(notes, p.exp_obstruction(), "i b / a");
    const double ad = static_cast<double>(p.a);
    const complex_t reduced = p.b / ad;
    const complex_t last = imag_unit * ad * static_cast<double>(p.n) + p.b;
    const upolynomial poly = pk_closed_form(p.k, reduced);
    const complex_t rate = pi * (imag_unit * static_cast<double>(p.n) + 2.0 * reduced);
    const double prefactor = ipow(2.0 * pi / ad, p.k);
    auto weight = [&](double u) { return poly(u) * std::exp(rate * u) * kernel_sin_cot(p.n, 1, u); };
    return detail::integral_report(hp_method::exp, detail::boundary_terms(p.b, last, p.k), prefactor, weight, tol,
                                   detail::shift_frequency(-imag_unit * reduced, p.n), std::move(notes));
}

/// sum_{j=1}^{n} 1/(j + b)^k for b not an integer:
/// -1/(2b^k) + 1/(2(n+b)^k) + (2 pi i)^k e^{-2 pi i b} int_0^1 sum_j c_j (1-u)^{k-j}/((j-1)!(k-j)!)
///   e^{pi i u (n+2b)} sin(pi n u) cot(pi u) du.
inline method_report hpk_real_shift(complex_t b, unsigned k, std::uint64_t n, double tol = 1e-10) {
    hp_params{1, b, k, n}.validate();
    if (is_integer(b)) throw validity_error("hpk_real_shift: b is an integer");
    std::vector<std::string> notes;
    detail::note_near_integer(notes, b, "b");
    const complex_t last = static_cast<double>(n) + b;
    // e^{-2 pi i b} sum_j c_j ... is p_k of the exponential approach at b' = i b
    const upolynomial poly = pk_closed_form(k, imag_unit * b);
    const complex_t rate = pi * imag_unit * (static_cast<double>(n) + 2.0 * b);
    const complex_t prefactor = ipow(2.0 * pi * imag_unit, k);
    auto weight = [&](double u) { return poly(u) * std::exp(rate * u) * kernel_sin_cot(n, 1, u); };
    return detail::integral_report(hp_method::real_shift, detail::boundary_terms(b, last, k), prefactor, weight,
                                   tol, detail::shift_frequency(b, n), std::move(notes));
}

/// Cosine approach for sum 1/(j + b)^k.
///   odd k:  bd - ((2 pi)^k / 2) int f_k(u) K(u) du,            f = x cos x(1-u) / (cos x - cos 2 pi b)
///   k = 2m: bd - ((2 pi)^k / (2 sin 2 pi b)) int [(-1)^m (1-u)^{2m-1}/(2m-1)! + g_k(u)] K(u) du,  g = sin x * f
/// with K(u) = (cos 2 pi (n+b) u - cos 2 pi b u) cot pi u.
inline method_report hpk_cosine(complex_t b, unsigned k, std::uint64_t n, double tol = 1e-10) {
    const hp_params p{1, b, k, n};
    p.validate();
    if (!p.valid_trig()) throw validity_error("hpk_cosine: cos 2 pi b = 1");
    const bool even = k % 2 == 0;
    if (even && !p.valid_trig_divided()) throw validity_error("hpk_cosine: sin 2 pi b = 0 (even k)");
    std::vector<std::string> notes;
    detail::note_near_integer(notes, b, "b");
    if (even) detail::note_near_integer(notes, 2.0 * b, "2b");

    upolynomial poly;
    complex_t prefactor;
    if (!even) {
        poly = trig_taylor_coeff(trig_function::cos_f, k, b);
        prefactor = -0.5 * ipow(2.0 * pi, k);
    } else {
        const unsigned m = k / 2;
        poly = upolynomial::one_minus_u_power(k - 1, (m % 2 == 0 ? 1.0 : -1.0) / factorial(k - 1)) +
               trig_taylor_coeff(trig_function::cos_g, k, b);
        prefactor = -ipow(2.0 * pi, k) / (2.0 * std::sin(2.0 * pi * b));
    }
    const complex_t last = static_cast<double>(n) + b;
    auto weight = [&](double u) { return poly(u) * detail::cos_difference_kernel(b, n, u); };
    return detail::integral_report(hp_method::cos, detail::boundary_terms(b, last, k), prefactor, weight, tol,
                                   detail::shift_frequency(b, n), std::move(notes));
}

/// Sine approach for sum 1/(j + b)^k.
///   k = 2m:   bd + ((2 pi)^k / 2) int f_k(u) K(u) du,          f = x sin x(1-u) / (cos x - cos 2 pi b)
///   k = 2m+1: bd + ((2 pi)^k / (2 sin 2 pi b)) int [(-1)^m (1-u)^{2m}/(2m)! + g_k(u)] K(u) du,  g = sin x * f
/// with K(u) = (sin 2 pi (n+b) u - sin 2 pi b u) cot pi u.
inline method_report hpk_sine(complex_t b, unsigned k, std::uint64_t n, double tol = 1e-10) {
    const hp_params p{1, b, k, n};
    p.validate();
    if (!p.valid_trig()) throw validity_error("hpk_sine: cos 2 pi b = 1");
    const bool even = k % 2 == 0;
    if (!even && !p.valid_trig_divided()) throw validity_error("hpk_sine: sin 2 pi b = 0 (odd k)");
    std::vector<std::string> notes;
    detail::note_near_integer(notes, b, "b");
    if (!even) detail::note_near_integer(notes, 2.0 * b, "2b");

    upolynomial poly;
    complex_t prefactor;
    if (even) {
        poly = trig_taylor_coeff(trig_function::sin_f, k, b);
        prefactor = 0.5 * ipow(2.0 * pi, k);
    } else {
        const unsigned m = k / 2;
        poly = upolynomial::one_minus_u_power(k - 1, (m % 2 == 0 ? 1.0 : -1.0) / factorial(k - 1)) +
               trig_taylor_coeff(trig_function::sin_g, k, b);
        prefactor = ipow(2.0 * pi, k) / (2.0 * std::sin(2.0 * pi * b));
    }
    const complex_t last = static_cast<double>(n) + b;
    auto weight = [&](double u) { return poly(u) * detail::sin_difference_kernel(b, n, u); };
    return detail::integral_report(hp_method::sin, detail::boundary_terms(b, last, k), prefactor, weight, tol,
                                   detail::shift_frequency(b, n), std::move(notes));
}

/// sum_{j=0}^{floor(k/2)} B_{2j} (2 - 2^{2j}) (1-u)^{k-2j} / ((2j)! (k-2j)!), coefficients exact until the final conversion.
inline upolynomial integer_coefficient_poly(unsigned k) {
    const unsigned half = k / 2;
    const bernoulli_table bern(2 * half);
    upolynomial poly;
    for (unsigned j = 0; j <= half; ++j) {
        exact_rational c = bern[2 * j] * (exact_rational(2) - detail::rational_pow(2, 2 * j));
        exact_integer denom = 1;
        for (unsigned t = 2; t <= 2 * j; ++t) denom *= t;
        for (unsigned t = 2; t <= k - 2 * j; ++t) denom *= t;
        c /= exact_rational(denom);
        poly += upolynomial::one_minus_u_power(k - 2 * j, to_double(c));
    }
    return poly;
}

/// Integer a, b fallback for sum_{j=1}^{n} 1/(a j + b)^k.
///   k = 2m:   bd - ((-1)^m (2 pi)^k / 2) int P(u) (sin 2 pi (an+b) u - sin 2 pi b u) cot(pi a u) du
///   k = 2m+1: bd - ((-1)^m (2 pi)^k / 2) int P(u) (cos 2 pi (an+b) u - cos 2 pi b u) cot(pi a u) du
/// Singular terms (b = 0, an + b = 0, aj + b = 0) are dropped from both sides when skip_singular is set.
inline method_report hpk_integer(long a, long b, unsigned k, std::uint64_t n, double tol = 1e-10,
                                 bool skip_singular = false) {
    hp_params{a, complex_t(static_cast<double>(b)), k, n}.validate();
    const long long last = static_cast<long long>(a) * static_cast<long long>(n) + b;
    bool singular = (b == 0) || (last == 0);
    // a j + b = 0 for some 1 <= j <= n
    if (b % a == 0) {
        const long long j = -static_cast<long long>(b) / a;
        if (j >= 1 && static_cast<std::uint64_t>(j) <= n) singular = true;
    }
    std::vector<std::string> notes;
    if (singular) {
        if (!skip_singular)
            throw singular_term_error("hpk_integer: singular configuration (a=" + std::to_string(a) +
                                      ", b=" + std::to_string(b) + ", n=" + std::to_string(n) +
                                      "); set skip_singular to drop the infinite terms");
        notes.emplace_back("singular terms dropped");
    }

    const upolynomial poly = integer_coefficient_poly(k);
    const unsigned m = k / 2;
    const bool even = k % 2 == 0;
    const double prefactor = -(m % 2 == 0 ? 1.0 : -1.0) * 0.5 * ipow(2.0 * pi, k);
    const double phase = pi * static_cast<double>(static_cast<long long>(a) * static_cast<long long>(n) + 2LL * b);
    auto weight = [&](double u) -> complex_t {
        const double ker = kernel_sin_cot(n, a, u);
        const double trig = even ? 2.0 * std::cos(phase * u) : -2.0 * std::sin(phase * u);
        return poly(u) * (trig * ker);
    };
    const complex_t boundary = detail::boundary_terms(complex_t(static_cast<double>(b)),
                                                      complex_t(static_cast<double>(last)), k, true);
    const std::uint64_t freq = detail::abs_long(a) * n + 2 * detail::abs_long(b);
    return detail::integral_report(even ? hp_method::integer_even : hp_method::integer_odd, boundary, prefactor,
                                   weight, tol, freq, std::move(notes));
}

/// sum_{j=1, j != m}^{n} 1/(j - m)^k through the integer fallback. Only a summation index j = m
/// needs skip_singular; singular boundary terms (m = 0, m = n) are always dropped.
inline method_report integer_shift_sum(long m, unsigned k, std::uint64_t n, double tol = 1e-10,
                                       bool skip_singular = false) {
    if (m >= 1 && static_cast<std::uint64_t>(m) <= n && !skip_singular)
        throw singular_term_error("integer_shift_sum: term j=" + std::to_string(m) +
                                  " is singular; set skip_singular to drop it");
    return hpk_integer(1, -m, k, n, tol, true);
}

/// HP_k(n) when i b / a = m is an integer: a i j + b = a i (j - m), so HP = (a i)^{-k} sum 1/(j - m)^k.
inline method_report hp_integer_fallback(const hp_params& p, double tol = 1e-10, bool skip_singular = false) {
    p.validate();
    const complex_t obstruction = p.exp_obstruction();
    if (!is_integer(obstruction)) throw validity_error("integer fallback: i b / a is not an integer");
    const long m = static_cast<long>(std::nearbyint(obstruction.real()));
    const complex_t scale = 1.0 / ipow(imag_unit * static_cast<double>(p.a), p.k);
    method_report r = integer_shift_sum(m, p.k, p.n, tol / std::abs(scale), skip_singular);
    r.notes.push_back("sum 1/(j - " + std::to_string(m) + ")^" + std::to_string(p.k) + " = " +
                      std::to_string(r.value.real()) + ", scaled by (a i)^-k");
    r.value *= scale;
    return r;
}

/// Sum 1/(a i j + b)^k through a shifted-sum method: HP = (a i)^{-k} sum 1/(j + beta)^k, beta = -i b / a.
inline method_report hp_via_shift(const hp_params& p, hp_method method, double tol = 1e-10) {
    p.validate();
    const complex_t scale = 1.0 / ipow(imag_unit * static_cast<double>(p.a), p.k);
    const complex_t beta = -imag_unit * p.b / static_cast<double>(p.a);
    method_report r;
    switch (method) {
        case hp_method::real_shift: r = hpk_real_shift(beta, p.k, p.n, tol / std::abs(scale)); break;
        case hp_method::cos: r = hpk_cosine(beta, p.k, p.n, tol / std::abs(scale)); break;
        case hp_method::sin: r = hpk_sine(beta, p.k, p.n, tol / std::abs(scale)); break;
        default: throw std::invalid_argument("hp_via_shift: method must be real_shift, cos or sin");
    }
    r.value *= scale;
    return r;
}

struct identity_check {
    complex_t lhs{};
    complex_t rhs{};
    double residual = 0.0;
};

/// 2 pi int_0^1 (1-u) [cos 2 pi (an+b) u - cos 2 pi (a(n-1)+b) u] cot(pi a u) du
///   = -1/(an+b) - 1/(a(n-1)+b),
/// with a right-hand term dropped when its denominator vanishes.
inline identity_check forward_difference_check(long a, long b, std::uint64_t n, double tol = 1e-12) {
    if (a == 0) throw std::invalid_argument("forward_difference_check: a must be nonzero");
    if (n == 0) throw std::invalid_argument("forward_difference_check: n must be positive");
    const long long an = static_cast<long long>(a) * static_cast<long long>(n);
    const long long cur = an + b;
    const long long prev = an - a + b;
    // cos A - cos B = -2 sin((A+B)/2) sin((A-B)/2), and sin(pi a u) cot(pi a u) is the n = 1 kernel
    const double phase = pi * static_cast<double>(cur + prev);
    auto weight = [&](double u) -> complex_t {
        return (1.0 - u) * (-2.0 * std::sin(phase * u) * kernel_sin_cot(1, a, u));
    };
    quadrature_options opts;
    opts.tol = tol / (2.0 * pi);
    opts.min_depth = oscillation_depth(static_cast<std::uint64_t>(std::llabs(cur) + std::llabs(prev)));
    const auto q = integrate(weight, opts);

    identity_check out;
    out.lhs = 2.0 * pi * q.value;
    double rhs = 0.0;
    if (cur != 0) rhs -= 1.0 / static_cast<double>(cur);
    if (prev != 0) rhs -= 1.0 / static_cast<double>(prev);
    out.rhs = rhs;
    out.residual = std::abs(out.lhs - out.rhs);
    return out;
}

enum class lagrange_kind { cos, sin };

/// Lagrange identity, with T = cos or sin:
///   sum_{j=1}^{k} T(2 pi n (a i j + b)/k)
///     = -T(2 pi b n/k)/2 + T(2 pi n (a i + b/k))/2 + T(pi n (a i + 2b/k)) sin(pi a i n) cot(pi a i n / k).
/// The residual is |LHS - RHS| / max(1, |LHS|); the terms grow like cosh(2 pi a n).
inline identity_check lagrange_identity_check(lagrange_kind which, unsigned k, std::uint64_t n, long a, complex_t b) {
    if (k == 0) throw std::invalid_argument("lagrange_identity_check: k must be positive");
    if (a == 0 || n == 0) throw validity_error("lagrange_identity_check: cot(pi a i n / k) has a pole");
    auto trig = [which](complex_t z) { return which == lagrange_kind::cos ? std::cos(z) : std::sin(z); };
    const double nd = static_cast<double>(n);
    const double kd = static_cast<double>(k);
    const complex_t ai = imag_unit * static_cast<double>(a);

    identity_check out;
    for (unsigned j = 1; j <= k; ++j) out.lhs += trig(2.0 * pi * nd * (ai * static_cast<double>(j) + b) / kd);
    const complex_t cot_arg = pi * ai * nd / kd;
    const complex_t cot = std::cos(cot_arg) / std::sin(cot_arg);
    out.rhs = -0.5 * trig(2.0 * pi * b * nd / kd) + 0.5 * trig(2.0 * pi * nd * (ai + b / kd)) +
              trig(pi * nd * (ai + 2.0 * b / kd)) * std::sin(pi * ai * nd) * cot;
    out.residual = std::abs(out.lhs - out.rhs) / std::max(1.0, std::abs(out.lhs));
    return out;
}

}  // namespace hpsum
