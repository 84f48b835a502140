// Integrand polynomials p_k(u) for the exponential approach (three routes) and the
// Taylor coefficients of the cosine/sine generating functions.
#pragma once

#include "hpsum/polylog.hpp"
#include "hpsum/scalar_core.hpp"
#include "hpsum/truncated_series.hpp"
#include "hpsum/upolynomial.hpp"

#include <cmath>
#include <cstddef>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

namespace hpsum {

using upoly_series = truncated_series<upolynomial>;
using scalar_series = truncated_series<complex_t>;

inline constexpr double reciprocal_tolerance = 1e-9;

struct series_config {
    unsigned k_max = 10;
    /// Truncation order used for generating-function expansions.
    std::size_t order() const noexcept { return k_max + 4; }
};

namespace detail {

inline complex_t constant_value(const complex_t& c) { return c; }

inline complex_t constant_value(const upolynomial& p) {
    if (p.degree() > 0) throw series_error("series_reciprocal: constant term depends on u");
    return p[0];
}

template <class Coeff>
Coeff from_scalar(complex_t c) {
    if constexpr (std::is_same_v<Coeff, upolynomial>)
        return upolynomial::constant(c);
    else
        return Coeff(c);
}

inline void require_order(unsigned k, const series_config& cfg) {
    if (k > cfg.order())
        throw series_error("coefficient " + std::to_string(k) + " beyond truncation order " +
                           std::to_string(cfg.order()));
}

}  // namespace detail

/// t with s * t = 1 + O(x^{N+1}). The constant term must be a scalar of modulus above 1e-9.
template <class Coeff>
truncated_series<Coeff> series_reciprocal(const truncated_series<Coeff>& s) {
    const complex_t c0 = detail::constant_value(s.coeff(0));
    if (std::abs(c0) <= reciprocal_tolerance)
        throw validity_error("series_reciprocal: constant term below tolerance");
    const complex_t inv = 1.0 / c0;
    truncated_series<Coeff> t(s.order());
    t.coeff(0) = detail::from_scalar<Coeff>(inv);
    for (std::size_t m = 1; m <= s.order(); ++m) {
        Coeff acc{};
        for (std::size_t i = 1; i <= m; ++i) acc += s.coeff(i) * t.coeff(m - i);
        acc *= -inv;
        t.coeff(m) = acc;
    }
    return t;
}

/// e^{(1-u)x} with coefficients (1-u)^m/m!.
inline upoly_series exp_one_minus_u(std::size_t order) {
    return upoly_series::generate(order, [](std::size_t m) {
        return upolynomial::one_minus_u_power(static_cast<unsigned>(m), 1.0 / factorial(static_cast<unsigned>(m)));
    });
}

inline complex_t exp_2pi(complex_t b) { return std::exp(2.0 * pi * b); }

inline void require_exp_valid(complex_t b, std::string_view who) {
    if (std::abs(exp_2pi(b) - 1.0) <= reciprocal_tolerance)
        throw validity_error(std::string(who) + ": e^{2 pi b} = 1");
}

/// p_k(u) from (e^{2 pi b} - 1) p_k = (1-u)^{k-1}/(k-1)! + sum_{j<k} p_j/(k-j)!, with p_1 = 1/(e^{2 pi b} - 1).
inline upolynomial pk_from_recurrence(unsigned k, complex_t b) {
    if (k == 0) throw std::invalid_argument("pk_from_recurrence: k must be positive");
    require_exp_valid(b, "pk_from_recurrence");
    const complex_t inv = 1.0 / (exp_2pi(b) - 1.0);
    std::vector<upolynomial> p{upolynomial::constant(inv)};
    for (unsigned m = 2; m <= k; ++m) {
        upolynomial rhs = upolynomial::one_minus_u_power(m - 1, 1.0 / factorial(m - 1));
        for (unsigned j = 1; j < m; ++j) rhs += p[j - 1] * complex_t(1.0 / factorial(m - j));
        p.push_back(rhs * inv);
    }
    return p.back();
}

/// Full truncated expansion of p(x) = -x e^{(1-u)x} / (e^x - e^{2 pi b}).
inline upoly_series p_generating_series(complex_t b, const series_config& cfg = {}) {
    require_exp_valid(b, "p_generating_series");
    const std::size_t order = cfg.order();
    const complex_t e2b = exp_2pi(b);
    const auto denom = upoly_series::generate(order, [&](std::size_t m) {
        const complex_t c = 1.0 / factorial(static_cast<unsigned>(m));
        return upolynomial::constant(m == 0 ? c - e2b : c);
    });
    auto numer = exp_one_minus_u(order).shifted(1);
    for (std::size_t m = 0; m <= order; ++m) numer.coeff(m) *= complex_t(-1.0);
    return numer * series_reciprocal(denom);
}

/// x^k coefficient of p(x).
inline upolynomial pk_from_generating(unsigned k, complex_t b, const series_config& cfg = {}) {
    if (k == 0) throw std::invalid_argument("pk_from_generating: k must be positive");
    detail::require_order(k, cfg);
    return p_generating_series(b, cfg).coeff(k);
}

/// p_k(u) = w sum_{j=1}^{k} c_j (1-u)^{k-j} / ((j-1)! (k-j)!), w = e^{-2 pi b/a}, c_j = delta_{1j} + Li_{1-j}(w).
inline upolynomial pk_closed_form(unsigned k, complex_t b_over_a) {
    if (k == 0) throw std::invalid_argument("pk_closed_form: k must be positive");
    const complex_t w = std::exp(-2.0 * pi * b_over_a);
    if (std::abs(w - 1.0) <= reciprocal_tolerance) throw validity_error("pk_closed_form: e^{-2 pi b/a} = 1");
    const auto c = delta_polylog_coeffs(k, w);
    upolynomial p;
    for (unsigned j = 1; j <= k; ++j)
        p += upolynomial::one_minus_u_power(k - j, 1.0 / (factorial(j - 1) * factorial(k - j))) * (w * c[j - 1]);
    return p;
}

enum class trig_function { cos_f, cos_g, sin_f, sin_g };

inline std::string_view to_string(trig_function w) {
    switch (w) {
        case trig_function::cos_f: return "cos_f";
        case trig_function::cos_g: return "cos_g";
        case trig_function::sin_f: return "sin_f";
        case trig_function::sin_g: return "sin_g";
    }
    return "?";
}

inline void require_trig_valid(complex_t b, std::string_view who) {
    if (std::abs(std::cos(2.0 * pi * b) - 1.0) <= reciprocal_tolerance)
        throw validity_error(std::string(who) + ": cos 2 pi b = 1");
}

/// Truncated expansion of the cosine/sine generating functions
///   cos_f = x cos x(1-u) / (cos x - cos 2 pi b),  cos_g = sin x * cos_f,
///   sin_f = x sin x(1-u) / (cos x - cos 2 pi b),  sin_g = sin x * sin_f.
inline upoly_series trig_generating_series(trig_function which, complex_t b, const series_config& cfg = {}) {
    require_trig_valid(b, "trig_generating_series");
    const std::size_t order = cfg.order();
    const bool cosine = which == trig_function::cos_f || which == trig_function::cos_g;
    const complex_t c2b = std::cos(2.0 * pi * b);

    // x * cos x(1-u) or x * sin x(1-u), already shifted by one power of x
    const auto numer = upoly_series::generate(order, [&](std::size_t i) -> upolynomial {
        if (i == 0) return {};
        const unsigned m = static_cast<unsigned>(i - 1);
        if (cosine == (m % 2 == 1)) return {};
        const double sign = ((m / 2) % 2 == 0) ? 1.0 : -1.0;
        return upolynomial::one_minus_u_power(m, sign / factorial(m));
    });
    const auto denom = upoly_series::generate(order, [&](std::size_t i) -> upolynomial {
        if (i % 2 == 1) return {};
        const double sign = ((i / 2) % 2 == 0) ? 1.0 : -1.0;
        const complex_t c = sign / factorial(static_cast<unsigned>(i));
        return upolynomial::constant(i == 0 ? c - c2b : c);
    });
    auto f = numer * series_reciprocal(denom);
    if (which == trig_function::cos_f || which == trig_function::sin_f) return f;
    const auto sin_x = upoly_series::generate(order, [](std::size_t i) -> upolynomial {
        if (i % 2 == 0) return {};
        const double sign = (((i - 1) / 2) % 2 == 0) ? 1.0 : -1.0;
        return upolynomial::constant(sign / factorial(static_cast<unsigned>(i)));
    });
    return sin_x * f;
}

/// f^{(k)}(0)/k! (or the g analogue) as a polynomial in u.
inline upolynomial trig_taylor_coeff(trig_function which, unsigned k, complex_t b, const series_config& cfg = {}) {
    detail::require_order(k, cfg);
    return trig_generating_series(which, b, cfg).coeff(k);
}

/// q_k(u) = p_{2k+1}(u) of the cosine approach:
/// q_k = (-1)^k / (2 sin^2 pi b) ((1-u)^{2k}/(2k)! - sum_{j<k} (-1)^j q_j / (2k-2j)!).
inline upolynomial qk_from_recurrence(unsigned k, complex_t b) {
    const complex_t s = std::sin(pi * b);
    if (std::abs(s) <= reciprocal_tolerance) throw validity_error("qk_from_recurrence: sin pi b = 0");
    const complex_t scale = 1.0 / (2.0 * s * s);
    std::vector<upolynomial> q;
    for (unsigned m = 0; m <= k; ++m) {
        upolynomial bracket = upolynomial::one_minus_u_power(2 * m, 1.0 / factorial(2 * m));
        for (unsigned j = 0; j < m; ++j)
            bracket -= q[j] * complex_t((j % 2 == 0 ? 1.0 : -1.0) / factorial(2 * m - 2 * j));
        q.push_back(bracket * ((m % 2 == 0 ? 1.0 : -1.0) * scale));
    }
    return q.back();
}

/// Partial sum -pi sum_{i<=terms} ((2 pi b)^{2i}/(2i+1)! + (2 pi b)^{2i+1}/(2i+2)!), which tends to -(e^{2 pi b}-1)/(2b).
inline complex_t independent_term_series(complex_t b, unsigned terms) {
    const complex_t z = 2.0 * pi * b;
    complex_t sum{0.0, 0.0};
    complex_t power{1.0, 0.0};  // z^m / (m+1)!
    for (unsigned m = 0; m <= 2 * terms + 1; ++m) {
        power = (m == 0) ? complex_t(1.0) : power * z / static_cast<double>(m + 1);
        sum += power;
    }
    return -pi * sum;
}

}  // namespace hpsum
