// Exact Bernoulli numbers, Faulhaber power sums and the direct-summation oracle.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hpsum {

using complex_t = std::complex<double>;
using exact_rational = boost::multiprecision::cpp_rational;
using exact_integer = boost::multiprecision::cpp_int;

inline constexpr double pi = 3.141592653589793238462643383279502884;
inline constexpr complex_t imag_unit{0.0, 1.0};

/// Raised when a formula is asked to evaluate outside its validity domain.
class validity_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised when a sum hits a zero denominator and skipping was not requested.
class singular_term_error : public validity_error {
public:
    using validity_error::validity_error;
};

/// z^k for integer k >= 0 by repeated squaring.
template <class T>
T ipow(T z, unsigned k) {
    T result{1};
    while (k != 0) {
        if (k & 1U) result *= z;
        z *= z;
        k >>= 1U;
    }
    return result;
}

inline double factorial(unsigned m) {
    double f = 1.0;
    for (unsigned i = 2; i <= m; ++i) f *= i;
    return f;
}

inline exact_integer binomial(unsigned n, unsigned r) {
    if (r > n) return 0;
    exact_integer c = 1;
    for (unsigned i = 1; i <= r; ++i) {
        c *= n - r + i;
        c /= i;
    }
    return c;
}

inline double to_double(const exact_rational& q) { return q.convert_to<double>(); }

/// Bernoulli numbers B_0..B_M held exactly, with B_1 = -1/2.
class bernoulli_table {
public:
    static constexpr std::size_t default_cap = 200;

    explicit bernoulli_table(std::size_t max_index, std::size_t cap = default_cap) {
        if (max_index > cap)
            throw std::out_of_range("bernoulli_table: index " + std::to_string(max_index) +
                                    " exceeds cap " + std::to_string(cap));
        values_.reserve(max_index + 1);
        values_.emplace_back(1);
        // sum_{r=0}^{m} C(m+1, r) B_r = 0  =>  B_m = -(1/(m+1)) sum_{r<m} C(m+1, r) B_r
        for (std::size_t m = 1; m <= max_index; ++m) {
            if (m > 1 && m % 2 == 1) {
                values_.emplace_back(0);
                continue;
            }
            exact_rational acc = 0;
            for (std::size_t r = 0; r < m; ++r) {
                if (values_[r] == 0) continue;
                acc += exact_rational(binomial(static_cast<unsigned>(m + 1), static_cast<unsigned>(r))) *
                       values_[r];
            }
            values_.push_back(-acc / exact_rational(static_cast<long long>(m + 1)));
        }
    }

    std::size_t max_index() const noexcept { return values_.size() - 1; }
    const exact_rational& operator[](std::size_t i) const { return values_.at(i); }
    const std::vector<exact_rational>& values() const noexcept { return values_; }

private:
    std::vector<exact_rational> values_;
};

namespace detail {

inline exact_rational rational_pow(std::uint64_t base, unsigned e) {
    exact_integer r = 1;
    for (unsigned i = 0; i < e; ++i) r *= base;
    return exact_rational(r);
}

// n^{p}/2 + sum_{j=0}^{i} p! B_{2j} n^{p+1-2j} / ((2j)! (p+1-2j)!)
inline exact_rational faulhaber_impl(unsigned p, unsigned i, std::uint64_t n) {
    const bernoulli_table bern(2 * i);
    exact_rational sum = rational_pow(n, p) / 2;
    exact_integer p_fact = 1;
    for (unsigned t = 2; t <= p; ++t) p_fact *= t;
    for (unsigned j = 0; j <= i; ++j) {
        exact_integer denom = 1;
        for (unsigned t = 2; t <= 2 * j; ++t) denom *= t;
        for (unsigned t = 2; t <= p + 1 - 2 * j; ++t) denom *= t;
        sum += exact_rational(p_fact, denom) * bern[2 * j] * rational_pow(n, p + 1 - 2 * j);
    }
    return sum;
}

}  // namespace detail

/// Exact sum of j^{2i} for j = 1..n. Requires i >= 1: the closed form gives n + 1/2 at i = 0.
inline exact_rational faulhaber_even(unsigned i, std::uint64_t n) {
    if (i == 0) throw std::invalid_argument("faulhaber_even: i must be >= 1");
    if (n == 0) return 0;
    return detail::faulhaber_impl(2 * i, i, n);
}

/// Exact sum of j^{2i+1} for j = 1..n.
inline exact_rational faulhaber_odd(unsigned i, std::uint64_t n) {
    if (n == 0) return 0;
    return detail::faulhaber_impl(2 * i + 1, i, n);
}

/// The literal sum of 1/(a*i*j + b)^k for j = 1..n.
/// A term with a zero denominator throws unless skip_singular is set, in which case it is omitted.
inline complex_t hp_direct(long a, complex_t b, unsigned k, std::uint64_t n, bool skip_singular = false) {
    complex_t sum{0.0, 0.0};
    for (std::uint64_t j = 1; j <= n; ++j) {
        const complex_t base = imag_unit * static_cast<double>(a) * static_cast<double>(j) + b;
        if (base == complex_t{0.0, 0.0}) {
            if (skip_singular) continue;
            throw singular_term_error("hp_direct: term j=" + std::to_string(j) + " is singular");
        }
        sum += 1.0 / ipow(base, k);
    }
    return sum;
}

/// The literal sum of 1/(j + b)^k for j = 1..n, the oracle for the real-shift, cosine and sine formulas.
inline complex_t shifted_direct(complex_t b, unsigned k, std::uint64_t n, bool skip_singular = false) {
    complex_t sum{0.0, 0.0};
    for (std::uint64_t j = 1; j <= n; ++j) {
        const complex_t base = static_cast<double>(j) + b;
        if (base == complex_t{0.0, 0.0}) {
            if (skip_singular) continue;
            throw singular_term_error("shifted_direct: term j=" + std::to_string(j) + " is singular");
        }
        sum += 1.0 / ipow(base, k);
    }
    return sum;
}

/// Sum of 1/(a*j + b)^k over j = 1..n with real integer parameters, the oracle for the integer fallback.
inline double integer_direct(long a, long b, unsigned k, std::uint64_t n, bool skip_singular = false) {
    double sum = 0.0;
    for (std::uint64_t j = 1; j <= n; ++j) {
        const long long base = static_cast<long long>(a) * static_cast<long long>(j) + b;
        if (base == 0) {
            if (skip_singular) continue;
            throw singular_term_error("integer_direct: term j=" + std::to_string(j) + " is singular");
        }
        sum += 1.0 / ipow(static_cast<double>(base), k);
    }
    return sum;
}

}  // namespace hpsum
