// Dense polynomials in the integration variable u.
#pragma once

#include "hpsum/scalar_core.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

namespace hpsum {

/// Polynomial sum_i c_i u^i. Trailing zero coefficients are trimmed; the zero polynomial has no coefficients.
template <class T>
class basic_upolynomial {
public:
    using value_type = T;

    basic_upolynomial() = default;
    basic_upolynomial(std::initializer_list<T> coeffs) : coeffs_(coeffs) { trim(); }
    explicit basic_upolynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static basic_upolynomial constant(T c) { return basic_upolynomial({c}); }

    /// scale * (1 - u)^m
    static basic_upolynomial one_minus_u_power(unsigned m, double scale = 1.0) {
        std::vector<T> c(m + 1);
        double binom = 1.0;
        for (unsigned i = 0; i <= m; ++i) {
            c[i] = T((i % 2 == 0 ? 1.0 : -1.0) * binom * scale);
            binom = binom * (m - i) / (i + 1);
        }
        return basic_upolynomial(std::move(c));
    }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    std::size_t size() const noexcept { return coeffs_.size(); }
    const std::vector<T>& coefficients() const noexcept { return coeffs_; }

    T operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : T{}; }

    template <class U>
    auto operator()(U u) const {
        decltype(T{} * u) acc{};
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * u + *it;
        return acc;
    }

    basic_upolynomial derivative() const {
        if (coeffs_.size() <= 1) return {};
        std::vector<T> c(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * static_cast<double>(i);
        return basic_upolynomial(std::move(c));
    }

    basic_upolynomial& operator+=(const basic_upolynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    basic_upolynomial& operator-=(const basic_upolynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }
    basic_upolynomial& operator*=(T s) {
        for (auto& c : coeffs_) c *= s;
        trim();
        return *this;
    }

    friend basic_upolynomial operator+(basic_upolynomial l, const basic_upolynomial& r) { return l += r; }
    friend basic_upolynomial operator-(basic_upolynomial l, const basic_upolynomial& r) { return l -= r; }
    friend basic_upolynomial operator-(basic_upolynomial p) { return p *= T(-1.0); }
    friend basic_upolynomial operator*(basic_upolynomial p, T s) { return p *= s; }
    friend basic_upolynomial operator*(T s, basic_upolynomial p) { return p *= s; }

    friend basic_upolynomial operator*(const basic_upolynomial& l, const basic_upolynomial& r) {
        if (l.is_zero() || r.is_zero()) return {};
        std::vector<T> c(l.coeffs_.size() + r.coeffs_.size() - 1);
        for (std::size_t i = 0; i < l.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < r.coeffs_.size(); ++j) c[i + j] += l.coeffs_[i] * r.coeffs_[j];
        return basic_upolynomial(std::move(c));
    }

    friend bool operator==(const basic_upolynomial&, const basic_upolynomial&) = default;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == T{}) coeffs_.pop_back();
    }

    std::vector<T> coeffs_;
};

using upolynomial = basic_upolynomial<complex_t>;

/// Largest coefficient-wise modulus of l - r.
template <class T>
double max_coeff_distance(const basic_upolynomial<T>& l, const basic_upolynomial<T>& r) {
    double d = 0.0;
    const std::size_t n = std::max(l.size(), r.size());
    for (std::size_t i = 0; i < n; ++i) d = std::max(d, static_cast<double>(std::abs(l[i] - r[i])));
    return d;
}

}  // namespace hpsum
