// Power series in x truncated at a fixed order, with coefficients from any ring
// (complex scalars or polynomials in u).
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hpsum {

/// Raised for malformed series operations: mismatched orders, out-of-range
/// coefficient requests, or a constant term too small to invert.
class series_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

template <class Coeff>
class truncated_series {
public:
    using coeff_type = Coeff;

    explicit truncated_series(std::size_t order) : coeffs_(order + 1) {}
    truncated_series(std::size_t order, std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) {
        coeffs_.resize(order + 1);
    }

    std::size_t order() const noexcept { return coeffs_.size() - 1; }

    /// Coefficient of x^i; requests beyond the truncation order are an error.
    const Coeff& coeff(std::size_t i) const {
        if (i > order())
            throw series_error("truncated_series: coefficient " + std::to_string(i) + " beyond order " +
                               std::to_string(order()));
        return coeffs_[i];
    }
    Coeff& coeff(std::size_t i) {
        if (i > order())
            throw series_error("truncated_series: coefficient " + std::to_string(i) + " beyond order " +
                               std::to_string(order()));
        return coeffs_[i];
    }
    const std::vector<Coeff>& coefficients() const noexcept { return coeffs_; }

    /// Series whose x^i coefficient is generator(i).
    template <class Gen>
    static truncated_series generate(std::size_t order, Gen generator) {
        truncated_series s(order);
        for (std::size_t i = 0; i <= order; ++i) s.coeffs_[i] = generator(i);
        return s;
    }

    truncated_series& operator+=(const truncated_series& o) {
        check_order(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        return *this;
    }
    truncated_series& operator-=(const truncated_series& o) {
        check_order(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        return *this;
    }
    friend truncated_series operator+(truncated_series l, const truncated_series& r) { return l += r; }
    friend truncated_series operator-(truncated_series l, const truncated_series& r) { return l -= r; }

    /// Multiply by x^shift, dropping terms past the order.
    truncated_series shifted(std::size_t shift) const {
        truncated_series s(order());
        for (std::size_t i = shift; i <= order(); ++i) s.coeffs_[i] = coeffs_[i - shift];
        return s;
    }

    friend truncated_series operator*(const truncated_series& l, const truncated_series& r) {
        l.check_order(r);
        truncated_series out(l.order());
        for (std::size_t m = 0; m <= l.order(); ++m) {
            Coeff acc{};
            for (std::size_t i = 0; i <= m; ++i) acc += l.coeffs_[i] * r.coeffs_[m - i];
            out.coeffs_[m] = std::move(acc);
        }
        return out;
    }

private:
    void check_order(const truncated_series& o) const {
        if (o.order() != order()) throw series_error("truncated_series: mismatched truncation orders");
    }

    std::vector<Coeff> coeffs_;
};

template <class Coeff>
truncated_series<Coeff> series_mul(const truncated_series<Coeff>& l, const truncated_series<Coeff>& r) {
    return l * r;
}

}  // namespace hpsum
