// Polylogarithms of non-positive integer order.
#pragma once

#include "hpsum/scalar_core.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace hpsum {

inline constexpr double pole_tolerance = 1e-9;

/// Rational closed forms of Li_{-m}(z) for m = 0..max_order.
///
/// (z d/dz)^m applied to z/(1-z) gives z * A_m(z) / (1-z)^{m+1} for m >= 1, where A_m
/// carries the Eulerian numbers. The table is built once and is immutable afterwards.
class neg_order_polylog {
public:
    explicit neg_order_polylog(unsigned max_order = 20) : eulerian_(max_order + 1) {
        if (max_order > 20) throw std::out_of_range("neg_order_polylog: order > 20 overflows the Eulerian table");
        eulerian_[0] = {1};
        for (unsigned m = 1; m <= max_order; ++m) {
            // A(m, i) = (i+1) A(m-1, i) + (m-i) A(m-1, i-1)
            auto& row = eulerian_[m];
            const auto& prev = eulerian_[m - 1];
            row.assign(m, 0);
            for (unsigned i = 0; i < m; ++i) {
                std::uint64_t v = 0;
                if (i < prev.size()) v += (i + 1) * prev[i];
                if (i >= 1 && i - 1 < prev.size()) v += (m - i) * prev[i - 1];
                row[i] = v;
            }
        }
    }

    unsigned max_order() const noexcept { return static_cast<unsigned>(eulerian_.size() - 1); }

    const std::vector<std::uint64_t>& eulerian_row(unsigned m) const { return eulerian_.at(m); }

    /// Li_{-m}(z).
    complex_t operator()(unsigned m, complex_t z) const {
        if (m > max_order()) throw std::out_of_range("neg_order_polylog: order beyond table");
        if (std::abs(z - 1.0) <= pole_tolerance) throw validity_error("polylog: argument at the pole z = 1");
        if (m == 0) return z / (1.0 - z);
        if (std::abs(z) > 1.0) {
            // Li_{-m}(z) = (-1)^{m+1} Li_{-m}(1/z)
            const complex_t v = rational_form(m, 1.0 / z);
            return (m % 2 == 1) ? v : -v;
        }
        return rational_form(m, z);
    }

private:
    complex_t rational_form(unsigned m, complex_t z) const {
        const auto& row = eulerian_[m];
        complex_t num{0.0, 0.0};
        for (auto it = row.rbegin(); it != row.rend(); ++it) num = num * z + static_cast<double>(*it);
        return z * num / ipow(1.0 - z, m + 1);
    }

    std::vector<std::vector<std::uint64_t>> eulerian_;
};

inline const neg_order_polylog& default_polylog() {
    static const neg_order_polylog table(20);
    return table;
}

/// Li_{-m}(z) using the shared table.
inline complex_t polylog_nonpositive(unsigned m, complex_t z) { return default_polylog()(m, z); }

/// c_j = delta_{1j} + Li_{1-j}(w) for j = 1..k (returned 0-based).
inline std::vector<complex_t> delta_polylog_coeffs(unsigned k, complex_t w) {
    if (k == 0) throw std::invalid_argument("delta_polylog_coeffs: k must be positive");
    if (std::abs(w - 1.0) <= pole_tolerance) throw validity_error("delta_polylog_coeffs: w at the pole w = 1");
    std::vector<complex_t> c(k);
    c[0] = 1.0 / (1.0 - w);  // 1 + w/(1-w)
    for (unsigned j = 2; j <= k; ++j) c[j - 1] = polylog_nonpositive(j - 1, w);
    return c;
}

}  // namespace hpsum
