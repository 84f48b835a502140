// Parameters of HP_k(n) = sum_{j=1}^{n} 1/(a i j + b)^k and their validity predicates.
#pragma once

#include "hpsum/scalar_core.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hpsum {

/// A value within this distance of an integer counts as that integer.
inline constexpr double integer_tolerance = 1e-9;
/// Closer than this (but not integer) and the formulas lose accuracy; reported as a note.
inline constexpr double near_integer_warning = 1e-4;
inline constexpr unsigned default_k_max = 10;

/// Distance from z to the nearest (real) integer.
inline double distance_to_integer(complex_t z) {
    return std::abs(z - std::nearbyint(z.real()));
}

inline bool is_integer(complex_t z) { return distance_to_integer(z) <= integer_tolerance; }

struct hp_params {
    long a = 1;
    complex_t b{};
    unsigned k = 1;
    std::uint64_t n = 0;

    void validate(unsigned k_max = default_k_max) const {
        if (a == 0) throw std::invalid_argument("hp_params: a must be nonzero");
        if (k == 0 || k > k_max)
            throw std::invalid_argument("hp_params: k must be in 1.." + std::to_string(k_max));
        if (!std::isfinite(b.real()) || !std::isfinite(b.imag()))
            throw std::invalid_argument("hp_params: b must be finite");
    }

    /// i b / a, the quantity that must avoid the integers for the exponential approach.
    complex_t exp_obstruction() const { return imag_unit * b / static_cast<double>(a); }

    bool valid_exp() const { return !is_integer(exp_obstruction()); }

    /// cos 2 pi b != 1, i.e. b not an integer.
    bool valid_trig() const { return std::abs(std::cos(2.0 * pi * b) - 1.0) > integer_tolerance; }

    /// sin 2 pi b != 0, needed where a formula divides by it.
    bool valid_trig_divided() const { return valid_trig() && std::abs(std::sin(2.0 * pi * b)) > integer_tolerance; }

    /// a == 1 form used by the real-shift, cosine and sine approaches: sum 1/(j + b)^k.
    bool b_is_integer() const { return is_integer(b); }
};

}  // namespace hpsum
