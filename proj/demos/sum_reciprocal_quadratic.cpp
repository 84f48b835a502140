// Sums 1/(j^2 + 1) and 1/(j^2 + 2j + 2) through partial fractions and compares with direct summation.
#include "hpsum/rational_sums.hpp"

#include <cstdio>

int main() {
    using hpsum::polynomial;
    const polynomial quadratics[] = {polynomial({1.0, 0.0, 1.0}), polynomial({2.0, 2.0, 1.0})};
    for (const auto& p : quadratics) {
        for (std::uint64_t n : {10, 100, 1000}) {
            const auto r = hpsum::sum_reciprocal_poly(p, n);
            const auto direct = hpsum::reciprocal_poly_direct(p, n);
            std::printf("p = %g + %g x + %g x^2, n = %4llu: %.15f  (direct %.15f, |diff| %.1e)\n", p[0].real(),
                        p[1].real(), p[2].real(), static_cast<unsigned long long>(n), r.report.value.real(),
                        direct.real(), std::abs(r.report.value - direct));
        }
    }
}
