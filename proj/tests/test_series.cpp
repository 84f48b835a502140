#include "hpsum/series_engine.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <random>

using namespace hpsum;

namespace {

// Taylor coefficient of an analytic function by the trapezoidal Cauchy integral on |x| = radius.
complex_t cauchy_coefficient(const std::function<complex_t(complex_t)>& f, unsigned k, double radius,
                             unsigned points = 128) {
    complex_t sum{};
    for (unsigned m = 0; m < points; ++m) {
        const double theta = 2.0 * pi * m / points;
        sum += f(std::polar(radius, theta)) * std::polar(1.0, -static_cast<double>(k) * theta);
    }
    return sum / (static_cast<double>(points) * std::pow(radius, static_cast<double>(k)));
}

scalar_series random_series(std::mt19937& rng, std::size_t order) {
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    return scalar_series::generate(order, [&](std::size_t) { return complex_t(d(rng), d(rng)); });
}

double series_distance(const scalar_series& l, const scalar_series& r) {
    double m = 0.0;
    for (std::size_t i = 0; i <= l.order(); ++i) m = std::max(m, std::abs(l.coeff(i) - r.coeff(i)));
    return m;
}

const complex_t test_bs[] = {complex_t(0.3, 0.0), complex_t(0.5, 0.25), complex_t(0.2, -0.4),
                             complex_t(-0.35, 0.15), complex_t(0.75, 0.6)};
const double test_us[] = {0.0, 0.3, 0.77, 1.0};

}  // namespace

TEST(SeriesMul, DifferenceOfSquares) {
    const scalar_series a(2, {1.0, 1.0}), b(2, {1.0, -1.0});
    const auto c = series_mul(a, b);
    EXPECT_EQ(c.coeff(0), complex_t(1.0));
    EXPECT_EQ(c.coeff(1), complex_t(0.0));
    EXPECT_EQ(c.coeff(2), complex_t(-1.0));
}

TEST(SeriesMul, IdentityAndExponentialSquare) {
    std::mt19937 rng(7);
    const auto s = random_series(rng, 6);
    EXPECT_EQ(series_distance(s * scalar_series(6, {1.0}), s), 0.0);

    const auto e = scalar_series::generate(3, [](std::size_t m) { return complex_t(1.0 / factorial(m)); });
    const auto e2 = e * e;
    const double expected[] = {1.0, 2.0, 2.0, 4.0 / 3.0};
    for (std::size_t i = 0; i <= 3; ++i) EXPECT_NEAR(std::abs(e2.coeff(i) - expected[i]), 0.0, 1e-15);
}

TEST(SeriesMul, MismatchedOrdersRejected) {
    EXPECT_THROW(scalar_series(2) * scalar_series(3), series_error);
    EXPECT_THROW(scalar_series(2).coeff(3), series_error);
}

TEST(SeriesMul, AssociativeAndCommutative) {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = random_series(rng, 16), b = random_series(rng, 16), c = random_series(rng, 16);
        EXPECT_LE(series_distance(a * b, b * a), 1e-13);
        EXPECT_LE(series_distance((a * b) * c, a * (b * c)), 1e-13);
    }
}

TEST(SeriesReciprocal, GeometricAndExponential) {
    const auto g = series_reciprocal(scalar_series(3, {1.0, -1.0}));
    for (std::size_t i = 0; i <= 3; ++i) EXPECT_EQ(g.coeff(i), complex_t(1.0));

    const auto e = scalar_series::generate(2, [](std::size_t m) { return complex_t(1.0 / factorial(m)); });
    const auto inv = series_reciprocal(e);
    EXPECT_NEAR(std::abs(inv.coeff(0) - 1.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(inv.coeff(1) + 1.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(inv.coeff(2) - 0.5), 0.0, 1e-15);
}

TEST(SeriesReciprocal, Involution) {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        auto s = random_series(rng, 10);
        s.coeff(0) += 2.0;  // keep the constant term away from zero
        EXPECT_LE(series_distance(series_reciprocal(series_reciprocal(s)), s), 1e-12);
        const auto one = s * series_reciprocal(s);
        EXPECT_LE(series_distance(one, scalar_series(10, {1.0})), 1e-12);
    }
}

TEST(SeriesReciprocal, SmallConstantTermRejected) {
    EXPECT_THROW(series_reciprocal(scalar_series(3, {1e-10, 1.0})), validity_error);
    upoly_series s(2);
    s.coeff(0) = upolynomial{1.0, 1.0};
    EXPECT_THROW(series_reciprocal(s), series_error);
}

TEST(PkRecurrence, BaseCaseAndOneStep) {
    const complex_t b(0.25, 0.0);
    const complex_t inv = 1.0 / (std::exp(2.0 * pi * b) - 1.0);
    const auto p1 = pk_from_recurrence(1, b);
    ASSERT_EQ(p1.degree(), 0);
    EXPECT_NEAR(std::abs(p1[0] - inv), 0.0, 1e-15);

    // ((1-u) + p_1) / (e^{pi/2} - 1)
    const auto p2 = pk_from_recurrence(2, b);
    const upolynomial expected = (upolynomial{1.0, -1.0} + upolynomial::constant(inv)) * inv;
    EXPECT_LE(max_coeff_distance(p2, expected), 1e-15);
}

TEST(PkRecurrence, DegreeIsKMinusOne) {
    for (unsigned k = 1; k <= 8; ++k) EXPECT_EQ(pk_from_recurrence(k, {0.4, 0.1}).degree(), static_cast<int>(k) - 1);
}

TEST(PkRecurrence, ForbiddenParameters) {
    EXPECT_THROW(pk_from_recurrence(2, 0.0), validity_error);
    EXPECT_THROW(pk_from_recurrence(2, complex_t(0.0, 1.0)), validity_error);
    EXPECT_THROW(pk_from_generating(2, complex_t(0.0, -2.0)), validity_error);
    EXPECT_THROW(pk_closed_form(2, complex_t(0.0, 3.0)), validity_error);
    EXPECT_THROW(pk_from_recurrence(0, 0.3), std::invalid_argument);
}

TEST(PkGenerating, MatchesRecurrence) {
    const auto p1 = pk_from_generating(1, 0.3);
    EXPECT_NEAR(std::abs(p1[0] - 1.0 / (std::exp(0.6 * pi) - 1.0)), 0.0, 1e-15);
    EXPECT_LE(max_coeff_distance(pk_from_generating(3, 0.3), pk_from_recurrence(3, 0.3)), 1e-12);
    const complex_t b(0.5, 0.25);
    for (unsigned k = 1; k <= 8; ++k)
        EXPECT_LE(max_coeff_distance(pk_from_generating(k, b), pk_from_recurrence(k, b)), 1e-11) << k;
}

TEST(PkGenerating, BeyondTruncationOrderIsAnError) {
    series_config cfg;
    EXPECT_THROW(pk_from_generating(static_cast<unsigned>(cfg.order()) + 1, 0.3, cfg), series_error);
    EXPECT_NO_THROW(pk_from_generating(static_cast<unsigned>(cfg.order()), 0.3, cfg));
}

TEST(PkGenerating, CauchyIntegralOracle) {
    for (const complex_t b : {complex_t(0.3, 0.0), complex_t(0.5, 0.25)}) {
        const double radius = 0.9;  // singularities sit at 2 pi b + 2 pi i m
        for (unsigned k = 1; k <= 8; ++k) {
            const auto poly = pk_from_generating(k, b);
            for (double u : test_us) {
                auto p = [&](complex_t x) { return -x * std::exp((1.0 - u) * x) / (std::exp(x) - exp_2pi(b)); };
                EXPECT_LE(std::abs(poly(u) - cauchy_coefficient(p, k, radius)), 1e-11) << "k=" << k << " u=" << u;
            }
        }
    }
}

TEST(PkClosedForm, MatchesOtherRoutes) {
    const complex_t b(0.3, 0.0);
    const auto p1 = pk_closed_form(1, b);
    EXPECT_NEAR(std::abs(p1[0] - 1.0 / (exp_2pi(b) - 1.0)), 0.0, 1e-15);
    EXPECT_LE(max_coeff_distance(pk_closed_form(2, b), pk_from_recurrence(2, b)), 1e-11);
    const complex_t c(0.2, -0.4);
    EXPECT_LE(max_coeff_distance(pk_closed_form(5, c), pk_from_generating(5, c)), 1e-10);
}

TEST(PkClosedForm, ThreeRouteAgreement) {
    for (const complex_t b : test_bs) {
        const auto gen = p_generating_series(b);
        for (unsigned k = 1; k <= 8; ++k) {
            const auto rec = pk_from_recurrence(k, b);
            EXPECT_LE(max_coeff_distance(rec, gen.coeff(k)), 1e-10) << b << " k=" << k;
            EXPECT_LE(max_coeff_distance(rec, pk_closed_form(k, b)), 1e-10) << b << " k=" << k;
        }
    }
}

TEST(TrigTaylor, LeadingCoefficient) {
    const auto f1 = trig_taylor_coeff(trig_function::cos_f, 1, 0.3);
    ASSERT_EQ(f1.degree(), 0);
    const double s = std::sin(0.3 * pi);
    EXPECT_NEAR(std::abs(f1[0] - 1.0 / (2.0 * s * s)), 0.0, 1e-14);
}

TEST(TrigTaylor, Parity) {
    for (const complex_t b : test_bs)
        for (auto which : {trig_function::cos_f, trig_function::cos_g, trig_function::sin_f, trig_function::sin_g}) {
            const bool odd = which == trig_function::cos_f || which == trig_function::sin_g;
            for (unsigned k = 0; k <= 10; ++k)
                if ((k % 2 == 0) == odd) {
                    EXPECT_TRUE(trig_taylor_coeff(which, k, b).is_zero()) << to_string(which) << k;
                }
        }
}

TEST(TrigTaylor, CauchyIntegralOracle) {
    const complex_t b(0.3, 0.1);
    const double radius = 1.0;  // nearest singularity at |2 pi b| ~ 1.99
    const complex_t c2b = std::cos(2.0 * pi * b);
    for (auto which : {trig_function::cos_f, trig_function::cos_g, trig_function::sin_f, trig_function::sin_g}) {
        const auto series = trig_generating_series(which, b);
        for (unsigned k = 1; k <= 10; ++k)
            for (double u : test_us) {
                auto f = [&](complex_t x) {
                    const complex_t inner = (which == trig_function::cos_f || which == trig_function::cos_g)
                                                ? std::cos(x * (1.0 - u))
                                                : std::sin(x * (1.0 - u));
                    complex_t v = x * inner / (std::cos(x) - c2b);
                    if (which == trig_function::cos_g || which == trig_function::sin_g) v *= std::sin(x);
                    return v;
                };
                EXPECT_LE(std::abs(series.coeff(k)(u) - cauchy_coefficient(f, k, radius)), 1e-11)
                    << to_string(which) << " k=" << k << " u=" << u;
            }
    }
}

TEST(TrigTaylor, ForbiddenParameter) {
    EXPECT_THROW(trig_taylor_coeff(trig_function::cos_f, 3, 1.0), validity_error);
    EXPECT_THROW(trig_taylor_coeff(trig_function::sin_g, 3, 0.0), validity_error);
}

TEST(QkRecurrence, Examples) {
    const complex_t b(0.3, 0.0);
    const double s = std::sin(pi * 0.3);
    const auto q0 = qk_from_recurrence(0, b);
    ASSERT_EQ(q0.degree(), 0);
    EXPECT_NEAR(std::abs(q0[0] - 1.0 / (2.0 * s * s)), 0.0, 1e-14);
    EXPECT_LE(max_coeff_distance(qk_from_recurrence(1, b), trig_taylor_coeff(trig_function::cos_f, 3, b)), 1e-11);
    EXPECT_LE(max_coeff_distance(qk_from_recurrence(2, 0.4), trig_taylor_coeff(trig_function::cos_f, 5, 0.4)), 1e-10);
    EXPECT_THROW(qk_from_recurrence(1, 2.0), validity_error);
}

TEST(QkRecurrence, MatchesCosFOverGrid) {
    for (const complex_t b : test_bs)
        for (unsigned k = 0; k <= 4; ++k)
            EXPECT_LE(max_coeff_distance(qk_from_recurrence(k, b), trig_taylor_coeff(trig_function::cos_f, 2 * k + 1, b)),
                      1e-10)
                << b << " k=" << k;
}

TEST(IndependentTerm, ConvergesToClosedForm) {
    for (const complex_t b : {complex_t(1.0, 0.0), complex_t(-1.0, 0.0), complex_t(0.6, 0.8), complex_t(0.0, -1.0),
                              complex_t(0.1, 0.0), complex_t(-0.5, 0.5)}) {
        const complex_t closed = -(exp_2pi(b) - 1.0) / (2.0 * b);
        EXPECT_LE(std::abs(independent_term_series(b, 40) - closed), 1e-10) << b;
    }
}
