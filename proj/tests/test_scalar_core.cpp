#include "hpsum/scalar_core.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace hpsum;

namespace {

exact_rational brute_power_sum(unsigned p, unsigned n) {
    exact_integer s = 0;
    for (unsigned j = 1; j <= n; ++j) {
        exact_integer t = 1;
        for (unsigned e = 0; e < p; ++e) t *= j;
        s += t;
    }
    return exact_rational(s);
}

// Independent route: principal-branch power via exp(k log z) in long double.
std::complex<long double> hp_principal_power(long a, std::complex<double> b, unsigned k, unsigned n) {
    std::complex<long double> sum = 0;
    for (unsigned j = 1; j <= n; ++j) {
        const std::complex<long double> z(b.real(), static_cast<long double>(a) * j + b.imag());
        sum += std::exp(-static_cast<long double>(k) * std::log(z));
    }
    return sum;
}

}  // namespace

TEST(Bernoulli, SmallValues) {
    const bernoulli_table t0(0);
    ASSERT_EQ(t0.values().size(), 1u);
    EXPECT_EQ(t0[0], 1);

    const bernoulli_table t(12);
    EXPECT_EQ(t[1], exact_rational(-1, 2));
    EXPECT_EQ(t[2], exact_rational(1, 6));
    EXPECT_EQ(t[4], exact_rational(-1, 30));
    EXPECT_EQ(t[6], exact_rational(1, 42));
    EXPECT_EQ(t[10], exact_rational(5, 66));
    EXPECT_EQ(t[12], exact_rational(-691, 2730));
    for (std::size_t j = 3; j <= 11; j += 2) EXPECT_EQ(t[j], 0);
}

TEST(Bernoulli, DefiningRecurrenceThroughB60) {
    const bernoulli_table t(60);
    for (unsigned m = 1; m <= 60; ++m) {
        exact_rational s = 0;
        for (unsigned r = 0; r <= m; ++r) s += exact_rational(binomial(m + 1, r)) * t[r];
        EXPECT_EQ(s, 0) << "m=" << m;
    }
}

TEST(Bernoulli, CapExceeded) {
    EXPECT_THROW(bernoulli_table(201), std::out_of_range);
    EXPECT_THROW(bernoulli_table(20, 10), std::out_of_range);
    EXPECT_NO_THROW(bernoulli_table(200));
}

TEST(Faulhaber, Examples) {
    EXPECT_EQ(faulhaber_even(1, 3), 14);
    EXPECT_EQ(faulhaber_even(1, 0), 0);
    EXPECT_EQ(faulhaber_even(2, 2), 17);
    EXPECT_EQ(faulhaber_odd(0, 4), 10);
    EXPECT_EQ(faulhaber_odd(1, 3), 36);
    EXPECT_EQ(faulhaber_odd(0, 0), 0);
}

TEST(Faulhaber, EvenRejectsZeroIndex) { EXPECT_THROW(faulhaber_even(0, 5), std::invalid_argument); }

TEST(Faulhaber, MatchesBruteForceExactly) {
    for (unsigned i = 1; i <= 6; ++i)
        for (unsigned n = 0; n <= 30; ++n) ASSERT_EQ(faulhaber_even(i, n), brute_power_sum(2 * i, n)) << i << ' ' << n;
    for (unsigned i = 0; i <= 6; ++i)
        for (unsigned n = 0; n <= 30; ++n) ASSERT_EQ(faulhaber_odd(i, n), brute_power_sum(2 * i + 1, n)) << i << ' ' << n;
}

TEST(HpDirect, Examples) {
    const complex_t one = hp_direct(1, {1.0, 0.0}, 1, 1);
    EXPECT_DOUBLE_EQ(one.real(), 0.5);
    EXPECT_DOUBLE_EQ(one.imag(), -0.5);
    EXPECT_EQ(hp_direct(1, {0.5, 0.0}, 2, 0), complex_t(0.0, 0.0));

    const auto expected = hp_principal_power(2, {0.5, 0.5}, 3, 5);
    const complex_t got = hp_direct(2, {0.5, 0.5}, 3, 5);
    EXPECT_NEAR(got.real(), static_cast<double>(expected.real()), 1e-14);
    EXPECT_NEAR(got.imag(), static_cast<double>(expected.imag()), 1e-14);
}

TEST(HpDirect, SingularTerm) {
    // a i j + b = 0 at j = 2 for a = 1, b = -2i
    EXPECT_THROW(hp_direct(1, {0.0, -2.0}, 1, 3), singular_term_error);
    const complex_t skipped = hp_direct(1, {0.0, -2.0}, 1, 3, true);
    const complex_t expected = 1.0 / complex_t(0.0, -1.0) + 1.0 / complex_t(0.0, 1.0);
    EXPECT_NEAR(std::abs(skipped - expected), 0.0, 1e-15);
    EXPECT_THROW(integer_direct(1, -2, 1, 3), singular_term_error);
    EXPECT_DOUBLE_EQ(integer_direct(1, -2, 1, 3, true), -1.0 + 1.0);
}

TEST(HpDirect, TelescopingProperty) {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<long> a_dist(-4, 4);
    std::uniform_real_distribution<double> b_dist(-3.0, 3.0);
    std::uniform_int_distribution<unsigned> k_dist(1, 8), n_dist(1, 40);
    for (int trial = 0; trial < 200; ++trial) {
        long a = a_dist(rng);
        if (a == 0) a = 1;
        const complex_t b(b_dist(rng), b_dist(rng));
        const unsigned k = k_dist(rng);
        const unsigned n = n_dist(rng);
        const complex_t total = hp_direct(a, b, k, n);
        const complex_t diff = total - hp_direct(a, b, k, n - 1);
        const complex_t term = 1.0 / ipow(imag_unit * static_cast<double>(a * static_cast<long>(n)) + b, k);
        // the difference cancels down from |total|
        EXPECT_LE(std::abs(diff - term), 1e-13 * (1.0 + std::abs(total))) << "trial " << trial;
    }
}

TEST(Ipow, MatchesPrincipalPower) {
    const complex_t z(0.3, -1.7);
    for (unsigned k = 0; k <= 10; ++k)
        EXPECT_LE(std::abs(ipow(z, k) - std::exp(static_cast<double>(k) * std::log(z))), 1e-12 * std::pow(std::abs(z), k));
}
