#include "bsroots/errors.hpp"
#include "bsroots/oracles.hpp"
#include "bsroots/thresholds.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace bsroots;

namespace {

const MonomialIdeal ex1_n3(3, {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
const MonomialIdeal ex2(3, {{2, 1, 1}, {1, 2, 1}, {1, 1, 2}});
const MonomialIdeal ex3(4, {{0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 0}});

IntVector random_point(std::mt19937& rng, std::size_t n, int hi)
{
    std::uniform_int_distribution<int> d(0, hi);
    IntVector w(n);
    for (auto& x : w) x = d(rng);
    return w;
}

}  // namespace

TEST(Tau, Examples)
{
    EXPECT_EQ(tau(ex3, {2, 2, 2, 2}), 2);
    EXPECT_EQ(tau(ex3, {1, 1, 1, 1}), 1);
    EXPECT_EQ(tau(ex2, {2, 2, 2}), 1);
    EXPECT_EQ(tau(ex2, {4, 4, 4}), 3);
    EXPECT_EQ(tau(ex2, {0, 0, 0}), 0);
}

TEST(Tau, PartialSupport)
{
    EXPECT_EQ(tau_partial(ex1_n3, {0, 1, 2}, {2, 2, 2}), 3);
    EXPECT_EQ(tau_partial(ex2, {0, 1, 2}, {0, 0, 0}), 0);
    EXPECT_THROW(tau_partial(MonomialIdeal(2, {{0, 1}}), {0}, {5}), UnboundedInvariantError);
    EXPECT_EQ(tau_q_partial(ex2, {0, 1, 2}, {1, 1, 1}), Rational(3, 4));
}

TEST(Tau, MatchesEnumerationAndLatticeGap)
{
    std::mt19937 rng(17);
    for (int trial = 0; trial < 150; ++trial) {
        const MonomialIdeal a = oracle::random_ideal(rng, 3, 4, 3);
        const NewtonPolyhedron p(a);
        const Integer n_mod = integrality_modulus(a);
        const IntVector u = random_point(rng, a.nvars(), 6), v = random_point(rng, a.nvars(), 6);
        const Integer tu = tau(a, u);
        EXPECT_EQ(tu, oracle::tau_enumerate(a, u)) << "trial " << trial;

        const RatVector ur = to_rational(u);
        const Rational gap = tau_q(p, ur) - Rational(tu);
        EXPECT_GE(gap, 0);
        EXPECT_TRUE(is_integer(gap * Rational(n_mod))) << "trial " << trial;
        EXPECT_EQ(tau_q(p, ur), tau_q_lp(a, ur)) << "trial " << trial;

        IntVector sum(u.size()), scaled(u.size());
        for (std::size_t i = 0; i < u.size(); ++i) {
            sum[i] = u[i] + v[i];
            scaled[i] = n_mod * u[i];
        }
        EXPECT_GE(tau(a, sum), tu + tau(a, v));
        EXPECT_EQ(Rational(tau(a, scaled)), Rational(n_mod) * tau_q(p, ur)) << "trial " << trial;
    }
}

TEST(TauQ, Examples)
{
    EXPECT_EQ(tau_q(ex2, {1, 1, 1}), Rational(3, 4));
    EXPECT_EQ(tau_q(ex3, {1, 1, 1, 1}), Rational(4, 3));
    EXPECT_EQ(tau_q(ex2, {12, 12, 12}), 9);
    EXPECT_EQ(tau_q_lp(ex3, {1, 1, 1, 1}), Rational(4, 3));
}

TEST(Nu, Examples)
{
    EXPECT_EQ(nu(ex2, maximal_ideal(3), 5), 3);
    EXPECT_EQ(nu(ex2, maximal_ideal(3), 1), 0);
    EXPECT_EQ(nu(ex3, maximal_ideal(4), 4), 4);
    EXPECT_THROW(nu(MonomialIdeal(2, {{1, 0}}), MonomialIdeal(2, {{0, 1}}), 3), RadicalContainmentError);
}

TEST(Nu, MatchesEnumeration)
{
    std::mt19937 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        const MonomialIdeal a = oracle::random_ideal(rng, 3, 3, 2);
        const MonomialIdeal j = trial % 2 ? maximal_ideal(a.nvars()) : power_ideal(Exponent(a.nvars(), 1 + trial % 3));
        for (std::int64_t q = 1; q <= 6; ++q)
            EXPECT_EQ(nu(a, j, q), nu_bruteforce(a, j, q)) << "trial " << trial << " q " << q;
    }
}

TEST(Thresholds, FThresholdLctJumping)
{
    EXPECT_EQ(f_threshold(ex2, maximal_ideal(3)), Rational(3, 4));
    EXPECT_EQ(f_threshold(ex3, maximal_ideal(4)), Rational(4, 3));
    const MonomialIdeal square(1, {{2}});
    EXPECT_EQ(f_threshold(square, square), 1);
    EXPECT_EQ(lct(ex2), Rational(3, 4));
    EXPECT_EQ(lct(ex3), Rational(4, 3));
    EXPECT_EQ(lct(MonomialIdeal(1, {{1}})), 1);
    EXPECT_EQ(jumping_number(ex2, {1, 1, 1}), Rational(3, 4));
    EXPECT_EQ(jumping_number(ex2, {4, 4, 4}), 3);
    EXPECT_EQ(jumping_number(ex2, {5, 5, 1}), 1);
}

TEST(Thresholds, MultiplierIdealMembership)
{
    EXPECT_FALSE(multiplier_ideal_membership(ex2, Rational(3, 4), {0, 0, 0}));
    EXPECT_TRUE(multiplier_ideal_membership(ex2, Rational(1, 2), {0, 0, 0}));
    EXPECT_TRUE(multiplier_ideal_membership(ex2, Rational(1, 1000), {0, 0, 0}));
    EXPECT_THROW(multiplier_ideal_membership(ex2, 0, {0, 0, 0}), InputError);
}

TEST(Law, QuasiLinearIntercepts)
{
    const QuasiLinearLaw l2 = quasi_linear_law(ex2, maximal_ideal(3));
    EXPECT_EQ(l2.slope, Rational(3, 4));
    EXPECT_EQ(l2.modulus, 12);
    for (long j : {1, 5, 9}) EXPECT_EQ(l2.intercepts.at(j), Rational(-3, 4));
    for (long q = 1; q <= 40; ++q)
        if (Integer(q) >= l2.q_min)
            EXPECT_EQ(Rational(nu(ex2, maximal_ideal(3), q)), l2.slope * q + l2.intercepts.at(q % 12));

    const QuasiLinearLaw l1 = quasi_linear_law(ex1_n3, maximal_ideal(3));
    EXPECT_EQ(l1.slope, Rational(3, 2));
    for (const auto& [j, gamma] : l1.intercepts)
        if (j % 2 == 1) EXPECT_EQ(gamma, Rational(-3, 2));
}

TEST(Periodicity, Examples)
{
    const Periodicity five = nu_periodicity(ex2, maximal_ideal(3), 5);
    EXPECT_EQ(five.period, 1u);
    for (std::size_t e = 0; e < five.nu_values.size(); ++e) {
        const Integer q = boost::multiprecision::pow(Integer(5), static_cast<unsigned>(e + 1));
        EXPECT_EQ(five.nu_values[e], (3 * q - 3) / 4);
    }
    EXPECT_EQ(nu_periodicity(ex2, maximal_ideal(3), 3).period, 2u);
    const MonomialIdeal x(1, {{1}});
    const Periodicity line = nu_periodicity(x, x, 7);
    EXPECT_EQ(line.period, 1u);
    EXPECT_EQ(line.differences.front(), 6);
}

TEST(Periodicity, DetectionRule)
{
    std::size_t s = 0, period = 0;
    ASSERT_TRUE(detect_period({1, 2, 3, 3, 3, 3}, s, period));
    EXPECT_EQ(s, 2u);
    EXPECT_EQ(period, 1u);
    ASSERT_TRUE(detect_period({5, 1, 3, 1, 3, 1, 3}, s, period));
    EXPECT_EQ(s, 1u);
    EXPECT_EQ(period, 2u);
    EXPECT_FALSE(detect_period({1, 2, 3, 3}, s, period));
    EXPECT_FALSE(detect_period({1, 2, 1, 3}, s, period));
}
