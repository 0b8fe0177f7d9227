#include "bsroots/errors.hpp"
#include "bsroots/ideal.hpp"
#include "bsroots/oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace bsroots;

namespace {
const MonomialIdeal ex2(3, {{2, 1, 1}, {1, 2, 1}, {1, 1, 2}});
}

TEST(Ideal, NormalizesGenerators)
{
    const MonomialIdeal a(2, {{2, 0}, {1, 1}, {2, 0}, {2, 1}});
    EXPECT_EQ(a.size(), 2u);
    EXPECT_TRUE(contains_monomial(a, {2, 0}));
    EXPECT_THROW(MonomialIdeal(2, {}), InputError);
    EXPECT_THROW(MonomialIdeal(2, {{1, -1}}), InputError);
    EXPECT_THROW(MonomialIdeal(2, {{1, 1, 1}}), InputError);
}

TEST(Ideal, MonomialMembership)
{
    EXPECT_TRUE(contains_monomial(ex2, {2, 1, 1}));
    EXPECT_FALSE(contains_monomial(ex2, {1, 1, 1}));
    EXPECT_TRUE(contains_monomial(ex2, {4, 2, 2}));
    EXPECT_THROW(contains_monomial(ex2, {1, 1}), InputError);
}

TEST(Ideal, FrobeniusPowers)
{
    EXPECT_EQ(frobenius_power(maximal_ideal(3), 3), MonomialIdeal(3, {{3, 0, 0}, {0, 3, 0}, {0, 0, 3}}));
    EXPECT_EQ(frobenius_power(ex2, 1), ex2);
    EXPECT_EQ(frobenius_power(ex2, 2), MonomialIdeal(3, {{4, 2, 2}, {2, 4, 2}, {2, 2, 4}}));
    EXPECT_THROW(frobenius_power(ex2, 0), InputError);
}

TEST(Ideal, IrreducibleDecompositionExamples)
{
    const auto single = irreducible_decomposition(MonomialIdeal(2, {{2, 0}, {0, 3}}));
    ASSERT_EQ(single.size(), 1u);
    EXPECT_EQ(single[0].powers, (std::vector<VariablePower>{{0, 2}, {1, 3}}));

    const MonomialIdeal xy(2, {{1, 1}});
    const auto split = irreducible_decomposition(xy);
    EXPECT_EQ(split.size(), 2u);
    EXPECT_TRUE(oracle::decomposition_matches(xy, split, 2));
    EXPECT_FALSE(oracle::decomposition_matches(xy, {split[0]}, 2));

    const MonomialIdeal staircase(2, {{2, 0}, {1, 1}, {0, 2}});
    const auto comps = irreducible_decomposition(staircase);
    ASSERT_EQ(comps.size(), 2u);
    EXPECT_TRUE(oracle::decomposition_matches(staircase, comps, 2));
    const IrreducibleComponent c1{{{0, 2}, {1, 1}}}, c2{{{0, 1}, {1, 2}}};
    EXPECT_TRUE(std::find(comps.begin(), comps.end(), c1) != comps.end());
    EXPECT_TRUE(std::find(comps.begin(), comps.end(), c2) != comps.end());
}

TEST(Ideal, DecompositionAgreesWithMembershipOnRandomIdeals)
{
    std::mt19937 rng(3);
    for (int trial = 0; trial < 150; ++trial) {
        const MonomialIdeal j = oracle::random_ideal(rng, 3, 4, 3);
        if (j.is_unit()) continue;
        EXPECT_TRUE(oracle::decomposition_matches(j, irreducible_decomposition(j), j.max_exponent() + 1))
            << "trial " << trial;
    }
}

TEST(Ideal, RadicalContainment)
{
    EXPECT_TRUE(radical_contains(maximal_ideal(3), ex2));
    EXPECT_FALSE(radical_contains(MonomialIdeal(2, {{0, 1}}), MonomialIdeal(2, {{1, 0}})));
    EXPECT_TRUE(radical_contains(MonomialIdeal(2, {{2, 0}}), MonomialIdeal(2, {{1, 1}})));
}

TEST(Ideal, NuByEnumeration)
{
    EXPECT_EQ(nu_bruteforce(ex2, maximal_ideal(3), 5), 3);
    EXPECT_EQ(nu_bruteforce(ex2, maximal_ideal(3), 1), 0);
    EXPECT_THROW(nu_bruteforce(MonomialIdeal(2, {{1, 0}}), MonomialIdeal(2, {{0, 1}}), 3), RadicalContainmentError);
}
