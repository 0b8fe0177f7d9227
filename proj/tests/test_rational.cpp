#include "bsroots/linalg.hpp"
#include "bsroots/rational.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace bsroots;

TEST(Rational, PrintsAndParsesCanonically)
{
    EXPECT_EQ(to_string(Rational(-6, 8)), "-3/4");
    EXPECT_EQ(to_string(Rational(4)), "4");
    EXPECT_EQ(parse_rational(" -10/4 "), Rational(-5, 2));
    EXPECT_EQ(parse_rational("7"), Rational(7));
    EXPECT_ANY_THROW(parse_rational("1/0"));
    EXPECT_ANY_THROW(parse_rational("x"));
}

TEST(Rational, FloorCeilFracOnNegatives)
{
    EXPECT_EQ(floor(Rational(-3, 4)), -1);
    EXPECT_EQ(ceil(Rational(-3, 4)), 0);
    EXPECT_EQ(floor(Rational(7, 2)), 3);
    EXPECT_EQ(frac(Rational(-5, 4)), Rational(3, 4));
    EXPECT_TRUE(is_integer(Rational(8, 4)));
}

TEST(Rational, ReductionModuloPrime)
{
    EXPECT_EQ(mod_prime(Rational(-3, 4), 5), 3);
    EXPECT_EQ(mod_prime(Rational(-5, 4), 7), 4);
    EXPECT_ANY_THROW(mod_prime(Rational(1, 5), 5));
}

TEST(Rational, PrimitiveVectors)
{
    EXPECT_EQ(primitive(RatVector{Rational(1, 4), Rational(1, 2), 0}), (IntVector{1, 2, 0}));
    EXPECT_EQ(primitive(IntVector{6, -9, 3}), (IntVector{2, -3, 1}));
}

TEST(Linalg, RankSolveInverse)
{
    const RatMatrix m{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
    EXPECT_EQ(rank(m), 2u);
    EXPECT_FALSE(inverse(m).has_value());
    const RatMatrix g{{2, 1, 1}, {1, 2, 1}, {1, 1, 2}};
    const auto inv = inverse(g);
    ASSERT_TRUE(inv.has_value());
    const auto x = solve(g, {1, 1, 1});
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(*x, (RatVector{Rational(1, 4), Rational(1, 4), Rational(1, 4)}));
}

namespace {
Integer cofactor_det(const IntMatrix& m)
{
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    Integer det = 0;
    for (std::size_t k = 0; k < n; ++k) {
        IntMatrix minor;
        for (std::size_t i = 1; i < n; ++i) {
            IntVector row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != k) row.push_back(m[i][c]);
            minor.push_back(row);
        }
        det += (k % 2 ? -1 : 1) * m[0][k] * cofactor_det(minor);
    }
    return det;
}
}  // namespace

TEST(Linalg, DeterminantMatchesCofactorExpansion)
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> ed(-4, 4);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + trial % 5;
        IntMatrix m(n, IntVector(n));
        for (auto& row : m)
            for (auto& x : row) x = ed(rng);
        EXPECT_EQ(determinant(m), cofactor_det(m));
    }
    EXPECT_EQ(determinant(IntMatrix{{2, 1, 1}, {1, 2, 1}, {1, 1, 2}}), 4);
    EXPECT_EQ(determinant(IntMatrix{{0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 0}}), -3);
}

TEST(Linalg, ColumnReductionIsUnimodularAndSplitsKernel)
{
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> ed(-3, 3);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t rows = 1 + trial % 4, cols = 1 + (trial / 4) % 5;
        IntMatrix m(rows, IntVector(cols));
        for (auto& row : m)
            for (auto& x : row) x = ed(rng);
        const ColumnReduction cr = column_reduce(m, cols);
        EXPECT_EQ(cr.rank, rank(m));
        const Integer det = determinant(cr.unimodular);
        EXPECT_TRUE(det == 1 || det == -1);
        for (std::size_t k = cr.rank; k < cols; ++k)
            for (const auto& row : m) {
                IntVector column(cols);
                for (std::size_t i = 0; i < cols; ++i) column[i] = cr.unimodular[i][k];
                EXPECT_EQ(dot(row, column), 0);
            }
    }
}
