#include "bsroots/errors.hpp"
#include "bsroots/gamma.hpp"
#include "bsroots/optim.hpp"

#include <gtest/gtest.h>

using namespace bsroots;

namespace {

// max Σβ subject to Σ_j a_ij β_j ≤ w_i, β ≥ 0
LinearProgram exponent_program(const IntMatrix& gens, const RatVector& w)
{
    LinearProgram lp;
    lp.num_vars = gens.size();
    lp.objective.assign(gens.size(), 1);
    for (std::size_t i = 0; i < w.size(); ++i) {
        Constraint c;
        for (const auto& g : gens) c.coeffs.push_back(Rational(g[i]));
        c.rhs = w[i];
        lp.constraints.push_back(c);
    }
    return lp;
}

const IntMatrix ex2_gens{{2, 1, 1}, {1, 2, 1}, {1, 1, 2}};
const IntMatrix ex3_gens{{0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 0}};

}  // namespace

TEST(Lp, OptimumOfExponentProgram)
{
    const OptResult r = lp_max(exponent_program(ex2_gens, {1, 1, 1}));
    ASSERT_EQ(r.status, OptStatus::optimal);
    EXPECT_EQ(r.value, Rational(3, 4));
}

TEST(Lp, Infeasible)
{
    LinearProgram lp;
    lp.num_vars = 1;
    lp.objective = {1};
    lp.constraints.push_back({{1}, Relation::le, -1});
    EXPECT_EQ(lp_max(lp).status, OptStatus::infeasible);
}

TEST(Lp, UnboundedWithRay)
{
    LinearProgram lp;
    lp.num_vars = 2;
    lp.objective = {1, 1};
    lp.constraints.push_back({{1, -1}, Relation::le, 0});
    lp.nonneg = {false, false};
    const OptResult r = lp_max(lp);
    ASSERT_EQ(r.status, OptStatus::unbounded);
    ASSERT_EQ(r.witness.size(), 2u);
    EXPECT_GT(r.witness[0] + r.witness[1], 0);
    EXPECT_LE(r.witness[0] - r.witness[1], 0);
}

TEST(Lp, EqualityAndFreeVariables)
{
    LinearProgram lp;
    lp.num_vars = 2;
    lp.objective = {1, 0};
    lp.constraints.push_back({{1, 1}, Relation::eq, 3});
    lp.constraints.push_back({{0, 1}, Relation::ge, Rational(1, 2)});
    const OptResult r = lp_max(lp);
    ASSERT_EQ(r.status, OptStatus::optimal);
    EXPECT_EQ(r.value, Rational(5, 2));
}

TEST(Ilp, ExponentPrograms)
{
    const OptResult ones = ilp_max(exponent_program(ex3_gens, {1, 1, 1, 1}));
    ASSERT_EQ(ones.status, OptStatus::optimal);
    EXPECT_EQ(ones.value, 1);
    EXPECT_EQ(ilp_max(exponent_program(ex3_gens, {0, 0, 0, 0})).value, 0);
    EXPECT_EQ(ilp_max(exponent_program(ex2_gens, {4, 4, 4})).value, 3);
    EXPECT_EQ(ilp_max(exponent_program(ex2_gens, {2, 2, 2})).value, 1);
}

TEST(Ilp, NodeBudget)
{
    IlpOptions tight;
    tight.node_limit = 1;
    EXPECT_THROW(ilp_max(exponent_program(ex2_gens, {42, 40, 39}), tight), BudgetExceededError);
}

TEST(RecessionRay, Examples)
{
    const std::vector<bool> free2{false, false};
    EXPECT_FALSE(recession_ray({{{1, 0}, Relation::ge, 0}, {{1, 1}, Relation::le, 0}}, {1, 1}, free2).has_value());
    const auto up = recession_ray({{{0, 1}, Relation::ge, 0}}, {0, 1}, free2);
    ASSERT_TRUE(up.has_value());
    EXPECT_EQ((*up)[1], 1);
    const auto coord = recession_ray({}, {1, 1, 1}, {true, true, true});
    ASSERT_TRUE(coord.has_value());
    EXPECT_GT((*coord)[0] + (*coord)[1] + (*coord)[2], 0);
}

TEST(PointedIlp, BoxedMaximum)
{
    // y1 ≥ 0, y2 ≥ 0, −2y1 − 3y2 ≥ −7: max y1 + y2 over integers is 3
    const OptResult r = pointed_ilp_max({{1, 0}, {0, 1}, {-2, -3}}, {0, 0, -7}, {1, 1});
    ASSERT_EQ(r.status, OptStatus::optimal);
    EXPECT_EQ(r.value, 3);
    const OptResult empty = pointed_ilp_max({{2}, {-2}}, {1, -1}, {1});
    EXPECT_EQ(empty.status, OptStatus::infeasible);
}
