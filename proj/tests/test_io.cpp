#include "bsroots/acceptance.hpp"
#include "bsroots/errors.hpp"
#include "bsroots/io.hpp"

#include <gtest/gtest.h>

using namespace bsroots;

TEST(Io, ParsesIdealDocuments)
{
    EXPECT_EQ(parse_ideal(R"({"vars":3,"generators":[[2,1,1],[1,2,1],[1,1,2]]})"),
              MonomialIdeal(3, {{2, 1, 1}, {1, 2, 1}, {1, 1, 2}}));
    EXPECT_EQ(parse_ideal(R"({"vars":1,"generators":[[1]]})"), MonomialIdeal(1, {{1}}));
    EXPECT_EQ(parse_ideal(R"({"vars":2,"generators":[[2,0],[1,1],[2,0]]})").size(), 2u);
}

TEST(Io, RejectsMalformedDocuments)
{
    for (const char* bad : {"", "{", "[]", R"({"vars":2})", R"({"vars":2,"generators":[]})",
                            R"({"vars":2,"generators":[[1,-1]]})", R"({"vars":2,"generators":[[1,2,3]]})",
                            R"({"vars":2,"generators":[[1,"a"]]})", R"({"vars":0,"generators":[[1]]})"})
        EXPECT_THROW(parse_ideal(bad), InputError) << bad;
    EXPECT_THROW(load_ideal("/nonexistent/ideal.json"), InputError);
}

TEST(Io, RoundTripsThroughJson)
{
    const MonomialIdeal a(3, {{2, 1, 1}, {1, 2, 1}, {1, 1, 2}});
    EXPECT_EQ(parse_ideal(ideal_to_json(a).dump()), a);
    EXPECT_EQ(load_ideal(ideal_to_json(a).dump()), a);
}

TEST(Io, ShippedDataFilesMatchBuiltInIdeals)
{
    for (const auto& s : shipped_ideals())
        EXPECT_EQ(load_ideal(std::string(BSROOTS_DATA_DIR) + "/" + s.name + ".json"), s.ideal) << s.name;
    EXPECT_EQ(load_ideal(std::string(BSROOTS_DATA_DIR) + "/m3.json"), maximal_ideal(3));
}

TEST(Io, Lists)
{
    EXPECT_EQ(parse_int_list("1, 2,3"), (IntVector{1, 2, 3}));
    EXPECT_THROW(parse_int_list("1,,2"), InputError);
    const RootMultiset b = parse_bpoly("-3/4,-5/4,-3/2,-1:3");
    ASSERT_EQ(b.size(), 4u);
    EXPECT_EQ(b[3], (std::pair<Rational, unsigned>{-1, 3}));
    EXPECT_TRUE(parse_bpoly("").empty());
    EXPECT_THROW(parse_bpoly("-1:0"), InputError);
    EXPECT_EQ(rationals_to_json({Rational(-3, 4), 2}).dump(), R"(["-3/4","2"])");
}
