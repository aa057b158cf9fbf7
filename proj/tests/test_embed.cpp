#include <gtest/gtest.h>

#include <meshpat/catalog.hpp>
#include <meshpat/embed.hpp>

using namespace meshpat;

TEST(Embed, PointsIntoYGiveTheLengthTwoCatalog)
{
    const auto y = catalog_pattern("Y");
    EXPECT_EQ(embed_at_box(y, {1, 1}, parse_mesh_pattern("1;")), catalog_pattern("12"));
    EXPECT_EQ(embed_at_box(y, {1, 1}, parse_mesh_pattern("1;0,1 1,0 1,1")), catalog_pattern("13"));
    EXPECT_EQ(embed_at_box(y, {1, 1}, catalog_pattern("X")), catalog_pattern("17"));
    EXPECT_EQ(embed_at_box(y, {1, 1}, parse_mesh_pattern("1;0,0")), catalog_pattern("66"));
}

TEST(Embed, StretchesShadedRowsAndColumns)
{
    const auto p = embed_at_box(catalog_pattern("Z"), {1, 0}, parse_mesh_pattern("12;1,1"));
    // Z = 1;0,0 1,1. Column 1 and row 0 each widen to three.
    EXPECT_EQ(p.to_string(), "312;0,0 0,1 0,2 1,3 2,1 2,3 3,3");
}

TEST(Embed, StaircaseAndRunPatterns)
{
    EXPECT_EQ(bare_staircase(1), catalog_pattern("X"));
    EXPECT_EQ(staircase_pattern(1, parse_mesh_pattern("21;")).to_string(), "132;0,1 0,2 0,3 1,0 2,0 3,0");
    EXPECT_EQ(bare_staircase(2).shaded().size(), 6u);
    EXPECT_EQ(staircase_pattern(2, parse_mesh_pattern("21;")).perm(), (Permutation{1, 2, 4, 3}));
    EXPECT_EQ(run34_pattern(2), catalog_pattern("34"));
    EXPECT_EQ(run34_pattern(1), catalog_pattern("Z"));
    EXPECT_EQ(run34_pattern(3, std::vector<int>{3, 2}).perm(), (Permutation{1, 3, 2}));
    EXPECT_EQ(run34_pattern(2, std::nullopt, parse_mesh_pattern("1;")).to_string(),
              "231;0,0 0,1 0,2 1,0 1,1 1,2 1,3 2,2 2,3 3,2 3,3");
    EXPECT_THROW((void)run34_pattern(3, std::vector<int>{2, 2}), precondition_error);
    EXPECT_THROW((void)run34_pattern(3, std::vector<int>{2}), precondition_error);
    EXPECT_THROW((void)bare_staircase(0), precondition_error);
}

TEST(Embed, SimultaneousEqualsSequentialForDisjointBoxes)
{
    const auto outer = catalog_pattern("20");
    const auto p1 = parse_mesh_pattern("21;0,0");
    const auto p2 = catalog_pattern("X");
    const auto both = embed_multi(outer, {{{2, 2}, p1}, {{1, 0}, p2}});
    // The top-right insertion does not move column 1 or row 0.
    EXPECT_EQ(both, embed_at_box(embed_at_box(outer, {2, 2}, p1), {1, 0}, p2));
    EXPECT_EQ(both.size(), 5u);
}

TEST(Embed, RejectsInvalidBoxes)
{
    const auto outer = catalog_pattern("20");
    const auto one = parse_mesh_pattern("1;");
    EXPECT_THROW((void)embed_at_box(outer, {0, 0}, one), precondition_error);
    EXPECT_THROW((void)embed_at_box(outer, {3, 0}, one), precondition_error);
    EXPECT_THROW((void)embed_at_box(outer, {1, 0}, MeshPattern(Permutation{}, {})), precondition_error);
    EXPECT_THROW((void)embed_multi(catalog_pattern("12"), {{{1, 1}, one}, {{1, 2}, one}}), precondition_error);
}

TEST(Embed, LengthSixExample)
{
    const auto p = figure1_pattern();
    EXPECT_EQ(p.perm(), (Permutation{1, 6, 2, 3, 4, 5}));
    const auto drawn = parse_mesh_pattern("162345;"
                                          "0,1 0,2 0,3 0,4 0,5 0,6 "
                                          "1,1 1,2 1,3 1,4 1,5 1,6 "
                                          "2,0 2,1 2,2 2,3 2,4 2,6 "
                                          "3,0 3,1 3,2 3,3 3,4 3,5 3,6 "
                                          "4,0 4,1 4,2 4,3 4,5 4,6 "
                                          "5,0 5,1 5,2 5,5 5,6 "
                                          "6,0 6,2 6,3 6,4 6,5 6,6");
    EXPECT_EQ(drawn.shaded().size(), 42u);
    EXPECT_EQ(p, drawn);
}
