#include <gtest/gtest.h>

#include <meshpat/catalog.hpp>
#include <meshpat/mesh_pattern.hpp>

using namespace meshpat;

TEST(MeshPattern, CanonicalTextSortsBoxes)
{
    const auto p = parse_mesh_pattern("231; 2,1  1,2 0,0");
    EXPECT_EQ(p.to_string(), "231;0,0 1,2 2,1");
    EXPECT_EQ(parse_mesh_pattern(p.to_string()), p);
    EXPECT_EQ(parse_mesh_pattern("12;").shaded().size(), 0u);
    EXPECT_EQ(parse_mesh_pattern(";0,0").size(), 0u);
}

TEST(MeshPattern, JsonRoundTrip)
{
    const auto p = parse_mesh_pattern("132;0,3 2,2");
    const auto j = p.to_json();
    EXPECT_EQ(j.dump(), R"({"perm":[1,3,2],"shaded":[[0,3],[2,2]]})");
    EXPECT_EQ(MeshPattern::from_json(j), p);
    EXPECT_EQ(parse_mesh_pattern(j.dump()), p);
}

TEST(MeshPattern, RejectsBadBoxes)
{
    EXPECT_THROW((void)parse_mesh_pattern("12;3,0"), parse_error);
    EXPECT_THROW((void)parse_mesh_pattern("12;0,-1"), parse_error);
    EXPECT_THROW((void)parse_mesh_pattern("12;1,1 1,1"), parse_error);
    EXPECT_THROW((void)parse_mesh_pattern("12;1"), parse_error);
    EXPECT_THROW((void)parse_mesh_pattern("12"), parse_error);
    EXPECT_THROW((void)parse_mesh_pattern("{\"perm\":[1,2]}"), parse_error);
}

TEST(MeshPattern, Rotate180MapsBoxes)
{
    const auto p = parse_mesh_pattern("132;0,0 1,3 2,1");
    const auto r = p.rotated180();
    EXPECT_EQ(r.perm(), (Permutation{2, 1, 3}));
    EXPECT_TRUE(r.is_shaded(3, 3));
    EXPECT_TRUE(r.is_shaded(2, 0));
    EXPECT_TRUE(r.is_shaded(1, 2));
    EXPECT_EQ(r.shaded().size(), 3u);
    EXPECT_EQ(r.rotated180(), p);
}

TEST(MeshPattern, EqualityIsStructural)
{
    EXPECT_EQ(parse_mesh_pattern("1;0,1 1,0"), catalog_pattern("X"));
    EXPECT_NE(parse_mesh_pattern("1;0,1"), catalog_pattern("X"));
    EXPECT_NE(parse_mesh_pattern("12;"), parse_mesh_pattern("21;"));
}

TEST(Catalog, EntriesRoundTripAndResolve)
{
    EXPECT_EQ(catalog_pattern("Z").to_string(), "1;0,0 1,1");
    EXPECT_EQ(catalog_pattern("13").to_string(), "12;0,0 0,1 0,2 1,0 1,2 2,0 2,1 2,2");
    EXPECT_EQ(catalog_pattern("66").to_string(), "12;0,0 0,1 0,2 1,0 1,1 2,0");
    for (const auto &[id, text] : catalog_entries) {
        const auto p = catalog_pattern(id);
        EXPECT_EQ(catalog_id(p), std::string(id));
        EXPECT_EQ(parse_mesh_pattern(p.to_string()), p);
    }
    EXPECT_FALSE(catalog_id(parse_mesh_pattern("12;")).has_value());
    EXPECT_THROW((void)catalog_pattern("99"), parse_error);
}
