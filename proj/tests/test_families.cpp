#include <gtest/gtest.h>

#include <meshpat/catalog.hpp>
#include <meshpat/embed.hpp>
#include <meshpat/families.hpp>

#include "naive.hpp"

using namespace meshpat;

namespace
{

// Distribution series of p by subset enumeration, n = 0..order.
Series brute_distribution(const MeshPattern &p, std::size_t order)
{
    naive::Shading sh;
    for (const auto &b : p.shaded()) {
        sh.insert({b.col, b.row});
    }
    const std::vector<int> tau(p.perm().begin(), p.perm().end());
    Series s(order);
    for (std::size_t n = 0; n <= order; ++n) {
        std::vector<integer> cs;
        for (const auto &[occ, perms] : naive::distribution(tau, sh, n)) {
            if (cs.size() <= occ) {
                cs.resize(occ + 1);
            }
            cs[occ] = perms;
        }
        s[n] = QPolynomial(cs);
    }
    return s;
}

Series brute_avoidance(const MeshPattern &p, std::size_t order)
{
    return Series::from_integers(eval_q(brute_distribution(p, order), 0), order);
}

PatternSeries brute_pair(const MeshPattern &p, std::size_t order)
{
    return {brute_avoidance(p, order), brute_distribution(p, order)};
}

constexpr std::size_t N = 6;

} // namespace

TEST(Families, LengthOnePatterns)
{
    const auto r = base_length1(N);
    EXPECT_EQ(*r.distribution, brute_distribution(catalog_pattern("Z"), N));
    EXPECT_EQ(*r.distribution, brute_distribution(catalog_pattern("X"), N));
    EXPECT_EQ(*r.avoidance, brute_avoidance(catalog_pattern("Z"), N));
    EXPECT_EQ(point_series(N).distribution, brute_distribution(parse_mesh_pattern("1;"), N));
    EXPECT_EQ(ltr_minimum_series(N).distribution, brute_distribution(parse_mesh_pattern("1;0,0"), N));
}

TEST(Families, CorollaryClosedForms)
{
    EXPECT_EQ(*nr12(N).distribution, brute_distribution(catalog_pattern("12"), N));
    EXPECT_EQ(*nr13(N).distribution, brute_distribution(catalog_pattern("13"), N));
    EXPECT_EQ(*nr17(N).distribution, brute_distribution(catalog_pattern("17"), N));
    EXPECT_EQ(*nr66(N).distribution, brute_distribution(catalog_pattern("66"), N));
    // (n! - (n-2)!) + q (n-2)!
    EXPECT_EQ((*nr13(N).distribution)[5], QPolynomial(std::vector<integer>{114, 6}));
}

TEST(Families, YWithAShadedInner)
{
    const auto inner = parse_mesh_pattern("21;0,0 2,2");
    const auto p = embed_at_box(catalog_pattern("Y"), {1, 1}, inner);
    const auto r = family_y(brute_pair(inner, N), N);
    EXPECT_EQ(*r.distribution, brute_distribution(p, N));
    EXPECT_EQ(*r.avoidance, brute_avoidance(p, N));
}

TEST(Families, SingleInnerFamilies)
{
    const auto inner = parse_mesh_pattern("12;1,1");
    const auto s = brute_pair(inner, N);
    const std::vector<std::tuple<const char *, Box, FamilyResult>> cases{
        {"13", {1, 1}, family_13(s, N)}, {"19", {2, 1}, family_19(s, N)}, {"28", {1, 1}, family_28(s, N)}};
    for (const auto &[id, box, r] : cases) {
        const auto p = embed_at_box(catalog_pattern(id), box, inner);
        EXPECT_EQ(*r.distribution, brute_distribution(p, N)) << id;
        EXPECT_EQ(*r.avoidance, brute_avoidance(p, N)) << id;
    }
}

TEST(Families, TwoAndThreeInnerAvoidance)
{
    const auto a = parse_mesh_pattern("1;");
    const auto b = parse_mesh_pattern("12;");
    const auto p20 = embed_multi(catalog_pattern("20"), {{{2, 2}, a}, {{1, 0}, b}});
    EXPECT_EQ(*family_20(brute_pair(a, N), brute_pair(b, N), N).avoidance, brute_avoidance(p20, N));
    const auto p22 = embed_multi(catalog_pattern("22"), {{{0, 2}, a}, {{1, 0}, a}, {{2, 1}, a}});
    const auto sa = brute_pair(a, N);
    EXPECT_EQ(*family_22(sa, sa, sa, N).avoidance, brute_avoidance(p22, N));
}

TEST(Families, TwoInnerDistributionAddsExponents)
{
    // Each pair of inner occurrences is one occurrence of the whole pattern,
    // so the count multiplies; the product of series adds exponents instead.
    const auto a = parse_mesh_pattern("1;");
    const auto p = embed_multi(catalog_pattern("20"), {{{2, 2}, a}, {{1, 0}, a}});
    const auto formula = *family_20(point_series(N), point_series(N), N).distribution;
    const auto brute = brute_distribution(p, N);
    EXPECT_EQ(brute[4], QPolynomial(std::vector<integer>{23, 1}));
    EXPECT_EQ(formula[4], QPolynomial(std::vector<integer>{23, 0, 1}));
    EXPECT_EQ(eval_q(formula, 1), eval_q(brute, 1));
}

TEST(Families, StaircaseWithUnshadedInner)
{
    const auto inner = parse_mesh_pattern("21;");
    const auto s = brute_pair(inner, N);
    for (std::size_t k : {1u, 2u}) {
        const auto p = staircase_pattern(k, inner);
        const auto r = family_staircase(s.distribution, k, N, s.avoidance, inner);
        EXPECT_EQ(*r.distribution, brute_distribution(p, N)) << k;
        EXPECT_EQ(*r.avoidance, brute_avoidance(p, N)) << k;
    }
    EXPECT_EQ(*family_x(s, N, inner).distribution, *family_staircase(s.distribution, 1, N).distribution);
    EXPECT_EQ(*family_33(s, N, inner).avoidance, *family_staircase(s.distribution, 2, N, s.avoidance).avoidance);
}

TEST(Families, StaircaseThreeHasNoAvoidance)
{
    const auto inner = parse_mesh_pattern("21;");
    const auto s = brute_pair(inner, N);
    const auto r = family_staircase(s.distribution, 3, N, s.avoidance, inner);
    EXPECT_FALSE(r.avoidance.has_value());
    EXPECT_EQ(*r.distribution, brute_distribution(staircase_pattern(3, inner), N));
}

TEST(Families, StaircaseRejectsReducibleInner)
{
    const auto s = point_series(N);
    EXPECT_THROW((void)family_x(s, N, parse_mesh_pattern("12;")), precondition_error);
    EXPECT_THROW((void)family_staircase(s.distribution, 2, N, s.avoidance, parse_mesh_pattern("1;")),
                 precondition_error);
    EXPECT_THROW((void)family_staircase(s.distribution, 0, N), precondition_error);
}

TEST(Families, Nr33AvoidanceClosedFormAsDisplayedDiffers)
{
    const auto inner = parse_mesh_pattern("21;");
    const auto s = brute_pair(inner, N);
    const auto brute = brute_avoidance(staircase_pattern(2, inner), N);
    EXPECT_EQ(*family_33(s, N).avoidance, brute);
    EXPECT_EQ(eval_q(avoid_33_as_printed(s.avoidance, N), 0)[5], 114);
    EXPECT_EQ(eval_q(brute, 0)[5], 115);
}

TEST(Families, Nr30)
{
    EXPECT_EQ(*lemma_30(N).distribution, brute_distribution(catalog_pattern("30"), N));
    EXPECT_EQ(*lemma_30(N).avoidance, brute_avoidance(catalog_pattern("30"), N));
    for (const char *text : {"1;", "21;", "12;0,1"}) {
        const auto inner = parse_mesh_pattern(text);
        const auto p = embed_at_box(catalog_pattern("30"), {2, 2}, inner);
        EXPECT_EQ(avoid_30(brute_avoidance(inner, N), N, inner), brute_avoidance(p, N)) << text;
    }
    EXPECT_THROW((void)avoid_30(Series(N), N, catalog_pattern("Z")), precondition_error);
    // The displayed form drops F from x^2 A_{p1}; at n=3 with a point it gives 4.
    EXPECT_EQ(eval_q(avoid_30_as_printed(point_series(N).avoidance, N), 0)[3], 4);
    EXPECT_EQ(eval_q(avoid_30(point_series(N).avoidance, N), 0)[3], 5);
}

TEST(Families, Nr27And28WithTwoInners)
{
    const auto a = parse_mesh_pattern("1;");
    const auto b = parse_mesh_pattern("21;");
    const auto sa = brute_avoidance(a, N), sb = brute_avoidance(b, N);
    const auto p27 = embed_multi(catalog_pattern("27"), {{{0, 0}, a}, {{2, 1}, b}});
    EXPECT_EQ(avoid_27(sa, sb, N), brute_avoidance(p27, N));
    const auto p28 = embed_multi(catalog_pattern("28"), {{{1, 1}, a}, {{2, 0}, b}});
    EXPECT_EQ(avoid_28_2(sa, sb, N), brute_avoidance(p28, N));
}

TEST(Families, ShadedInnerInTheCornerBoxBreaksAvoidance)
{
    // X in the East box of Nr. 27: 22 predicted at n=4, 21 counted.
    const auto p = embed_at_box(catalog_pattern("27"), {2, 1}, catalog_pattern("X"));
    const auto x_avoid = brute_avoidance(catalog_pattern("X"), N);
    EXPECT_EQ(eval_q(avoid_27(Series(N), x_avoid, N), 0)[4], 22);
    EXPECT_EQ(eval_q(brute_avoidance(p, N), 0)[4], 21);
}

TEST(Families, RunPatterns)
{
    for (std::size_t k = 1; k <= 3; ++k) {
        const auto r = family_34(k, N);
        EXPECT_EQ(*r.distribution, brute_distribution(run34_pattern(k), N)) << k;
        EXPECT_EQ(*r.avoidance, brute_avoidance(run34_pattern(k), N)) << k;
    }
    const auto two = parse_mesh_pattern("12;");
    EXPECT_EQ(avoid_34_2(2, brute_avoidance(two, N), N), brute_avoidance(run34_pattern(2, std::nullopt, two), N));
    EXPECT_THROW((void)family_34(0, N), precondition_error);
}

TEST(Families, LengthSixExample)
{
    const auto composed = *figure1_composed(7).distribution;
    EXPECT_EQ(composed, figure1_literal(7));
    EXPECT_EQ(figure1_dist(7), composed);
    EXPECT_EQ(composed, brute_distribution(figure1_pattern(), 7));
    const auto printed = figure1_literal_as_printed(7);
    for (std::size_t n = 0; n <= 4; ++n) {
        EXPECT_EQ(printed[n], composed[n]) << n;
    }
    EXPECT_EQ(printed[5].total(), 119);
    EXPECT_EQ(composed[5].total(), 120);
}

TEST(Families, MassAtQOneIsFactorial)
{
    const auto f = eval_q(factorial_series(N), 1);
    const auto inner = point_series(N);
    for (const auto &r : {base_length1(N), family_y(inner, N), family_13(inner, N), family_19(inner, N),
                          family_28(inner, N), lemma_30(N), family_34(3, N), nr66(N), figure1_composed(N)}) {
        EXPECT_EQ(eval_q(*r.distribution, 1), f);
        EXPECT_EQ(eval_q(*r.distribution, 0), eval_q(*r.avoidance, 0));
    }
}
