#include <gtest/gtest.h>

#include <meshpat/qpoly.hpp>
#include <meshpat/series.hpp>

using namespace meshpat;

namespace
{

std::vector<integer> ints(std::initializer_list<int> v)
{
    return {v.begin(), v.end()};
}

QPolynomial poly(std::initializer_list<int> v)
{
    return QPolynomial(ints(v));
}

} // namespace

TEST(QPolynomial, ArithmeticAndText)
{
    const auto a = poly({2, 3, 1});
    EXPECT_EQ(a.to_string(), "2 + 3q + q^2");
    EXPECT_EQ((a - a).to_string(), "0");
    EXPECT_EQ((a * poly({1, -1})).to_string(), "2 + q - 2q^2 - q^3");
    EXPECT_EQ(a.degree(), 2);
    EXPECT_EQ(QPolynomial().degree(), -1);
    EXPECT_EQ(a.eval(2), 12);
    EXPECT_EQ(a.total(), 6);
    EXPECT_EQ(a.subst_power(3), poly({2, 0, 0, 3, 0, 0, 1}));
    EXPECT_THROW((void)a.subst_power(0), precondition_error);
    EXPECT_EQ(poly({0, 0, 0}), QPolynomial());
}

TEST(QPolynomial, Binomial)
{
    EXPECT_EQ(binomial(10, 3), 120);
    EXPECT_EQ(binomial(4, 0), 1);
    EXPECT_EQ(binomial(3, 5), 0);
    EXPECT_EQ(binomial(60, 30).str(), "118264581564861424");
}

TEST(Series, FactorialIsExact)
{
    const auto f = factorial_series(30);
    EXPECT_EQ(f[30].coeff(0).str(), "265252859812191058636308480000000");
    EXPECT_EQ(f[5], QPolynomial(120));
}

TEST(Series, FrozenProducts)
{
    const auto f = factorial_series(4);
    EXPECT_EQ(eval_q(f * f, 0), ints({1, 2, 5, 16, 64}));
    const auto x = Series::x(4);
    EXPECT_EQ(eval_q(invert(Series::constant(1, 4) + x * f), 0), ints({1, -1, 0, -1, -3}));
    // X-avoiders F/(1+xF).
    EXPECT_EQ(eval_q(f / (Series::constant(1, 4) + x * f), 0), ints({1, 0, 1, 3, 14}));
}

TEST(Series, InvertNeedsUnitConstant)
{
    EXPECT_THROW((void)invert(Series::constant(2, 3)), precondition_error);
    EXPECT_THROW((void)invert(Series::constant(QPolynomial::q(), 3)), precondition_error);
    const auto a = Series::constant(-1, 5) + Series::x(5) * factorial_series(5);
    EXPECT_EQ(a * invert(a), Series::constant(1, 5));
}

TEST(Series, MixedOrdersTruncateToSmaller)
{
    const auto s = factorial_series(6) + factorial_series(3);
    EXPECT_EQ(s.order(), 3u);
    EXPECT_EQ(eval_q(s, 0), ints({2, 2, 4, 12}));
}

TEST(Series, Substitutions)
{
    // F(qx) has x^n coefficient n! q^n.
    const auto fq = subst_x_by_qx(factorial_series(4));
    EXPECT_EQ(fq[3], QPolynomial::monomial(6, 3));
    Series s(2);
    s[1] = poly({1, 1});
    const auto t = subst_q_power(s, 2);
    EXPECT_EQ(t[1], poly({1, 0, 1}));
    EXPECT_EQ(shift(s, 1)[2], poly({1, 1}));
    EXPECT_EQ(shift(s, 5).is_zero(), true);
}

TEST(Series, StirlingFirstKind)
{
    const auto s = stirling_first_kind_series(5);
    EXPECT_EQ(s[3], poly({0, 2, 3, 1}));
    EXPECT_EQ(s[5], poly({0, 24, 50, 35, 10, 1}));
    EXPECT_EQ(s[0], QPolynomial(1));
}

TEST(Series, StaircaseSumFrozen)
{
    // B = 1 + qx. k=1: x B(q) + x^2 B(q)B(q^2) + ...
    Series b = Series::constant(1, 4);
    b[1] = QPolynomial::q();
    const auto s1 = staircase_sum(b, 1, 4);
    EXPECT_EQ(s1[0], QPolynomial());
    EXPECT_EQ(s1[1], poly({1}));
    EXPECT_EQ(s1[2], poly({1, 1}));
    EXPECT_EQ(s1[3], poly({1, 1, 1}));
    EXPECT_EQ(s1[4], poly({1, 1, 1, 2}));
    // k=2: x^2 B(q) + x^3 B(q)B(q^3) + x^4 B(q)B(q^3)B(q^6).
    const auto s2 = staircase_sum(b, 2, 4);
    EXPECT_EQ(s2[1], QPolynomial());
    EXPECT_EQ(s2[2], poly({1}));
    EXPECT_EQ(s2[3], poly({1, 1}));
    EXPECT_EQ(s2[4], poly({1, 1, 0, 1}));
    EXPECT_THROW((void)staircase_sum(b, 0, 4), precondition_error);
}

TEST(Series, JsonRoundTrip)
{
    Series s(2);
    s[0] = 1;
    s[2] = poly({-3, 0, 7});
    const auto j = s.to_json();
    EXPECT_EQ(j.dump(), R"({"order":2,"terms":[["1"],[],["-3","0","7"]]})");
    EXPECT_EQ(Series::from_json(j), s);
}
