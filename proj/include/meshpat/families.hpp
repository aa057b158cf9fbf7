// Copyright 2026 The meshpat Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MESHPAT_FAMILIES_HPP
#define MESHPAT_FAMILIES_HPP

#include <cstddef>
#include <optional>
#include <string>

#include <meshpat/error.hpp>
#include <meshpat/mesh_pattern.hpp>
#include <meshpat/permutation.hpp>
#include <meshpat/series.hpp>

// Generating functions of infinite mesh-pattern families.
//
// Notation in comments: F = sum n! x^n, A_p(x) counts p-avoiders by length,
// F_p(x,q) marks occurrences of p by q. Every evaluator takes the inner
// patterns' series and a truncation order and returns exact truncated series.

namespace meshpat
{

// Avoidance and distribution series of one pattern.
struct PatternSeries {
    Series avoidance;
    Series distribution;
};

// Output of a family evaluator; a member is absent when no closed form is
// known for it.
struct FamilyResult {
    std::optional<Series> avoidance;
    std::optional<Series> distribution;

    PatternSeries pair() const
    {
        if (!avoidance || !distribution) {
            throw precondition_error("family result lacks avoidance or distribution");
        }
        return {*avoidance, *distribution};
    }
};

namespace detail
{

inline Series one(std::size_t order)
{
    return Series::constant(1, order);
}

inline Series monomial_x(std::size_t power, std::size_t order)
{
    return Series::monomial(1, power, order);
}

// 1 - q
inline QPolynomial one_minus_q()
{
    return QPolynomial(1) - QPolynomial::q();
}

} // namespace detail

/// An absent inner pattern: nothing avoids it and every permutation has
/// exactly one occurrence, so A = 0 and F = q F(x).
inline PatternSeries empty_convention(std::size_t order)
{
    return {Series(order), factorial_series(order) * QPolynomial::q()};
}

// The unshaded single point: only the empty permutation avoids it, and a
// length-n permutation has n occurrences, so F = F(qx).
inline PatternSeries point_series(std::size_t order)
{
    return {detail::one(order), subst_x_by_qx(factorial_series(order))};
}

// "1;0,0": occurrences are left-to-right minima.
inline PatternSeries ltr_minimum_series(std::size_t order)
{
    return {detail::one(order), stirling_first_kind_series(order)};
}

// Z and X: A = F/(1+xF), F(x,q) = F/(1+x(1-q)F).
inline FamilyResult base_length1(std::size_t order)
{
    const auto f = factorial_series(order);
    const auto x = Series::x(order);
    return {f / (detail::one(order) + x * f), f / (detail::one(order) + x * f * detail::one_minus_q())};
}

// p1 in the North-East box of Y.
inline FamilyResult family_y(const PatternSeries &p1, std::size_t order)
{
    const auto f = factorial_series(order);
    const auto x = Series::x(order);
    const auto base = (detail::one(order) - x) * f;
    return {base + x * p1.avoidance, base + x * p1.distribution};
}

// p1 in the centre box of Nr. 13.
inline FamilyResult family_13(const PatternSeries &p1, std::size_t order)
{
    const auto f = factorial_series(order);
    const auto x2 = detail::monomial_x(2, order);
    return {f - x2 * (f - p1.avoidance), (detail::one(order) - x2) * f + x2 * p1.distribution};
}

// p1 in the East box (2,1) of Nr. 19.
inline FamilyResult family_19(const PatternSeries &p1, std::size_t order)
{
    const auto f = factorial_series(order);
    const auto x = Series::x(order);
    const auto rest = x * (f - detail::one(order));
    return {f - rest * (f - p1.avoidance), f + rest * (p1.distribution - f)};
}

// p1 in box (2,2) and p2 in box (1,0) of Nr. 20.
inline FamilyResult family_20(const PatternSeries &p1, const PatternSeries &p2, std::size_t order)
{
    const auto f = factorial_series(order);
    const auto x2 = detail::monomial_x(2, order);
    const auto contain = (f - p1.avoidance) * (f - p2.avoidance);
    const auto marked = (p1.distribution - p1.avoidance) * (p2.distribution - p2.avoidance);
    return {f - x2 * contain, f + x2 * (marked - contain)};
}

// p1, p2, p3 in boxes (0,2), (1,0), (2,1) of Nr. 22.
inline FamilyResult family_22(const PatternSeries &p1, const PatternSeries &p2, const PatternSeries &p3,
                              std::size_t order)
{
    const auto f = factorial_series(order);
    const auto x2 = detail::monomial_x(2, order);
    const auto contain = (f - p1.avoidance) * (f - p2.avoidance) * (f - p3.avoidance);
    const auto marked = (p1.distribution - p1.avoidance) * (p2.distribution - p2.avoidance)
                        * (p3.distribution - p3.avoidance);
    return {f - x2 * contain, f + x2 * (marked - contain)};
}

// p1 in the centre box of Nr. 28.
inline FamilyResult family_28(const PatternSeries &p1, std::size_t order)
{
    const auto f = factorial_series(order);
    const auto x2 = detail::monomial_x(2, order);
    return {f / (detail::one(order) + x2 * (f - p1.avoidance) * f),
            f / (detail::one(order) + x2 * (f - p1.distribution) * f)};
}

namespace detail
{

// B_{p1}(x,q) = F_{p1}/(1 + x F_{p1}): distribution of p1 on X-avoiders.
inline Series x_avoider_distribution(const Series &f_p1)
{
    const auto x = Series::x(f_p1.order());
    return f_p1 / (one(f_p1.order()) + x * f_p1);
}

inline void require_irreducible(const std::optional<MeshPattern> &p1)
{
    if (p1 && !is_irreducible(p1->perm())) {
        throw precondition_error("inner pattern " + p1->to_string() + " must be irreducible of length >= 2");
    }
}

} // namespace detail

/// Irreducible p1 in the North-East box of X.
///
///   A_p = (1 + x A_{p1}) F / (1 + xF)
///   F_p = (1 + sum_{i>=1} x^i prod_{j=1..i} B_{p1}(x, q^j)) F/(1+xF)
///
/// When `inner` is supplied its irreducibility is checked.
inline FamilyResult family_x(const PatternSeries &p1, std::size_t order,
                             const std::optional<MeshPattern> &inner = std::nullopt)
{
    detail::require_irreducible(inner);
    const auto f = factorial_series(order).truncated(order);
    const auto x = Series::x(order);
    const auto b = f / (detail::one(order) + x * f);
    const auto bp = detail::x_avoider_distribution(p1.distribution.truncated(order));
    Series sum = detail::one(order);
    Series product = detail::one(order);
    for (std::size_t i = 1; i <= order; ++i) {
        product = product * subst_q_power(bp, i);
        sum = sum + shift(product, i);
    }
    return {(detail::one(order) + x * p1.avoidance) * f / (detail::one(order) + x * f), sum * b};
}

/// Irreducible p1 in the top-right box of Nr. 33.
///
///   A_p = F - x^2 B^2 (F - A_{p1})
///   F_p = B + B^2 (x + sum_{i>=2} x^i prod_{j=2..i} B_{p1}(x, q^C(j,2)))
///
/// with B = F/(1+xF). The avoidance is solved from A_p + x^2 B^2 (F - A_{p1}) = F;
/// the closed form (1 + x^2 A_{p1}) F/(1 + x^2 F) is avoid_33_as_printed.
inline FamilyResult family_33(const PatternSeries &p1, std::size_t order,
                              const std::optional<MeshPattern> &inner = std::nullopt)
{
    detail::require_irreducible(inner);
    const auto f = factorial_series(order);
    const auto x = Series::x(order);
    const auto x2 = detail::monomial_x(2, order);
    const auto b = f / (detail::one(order) + x * f);
    const auto bp = detail::x_avoider_distribution(p1.distribution.truncated(order));
    Series sum = x;
    Series product = detail::one(order);
    for (std::size_t i = 2; i <= order; ++i) {
        product = product * subst_q_power(bp, binomial(i, 2).convert_to<std::size_t>());
        sum = sum + shift(product, i);
    }
    return {f - x2 * b * b * (f - p1.avoidance), b + b * b * sum};
}

/// Irreducible p1 on top of a k-step staircase (identity of length k with
/// all off-diagonal boxes shaded, p1 in box (k,k)):
///
///   F_p = sum_{i=1..k} x^(i-1) B^i + B^k sum_{i>=k} x^i prod_{j=k..i} B_{p1}(x, q^C(j,k))
///
/// with B = F/(1+xF). Avoidance, F - x^k B^k (F - A_{p1}), is only known for
/// k = 1 and k = 2 and is returned when `p1_avoidance` is given.
inline FamilyResult family_staircase(const Series &p1_distribution, std::size_t k, std::size_t order,
                                     const std::optional<Series> &p1_avoidance = std::nullopt,
                                     const std::optional<MeshPattern> &inner = std::nullopt)
{
    if (k == 0) {
        throw precondition_error("staircase family requires k >= 1");
    }
    detail::require_irreducible(inner);
    const auto f = factorial_series(order);
    const auto x = Series::x(order);
    const auto b = f / (detail::one(order) + x * f);
    Series head(order);
    Series b_power = detail::one(order);
    for (std::size_t i = 1; i <= k; ++i) {
        b_power = b_power * b;
        head = head + shift(b_power, i - 1);
    }
    const auto bp = detail::x_avoider_distribution(p1_distribution.truncated(order));
    FamilyResult r;
    r.distribution = head + b_power * staircase_sum(bp, k, order);
    if (p1_avoidance && (k == 1 || k == 2)) {
        r.avoidance = f - shift(b_power, k) * (f - *p1_avoidance);
    }
    return r;
}

// Avoidance of Nr. 28 with p1 in the centre and p2 in box (2,0).
inline Series avoid_28_2(const Series &a_p1, const Series &a_p2, std::size_t order)
{
    const auto f = factorial_series(order);
    const auto x2 = detail::monomial_x(2, order);
    return (f + x2 * f * a_p2 * (f - a_p1)) / (detail::one(order) + x2 * (f - a_p1) * f);
}

// Nr. 30 itself.
inline FamilyResult lemma_30(std::size_t order)
{
    const auto f = factorial_series(order);
    const auto x = Series::x(order);
    const auto x2 = detail::monomial_x(2, order);
    const auto one = detail::one(order);
    const auto omq = detail::one_minus_q();
    return {(one + x) * f / (one + x + x2 * f),
            (one + x * omq) * f / (one + x * omq + x2 * f * omq)};
}

/// Avoidance of Nr. 30 with p1 in box (2,2), solved from
/// A_p + x^2 F/(1+x+x^2 F) (F - A_{p1}) = F:
///
///   A_p = ((1+x)F + x^2 F A_{p1}) / (1 + x + x^2 F)
///
/// p1's bottom-left box (0,0) must be unshaded; checked when `inner` is given.
inline Series avoid_30(const Series &a_p1, std::size_t order, const std::optional<MeshPattern> &inner = std::nullopt)
{
    if (inner && inner->size() > 0 && inner->is_shaded(0, 0)) {
        throw precondition_error("inner pattern " + inner->to_string() + " has its bottom-left box shaded");
    }
    const auto f = factorial_series(order);
    const auto x = Series::x(order);
    const auto x2 = detail::monomial_x(2, order);
    const auto one = detail::one(order);
    return ((one + x) * f + x2 * f * a_p1) / (one + x + x2 * f);
}

// ((1+x)F + x^2 A_{p1}) / (1 + x + x^2 F): drops the factor F on A_{p1}.
inline Series avoid_30_as_printed(const Series &a_p1, std::size_t order)
{
    const auto f = factorial_series(order);
    const auto x = Series::x(order);
    const auto x2 = detail::monomial_x(2, order);
    const auto one = detail::one(order);
    return ((one + x) * f + x2 * a_p1) / (one + x + x2 * f);
}

// (1 + x^2 A_{p1}) F / (1 + x^2 F).
inline Series avoid_33_as_printed(const Series &a_p1, std::size_t order)
{
    const auto f = factorial_series(order);
    const auto x2 = detail::monomial_x(2, order);
    return (detail::one(order) + x2 * a_p1) * f / (detail::one(order) + x2 * f);
}

// Avoidance of Nr. 27 with p1 in box (0,0) and p2 in box (2,1).
inline Series avoid_27(const Series &a_p1, const Series &a_p2, std::size_t order)
{
    const auto f = factorial_series(order);
    const auto x = Series::x(order);
    const auto x2 = detail::monomial_x(2, order);
    return f - x2 * (f / (detail::one(order) + x * f)) * (f - a_p1) * (f - a_p2);
}

// The k-run pattern (k = 2 is Nr. 34, k = 1 is Z).
inline FamilyResult family_34(std::size_t k, std::size_t order)
{
    if (k == 0) {
        throw precondition_error("run family requires k >= 1");
    }
    const auto f = factorial_series(order);
    const auto xk = detail::monomial_x(k, order);
    const auto one = detail::one(order);
    return {f / (one + xk * f), f / (one + xk * f * detail::one_minus_q())};
}

// Avoidance of the k-run pattern with p2 in box (k,0).
inline Series avoid_34_2(std::size_t k, const Series &a_p2, std::size_t order)
{
    if (k == 0) {
        throw precondition_error("run family requires k >= 1");
    }
    const auto f = factorial_series(order);
    const auto xk = detail::monomial_x(k, order);
    return f - xk * f / (detail::one(order) + xk * f) * (f - a_p2);
}

// Closed forms for Nr. 12, 13, 17 and 66 written out directly rather than
// through family_y, so the two routes can be compared.
inline FamilyResult nr12(std::size_t order)
{
    const auto f = factorial_series(order);
    const auto x = Series::x(order);
    const auto base = (detail::one(order) - x) * f;
    return {base + x, base + x * subst_x_by_qx(f)};
}

inline FamilyResult nr13(std::size_t order)
{
    const auto f = factorial_series(order);
    const auto x2 = detail::monomial_x(2, order);
    return {(detail::one(order) - x2) * f, (detail::one(order) - x2 + x2 * QPolynomial::q()) * f};
}

inline FamilyResult nr17(std::size_t order)
{
    const auto f = factorial_series(order);
    const auto x = Series::x(order);
    const auto one = detail::one(order);
    const auto dist = (one - x + x / (one + x * f * detail::one_minus_q())) * f;
    const auto avoid = (one - x + x / (one + x * f)) * f;
    return {avoid, dist};
}

inline FamilyResult nr66(std::size_t order)
{
    const auto f = factorial_series(order);
    const auto x = Series::x(order);
    const auto base = (detail::one(order) - x) * f + x;
    // sum_{n>=1} q(q+1)...(q+n-1) x^n
    auto rising = stirling_first_kind_series(order) - detail::one(order);
    return {base, base + x * rising};
}

namespace detail
{

// sum_{n>=1} (q+1)(q+2)...(q+n-1) x^n
inline Series shifted_rising_sum(std::size_t order)
{
    Series s(order);
    QPolynomial prod = 1;
    for (std::size_t n = 1; n <= order; ++n) {
        if (n >= 2) {
            prod *= QPolynomial(std::vector<integer>{integer(n - 1), integer(1)});
        }
        s[n] = prod;
    }
    return s;
}

inline Series figure1_closed_form(std::size_t order, bool scale_inner_by_x)
{
    const auto f = factorial_series(order);
    const auto x = Series::x(order);
    const auto x2 = monomial_x(2, order);
    const auto one = detail::one(order);
    const auto tail = x * shifted_rising_sum(order) * QPolynomial::q();
    const auto head = scale_inner_by_x ? x * (f - one) : f - one;
    const auto denom = one + x2 * f * (head - tail);
    return f * (one + x * (f - one) * (one / denom - one));
}

} // namespace detail

// The length-6 example formula exactly as it is displayed in the source:
//   F (1 + x(F-1)(1/(1 + x^2 F (F - 1 - qx S)) - 1)),
//   S = sum_{n>=1} prod_{i=1..n-1} (q+i) x^n.
// It does not reduce to F at q = 1; see figure1_literal.
inline Series figure1_literal_as_printed(std::size_t order)
{
    return detail::figure1_closed_form(order, false);
}

// The same display with the leading term of the inner bracket read as
// x(F-1), which is what composing the Nr. 19, Nr. 28 and Nr. 66 formulas
// produces: F - F_66 = x(F-1) - qxS.
inline Series figure1_literal(std::size_t order)
{
    return detail::figure1_closed_form(order, true);
}

// Nr. 66 inside Nr. 28 inside the East box of Nr. 19, one evaluator at a time.
inline FamilyResult figure1_composed(std::size_t order)
{
    const auto nr66_series = family_y(ltr_minimum_series(order), order);
    const auto nr28_series = family_28(nr66_series.pair(), order);
    return family_19(nr28_series.pair(), order);
}

// Distribution of the length-6 example, computed by composition and checked
// against the closed form.
inline Series figure1_dist(std::size_t order)
{
    auto composed = *figure1_composed(order).distribution;
    if (composed != figure1_literal(order)) {
        throw consistency_error("length-6 example: closed form and composed evaluators disagree");
    }
    return composed;
}

} // namespace meshpat

#endif
