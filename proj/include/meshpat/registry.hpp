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

#ifndef MESHPAT_REGISTRY_HPP
#define MESHPAT_REGISTRY_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <meshpat/catalog.hpp>
#include <meshpat/embed.hpp>
#include <meshpat/error.hpp>
#include <meshpat/families.hpp>
#include <meshpat/mesh_pattern.hpp>
#include <meshpat/oracle.hpp>

// Family ids as used on the command line, tying each id to the pattern it
// builds and the evaluator that describes it.

namespace meshpat
{

// An inner pattern slot; no pattern means the empty pattern.
struct InnerSpec {
    std::optional<MeshPattern> pattern;

    std::string label() const
    {
        return pattern ? pattern->to_string() : std::string("empty");
    }
};

// "empty", a catalog id, or pattern text.
inline InnerSpec parse_inner(std::string_view text)
{
    text = detail::trim(text);
    if (text == "empty" || text.empty()) {
        return {};
    }
    if (text.find(';') == std::string_view::npos && text.front() != '{') {
        return {catalog_pattern(text)};
    }
    return {parse_mesh_pattern(text)};
}

struct FamilyRequest {
    std::string family; // base id without the ":k" suffix
    std::vector<InnerSpec> inners;
    std::optional<std::size_t> k;
};

struct FamilyInfo {
    std::string_view id;
    std::size_t inner_slots;
    bool takes_k;
    std::string_view summary;
};

inline constexpr std::array<FamilyInfo, 17> family_table{{
    {"base1", 0, false, "single point with boxes (0,0),(1,1) shaded (Z; X has the same series)"},
    {"lemma30", 0, false, "Nr. 30"},
    {"Y", 1, false, "p1 in box (1,1) of Y"},
    {"13", 1, false, "p1 in box (1,1) of Nr. 13"},
    {"19", 1, false, "p1 in box (2,1) of Nr. 19"},
    {"20", 2, false, "p1 in box (2,2), p2 in box (1,0) of Nr. 20"},
    {"22", 3, false, "p1 in (0,2), p2 in (1,0), p3 in (2,1) of Nr. 22"},
    {"28", 1, false, "p1 in box (1,1) of Nr. 28"},
    {"X", 1, false, "irreducible p1 in box (1,1) of X"},
    {"33", 1, false, "irreducible p1 in box (2,2) of Nr. 33"},
    {"staircase", 1, true, "irreducible p1 on top of a k-step staircase"},
    {"28-2", 2, false, "p1 in (1,1), p2 in (2,0) of Nr. 28 (avoidance only)"},
    {"30", 1, false, "p1 in box (2,2) of Nr. 30, p1's box (0,0) unshaded (avoidance only)"},
    {"27", 2, false, "p1 in (0,0), p2 in (2,1) of Nr. 27 (avoidance only)"},
    {"34", 0, true, "k-run pattern; k=2 is Nr. 34"},
    {"34-2", 1, true, "k-run pattern with p2 in box (k,0) (avoidance only)"},
    {"figure1", 0, false, "the length-6 nested example"},
}};

inline const FamilyInfo &family_info(std::string_view id)
{
    for (const auto &f : family_table) {
        if (f.id == id) {
            return f;
        }
    }
    throw parse_error("unknown family '" + std::string(id) + "'");
}

/// Splits "id:k" and validates inner count and k against the family.
/// `k_flag`, when given, must agree with a ":k" suffix.
inline FamilyRequest make_request(std::string_view family_text, std::vector<InnerSpec> inners,
                                  std::optional<std::size_t> k_flag = std::nullopt)
{
    FamilyRequest req;
    const auto colon = family_text.find(':');
    req.family = std::string(family_text.substr(0, colon));
    if (colon != std::string_view::npos) {
        const int k = detail::parse_int(family_text.substr(colon + 1), "k");
        if (k < 1) {
            throw parse_error("k must be at least 1");
        }
        req.k = static_cast<std::size_t>(k);
    }
    const auto &info = family_info(req.family);
    if (k_flag) {
        if (req.k && *req.k != *k_flag) {
            throw parse_error("conflicting values of k");
        }
        req.k = k_flag;
    }
    if (req.k && !info.takes_k) {
        throw parse_error("family '" + req.family + "' takes no k");
    }
    if (info.takes_k && !req.k) {
        throw parse_error("family '" + req.family + "' needs k (use " + req.family + ":K or --k)");
    }
    if (req.k && *req.k == 0) {
        throw parse_error("k must be at least 1");
    }
    if (inners.size() > info.inner_slots) {
        throw parse_error("family '" + req.family + "' takes at most " + std::to_string(info.inner_slots)
                          + " inner pattern(s)");
    }
    inners.resize(info.inner_slots);
    req.inners = std::move(inners);
    return req;
}

namespace detail
{

inline MeshPattern insert_present(const MeshPattern &outer, const std::vector<std::pair<Box, InnerSpec>> &slots)
{
    BoxAssignment assign;
    for (const auto &[box, inner] : slots) {
        if (inner.pattern) {
            assign.emplace(box, *inner.pattern);
        }
    }
    return assign.empty() ? outer : embed_multi(outer, assign);
}

inline const MeshPattern &require_pattern(const InnerSpec &s, std::string_view family)
{
    if (!s.pattern) {
        throw precondition_error("family '" + std::string(family) + "' needs a nonempty inner pattern");
    }
    return *s.pattern;
}

} // namespace detail

/// The concrete mesh pattern a family request denotes. Empty inners leave
/// their box untouched.
inline MeshPattern build_family_pattern(const FamilyRequest &req)
{
    const auto &f = req.family;
    const auto &in = req.inners;
    if (f == "base1") {
        return catalog_pattern("Z");
    }
    if (f == "lemma30") {
        return catalog_pattern("30");
    }
    if (f == "figure1") {
        return figure1_pattern();
    }
    if (f == "Y") {
        return detail::insert_present(catalog_pattern("Y"), {{{1, 1}, in[0]}});
    }
    if (f == "13" || f == "28") {
        return detail::insert_present(catalog_pattern(f), {{{1, 1}, in[0]}});
    }
    if (f == "19") {
        return detail::insert_present(catalog_pattern("19"), {{{2, 1}, in[0]}});
    }
    if (f == "20") {
        return detail::insert_present(catalog_pattern("20"), {{{2, 2}, in[0]}, {{1, 0}, in[1]}});
    }
    if (f == "22") {
        return detail::insert_present(catalog_pattern("22"), {{{0, 2}, in[0]}, {{1, 0}, in[1]}, {{2, 1}, in[2]}});
    }
    if (f == "X") {
        return staircase_pattern(1, detail::require_pattern(in[0], f));
    }
    if (f == "33") {
        return staircase_pattern(2, detail::require_pattern(in[0], f));
    }
    if (f == "staircase") {
        return staircase_pattern(*req.k, detail::require_pattern(in[0], f));
    }
    if (f == "28-2") {
        return detail::insert_present(catalog_pattern("28"), {{{1, 1}, in[0]}, {{2, 0}, in[1]}});
    }
    if (f == "30") {
        return detail::insert_present(catalog_pattern("30"), {{{2, 2}, in[0]}});
    }
    if (f == "27") {
        return detail::insert_present(catalog_pattern("27"), {{{0, 0}, in[0]}, {{2, 1}, in[1]}});
    }
    if (f == "34") {
        return run34_pattern(*req.k);
    }
    if (f == "34-2") {
        return run34_pattern(*req.k, std::nullopt, in[0].pattern);
    }
    throw parse_error("unknown family '" + f + "'");
}

struct ResolvedSeries {
    PatternSeries series;
    std::string source; // "closed form: ..." or "oracle"
};

/// Series of an inner pattern: the empty-pattern convention, a closed form
/// when the pattern is one of the known short patterns, otherwise the oracle
/// up to `order`.
inline ResolvedSeries inner_series(const InnerSpec &inner, std::size_t order, OracleOptions opts = {})
{
    if (!inner.pattern) {
        return {empty_convention(order), "empty-pattern convention"};
    }
    const auto &p = *inner.pattern;
    if (p == parse_mesh_pattern("1;")) {
        return {point_series(order), "closed form: unshaded point"};
    }
    if (p == parse_mesh_pattern("1;0,0")) {
        return {ltr_minimum_series(order), "closed form: left-to-right minima"};
    }
    if (const auto id = catalog_id(p)) {
        const auto empty = empty_convention(order);
        std::optional<FamilyResult> r;
        if (*id == "Z" || *id == "X") {
            r = base_length1(order);
        } else if (*id == "Y") {
            r = family_y(empty, order);
        } else if (*id == "12") {
            r = nr12(order);
        } else if (*id == "13") {
            r = nr13(order);
        } else if (*id == "17") {
            r = nr17(order);
        } else if (*id == "66") {
            r = nr66(order);
        } else if (*id == "19") {
            r = family_19(empty, order);
        } else if (*id == "20") {
            r = family_20(empty, empty, order);
        } else if (*id == "22") {
            r = family_22(empty, empty, empty, order);
        } else if (*id == "28") {
            r = family_28(empty, order);
        } else if (*id == "30") {
            r = lemma_30(order);
        } else if (*id == "34") {
            r = family_34(2, order);
        }
        if (r) {
            return {r->pair(), "closed form: catalog " + *id};
        }
    }
    const auto table = distribution_table(p, order, opts);
    Series dist(order, table.rows);
    return {{Series::from_integers(avoidance_counts(table), order), dist}, "oracle"};
}

struct EvaluatedFamily {
    FamilyResult result;
    std::vector<std::string> inner_sources;
};

/// Evaluates the family formula at truncation `order`, resolving inner
/// series through inner_series().
inline EvaluatedFamily evaluate_family(const FamilyRequest &req, std::size_t order, OracleOptions opts = {})
{
    EvaluatedFamily out;
    std::vector<PatternSeries> s;
    for (const auto &inner : req.inners) {
        auto r = inner_series(inner, order, opts);
        out.inner_sources.push_back(inner.label() + " <- " + r.source);
        s.push_back(std::move(r.series));
    }
    const auto &f = req.family;
    const auto &in = req.inners;
    auto &res = out.result;
    if (f == "base1") {
        res = base_length1(order);
    } else if (f == "lemma30") {
        res = lemma_30(order);
    } else if (f == "figure1") {
        res.distribution = figure1_dist(order);
        res.avoidance = Series::from_integers(eval_q(*res.distribution, 0), order);
    } else if (f == "Y") {
        res = family_y(s[0], order);
    } else if (f == "13") {
        res = family_13(s[0], order);
    } else if (f == "19") {
        res = family_19(s[0], order);
    } else if (f == "20") {
        res = family_20(s[0], s[1], order);
    } else if (f == "22") {
        res = family_22(s[0], s[1], s[2], order);
    } else if (f == "28") {
        res = family_28(s[0], order);
    } else if (f == "X") {
        res = family_x(s[0], order, detail::require_pattern(in[0], f));
    } else if (f == "33") {
        res = family_33(s[0], order, detail::require_pattern(in[0], f));
    } else if (f == "staircase") {
        res = family_staircase(s[0].distribution, *req.k, order, s[0].avoidance, detail::require_pattern(in[0], f));
    } else if (f == "28-2") {
        res.avoidance = avoid_28_2(s[0].avoidance, s[1].avoidance, order);
    } else if (f == "30") {
        res.avoidance = avoid_30(s[0].avoidance, order, in[0].pattern);
    } else if (f == "27") {
        res.avoidance = avoid_27(s[0].avoidance, s[1].avoidance, order);
    } else if (f == "34") {
        res = family_34(*req.k, order);
    } else if (f == "34-2") {
        res.avoidance = avoid_34_2(*req.k, s[0].avoidance, order);
    } else {
        throw parse_error("unknown family '" + f + "'");
    }
    return out;
}

inline std::string request_label(const FamilyRequest &req)
{
    std::string s = req.family;
    if (req.k) {
        s += ":" + std::to_string(*req.k);
    }
    for (const auto &in : req.inners) {
        s += " [" + in.label() + "]";
    }
    return s;
}

/// Formula against oracle on the constructed pattern, for n = 0..n_max: one
/// report per series the family provides.
inline std::vector<VerificationReport> verify_family(const FamilyRequest &req, std::size_t n_max,
                                                     OracleOptions opts = {})
{
    const auto pattern = build_family_pattern(req);
    const auto evaluated = evaluate_family(req, n_max, opts);
    const auto table = distribution_table(pattern, n_max, opts);
    std::vector<VerificationReport> reports;
    if (evaluated.result.distribution) {
        reports.push_back(verify_against_series(table, *evaluated.result.distribution));
    }
    if (evaluated.result.avoidance) {
        reports.push_back(verify_avoidance(table, *evaluated.result.avoidance));
    }
    for (auto &r : reports) {
        r.family = request_label(req);
        r.pattern = pattern.to_string();
    }
    return reports;
}

} // namespace meshpat

#endif
