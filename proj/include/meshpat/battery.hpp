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

#ifndef MESHPAT_BATTERY_HPP
#define MESHPAT_BATTERY_HPP

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <meshpat/catalog.hpp>
#include <meshpat/embed.hpp>
#include <meshpat/families.hpp>
#include <meshpat/occurrence.hpp>
#include <meshpat/oracle.hpp>
#include <meshpat/registry.hpp>

// The acceptance battery: formula evaluators against the brute-force oracle
// on the constructed patterns, plus the property suites. Every bound and
// time limit is fixed here.

namespace meshpat
{

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = true;
    double seconds = 0;
    std::vector<std::string> notes; // failures and informational lines

    CriterionResult(int i, std::string t) : id(i), title(std::move(t))
    {
    }

    void fail(std::string why)
    {
        passed = false;
        notes.push_back("FAIL: " + std::move(why));
    }
    void info(std::string what)
    {
        notes.push_back(std::move(what));
    }
    void expect(bool cond, const std::string &what)
    {
        if (!cond) {
            fail(what);
        }
    }
};

struct BatteryOptions {
    unsigned threads = 0;
    std::uint64_t seed = 20260101;
};

namespace battery
{

using clock = std::chrono::steady_clock;

inline double seconds_since(clock::time_point t0)
{
    return std::chrono::duration<double>(clock::now() - t0).count();
}

// Checks a series against the oracle table; records a failure on mismatch.
inline void check_dist(CriterionResult &c, const std::string &what, const DistributionTable &t, const Series &s,
                       std::size_t n_max)
{
    const auto rep = verify_against_series(t, s);
    if (rep.n_checked != n_max + 1) {
        c.fail(what + ": only " + std::to_string(rep.n_checked) + " rows compared");
    } else if (!rep.ok()) {
        c.fail(what + ": distribution differs at n=" + std::to_string(rep.first_mismatch->n) + " (formula "
               + rep.first_mismatch->expected.to_string() + ", oracle " + rep.first_mismatch->actual.to_string() + ")");
    }
}

inline void check_avoid(CriterionResult &c, const std::string &what, const DistributionTable &t, const Series &s,
                        std::size_t n_max)
{
    const auto rep = verify_avoidance(t, s);
    if (rep.n_checked != n_max + 1) {
        c.fail(what + ": only " + std::to_string(rep.n_checked) + " rows compared");
    } else if (!rep.ok()) {
        c.fail(what + ": avoidance differs at n=" + std::to_string(rep.first_mismatch->n) + " (formula "
               + rep.first_mismatch->expected.to_string() + ", oracle " + rep.first_mismatch->actual.to_string() + ")");
    }
}

inline std::vector<InnerSpec> inner_battery()
{
    return {InnerSpec{}, parse_inner("1;"), parse_inner("1;0,0"), parse_inner("Z"), parse_inner("X")};
}

// Formula-vs-oracle outcomes of many family requests, grouped by family and
// quantity so one line reports each group.
struct Tally {
    struct Group {
        std::size_t total = 0;
        std::size_t failed = 0;
        std::string first;
    };
    std::map<std::string, Group> groups;

    void run(const FamilyRequest &req, std::size_t n_max, const OracleOptions &o)
    {
        for (const auto &rep : verify_family(req, n_max, o)) {
            auto &g = groups[req.family + (req.k ? ":" + std::to_string(*req.k) : "") + " " + rep.quantity];
            ++g.total;
            std::string why;
            if (rep.n_checked != n_max + 1) {
                why = rep.family + ": only " + std::to_string(rep.n_checked) + " rows compared";
            } else if (!rep.ok()) {
                why = rep.family + " at n=" + std::to_string(rep.first_mismatch->n) + ": formula "
                      + rep.first_mismatch->expected.to_string() + ", oracle " + rep.first_mismatch->actual.to_string();
            }
            if (!why.empty() && g.failed++ == 0) {
                g.first = why;
            }
        }
    }

    void report(CriterionResult &c) const
    {
        std::size_t total = 0;
        for (const auto &[key, g] : groups) {
            total += g.total;
            if (g.failed != 0) {
                c.fail(key + ": " + std::to_string(g.failed) + " of " + std::to_string(g.total)
                       + " inner choices differ; first " + g.first);
            }
        }
        c.info(std::to_string(total) + " formula/oracle comparisons in " + std::to_string(groups.size()) + " groups");
    }
};

inline bool mass_is_factorial(const Series &s)
{
    return eval_q(s, 1) == eval_q(factorial_series(s.order()), 1);
}

inline bool q0_is_avoidance(const FamilyResult &r)
{
    if (!r.avoidance || !r.distribution) {
        return true;
    }
    const auto n = std::min(r.avoidance->order(), r.distribution->order());
    return eval_q(r.distribution->truncated(n), 0) == eval_q(r.avoidance->truncated(n), 0);
}

// Direct definitional scan: no i >= 2 with tau_j < tau_i for every j < i.
inline bool irreducible_by_definition(const std::vector<int> &t)
{
    if (t.size() < 2) {
        return false;
    }
    for (std::size_t i = 1; i < t.size(); ++i) {
        bool all_smaller = true;
        for (std::size_t j = 0; j < i; ++j) {
            all_smaller = all_smaller && t[j] < t[i];
        }
        if (all_smaller) {
            return false;
        }
    }
    return true;
}

inline void for_each_permutation(std::size_t n, const std::function<void(const std::vector<int> &)> &fn)
{
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    do {
        fn(v);
    } while (std::next_permutation(v.begin(), v.end()));
}

inline MeshPattern random_pattern(std::mt19937_64 &rng, std::size_t max_len)
{
    const auto k = std::uniform_int_distribution<std::size_t>(1, max_len)(rng);
    std::vector<int> v(k);
    std::iota(v.begin(), v.end(), 1);
    std::shuffle(v.begin(), v.end(), rng);
    std::vector<Box> boxes;
    std::bernoulli_distribution coin(0.4);
    for (int a = 0; a <= static_cast<int>(k); ++a) {
        for (int b = 0; b <= static_cast<int>(k); ++b) {
            if (coin(rng)) {
                boxes.push_back({a, b});
            }
        }
    }
    return MeshPattern(Permutation(std::move(v)), std::move(boxes));
}

inline Series random_series(std::mt19937_64 &rng, std::size_t order, bool unit_constant)
{
    std::uniform_int_distribution<int> coef(-4, 4);
    std::uniform_int_distribution<std::size_t> deg(0, 3);
    Series s(order);
    for (std::size_t n = 0; n <= order; ++n) {
        std::vector<integer> cs(deg(rng) + 1);
        for (auto &c : cs) {
            c = coef(rng);
        }
        s[n] = QPolynomial(std::move(cs));
    }
    if (unit_constant) {
        s[0] = std::bernoulli_distribution(0.5)(rng) ? QPolynomial(1) : QPolynomial(-1);
    }
    return s;
}

} // namespace battery

// 1. Occurrences of "231;1,2 2,1" in 24531: exactly 241 and 453, under 1 ms.
inline CriterionResult criterion_occurrence_example()
{
    CriterionResult c{1, "occurrence semantics on 24531"};
    const auto p = parse_mesh_pattern("231;1,2 2,1");
    const auto host = parse_permutation("24531");
    const auto t0 = battery::clock::now();
    const auto count = count_occurrences(p, host);
    const auto occs = find_occurrences(p, host);
    c.seconds = battery::seconds_since(t0);
    std::vector<std::string> values;
    for (const auto &o : occs) {
        std::string v;
        for (auto i : o.positions) {
            v += std::to_string(host[i - 1]);
        }
        values.push_back(v);
    }
    std::string listed;
    for (const auto &v : values) {
        listed += (listed.empty() ? "" : " ") + v;
    }
    c.info("occurrences found: " + listed);
    c.expect(count == 2, "expected count 2, got " + std::to_string(count));
    c.expect(values == std::vector<std::string>{"241", "453"}, "expected exactly {241, 453}, got {" + listed + "}");
    c.expect(c.seconds < 1e-3, "runtime " + std::to_string(c.seconds) + " s exceeds 1 ms");
    return c;
}

// 2. Z against the length-1 formulas, n <= 7, under 5 s.
inline CriterionResult criterion_base_length1(const BatteryOptions &opt)
{
    CriterionResult c{2, "single-point patterns Z and X, n <= 7"};
    const auto t0 = battery::clock::now();
    const OracleOptions o{opt.threads};
    const auto t = distribution_table(catalog_pattern("Z"), 7, o);
    const auto r = base_length1(7);
    battery::check_dist(c, "Z", t, *r.distribution, 7);
    battery::check_avoid(c, "Z", t, *r.avoidance, 7);
    const auto av = avoidance_counts(t);
    c.expect(av[0] == 1 && av[1] == 0 && av[2] == 1 && av[3] == 3, "Z avoiders do not begin 1,0,1,3");
    const auto tx = distribution_table(catalog_pattern("X"), 7, o);
    battery::check_dist(c, "X", tx, *r.distribution, 7);
    c.seconds = battery::seconds_since(t0);
    c.expect(c.seconds < 5.0, "runtime " + std::to_string(c.seconds) + " s exceeds 5 s");
    return c;
}

// 3. Nr. 12, 13, 17, 66 against their closed forms, n <= 7, under 20 s.
inline CriterionResult criterion_corollaries(const BatteryOptions &opt)
{
    CriterionResult c{3, "Nr. 12, 13, 17, 66 closed forms, n <= 7"};
    const auto t0 = battery::clock::now();
    const OracleOptions o{opt.threads};
    const std::vector<std::pair<std::string, FamilyResult>> cases{
        {"12", nr12(7)}, {"13", nr13(7)}, {"17", nr17(7)}, {"66", nr66(7)}};
    for (const auto &[id, r] : cases) {
        const auto t = distribution_table(catalog_pattern(id), 7, o);
        battery::check_dist(c, "Nr. " + id, t, *r.distribution, 7);
        battery::check_avoid(c, "Nr. " + id, t, *r.avoidance, 7);
        if (id == "13") {
            // (n! - (n-2)!) + q (n-2)! for n >= 2
            integer f = 1, f2 = 1;
            for (std::size_t n = 2; n <= 7; ++n) {
                f = 1;
                for (std::size_t i = 2; i <= n; ++i) {
                    f *= i;
                }
                f2 = 1;
                for (std::size_t i = 2; i + 2 <= n; ++i) {
                    f2 *= i;
                }
                const QPolynomial want(std::vector<integer>{f - f2, f2});
                c.expect(t.rows[n] == want, "Nr. 13 row " + std::to_string(n) + " is " + t.rows[n].to_string());
            }
        }
    }
    // The same four through the Y family with the matching inner pattern.
    const std::vector<std::pair<std::string, PatternSeries>> via_y{
        {"12", point_series(7)},
        {"13", PatternSeries{factorial_series(7) - shift(factorial_series(7), 1),
                             factorial_series(7) - shift(factorial_series(7), 1)
                                 + shift(factorial_series(7), 1) * QPolynomial::q()}},
        {"17", base_length1(7).pair()},
        {"66", ltr_minimum_series(7)}};
    for (const auto &[id, inner] : via_y) {
        const auto expect = id == "12" ? nr12(7) : id == "13" ? nr13(7) : id == "17" ? nr17(7) : nr66(7);
        const auto got = family_y(inner, 7);
        c.expect(*got.distribution == *expect.distribution && *got.avoidance == *expect.avoidance,
                 "Y-family composition differs from the closed form of Nr. " + id);
    }
    c.seconds = battery::seconds_since(t0);
    c.expect(c.seconds < 20.0, "runtime " + std::to_string(c.seconds) + " s exceeds 20 s");
    return c;
}

// 4. Families 13/19/20/22/28 with every inner combination from the battery,
// n <= 7, under 3 minutes.
inline CriterionResult criterion_section3_families(const BatteryOptions &opt)
{
    CriterionResult c{4, "families 13/19/20/22/28 over the inner battery, n <= 7"};
    const auto t0 = battery::clock::now();
    const OracleOptions o{opt.threads};
    const auto inners = battery::inner_battery();
    battery::Tally tally;
    for (const char *f : {"13", "19", "28"}) {
        for (const auto &p1 : inners) {
            tally.run(make_request(f, {p1}), 7, o);
        }
    }
    for (const auto &p1 : inners) {
        for (const auto &p2 : inners) {
            tally.run(make_request("20", {p1, p2}), 7, o);
            for (const auto &p3 : inners) {
                tally.run(make_request("22", {p1, p2, p3}), 7, o);
            }
        }
    }
    tally.report(c);
    c.seconds = battery::seconds_since(t0);
    c.expect(c.seconds < 180.0, "runtime " + std::to_string(c.seconds) + " s exceeds 3 min");
    return c;
}

// 5. Staircase family for k = 1, 2 with p1 = 21 unshaded and fully shaded.
inline CriterionResult criterion_staircase(const BatteryOptions &opt)
{
    CriterionResult c{5, "staircase family k = 1, 2 (patterns X and Nr. 33)"};
    const auto t0 = battery::clock::now();
    const OracleOptions o{opt.threads};
    const std::vector<MeshPattern> inners{parse_mesh_pattern("21;"),
                                          parse_mesh_pattern("21;0,0 0,1 0,2 1,0 1,1 1,2 2,0 2,1 2,2")};
    for (const auto &p1 : inners) {
        const auto inner7 = inner_series({p1}, 7, o).series;
        const auto inner8 = inner_series({p1}, 8, o).series;
        for (std::size_t k : {1u, 2u}) {
            const auto pattern = staircase_pattern(k, p1);
            const auto t = distribution_table(pattern, 7, o);
            const auto r = family_staircase(inner7.distribution, k, 7, inner7.avoidance, p1);
            const auto what = "k=" + std::to_string(k) + ", p1=" + p1.to_string();
            battery::check_dist(c, what, t, *r.distribution, 7);
            if (!r.avoidance) {
                c.fail(what + ": no avoidance series");
            } else {
                battery::check_avoid(c, what, t, *r.avoidance, 7);
            }
            const auto general = family_staircase(inner8.distribution, k, 8, inner8.avoidance, p1);
            const auto specific = k == 1 ? family_x(inner8, 8, p1) : family_33(inner8, 8, p1);
            c.expect(*general.distribution == *specific.distribution,
                     what + ": general staircase differs from the k-specific distribution formula at N=8");
            c.expect(*general.avoidance == *specific.avoidance,
                     what + ": general staircase differs from the k-specific avoidance formula at N=8");
            if (k == 2) {
                battery::check_avoid(c, what + ", Nr. 33 avoidance closed form as displayed", t,
                                     avoid_33_as_printed(inner7.avoidance, 7), 7);
            }
        }
    }
    c.seconds = battery::seconds_since(t0);
    return c;
}

// 6. Avoidance-only families, the k-run family, and the mirror remarks.
inline CriterionResult criterion_avoidance(const BatteryOptions &opt)
{
    CriterionResult c{6, "avoidance families 28-2, 30, 27, 34:k, 34-2:k"};
    const auto t0 = battery::clock::now();
    const OracleOptions o{opt.threads};
    const auto inners = battery::inner_battery();
    battery::Tally tally;
    for (const auto &p1 : inners) {
        for (const auto &p2 : inners) {
            tally.run(make_request("28-2", {p1, p2}), 7, o);
            tally.run(make_request("27", {p1, p2}), 7, o);
        }
    }
    // Nr. 30 needs p1's bottom-left box unshaded.
    const std::vector<const char *> inners30{"empty", "1;", "X", "1;0,1 1,0 1,1", "21;"};
    for (const char *p1 : inners30) {
        tally.run(make_request("30", {parse_inner(p1)}), 7, o);
    }
    for (std::size_t k : {1u, 2u, 3u}) {
        tally.run(make_request("34", {}, k), 7, o);
    }
    for (std::size_t k : {2u, 3u}) {
        for (const auto &p2 : inners) {
            tally.run(make_request("34-2", {p2}, k), 7, o);
        }
    }
    tally.report(c);
    try {
        (void)avoid_30(Series(7), 7, catalog_pattern("Z"));
        c.fail("avoid_30 accepted an inner pattern with box (0,0) shaded");
    } catch (const precondition_error &) {
    }
    {
        const auto t = distribution_table(catalog_pattern("30"), 7, o);
        const auto r = lemma_30(7);
        battery::check_dist(c, "Nr. 30", t, *r.distribution, 7);
        battery::check_avoid(c, "Nr. 30", t, *r.avoidance, 7);
    }
    // The displayed Nr. 30 closed form, which carries x^2 A_{p1} without F.
    for (const char *p1 : inners30) {
        const auto spec = parse_inner(p1);
        const auto t = distribution_table(build_family_pattern(make_request("30", {spec})), 7, o);
        battery::check_avoid(c, "Nr. 30 closed form as displayed, p1=" + spec.label(), t,
                             avoid_30_as_printed(inner_series(spec, 7, o).series.avoidance, 7), 7);
    }

    // Rotating the 28-2 pattern, and mirroring its p2 slot to box (0,2),
    // keeps the avoider counts.
    for (const auto &p1 : inners) {
        for (const auto &p2 : inners) {
            const auto req = make_request("28-2", {p1, p2});
            const auto pattern = build_family_pattern(req);
            const auto base = avoidance_counts(pattern, 7, o);
            c.expect(avoidance_counts(pattern.rotated180(), 7, o) == base,
                     "rotated 28-2 pattern changes avoidance for " + request_label(req));
            BoxAssignment mirrored;
            if (p1.pattern) {
                mirrored.emplace(Box{1, 1}, *p1.pattern);
            }
            if (p2.pattern) {
                mirrored.emplace(Box{0, 2}, *p2.pattern);
            }
            const auto mp = mirrored.empty() ? catalog_pattern("28") : embed_multi(catalog_pattern("28"), mirrored);
            c.expect(avoidance_counts(mp, 7, o) == base,
                     "p2 in box (0,2) changes avoidance for " + request_label(req));
        }
    }
    // Nr. 27 with p2 moved from (2,1) to the A box (1,2).
    for (const auto &p1 : inners) {
        for (const auto &p2 : inners) {
            const auto req = make_request("27", {p1, p2});
            BoxAssignment swapped;
            if (p1.pattern) {
                swapped.emplace(Box{0, 0}, *p1.pattern);
            }
            if (p2.pattern) {
                swapped.emplace(Box{1, 2}, *p2.pattern);
            }
            const auto sp = swapped.empty() ? catalog_pattern("27") : embed_multi(catalog_pattern("27"), swapped);
            c.expect(avoidance_counts(sp, 7, o) == avoidance_counts(build_family_pattern(req), 7, o),
                     "p2 in box (1,2) changes avoidance for " + request_label(req));
        }
    }

    // Reported, not asserted: does the k-run formula survive a non-increasing
    // middle block?
    for (const auto &sigma : std::vector<std::vector<int>>{{3, 2}, {4, 3, 2}, {3, 4, 2}}) {
        const auto k = sigma.size() + 1;
        const auto t = distribution_table(run34_pattern(k, sigma), 7, o);
        const auto r = family_34(k, 7);
        const bool d = verify_against_series(t, *r.distribution).ok();
        const bool a = verify_avoidance(t, *r.avoidance).ok();
        std::string s;
        for (int v : sigma) {
            s += std::to_string(v);
        }
        c.info("k-run with middle block 1" + s + ": distribution " + (d ? "matches" : "does not match")
               + ", avoidance " + (a ? "matches" : "does not match") + " the increasing-block formula (n <= 7)");
    }
    c.seconds = battery::seconds_since(t0);
    return c;
}

// 7. The length-6 example: structure, closed form vs composition at N=9,
// oracle for n <= 9 with 4 workers, under 2 minutes.
inline CriterionResult criterion_figure1(const BatteryOptions &)
{
    CriterionResult c{7, "length-6 example pattern and distribution"};
    const auto t0 = battery::clock::now();
    const auto built = figure1_pattern();
    const auto expected = parse_mesh_pattern("162345;"
                                             "0,1 0,2 0,3 0,4 0,5 0,6 "
                                             "1,1 1,2 1,3 1,4 1,5 1,6 "
                                             "2,0 2,1 2,2 2,3 2,4 2,6 "
                                             "3,0 3,1 3,2 3,3 3,4 3,5 3,6 "
                                             "4,0 4,1 4,2 4,3 4,5 4,6 "
                                             "5,0 5,1 5,2 5,5 5,6 "
                                             "6,0 6,2 6,3 6,4 6,5 6,6");
    c.expect(built == expected, "nested construction " + built.to_string() + " differs from the drawn pattern");
    const auto composed = *figure1_composed(9).distribution;
    const auto printed = figure1_literal_as_printed(9);
    for (std::size_t n = 0; n <= 9; ++n) {
        if (printed[n] != composed[n]) {
            c.fail("closed form as displayed differs from the composed evaluators first at n=" + std::to_string(n)
                   + " (" + printed[n].to_string() + " vs " + composed[n].to_string() + "); at q=1 it gives "
                   + printed[n].total().str() + " instead of n!");
            break;
        }
    }
    c.expect(figure1_literal(9) == composed,
             "closed form with the bracket read as x(F-1) - qxS differs from the composed evaluators");
    if (figure1_literal(9) == composed) {
        c.info("closed form with the bracket read as x(F-1) - qxS equals the composed evaluators at N=9");
    }
    const auto t = distribution_table(built, 9, OracleOptions{4});
    battery::check_dist(c, "length-6 example (composed)", t, composed, 9);
    battery::check_avoid(c, "length-6 example (composed, q=0)", t, Series::from_integers(eval_q(composed, 0), 9), 9);
    c.seconds = battery::seconds_since(t0);
    c.expect(c.seconds < 120.0, "runtime " + std::to_string(c.seconds) + " s exceeds 2 min");
    return c;
}

// 8. Property suites.
inline CriterionResult criterion_properties(const BatteryOptions &opt)
{
    CriterionResult c{8, "property suites"};
    const auto t0 = battery::clock::now();
    const OracleOptions o{opt.threads};
    std::mt19937_64 rng(opt.seed);

    // Mass and q=0 over every evaluator output.
    std::vector<std::pair<std::string, FamilyResult>> produced{
        {"base1", base_length1(8)}, {"lemma30", lemma_30(8)}, {"12", nr12(8)},       {"13", nr13(8)},
        {"17", nr17(8)},            {"66", nr66(8)},          {"figure1", figure1_composed(8)}};
    for (std::size_t k = 1; k <= 4; ++k) {
        produced.emplace_back("34:" + std::to_string(k), family_34(k, 8));
    }
    const auto inners = battery::inner_battery();
    for (const auto &p1 : inners) {
        const auto s1 = inner_series(p1, 8, o).series;
        produced.emplace_back("Y " + p1.label(), family_y(s1, 8));
        produced.emplace_back("13 " + p1.label(), family_13(s1, 8));
        produced.emplace_back("19 " + p1.label(), family_19(s1, 8));
        produced.emplace_back("28 " + p1.label(), family_28(s1, 8));
        for (const auto &p2 : inners) {
            const auto s2 = inner_series(p2, 8, o).series;
            produced.emplace_back("20 " + p1.label() + " " + p2.label(), family_20(s1, s2, 8));
            produced.emplace_back("22 " + p1.label() + " " + p2.label(), family_22(s1, s2, s1, 8));
        }
    }
    for (const char *text : {"21;", "21;0,0 1,1 2,2", "312;"}) {
        const auto p1 = parse_mesh_pattern(text);
        const auto s1 = inner_series({p1}, 8, o).series;
        for (std::size_t k = 1; k <= 3; ++k) {
            produced.emplace_back("staircase:" + std::to_string(k) + " " + text,
                                  family_staircase(s1.distribution, k, 8, s1.avoidance, p1));
        }
    }
    for (const auto &[name, r] : produced) {
        if (r.distribution) {
            c.expect(battery::mass_is_factorial(*r.distribution), name + ": distribution at q=1 is not n!");
        }
        c.expect(battery::q0_is_avoidance(r), name + ": distribution at q=0 differs from avoidance");
    }
    c.info(std::to_string(produced.size()) + " evaluator outputs checked for q=1 and q=0");

    // Shading monotonicity and rotation equivariance.
    std::vector<std::vector<int>> hosts;
    for (std::size_t n = 0; n <= 7; ++n) {
        battery::for_each_permutation(n, [&](const std::vector<int> &v) { hosts.push_back(v); });
    }
    std::uniform_int_distribution<std::size_t> pick(0, hosts.size() - 1);
    for (int trial = 0; trial < 40; ++trial) {
        const auto big = battery::random_pattern(rng, 3);
        std::vector<Box> sub;
        for (const auto &b : big.shaded()) {
            if (std::bernoulli_distribution(0.5)(rng)) {
                sub.push_back(b);
            }
        }
        const MeshPattern small(big.perm(), sub);
        const auto rot = big.rotated180();
        for (int h = 0; h < 200; ++h) {
            const auto &host = hosts[pick(rng)];
            c.expect(count_occurrences(big, host) <= count_occurrences(small, host),
                     "adding shading increased the count of " + small.to_string());
            const Permutation hp(host);
            c.expect(count_occurrences(big, hp) == count_occurrences(rot, hp.rotated180()),
                     "rotation changed the count of " + big.to_string());
        }
    }
    for (int trial = 0; trial < 6; ++trial) {
        const auto p = battery::random_pattern(rng, 3);
        const auto rot = p.rotated180();
        c.expect(rot.rotated180() == p, "rotate180 is not an involution on " + p.to_string());
        for (const auto &host : hosts) {
            const Permutation hp(host);
            if (count_occurrences(p, hp) != count_occurrences(rot, hp.rotated180())) {
                c.fail("rotation changed the count of " + p.to_string() + " on " + hp.to_string());
                break;
            }
        }
    }

    // Ring laws and inversion.
    for (int trial = 0; trial < 30; ++trial) {
        const auto a = battery::random_series(rng, 6, false);
        const auto b = battery::random_series(rng, 6, false);
        const auto d = battery::random_series(rng, 6, false);
        c.expect((a + b) + d == a + (b + d), "addition is not associative");
        c.expect(a + b == b + a, "addition is not commutative");
        c.expect((a * b) * d == a * (b * d), "multiplication is not associative");
        c.expect(a * b == b * a, "multiplication is not commutative");
        c.expect(a * (b + d) == a * b + a * d, "multiplication does not distribute");
        const auto u = battery::random_series(rng, 6, true);
        const auto one = Series::constant(1, 6);
        c.expect(u * invert(u) == one && invert(u) * u == one, "invert is not a two-sided inverse");
    }
    c.seconds = battery::seconds_since(t0);
    return c;
}

// 9. is_irreducible against the definition on all permutations of length <= 6.
inline CriterionResult criterion_irreducibility()
{
    CriterionResult c{9, "irreducibility"};
    const auto t0 = battery::clock::now();
    std::size_t seen = 0;
    for (std::size_t n = 0; n <= 6; ++n) {
        battery::for_each_permutation(n, [&](const std::vector<int> &v) {
            ++seen;
            if (is_irreducible(Permutation(v)) != battery::irreducible_by_definition(v)) {
                c.fail("disagreement on " + Permutation(v).to_string());
            }
        });
    }
    c.expect(!is_irreducible(Permutation{1}), "the length-1 permutation must not be irreducible");
    c.info(std::to_string(seen) + " permutations compared");
    c.seconds = battery::seconds_since(t0);
    return c;
}

inline std::vector<CriterionResult> run_battery(const BatteryOptions &opt = {})
{
    std::vector<CriterionResult> out;
    out.push_back(criterion_occurrence_example());
    out.push_back(criterion_base_length1(opt));
    out.push_back(criterion_corollaries(opt));
    out.push_back(criterion_section3_families(opt));
    out.push_back(criterion_staircase(opt));
    out.push_back(criterion_avoidance(opt));
    out.push_back(criterion_figure1(opt));
    out.push_back(criterion_properties(opt));
    out.push_back(criterion_irreducibility());
    return out;
}

inline void print_criterion(std::ostream &os, const CriterionResult &c)
{
    std::ostringstream secs;
    secs.precision(3);
    secs << std::fixed << c.seconds;
    os << (c.passed ? "[PASS] " : "[FAIL] ") << c.id << ". " << c.title << " (" << secs.str() << " s)\n";
    for (const auto &n : c.notes) {
        os << "         " << n << '\n';
    }
}

} // namespace meshpat

#endif
