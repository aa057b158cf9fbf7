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

#ifndef MESHPAT_ORACLE_HPP
#define MESHPAT_ORACLE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include <meshpat/error.hpp>
#include <meshpat/mesh_pattern.hpp>
#include <meshpat/occurrence.hpp>
#include <meshpat/qpoly.hpp>
#include <meshpat/series.hpp>

namespace meshpat
{

// Row n holds sum over S_n of q^(occurrences of p).
struct DistributionTable {
    std::vector<QPolynomial> rows;

    std::optional<std::size_t> n_max() const
    {
        if (rows.empty()) {
            return std::nullopt;
        }
        return rows.size() - 1;
    }

    // "n<TAB>c0 c1 c2 ..." per row.
    std::string to_tsv() const
    {
        std::ostringstream os;
        for (std::size_t n = 0; n < rows.size(); ++n) {
            os << n << '\t';
            const auto cs = rows[n].coeffs();
            if (cs.empty()) {
                os << '0';
            }
            for (std::size_t d = 0; d < cs.size(); ++d) {
                os << (d ? " " : "") << cs[d].str();
            }
            os << '\n';
        }
        return os.str();
    }

    nlohmann::json to_json() const
    {
        nlohmann::json out = nlohmann::json::array();
        for (std::size_t n = 0; n < rows.size(); ++n) {
            nlohmann::json cs = nlohmann::json::array();
            for (const auto &c : rows[n].coeffs()) {
                cs.push_back(c.str());
            }
            out.push_back({{"n", n}, {"coeffs", std::move(cs)}});
        }
        return {{"rows", std::move(out)}};
    }
};

struct OracleOptions {
    // 0 selects std::thread::hardware_concurrency().
    unsigned threads = 0;
};

namespace detail
{

inline unsigned resolve_threads(unsigned requested)
{
    if (requested != 0) {
        return requested;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

// The permutation of rank `rank` in lexicographic order of S_n.
inline std::vector<int> unrank_permutation(std::size_t n, std::uint64_t rank)
{
    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<std::uint64_t> fact(n + 1, 1);
    for (std::size_t i = 1; i <= n; ++i) {
        fact[i] = fact[i - 1] * i;
    }
    std::vector<int> out;
    out.reserve(n);
    for (std::size_t i = n; i >= 1; --i) {
        const auto idx = static_cast<std::size_t>(rank / fact[i - 1]);
        rank %= fact[i - 1];
        out.push_back(pool[idx]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return out;
}

// Occurrence-count histogram over the lexicographic rank block [first, last).
inline std::vector<std::uint64_t> histogram_block(const MeshPattern &p, std::size_t n, std::uint64_t first,
                                                  std::uint64_t last)
{
    std::vector<std::uint64_t> hist;
    if (first >= last) {
        return hist;
    }
    auto perm = unrank_permutation(n, first);
    for (std::uint64_t r = first; r < last; ++r) {
        const auto c = static_cast<std::size_t>(count_occurrences(p, perm));
        if (c >= hist.size()) {
            hist.resize(c + 1, 0);
        }
        ++hist[c];
        std::next_permutation(perm.begin(), perm.end());
    }
    return hist;
}

} // namespace detail

/// Exact occurrence distribution of `p` over S_n for n = 0..n_max.
///
/// Each length is split into contiguous lexicographic rank blocks, one per
/// worker; per-block histograms are summed, so the table does not depend on
/// the worker count. Histograms are 64-bit, which bounds n_max by 20.
inline DistributionTable distribution_table(const MeshPattern &p, std::size_t n_max, OracleOptions opts = {})
{
    if (n_max > 20) {
        throw precondition_error("oracle n_max is limited to 20");
    }
    const unsigned workers = detail::resolve_threads(opts.threads);
    DistributionTable table;
    std::uint64_t total = 1;
    for (std::size_t n = 0; n <= n_max; ++n) {
        if (n > 0) {
            total *= n;
        }
        const std::uint64_t blocks = std::min<std::uint64_t>(workers, total);
        std::vector<std::vector<std::uint64_t>> parts(blocks);
        if (blocks <= 1 || total < 2048) {
            parts.assign(1, detail::histogram_block(p, n, 0, total));
        } else {
            std::vector<std::jthread> pool;
            pool.reserve(blocks);
            for (std::uint64_t b = 0; b < blocks; ++b) {
                const std::uint64_t lo = total * b / blocks;
                const std::uint64_t hi = total * (b + 1) / blocks;
                pool.emplace_back([&parts, &p, n, b, lo, hi] { parts[b] = detail::histogram_block(p, n, lo, hi); });
            }
        }
        std::vector<integer> coeffs;
        for (const auto &h : parts) {
            if (h.size() > coeffs.size()) {
                coeffs.resize(h.size());
            }
            for (std::size_t c = 0; c < h.size(); ++c) {
                coeffs[c] += h[c];
            }
        }
        table.rows.emplace_back(std::move(coeffs));
    }
    return table;
}

// Number of avoiders for n = 0..n_max (the q^0 column).
inline std::vector<integer> avoidance_counts(const DistributionTable &table)
{
    std::vector<integer> out;
    for (const auto &row : table.rows) {
        out.push_back(row.coeff(0));
    }
    return out;
}

inline std::vector<integer> avoidance_counts(const MeshPattern &p, std::size_t n_max, OracleOptions opts = {})
{
    return avoidance_counts(distribution_table(p, n_max, opts));
}

struct Mismatch {
    std::size_t n = 0;
    QPolynomial expected; // from the series
    QPolynomial actual;   // from the oracle
};

struct VerificationReport {
    std::string pattern;
    std::string family;
    std::string quantity; // "distribution" or "avoidance"
    std::size_t n_checked = 0;
    std::vector<bool> matches; // one per n = 0..n_checked-1
    std::optional<Mismatch> first_mismatch;

    bool ok() const
    {
        return !first_mismatch.has_value();
    }

    std::string to_text() const
    {
        std::ostringstream os;
        os << "family\t" << family << '\n'
           << "pattern\t" << pattern << '\n'
           << "quantity\t" << quantity << '\n'
           << "checked\tn=0.." << (n_checked == 0 ? std::string("(none)") : std::to_string(n_checked - 1)) << '\n';
        for (std::size_t n = 0; n < matches.size(); ++n) {
            os << "n=" << n << '\t' << (matches[n] ? "match" : "MISMATCH") << '\n';
        }
        if (first_mismatch) {
            os << "first mismatch\tn=" << first_mismatch->n << "\texpected " << first_mismatch->expected.to_string()
               << "\tactual " << first_mismatch->actual.to_string() << '\n';
        }
        os << "result\t" << (ok() ? "MATCH" : "MISMATCH") << '\n';
        return os.str();
    }

    nlohmann::json to_json() const
    {
        nlohmann::json j{{"family", family},   {"pattern", pattern}, {"quantity", quantity},
                         {"n_checked", n_checked}, {"matches", matches}, {"ok", ok()}};
        if (first_mismatch) {
            j["first_mismatch"] = {{"n", first_mismatch->n},
                                   {"expected", first_mismatch->expected.to_string()},
                                   {"actual", first_mismatch->actual.to_string()}};
        }
        return j;
    }
};

namespace detail
{

template <typename RowOf>
VerificationReport compare_rows(std::size_t rows, const Series &s, RowOf row_of, const char *quantity)
{
    VerificationReport rep;
    rep.quantity = quantity;
    rep.n_checked = rows == 0 ? 0 : std::min(rows, s.order() + 1);
    for (std::size_t n = 0; n < rep.n_checked; ++n) {
        const QPolynomial actual = row_of(n);
        const bool same = actual == s[n];
        rep.matches.push_back(same);
        if (!same && !rep.first_mismatch) {
            rep.first_mismatch = Mismatch{n, s[n], actual};
        }
    }
    return rep;
}

} // namespace detail

// Row n of the table against the x^n coefficient of `s`, for n up to the
// smaller of the two bounds.
inline VerificationReport verify_against_series(const DistributionTable &table, const Series &s)
{
    return detail::compare_rows(
        table.rows.size(), s, [&](std::size_t n) { return table.rows[n]; }, "distribution");
}

// The q^0 column of the table against an avoidance series.
inline VerificationReport verify_avoidance(const DistributionTable &table, const Series &avoidance)
{
    return detail::compare_rows(
        table.rows.size(), avoidance, [&](std::size_t n) { return QPolynomial(table.rows[n].coeff(0)); },
        "avoidance");
}

} // namespace meshpat

#endif
