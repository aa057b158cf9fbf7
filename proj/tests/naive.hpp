// Independent reference implementations for the tests. Nothing here calls
// the library's occurrence search.
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace naive
{

using Shading = std::set<std::pair<int, int>>;

// Occurrences of (tau, shaded) in host by trying every k-subset of positions.
inline std::uint64_t count(const std::vector<int> &tau, const Shading &shaded, const std::vector<int> &host)
{
    const std::size_t k = tau.size(), n = host.size();
    if (k > n) {
        return 0;
    }
    std::uint64_t total = 0;
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
        std::vector<std::size_t> pos;
        for (std::size_t i = 0; i < n; ++i) {
            if (pick[i]) {
                pos.push_back(i);
            }
        }
        bool iso = true;
        for (std::size_t a = 0; a < k && iso; ++a) {
            for (std::size_t b = 0; b < k && iso; ++b) {
                iso = (host[pos[a]] < host[pos[b]]) == (tau[a] < tau[b]);
            }
        }
        if (!iso) {
            continue;
        }
        bool clear = true;
        for (std::size_t i = 0; i < n && clear; ++i) {
            if (pick[i]) {
                continue;
            }
            int col = 0, row = 0;
            for (std::size_t a = 0; a < k; ++a) {
                col += pos[a] < i;
                row += host[pos[a]] < host[i];
            }
            clear = !shaded.count({col, row});
        }
        total += clear;
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return total;
}

inline std::vector<std::vector<int>> all_permutations(std::size_t n)
{
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

// Row n: map from occurrence count to the number of permutations.
inline std::map<std::uint64_t, std::uint64_t> distribution(const std::vector<int> &tau, const Shading &shaded,
                                                           std::size_t n)
{
    std::map<std::uint64_t, std::uint64_t> row;
    for (const auto &h : all_permutations(n)) {
        ++row[count(tau, shaded, h)];
    }
    return row;
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n) {
        return 0;
    }
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

} // namespace naive
