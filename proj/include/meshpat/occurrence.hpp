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

#ifndef MESHPAT_OCCURRENCE_HPP
#define MESHPAT_OCCURRENCE_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <type_traits>
#include <vector>

#include <meshpat/mesh_pattern.hpp>
#include <meshpat/permutation.hpp>

namespace meshpat
{

// 1-based, strictly increasing positions into the host permutation.
struct Occurrence {
    std::vector<std::size_t> positions;

    friend bool operator==(const Occurrence &, const Occurrence &) = default;
};

namespace detail
{

// Depth-first search over increasing position tuples. A prefix is extended
// only while it stays order-isomorphic to the matching prefix of tau, so the
// shading test runs on complete classical occurrences only.
template <typename Visitor>
class occurrence_search
{
public:
    occurrence_search(const MeshPattern &p, std::span<const int> host, Visitor &visit)
        : p_(p), tau_(p.perm().values()), host_(host), visit_(visit), k_(p.size()), pos_(p.size()),
          sorted_vals_(p.size())
    {
    }

    void run()
    {
        if (k_ > host_.size()) {
            return;
        }
        extend(0, 0);
    }

private:
    void extend(std::size_t depth, std::size_t first)
    {
        if (depth == k_) {
            if (p_.shaded().empty() || regions_clear()) {
                visit_(std::span<const std::size_t>(pos_));
            }
            return;
        }
        const auto last = host_.size() - (k_ - depth);
        for (std::size_t i = first; i <= last; ++i) {
            const int v = host_[i];
            bool ok = true;
            for (std::size_t e = 0; e < depth; ++e) {
                if ((v < host_[pos_[e]]) != (tau_[depth] < tau_[e])) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                pos_[depth] = i;
                extend(depth + 1, i + 1);
            }
        }
    }

    // Every host point outside the occurrence lies in exactly one box; that
    // box must be unshaded.
    bool regions_clear()
    {
        for (std::size_t d = 0; d < k_; ++d) {
            sorted_vals_[static_cast<std::size_t>(tau_[d] - 1)] = host_[pos_[d]];
        }
        std::size_t col = 0;
        for (std::size_t t = 0; t < host_.size(); ++t) {
            if (col < k_ && pos_[col] == t) {
                ++col;
                continue;
            }
            const int v = host_[t];
            int row = 0;
            while (static_cast<std::size_t>(row) < k_ && sorted_vals_[static_cast<std::size_t>(row)] < v) {
                ++row;
            }
            if (p_.is_shaded(static_cast<int>(col), row)) {
                return false;
            }
        }
        return true;
    }

    const MeshPattern &p_;
    std::span<const int> tau_;
    std::span<const int> host_;
    Visitor &visit_;
    std::size_t k_;
    std::vector<std::size_t> pos_;
    std::vector<int> sorted_vals_;
};

} // namespace detail

// Calls visit(std::span<const std::size_t>) with 0-based positions of each
// occurrence, in lexicographic order of position tuples.
template <typename Visitor>
void for_each_occurrence(const MeshPattern &p, std::span<const int> host, Visitor &&visit)
{
    detail::occurrence_search<std::remove_reference_t<Visitor>> search(p, host, visit);
    search.run();
}

inline std::vector<Occurrence> find_occurrences(const MeshPattern &p, const Permutation &host)
{
    std::vector<Occurrence> out;
    for_each_occurrence(p, host.values(), [&](std::span<const std::size_t> pos) {
        Occurrence occ;
        occ.positions.reserve(pos.size());
        for (auto i : pos) {
            occ.positions.push_back(i + 1);
        }
        out.push_back(std::move(occ));
    });
    return out;
}

inline std::uint64_t count_occurrences(const MeshPattern &p, std::span<const int> host)
{
    std::uint64_t n = 0;
    for_each_occurrence(p, host, [&](std::span<const std::size_t>) { ++n; });
    return n;
}

inline std::uint64_t count_occurrences(const MeshPattern &p, const Permutation &host)
{
    return count_occurrences(p, host.values());
}

} // namespace meshpat

#endif
