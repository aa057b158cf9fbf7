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

#ifndef MESHPAT_EMBED_HPP
#define MESHPAT_EMBED_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <meshpat/catalog.hpp>
#include <meshpat/error.hpp>
#include <meshpat/mesh_pattern.hpp>
#include <meshpat/permutation.hpp>

namespace meshpat
{

// Inner patterns keyed by the outer box that receives them.
using BoxAssignment = std::map<Box, MeshPattern>;

/// Simultaneous insertion of inner patterns into unshaded boxes of `outer`.
///
/// An assigned column of width m is split into m+1 columns (likewise rows).
/// Outer points keep their relative order, inner points land inside their
/// box, an outer shaded box covers every cell its stretched column and row
/// span, and inner shading is translated into the box. Assigned boxes must
/// be unshaded and pairwise disjoint in both column and row.
inline MeshPattern embed_multi(const MeshPattern &outer, const BoxAssignment &assignments)
{
    const auto k = static_cast<int>(outer.size());
    std::vector<int> col_width(static_cast<std::size_t>(k + 1), 0);
    std::vector<int> row_width(static_cast<std::size_t>(k + 1), 0);
    for (const auto &[box, inner] : assignments) {
        if (!outer.in_grid(box)) {
            throw precondition_error("insertion box (" + std::to_string(box.col) + "," + std::to_string(box.row)
                                     + ") outside the outer grid");
        }
        if (outer.is_shaded(box)) {
            throw precondition_error("insertion box (" + std::to_string(box.col) + "," + std::to_string(box.row)
                                     + ") is shaded");
        }
        if (inner.size() == 0) {
            throw precondition_error("inserted pattern must be nonempty");
        }
        auto &cw = col_width[static_cast<std::size_t>(box.col)];
        auto &rw = row_width[static_cast<std::size_t>(box.row)];
        if (cw != 0 || rw != 0) {
            throw precondition_error("insertion boxes must not share a column or a row");
        }
        cw = rw = static_cast<int>(inner.size());
    }

    // First new column/row index covered by each outer column/row.
    std::vector<int> col_start(static_cast<std::size_t>(k + 1));
    std::vector<int> row_start(static_cast<std::size_t>(k + 1));
    for (int a = 0, c = 0, r = 0; a <= k; ++a) {
        col_start[static_cast<std::size_t>(a)] = c;
        row_start[static_cast<std::size_t>(a)] = r;
        c += 1 + col_width[static_cast<std::size_t>(a)];
        r += 1 + row_width[static_cast<std::size_t>(a)];
    }
    const auto ua = [](int a) { return static_cast<std::size_t>(a); };

    int total = k;
    for (const auto &entry : assignments) {
        total += static_cast<int>(entry.second.size());
    }

    // Point (c, v): outer point c sits on the line ending column c-1.
    std::vector<int> values(static_cast<std::size_t>(total), 0);
    for (int c = 1; c <= k; ++c) {
        const int v = outer.perm()[ua(c - 1)];
        const int nc = col_start[ua(c - 1)] + col_width[ua(c - 1)] + 1;
        const int nv = row_start[ua(v - 1)] + row_width[ua(v - 1)] + 1;
        values[ua(nc - 1)] = nv;
    }
    std::vector<Box> shaded;
    for (const auto &[box, inner] : assignments) {
        const int c0 = col_start[ua(box.col)];
        const int r0 = row_start[ua(box.row)];
        for (std::size_t c = 1; c <= inner.size(); ++c) {
            values[ua(c0 + static_cast<int>(c) - 1)] = r0 + inner.perm()[c - 1];
        }
        for (const auto &b : inner.shaded()) {
            shaded.push_back({c0 + b.col, r0 + b.row});
        }
    }
    for (const auto &b : outer.shaded()) {
        const int c0 = col_start[ua(b.col)];
        const int r0 = row_start[ua(b.row)];
        for (int c = c0; c <= c0 + col_width[ua(b.col)]; ++c) {
            for (int r = r0; r <= r0 + row_width[ua(b.row)]; ++r) {
                shaded.push_back({c, r});
            }
        }
    }
    std::sort(shaded.begin(), shaded.end());
    shaded.erase(std::unique(shaded.begin(), shaded.end()), shaded.end());
    return MeshPattern(Permutation(std::move(values)), std::move(shaded));
}

inline MeshPattern embed_at_box(const MeshPattern &outer, Box box, const MeshPattern &inner)
{
    return embed_multi(outer, BoxAssignment{{box, inner}});
}

// Identity of length k with every off-diagonal box shaded, then `inner`
// placed in the top-right box (k,k).
inline MeshPattern bare_staircase(std::size_t k)
{
    if (k == 0) {
        throw precondition_error("staircase length must be at least 1");
    }
    std::vector<Box> boxes;
    const auto ki = static_cast<int>(k);
    for (int a = 0; a <= ki; ++a) {
        for (int b = 0; b <= ki; ++b) {
            if (a != b) {
                boxes.push_back({a, b});
            }
        }
    }
    return MeshPattern(Permutation::identity(k), std::move(boxes));
}

inline MeshPattern staircase_pattern(std::size_t k, const MeshPattern &inner)
{
    const auto ki = static_cast<int>(k);
    return embed_at_box(bare_staircase(k), {ki, ki}, inner);
}

/// The k-run pattern: 1 followed by sigma (a permutation of {2..k},
/// increasing by default) with every box shaded except (0,k) and (k,0).
/// When given, `p2` is inserted into the bottom-right box (k,0).
inline MeshPattern run34_pattern(std::size_t k, const std::optional<std::vector<int>> &sigma = std::nullopt,
                                 const std::optional<MeshPattern> &p2 = std::nullopt)
{
    if (k == 0) {
        throw precondition_error("run length must be at least 1");
    }
    std::vector<int> values{1};
    if (sigma) {
        if (sigma->size() != k - 1) {
            throw precondition_error("sigma must be a permutation of {2.." + std::to_string(k) + "}");
        }
        values.insert(values.end(), sigma->begin(), sigma->end());
        auto sorted = values;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            if (sorted[i] != static_cast<int>(i + 1)) {
                throw precondition_error("sigma must be a permutation of {2.." + std::to_string(k) + "}");
            }
        }
    } else {
        for (std::size_t v = 2; v <= k; ++v) {
            values.push_back(static_cast<int>(v));
        }
    }
    const auto ki = static_cast<int>(k);
    std::vector<Box> boxes;
    for (int a = 0; a <= ki; ++a) {
        for (int b = 0; b <= ki; ++b) {
            if (!((a == 0 && b == ki) || (a == ki && b == 0))) {
                boxes.push_back({a, b});
            }
        }
    }
    MeshPattern base(Permutation(std::move(values)), std::move(boxes));
    if (p2) {
        return embed_at_box(base, {ki, 0}, *p2);
    }
    return base;
}

// The length-6 pattern built by nesting: Nr. 66 inside the centre of Nr. 28,
// the result inside the East box (2,1) of Nr. 19.
inline MeshPattern figure1_pattern()
{
    const auto inner = embed_at_box(catalog_pattern("28"), {1, 1}, catalog_pattern("66"));
    return embed_at_box(catalog_pattern("19"), {2, 1}, inner);
}

} // namespace meshpat

#endif
