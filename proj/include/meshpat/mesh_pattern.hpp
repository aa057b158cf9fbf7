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

#ifndef MESHPAT_MESH_PATTERN_HPP
#define MESHPAT_MESH_PATTERN_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include <meshpat/error.hpp>
#include <meshpat/permutation.hpp>

namespace meshpat
{

// Box (col,row) is the unit cell with lower-left corner (col,row) in the
// (k+1)x(k+1) grid of a length-k pattern. Column 0 lies left of the first
// point, row 0 below the smallest value.
struct Box {
    int col = 0;
    int row = 0;

    friend bool operator==(const Box &, const Box &) = default;
    friend auto operator<=>(const Box &, const Box &) = default;
};

inline std::ostream &operator<<(std::ostream &os, const Box &b)
{
    return os << b.col << ',' << b.row;
}

// A mesh pattern (tau, R): an underlying permutation and a set of shaded boxes.
// Equality is structural. Shaded boxes are kept sorted and unique, plus a
// dense lookup grid for the occurrence search.
class MeshPattern
{
public:
    MeshPattern() : grid_(1, false) {}

    MeshPattern(Permutation tau, std::vector<Box> shaded)
        : tau_(std::move(tau)), shaded_(std::move(shaded))
    {
        const auto k = static_cast<int>(tau_.size());
        std::sort(shaded_.begin(), shaded_.end());
        for (std::size_t i = 0; i < shaded_.size(); ++i) {
            const auto &b = shaded_[i];
            if (b.col < 0 || b.col > k || b.row < 0 || b.row > k) {
                throw parse_error("box (" + std::to_string(b.col) + "," + std::to_string(b.row)
                                  + ") outside the grid of a length-" + std::to_string(k) + " pattern");
            }
            if (i > 0 && shaded_[i - 1] == b) {
                throw parse_error("duplicate box (" + std::to_string(b.col) + "," + std::to_string(b.row) + ")");
            }
        }
        const auto side = static_cast<std::size_t>(k + 1);
        grid_.assign(side * side, false);
        for (const auto &b : shaded_) {
            grid_[index(b.col, b.row)] = true;
        }
    }

    static MeshPattern classical(Permutation tau)
    {
        return MeshPattern(std::move(tau), {});
    }

    const Permutation &perm() const noexcept
    {
        return tau_;
    }
    const std::vector<Box> &shaded() const noexcept
    {
        return shaded_;
    }
    std::size_t size() const noexcept
    {
        return tau_.size();
    }
    bool is_shaded(int col, int row) const
    {
        return grid_[index(col, row)];
    }
    bool is_shaded(Box b) const
    {
        return is_shaded(b.col, b.row);
    }
    bool in_grid(Box b) const noexcept
    {
        const auto k = static_cast<int>(tau_.size());
        return b.col >= 0 && b.col <= k && b.row >= 0 && b.row <= k;
    }

    // Reverse-complement tau; box (i,j) goes to (k-i,k-j).
    MeshPattern rotated180() const
    {
        const auto k = static_cast<int>(tau_.size());
        std::vector<Box> boxes;
        boxes.reserve(shaded_.size());
        for (const auto &b : shaded_) {
            boxes.push_back({k - b.col, k - b.row});
        }
        return MeshPattern(tau_.rotated180(), std::move(boxes));
    }

    // Canonical text form "PERM;c,r c,r ..." with boxes sorted.
    std::string to_string() const
    {
        std::string out = tau_.to_string();
        out += ';';
        for (std::size_t i = 0; i < shaded_.size(); ++i) {
            if (i != 0) {
                out += ' ';
            }
            out += std::to_string(shaded_[i].col) + ',' + std::to_string(shaded_[i].row);
        }
        return out;
    }

    nlohmann::json to_json() const
    {
        nlohmann::json j;
        j["perm"] = std::vector<int>(tau_.begin(), tau_.end());
        auto boxes = nlohmann::json::array();
        for (const auto &b : shaded_) {
            boxes.push_back({b.col, b.row});
        }
        j["shaded"] = std::move(boxes);
        return j;
    }

    static MeshPattern from_json(const nlohmann::json &j)
    {
        try {
            std::vector<Box> boxes;
            for (const auto &b : j.at("shaded")) {
                if (!b.is_array() || b.size() != 2) {
                    throw parse_error("shaded entries must be [col,row] pairs");
                }
                boxes.push_back({b[0].get<int>(), b[1].get<int>()});
            }
            return MeshPattern(Permutation(j.at("perm").get<std::vector<int>>()), std::move(boxes));
        } catch (const nlohmann::json::exception &e) {
            throw parse_error(std::string("malformed pattern JSON: ") + e.what());
        }
    }

    friend bool operator==(const MeshPattern &a, const MeshPattern &b)
    {
        return a.tau_ == b.tau_ && a.shaded_ == b.shaded_;
    }

    friend std::ostream &operator<<(std::ostream &os, const MeshPattern &p)
    {
        return os << p.to_string();
    }

private:
    std::size_t index(int col, int row) const
    {
        return static_cast<std::size_t>(col) * (tau_.size() + 1) + static_cast<std::size_t>(row);
    }

    Permutation tau_;
    std::vector<Box> shaded_;
    std::vector<bool> grid_;
};

// "PERM;BOXES", BOXES a whitespace-separated list of "col,row". A leading
// '{' selects the JSON form.
inline MeshPattern parse_mesh_pattern(std::string_view text)
{
    text = detail::trim(text);
    if (!text.empty() && text.front() == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception &e) {
            throw parse_error(std::string("malformed pattern JSON: ") + e.what());
        }
        return MeshPattern::from_json(j);
    }
    const auto semi = text.find(';');
    if (semi == std::string_view::npos) {
        throw parse_error("pattern must have the form PERM;BOXES");
    }
    auto tau = parse_permutation(text.substr(0, semi));
    std::vector<Box> boxes;
    auto rest = text.substr(semi + 1);
    std::size_t pos = 0;
    while (pos < rest.size()) {
        while (pos < rest.size() && std::isspace(static_cast<unsigned char>(rest[pos]))) {
            ++pos;
        }
        if (pos >= rest.size()) {
            break;
        }
        auto end = pos;
        while (end < rest.size() && !std::isspace(static_cast<unsigned char>(rest[end]))) {
            ++end;
        }
        const auto tok = rest.substr(pos, end - pos);
        const auto comma = tok.find(',');
        if (comma == std::string_view::npos || tok.find(',', comma + 1) != std::string_view::npos) {
            throw parse_error("malformed box '" + std::string(tok) + "'; expected col,row");
        }
        boxes.push_back({detail::parse_int(tok.substr(0, comma), "box"),
                         detail::parse_int(tok.substr(comma + 1), "box")});
        pos = end;
    }
    return MeshPattern(std::move(tau), std::move(boxes));
}

} // namespace meshpat

#endif
