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

#ifndef MESHPAT_CATALOG_HPP
#define MESHPAT_CATALOG_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include <meshpat/error.hpp>
#include <meshpat/mesh_pattern.hpp>

namespace meshpat
{

// Named short mesh patterns. Numbered entries use the established numbering
// of length-2 mesh patterns; Nr. 66 is the one new entry.
inline constexpr std::array<std::pair<std::string_view, std::string_view>, 16> catalog_entries{{
    {"Z", "1;0,0 1,1"},
    {"X", "1;0,1 1,0"},
    {"Y", "1;0,0 0,1 1,0"},
    {"12", "12;0,0 0,1 0,2 1,0 2,0"},
    {"13", "12;0,0 0,1 0,2 1,0 1,2 2,0 2,1 2,2"},
    {"16", "12;0,1 0,2 1,0 2,0"},
    {"17", "12;0,0 0,1 0,2 1,0 1,2 2,0 2,1"},
    {"19", "12;0,1 0,2 1,1 1,2 2,0 2,2"},
    {"20", "12;0,0 0,1 0,2 1,1 1,2 2,0 2,1"},
    {"22", "12;0,0 0,1 1,1 1,2 2,0 2,2"},
    {"27", "12;0,1 0,2 1,0 1,1 2,0 2,2"},
    {"28", "12;0,0 0,1 1,0 1,2 2,1 2,2"},
    {"30", "12;0,1 0,2 1,0 1,1 1,2 2,0 2,1"},
    {"33", "12;0,1 0,2 1,0 1,2 2,0 2,1"},
    {"34", "12;0,0 0,1 1,0 1,1 1,2 2,1 2,2"},
    {"66", "12;0,0 0,1 0,2 1,0 1,1 2,0"},
}};

inline MeshPattern catalog_pattern(std::string_view id)
{
    for (const auto &[name, text] : catalog_entries) {
        if (name == id) {
            return parse_mesh_pattern(text);
        }
    }
    throw parse_error("unknown catalog pattern '" + std::string(id) + "'");
}

// Catalog id of a structurally equal pattern, if any.
inline std::optional<std::string> catalog_id(const MeshPattern &p)
{
    for (const auto &[name, text] : catalog_entries) {
        if (parse_mesh_pattern(text) == p) {
            return std::string(name);
        }
    }
    return std::nullopt;
}

} // namespace meshpat

#endif
