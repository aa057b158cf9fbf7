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

#ifndef MESHPAT_PERMUTATION_HPP
#define MESHPAT_PERMUTATION_HPP

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <meshpat/error.hpp>

namespace meshpat
{

// A permutation of 1..n in one-line notation. n may be zero.
class Permutation
{
public:
    using value_type = int;

    Permutation() = default;

    explicit Permutation(std::vector<int> values) : values_(std::move(values))
    {
        validate();
    }

    Permutation(std::initializer_list<int> values) : values_(values)
    {
        validate();
    }

    static Permutation identity(std::size_t n)
    {
        std::vector<int> v(n);
        for (std::size_t i = 0; i < n; ++i) {
            v[i] = static_cast<int>(i + 1);
        }
        return Permutation(std::move(v));
    }

    std::size_t size() const noexcept
    {
        return values_.size();
    }
    bool empty() const noexcept
    {
        return values_.empty();
    }
    // 0-based access; values are 1-based.
    int operator[](std::size_t i) const
    {
        return values_[i];
    }
    std::span<const int> values() const noexcept
    {
        return values_;
    }
    auto begin() const noexcept
    {
        return values_.begin();
    }
    auto end() const noexcept
    {
        return values_.end();
    }

    // Reverse-complement: the 180 degree rotation of the permutation diagram.
    Permutation rotated180() const
    {
        const auto n = static_cast<int>(values_.size());
        std::vector<int> r(values_.rbegin(), values_.rend());
        for (auto &v : r) {
            v = n + 1 - v;
        }
        return Permutation(std::move(r));
    }

    // Comma-separated when n > 9, otherwise a digit string.
    std::string to_string() const
    {
        std::string out;
        const bool commas = values_.size() > 9;
        for (std::size_t i = 0; i < values_.size(); ++i) {
            if (commas && i != 0) {
                out += ',';
            }
            out += std::to_string(values_[i]);
        }
        return out;
    }

    friend bool operator==(const Permutation &, const Permutation &) = default;
    friend auto operator<=>(const Permutation &, const Permutation &) = default;

    friend std::ostream &operator<<(std::ostream &os, const Permutation &p)
    {
        return os << p.to_string();
    }

private:
    void validate() const
    {
        std::vector<bool> seen(values_.size() + 1, false);
        for (int v : values_) {
            if (v < 1 || static_cast<std::size_t>(v) > values_.size()) {
                throw parse_error("permutation entry " + std::to_string(v) + " outside 1.."
                                  + std::to_string(values_.size()));
            }
            if (seen[static_cast<std::size_t>(v)]) {
                throw parse_error("permutation entry " + std::to_string(v) + " repeated");
            }
            seen[static_cast<std::size_t>(v)] = true;
        }
    }

    std::vector<int> values_;
};

namespace detail
{

inline std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

inline int parse_int(std::string_view tok, std::string_view what)
{
    tok = trim(tok);
    int value = 0;
    const auto *first = tok.data();
    const auto *last = tok.data() + tok.size();
    if (!tok.empty() && *first == '+') {
        ++first;
    }
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (tok.empty() || ec != std::errc{} || ptr != last) {
        throw parse_error("malformed " + std::string(what) + " token '" + std::string(tok) + "'");
    }
    return value;
}

} // namespace detail

// Accepts a digit string ("24531", n <= 9) or comma-separated integers
// ("10,2,1,3,..."). The empty string is the empty permutation.
inline Permutation parse_permutation(std::string_view text)
{
    text = detail::trim(text);
    std::vector<int> values;
    if (text.empty()) {
        return Permutation{};
    }
    if (text.find(',') != std::string_view::npos) {
        std::size_t start = 0;
        while (true) {
            const auto pos = text.find(',', start);
            const auto tok = text.substr(start, pos == std::string_view::npos ? pos : pos - start);
            values.push_back(detail::parse_int(tok, "permutation"));
            if (pos == std::string_view::npos) {
                break;
            }
            start = pos + 1;
        }
    } else {
        if (text.size() > 9) {
            throw parse_error("digit-string permutations are limited to length 9; use commas");
        }
        for (char c : text) {
            if (c < '0' || c > '9') {
                throw parse_error(std::string("malformed permutation character '") + c + "'");
            }
            values.push_back(c - '0');
        }
    }
    return Permutation(std::move(values));
}

// Irreducible: length >= 2 and no position i >= 2 whose value exceeds every
// earlier value. Length 0 and 1 are treated as not irreducible.
inline bool is_irreducible(const Permutation &t)
{
    if (t.size() < 2) {
        return false;
    }
    int prefix_max = t[0];
    for (std::size_t i = 1; i < t.size(); ++i) {
        if (t[i] > prefix_max) {
            return false;
        }
    }
    return true;
}

} // namespace meshpat

#endif
