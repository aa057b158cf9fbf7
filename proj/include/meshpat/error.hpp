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

#ifndef MESHPAT_ERROR_HPP
#define MESHPAT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace meshpat
{

// Malformed textual input (permutations, patterns, family ids).
class parse_error : public std::invalid_argument
{
public:
    explicit parse_error(const std::string &what) : std::invalid_argument(what) {}
};

// A documented precondition of an operation does not hold.
class precondition_error : public std::invalid_argument
{
public:
    explicit precondition_error(const std::string &what) : std::invalid_argument(what) {}
};

// Two computations that must agree did not.
class consistency_error : public std::logic_error
{
public:
    explicit consistency_error(const std::string &what) : std::logic_error(what) {}
};

} // namespace meshpat

#endif
