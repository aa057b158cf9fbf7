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


#ifndef MESHPAT_MESHPAT_HPP
#define MESHPAT_MESHPAT_HPP

#include <meshpat/catalog.hpp>
#include <meshpat/embed.hpp>
#include <meshpat/error.hpp>
#include <meshpat/families.hpp>
#include <meshpat/mesh_pattern.hpp>
#include <meshpat/occurrence.hpp>
#include <meshpat/oracle.hpp>
#include <meshpat/permutation.hpp>
#include <meshpat/qpoly.hpp>
#include <meshpat/registry.hpp>
#include <meshpat/series.hpp>

#endif
