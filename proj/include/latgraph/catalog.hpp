//  Copyright 2026 The latgraph Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "latgraph/structure_io.hpp"

namespace latgraph {

/// Catalog entry patterns; "_k" entries take a size suffix such as chain_4.
std::vector<std::string> catalog_names();

/// m3, n5, fig1, chain_k (k >= 1), bool_k (0 <= k <= 6), mk_k (k >= 1).
/// Throws UnknownCatalogName otherwise.
Structure catalog(std::string_view name);

/// size in [1, 16]. Lattice kind: an intersection-closed family with a top,
/// semilattice kind: a union-closed family containing the empty set, poset
/// kind: a random order. Deterministic in (seed, size, kind).
Structure random_structure(std::uint64_t seed, std::size_t size, StructureKind kind);

}  // namespace latgraph
