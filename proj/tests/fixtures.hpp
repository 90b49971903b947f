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

#include <string>
#include <vector>

#include "latgraph/catalog.hpp"
#include "latgraph/element_set.hpp"
#include "latgraph/error.hpp"
#include "latgraph/semilattice.hpp"

namespace fixtures {

using latgraph::ElementSet;
using latgraph::Index;

/// Set of elements by display name.
inline ElementSet named(const latgraph::Poset& p, std::initializer_list<const char*> names) {
  ElementSet s(p.size());
  for (const char* n : names) s.insert(p.index_of(n));
  return s;
}

inline latgraph::Lattice lattice(const char* name) {
  return *latgraph::catalog(name).lattice();
}

inline latgraph::JoinSemilattice semilattice(const char* name) {
  return *latgraph::catalog(name).semilattice();
}

/// Catalog entries exercised by the suites.
inline std::vector<std::string> catalog_instances() {
  std::vector<std::string> out{"m3", "n5", "fig1"};
  for (int k = 1; k <= 6; ++k) out.push_back("chain_" + std::to_string(k));
  for (int k = 0; k <= 3; ++k) out.push_back("bool_" + std::to_string(k));
  for (int k = 1; k <= 5; ++k) out.push_back("mk_" + std::to_string(k));
  return out;
}

inline latgraph::ErrorCode code_of(const auto& fn) {
  try {
    fn();
  } catch (const latgraph::Error& e) {
    return e.code();
  }
  throw std::logic_error("expected a latgraph::Error");
}

}  // namespace fixtures
