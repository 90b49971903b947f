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

#include <vector>

#include "latgraph/congruence.hpp"
#include "latgraph/depgraph.hpp"
#include "latgraph/element_set.hpp"
#include "latgraph/semilattice.hpp"

namespace latgraph {

/// V(v, x) = (↓v \ ↓x) ∩ J(L). Requires v join-irreducible and x < v.
ElementSet neighborhood(const Lattice& l, Index v, Index x);

struct BasisAt {
  Index point = 0;
  /// below[k] < point, sets[k] = V(point, below[k]).
  std::vector<Index> below;
  std::vector<ElementSet> sets;
};

struct NeighborhoodBasis {
  std::vector<BasisAt> at;
};

NeighborhoodBasis neighborhood_basis(const Lattice& l);

/// Points of J(L) every basic neighbourhood of which meets x.
ElementSet closure(const Lattice& l, const ElementSet& x);
ElementSet closure(const Lattice& l, const NeighborhoodBasis& basis, const ElementSet& x);

bool is_open(const Lattice& l, const ElementSet& u);

bool is_discrete(const Lattice& l);

HereditaryFamily closed_hereditary(const Lattice& l);
HereditaryFamily closed_hereditary(const Lattice& l, const DepGraph& g);

struct TopologyReport {
  bool discrete = false;
  std::vector<LawCheck> laws;

  bool passed() const;
};

/// Basis axioms, T1, clopen basic sets and Kuratowski laws. Subsets of J(L)
/// are enumerated when |J(L)| <= 8, sampled deterministically otherwise.
TopologyReport verify_topology(const Lattice& l);

GaloisReport verify_main_theorem(const Lattice& l);

bool is_strongly_distributive(const Lattice& l);

}  // namespace latgraph
