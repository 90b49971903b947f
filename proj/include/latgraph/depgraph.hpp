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
#include <utility>
#include <vector>

#include "latgraph/element_set.hpp"
#include "latgraph/order.hpp"
#include "latgraph/semilattice.hpp"

namespace latgraph {

/// Directed graph on the join-irreducible elements of a semilattice. Vertex
/// and edge sets are expressed over the semilattice's carrier indices.
class DepGraph {
 public:
  DepGraph(std::vector<std::string> names, ElementSet vertices);

  void add_edge(Index u, Index v);

  std::size_t carrier_size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const ElementSet& vertices() const noexcept { return vertices_; }
  bool has_edge(Index u, Index v) const { return successors_.at(u).contains(v); }
  /// Empty for non-vertices.
  const ElementSet& successors(Index u) const { return successors_.at(u); }
  /// All (u, v) pairs in index order, loops included.
  std::vector<std::pair<Index, Index>> edges() const;
  std::size_t edge_count() const;
  bool is_symmetric() const;
  bool loops_only() const;

  friend bool operator==(const DepGraph& a, const DepGraph& b) {
    return a.vertices_ == b.vertices_ && a.successors_ == b.successors_;
  }

 private:
  std::vector<std::string> names_;
  ElementSet vertices_;
  std::vector<ElementSet> successors_;
};

/// Hereditary vertex sets, in bitmask order.
class HereditaryFamily {
 public:
  explicit HereditaryFamily(std::vector<ElementSet> members);

  std::size_t size() const noexcept { return members_.size(); }
  const std::vector<ElementSet>& members() const noexcept { return members_; }
  const ElementSet& operator[](std::size_t i) const { return members_.at(i); }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  bool contains(const ElementSet& h) const;
  /// Position of h in bitmask order, or size() if absent.
  std::size_t position(const ElementSet& h) const;
  /// Closed under pairwise union and intersection.
  bool is_lattice_of_sets() const;

 private:
  std::vector<ElementSet> members_;
};

/// u → v iff some x satisfies u <= x ∨ v while u <= x ∨ y fails for every
/// y < v. Every vertex carries a loop (witness x = 0).
DepGraph dependency_graph(const JoinSemilattice& s);

/// u → v iff v belongs to a minimal join-cover of u. Computed from the
/// minimal covers; used to cross-check dependency_graph.
DepGraph edges_via_min_covers(const JoinSemilattice& s);

bool is_hereditary(const DepGraph& g, const ElementSet& h);

/// Largest hereditary subset of X (X is intersected with the vertex set).
ElementSet hereditary_interior(const DepGraph& g, const ElementSet& x);

/// Errors: CarrierTooLarge (more than 20 vertices).
HereditaryFamily all_hereditary(const DepGraph& g);

/// Reachability collapsed to a poset. The quasi-order lives on the vertex
/// list; block_map is indexed by vertex position.
struct ReachabilityQuotient {
  std::vector<Index> vertex_list;
  Quotient quotient;
};

ReachabilityQuotient reachability_quotient(const DepGraph& g);

struct HerdIdealCorrespondence {
  std::size_t hereditary_count = 0;
  std::size_t ideal_count = 0;
  bool bijective = false;
  bool inclusion_reversing = false;
  bool holds() const {
    return bijective && inclusion_reversing && hereditary_count == ideal_count;
  }
};

/// Checks that H ↦ (image of the complement of H in the reachability
/// quotient) maps hereditary sets bijectively and inclusion-reversingly onto
/// the order ideals of the quotient.
HerdIdealCorrespondence check_herd_ideal_correspondence(const DepGraph& g);

}  // namespace latgraph
