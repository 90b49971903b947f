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

#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "latgraph/element_set.hpp"

namespace latgraph {

/// A finite partially ordered set over dense indices 0..n-1 with display names.
///
/// The order is stored as principal down-sets and up-sets; the cover relation
/// is derived from them, never taken from the input.
class Poset {
 public:
  Poset() = default;

  std::size_t size() const noexcept { return names_.size(); }
  bool empty() const noexcept { return names_.empty(); }

  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(Index i) const { return names_.at(i); }
  std::optional<Index> find(std::string_view name) const;
  /// Throws UnknownName.
  Index index_of(std::string_view name) const;

  bool leq(Index a, Index b) const noexcept { return down_[b].contains(a); }
  bool less(Index a, Index b) const noexcept { return a != b && leq(a, b); }
  bool comparable(Index a, Index b) const noexcept { return leq(a, b) || leq(b, a); }

  /// Principal down-set ↓a and up-set ↑a.
  const ElementSet& down(Index a) const { return down_.at(a); }
  const ElementSet& up(Index a) const { return up_.at(a); }
  const ElementSet& lower_covers(Index a) const { return lower_covers_.at(a); }
  const ElementSet& upper_covers(Index a) const { return upper_covers_.at(a); }

  /// Pairs (a, b) with a ≺ b, sorted.
  const std::vector<std::pair<Index, Index>>& covers() const noexcept { return covers_; }

  /// Elements listed so that a < b implies a appears before b.
  const std::vector<Index>& linear_extension() const noexcept { return linear_; }

  ElementSet none() const { return ElementSet(size()); }
  ElementSet all() const { return ElementSet::full(size()); }

  /// "{a,b}" using display names, members in index order.
  std::string describe(const ElementSet& set) const;

 private:
  Poset(std::vector<std::string> names, std::vector<ElementSet> down);

  friend Poset build_poset_indexed(std::vector<std::string>,
                                   std::span<const std::pair<Index, Index>>);
  friend Poset poset_from_down_sets(std::vector<std::string>, std::vector<ElementSet>);

  std::vector<std::string> names_;
  std::unordered_map<std::string, Index> by_name_;
  std::vector<ElementSet> down_;
  std::vector<ElementSet> up_;
  std::vector<ElementSet> lower_covers_;
  std::vector<ElementSet> upper_covers_;
  std::vector<std::pair<Index, Index>> covers_;
  std::vector<Index> linear_;
};

/// Builds the order generated by `covers` (pairs lower, upper). Transitively
/// implied pairs are accepted and dropped from the canonical cover list.
/// Errors: DuplicateName, UnknownName, CycleDetected.
Poset build_poset(std::vector<std::string> names,
                  std::span<const std::pair<std::string, std::string>> covers);

/// Same, with pairs given as indices into `names`.
Poset build_poset_indexed(std::vector<std::string> names,
                          std::span<const std::pair<Index, Index>> relations);

/// Validates a full order given by principal down-sets (down[b] = {a : a <= b}).
/// Errors: DuplicateName, InvalidOrder (not reflexive or transitive),
/// CycleDetected (not antisymmetric).
Poset poset_from_down_sets(std::vector<std::string> names, std::vector<ElementSet> down);

/// A reflexive and transitive relation; rows[i] = {j : i ≪ j}.
class QuasiOrder {
 public:
  /// Errors: NotQuasiOrder when a row is not reflexive or the relation is not
  /// transitive.
  QuasiOrder(std::vector<std::string> names, std::vector<ElementSet> rows);

  /// Reflexive-transitive closure of the given pairs.
  static QuasiOrder closure_of(std::vector<std::string> names,
                               std::span<const std::pair<Index, Index>> pairs);

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  bool related(Index a, Index b) const { return rows_.at(a).contains(b); }
  const ElementSet& row(Index a) const { return rows_.at(a); }

 private:
  std::vector<std::string> names_;
  std::vector<ElementSet> rows_;
};

/// A duplicate-free collection of subsets of one carrier, kept in insertion
/// order.
class FamilyOfSubsets {
 public:
  explicit FamilyOfSubsets(std::size_t universe) : universe_(universe) {}
  /// Errors: DuplicateMember, CarrierMismatch.
  FamilyOfSubsets(std::size_t universe, std::vector<ElementSet> members);

  /// Errors: DuplicateMember, CarrierMismatch.
  void add(ElementSet member);
  bool contains(const ElementSet& member) const { return index_.contains(member); }

  std::size_t universe() const noexcept { return universe_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  const std::vector<ElementSet>& members() const noexcept { return members_; }
  const ElementSet& operator[](std::size_t i) const { return members_.at(i); }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  /// Same members, ordered by bitmask.
  FamilyOfSubsets sorted() const;

  friend bool operator==(const FamilyOfSubsets& a, const FamilyOfSubsets& b) {
    return a.universe_ == b.universe_ && a.index_ == b.index_;
  }

 private:
  std::size_t universe_;
  std::vector<ElementSet> members_;
  std::set<ElementSet> index_;
};

/// Result of collapsing a quasi-order (or graph reachability) to a poset.
struct Quotient {
  Poset poset;
  /// block_map[i] is the quotient element containing original element i.
  std::vector<Index> block_map;
};

ElementSet down_set(const Poset& p, const ElementSet& x);
ElementSet up_set(const Poset& p, const ElementSet& x);
bool is_antichain(const Poset& p, const ElementSet& a);

/// X ≪ Y: every member of X lies below some member of Y.
bool join_refines(const Poset& p, const ElementSet& x, const ElementSet& y);

/// The maximal elements of X: the unique antichain equivalent to X under ≪.
ElementSet canonical_antichain(const Poset& p, const ElementSet& x);

/// Every non-empty member contains an antichain that is itself a member.
bool is_saturated(const Poset& p, const FamilyOfSubsets& family);

/// A member X such that Y ≪ X implies X ⊆ Y for every member Y; the least such
/// member in bitmask order. Errors: EmptyFamily, NotSaturated.
ElementSet find_c_minimal(const Poset& p, const FamilyOfSubsets& family);

/// All down-closed subsets ordered by inclusion; each element is named by the
/// hexadecimal bitmask of the ideal. Errors: CarrierTooLarge (|p| > 20 or more
/// than 4096 ideals).
Poset order_ideals(const Poset& p);

/// Blocks of p ≡ q (p ≪ q and q ≪ p) ordered by p̄ <= q̄ iff p ≪ q. Blocks are
/// numbered by least member; a singleton block keeps its member's name.
Quotient max_antisym_quotient(const QuasiOrder& q);

}  // namespace latgraph
