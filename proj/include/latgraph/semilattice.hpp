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
#include <optional>
#include <vector>

#include "latgraph/element_set.hpp"
#include "latgraph/order.hpp"

namespace latgraph {

/// A finite join-semilattice with zero. The join table is computed from the
/// order and validated at construction.
class JoinSemilattice {
 public:
  virtual ~JoinSemilattice() = default;
  JoinSemilattice(const JoinSemilattice&) = default;
  JoinSemilattice(JoinSemilattice&&) noexcept = default;
  JoinSemilattice& operator=(const JoinSemilattice&) = default;
  JoinSemilattice& operator=(JoinSemilattice&&) noexcept = default;

  const Poset& order() const noexcept { return order_; }
  std::size_t size() const noexcept { return order_.size(); }
  Index zero() const noexcept { return zero_; }

  bool leq(Index a, Index b) const noexcept { return order_.leq(a, b); }
  bool less(Index a, Index b) const noexcept { return order_.less(a, b); }
  Index join(Index a, Index b) const noexcept { return join_[a * size() + b]; }
  /// ⋁X, with ⋁∅ = 0.
  Index join_of(const ElementSet& x) const;

 protected:
  JoinSemilattice() = default;

 private:
  friend JoinSemilattice build_semilattice(Poset p);

  Poset order_;
  Index zero_ = 0;
  std::vector<std::uint32_t> join_;
};

/// A finite lattice: a join-semilattice with a validated meet table.
class Lattice : public JoinSemilattice {
 public:
  Index top() const noexcept { return top_; }
  Index meet(Index a, Index b) const noexcept { return meet_[a * size() + b]; }
  /// ⋀X, with ⋀∅ = top.
  Index meet_of(const ElementSet& x) const;

 private:
  friend Lattice build_lattice(const JoinSemilattice& s);
  Lattice() = default;

  Index top_ = 0;
  std::vector<std::uint32_t> meet_;
};

/// Errors: NoZero (includes the empty poset), NoJoin.
JoinSemilattice build_semilattice(Poset p);

/// Errors: NoMeet. A finite join-semilattice with zero always has all meets,
/// so this only fails for inputs that are not finite ⟨0,∨⟩-semilattices.
Lattice build_lattice(const JoinSemilattice& s);

/// Greatest lower bound of a and b in p, if the common lower bounds have a
/// maximum.
std::optional<Index> partial_meet(const Poset& p, Index a, Index b);

/// Non-zero elements with exactly one lower cover.
ElementSet join_irreducibles(const JoinSemilattice& s);

/// u with u <= x ∨ y implying u <= x or u <= y. Checking pairs is enough:
/// the general finite case follows by induction on |F|, and u <= ⋁∅ = 0
/// never holds for u ≠ 0.
ElementSet join_primes(const JoinSemilattice& s);

ElementSet atoms(const JoinSemilattice& s);
bool is_atomistic(const JoinSemilattice& s);

/// Every element is the join of the join-irreducibles below it. DCC holds on
/// every finite carrier, so this is the whole particle condition here.
bool is_particle(const JoinSemilattice& s);

/// Antichains F ⊆ I with a <= ⋁F such that no other I-cover Y satisfies
/// Y ≪ F, in bitmask order. Errors: NoCover, CarrierTooLarge (|I| > 20).
FamilyOfSubsets minimal_i_covers(const JoinSemilattice& s, Index a, const ElementSet& i);

/// Minimal join-covers of a, computed as the minimal J(S)-covers.
FamilyOfSubsets minimal_join_covers(const JoinSemilattice& s, Index a);

struct WmjcrpResult {
  bool holds = false;
  /// False when the carrier exceeded the enumeration guard and `holds` is the
  /// value implied by the particle property instead of a direct check.
  bool verified_constructively = false;
};

/// Weak minimal join-cover refinement: every antichain join-cover F of every a
/// is refined by some minimal join-cover of a. Checked directly up to 12
/// elements.
WmjcrpResult has_wmjcrp(const JoinSemilattice& s);

/// a <= b ∨ c implies a = y ∨ z with y <= b and z <= c. For a Lattice the
/// identity a ∧ (b ∨ c) = (a ∧ b) ∨ (a ∧ c) is evaluated too and must agree.
bool is_distributive(const JoinSemilattice& s);

/// a <= b <= a ∨ c implies b = a ∨ x for some x <= c.
bool is_modular(const JoinSemilattice& s);

/// For all x <= y <= z some c has y ∧ c = x (the meet existing) and y ∨ c = z.
bool is_relatively_complemented(const JoinSemilattice& s);

/// Table m with m[a*n+b] = the greatest common lower bound of a and b, which
/// every finite ⟨0,∨⟩-semilattice has (the join of all common lower bounds).
std::vector<std::uint32_t> lower_bound_table(const JoinSemilattice& s);

}  // namespace latgraph
