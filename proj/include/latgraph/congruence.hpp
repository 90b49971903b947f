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

#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "latgraph/depgraph.hpp"
#include "latgraph/element_set.hpp"
#include "latgraph/order.hpp"
#include "latgraph/semilattice.hpp"

namespace latgraph {

/// Which operations a congruence must respect: join only, or join and meet.
enum class CongruenceKind { semilattice, lattice };

std::string_view to_string(CongruenceKind kind) noexcept;

/// An equivalence on a carrier stored as a block table. Blocks are numbered in
/// order of their least member, so equal relations have equal tables.
class Congruence {
 public:
  static Congruence identity(std::size_t n, CongruenceKind kind);
  static Congruence total(std::size_t n, CongruenceKind kind);
  /// Any labelling of the carrier; equal labels mean the same block.
  static Congruence from_labels(const std::vector<Index>& labels, CongruenceKind kind);

  std::size_t size() const noexcept { return table_.size(); }
  CongruenceKind kind() const noexcept { return kind_; }
  Index block_of(Index a) const { return table_.at(a); }
  bool related(Index a, Index b) const { return table_.at(a) == table_.at(b); }
  std::size_t block_count() const noexcept { return block_count_; }
  std::vector<ElementSet> blocks() const;
  const std::vector<Index>& table() const noexcept { return table_; }

  /// this ⊆ other as relations.
  bool refines(const Congruence& other) const;

  /// Blocks rendered as "{0}{a,u}{v}".
  std::string describe(const Poset& p) const;

  friend bool operator==(const Congruence& a, const Congruence& b) {
    return a.kind_ == b.kind_ && a.table_ == b.table_;
  }

 private:
  Congruence(std::vector<Index> table, std::size_t blocks, CongruenceKind kind)
      : table_(std::move(table)), block_count_(blocks), kind_(kind) {}

  std::vector<Index> table_;
  std::size_t block_count_ = 0;
  CongruenceKind kind_ = CongruenceKind::semilattice;
};

/// Common refinement.
Congruence meet(const Congruence& a, const Congruence& b);
/// Transitive closure of the union; again a congruence of the same kind.
Congruence join(const Congruence& a, const Congruence& b);

/// Whether c respects joins, and meets as well for lattice kind.
/// Errors: KindMismatch (lattice kind over a structure without meets).
bool is_compatible(const JoinSemilattice& s, const Congruence& c);

/// Whether a ≡ b implies c ∧ a ≡ c ∧ b for all c, with meets taken as
/// greatest lower bounds.
bool preserves_existing_meets(const JoinSemilattice& s, const Congruence& c);

/// Least congruence of the given kind identifying a and b.
/// Errors: KindMismatch (lattice kind needs a Lattice).
Congruence principal_congruence(const JoinSemilattice& s, Index a, Index b,
                                CongruenceKind kind);

/// Congruences ordered by refinement: fewer blocks later, ties broken by
/// block table. Joins and meets are computed on demand.
class ConLattice {
 public:
  ConLattice(CongruenceKind kind, std::vector<Congruence> members);

  CongruenceKind kind() const noexcept { return kind_; }
  std::size_t size() const noexcept { return members_.size(); }
  const std::vector<Congruence>& members() const noexcept { return members_; }
  const Congruence& operator[](Index i) const { return members_.at(i); }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  std::optional<Index> index_of(const Congruence& c) const;
  Index identity_index() const noexcept { return 0; }
  Index total_index() const noexcept { return members_.size() - 1; }

  bool leq(Index i, Index j) const { return members_.at(i).refines(members_.at(j)); }
  Index join(Index i, Index j) const;
  Index meet(Index i, Index j) const;

  /// Refinement order as a Poset, elements named by their block rendering.
  Poset refinement_order(const Poset& carrier) const;

 private:
  struct TableHash {
    std::size_t operator()(const std::vector<Index>& t) const noexcept;
  };

  CongruenceKind kind_;
  std::vector<Congruence> members_;
  std::unordered_map<std::vector<Index>, Index, TableHash> index_;
};

/// Every congruence of the given kind: the join-closure of the principal
/// congruences. Errors: CarrierTooLarge (lattice kind above 40 elements,
/// semilattice kind above 16), KindMismatch.
ConLattice all_congruences(const JoinSemilattice& s, CongruenceKind kind);

/// Con(L) as a lattice in its own right, ordered by refinement.
Lattice con_as_lattice(const JoinSemilattice& s, const ConLattice& con);

/// a <=_Θ b iff a ∨ b ≡_Θ b.
bool leq_theta(const JoinSemilattice& s, const Congruence& theta, Index a, Index b);

/// Join-irreducibles u with no x < u in the same block.
ElementSet j_theta(const JoinSemilattice& s, const Congruence& theta);

/// Join-irreducibles u such that u <=_Θ x implies u <= x for every x.
ElementSet j_bar_theta(const JoinSemilattice& s, const Congruence& theta);

/// a ≡ b iff ↓a ∩ H = ↓b ∩ H, tagged with `kind`.
/// Errors: NotHereditary.
Congruence congruence_from_hereditary(const JoinSemilattice& s, const DepGraph& g,
                                      const ElementSet& h, CongruenceKind kind);
Congruence congruence_from_hereditary(const JoinSemilattice& s, const ElementSet& h,
                                      CongruenceKind kind);

/// Semilattice kind: the hereditary interior of J̄_Θ. Lattice kind: J_Θ.
ElementSet galois_F(const JoinSemilattice& s, const DepGraph& g, const Congruence& theta);
ElementSet galois_F(const JoinSemilattice& s, const Congruence& theta);

/// Θ_H, of the requested kind.
Congruence galois_G(const JoinSemilattice& s, const DepGraph& g, const ElementSet& h,
                    CongruenceKind kind);

/// Outcome of one law checked over every applicable pair or element.
struct LawCheck {
  LawCheck() = default;
  explicit LawCheck(std::string name) : law(std::move(name)) {}

  std::string law;
  std::size_t checked = 0;
  std::size_t violations = 0;
  /// The first few violations, rendered with display names.
  std::vector<std::string> counterexamples;

  bool passed() const noexcept { return violations == 0; }
  void record(bool ok, const std::function<std::string()>& witness);
};

struct GaloisReport {
  CongruenceKind kind = CongruenceKind::semilattice;
  std::vector<ElementSet> hereditary;
  std::vector<ElementSet> closed_hereditary;
  std::vector<Congruence> congruences;
  /// f_images[i] = F(congruences[i]).
  std::vector<ElementSet> f_images;
  /// g_images[j] = index into congruences of G(hereditary[j]), if present.
  std::vector<std::optional<Index>> g_images;
  bool particle = true;
  bool gf_is_identity = false;
  bool fg_is_identity_on_closed = false;
  std::vector<LawCheck> laws;
  std::vector<std::string> notes;

  std::size_t counterexample_count() const;
  bool passed() const { return counterexample_count() == 0; }
};

/// Verifies the Galois connection between Con (of the given kind) and the
/// hereditary sets of the dependency graph. Violations are recorded as
/// counterexamples, never thrown.
GaloisReport verify_galois(const JoinSemilattice& s, CongruenceKind kind);

}  // namespace latgraph
