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

#include "latgraph/congruence.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <unordered_set>

#include "latgraph/error.hpp"
#include "latgraph/topology.hpp"

namespace latgraph {
namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), Index{0});
  }
  Index find(Index x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(Index a, Index b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a < b) std::swap(a, b);
    parent_[a] = b;
    return true;
  }
  std::vector<Index> labels() {
    std::vector<Index> out(parent_.size());
    for (Index i = 0; i < out.size(); ++i) out[i] = find(i);
    return out;
  }

 private:
  std::vector<Index> parent_;
};

const Lattice& require_lattice(const JoinSemilattice& s, const char* operation) {
  const auto* l = dynamic_cast<const Lattice*>(&s);
  if (l == nullptr) {
    throw Error(ErrorCode::KindMismatch,
                std::string(operation) + ": lattice congruences need a structure with meets");
  }
  return *l;
}

// Merges blocks until x ∨ c ≡ r ∨ c (and x ∧ c ≡ r ∧ c) for every element x
// with block root r; that is exactly compatibility.
void close_under_operations(const JoinSemilattice& s, const Lattice* lattice, UnionFind& uf) {
  const std::size_t n = s.size();
  bool changed = true;
  while (changed) {
    changed = false;
    for (Index x = 0; x < n; ++x) {
      const Index r = uf.find(x);
      if (r == x) continue;
      for (Index c = 0; c < n; ++c) {
        changed |= uf.unite(s.join(x, c), s.join(r, c));
        if (lattice != nullptr) changed |= uf.unite(lattice->meet(x, c), lattice->meet(r, c));
      }
    }
  }
}

}  // namespace

std::string_view to_string(CongruenceKind kind) noexcept {
  return kind == CongruenceKind::lattice ? "lattice" : "semilattice";
}

Congruence Congruence::identity(std::size_t n, CongruenceKind kind) {
  std::vector<Index> t(n);
  std::iota(t.begin(), t.end(), Index{0});
  return Congruence(std::move(t), n, kind);
}

Congruence Congruence::total(std::size_t n, CongruenceKind kind) {
  return Congruence(std::vector<Index>(n, 0), n == 0 ? 0 : 1, kind);
}

Congruence Congruence::from_labels(const std::vector<Index>& labels, CongruenceKind kind) {
  std::unordered_map<Index, Index> renumber;
  std::vector<Index> t(labels.size());
  for (Index i = 0; i < labels.size(); ++i) {
    auto [it, fresh] = renumber.emplace(labels[i], renumber.size());
    t[i] = it->second;
  }
  const std::size_t blocks = renumber.size();
  return Congruence(std::move(t), blocks, kind);
}

std::vector<ElementSet> Congruence::blocks() const {
  std::vector<ElementSet> out(block_count_, ElementSet(table_.size()));
  for (Index i = 0; i < table_.size(); ++i) out[table_[i]].insert(i);
  return out;
}

bool Congruence::refines(const Congruence& other) const {
  // Each block of this must sit inside one block of other; compare every
  // element against the first member of its block.
  std::vector<Index> first(block_count_, static_cast<Index>(-1));
  for (Index i = 0; i < table_.size(); ++i) {
    Index& f = first[table_[i]];
    if (f == static_cast<Index>(-1)) {
      f = i;
    } else if (other.table_[i] != other.table_[f]) {
      return false;
    }
  }
  return true;
}

std::string Congruence::describe(const Poset& p) const {
  std::string out;
  for (const auto& b : blocks()) out += p.describe(b);
  return out;
}

Congruence meet(const Congruence& a, const Congruence& b) {
  std::map<std::pair<Index, Index>, Index> pairs;
  std::vector<Index> labels(a.size());
  for (Index i = 0; i < a.size(); ++i) {
    auto [it, fresh] = pairs.emplace(std::pair{a.block_of(i), b.block_of(i)}, pairs.size());
    labels[i] = it->second;
  }
  return Congruence::from_labels(labels, a.kind());
}

Congruence join(const Congruence& a, const Congruence& b) {
  UnionFind uf(a.size());
  std::vector<Index> first_a(a.block_count(), static_cast<Index>(-1));
  std::vector<Index> first_b(b.block_count(), static_cast<Index>(-1));
  for (Index i = 0; i < a.size(); ++i) {
    Index& fa = first_a[a.block_of(i)];
    if (fa == static_cast<Index>(-1)) fa = i; else uf.unite(fa, i);
    Index& fb = first_b[b.block_of(i)];
    if (fb == static_cast<Index>(-1)) fb = i; else uf.unite(fb, i);
  }
  return Congruence::from_labels(uf.labels(), a.kind());
}

bool is_compatible(const JoinSemilattice& s, const Congruence& c) {
  const std::size_t n = s.size();
  if (c.size() != n) throw Error(ErrorCode::CarrierMismatch, "congruence over the wrong carrier");
  const Lattice* lattice =
      c.kind() == CongruenceKind::lattice ? &require_lattice(s, "is_compatible") : nullptr;
  std::vector<Index> first(c.block_count(), static_cast<Index>(-1));
  for (Index x = 0; x < n; ++x) {
    Index& r = first[c.block_of(x)];
    if (r == static_cast<Index>(-1)) {
      r = x;
      continue;
    }
    for (Index y = 0; y < n; ++y) {
      if (!c.related(s.join(x, y), s.join(r, y))) return false;
      if (lattice != nullptr && !c.related(lattice->meet(x, y), lattice->meet(r, y))) {
        return false;
      }
    }
  }
  return true;
}

bool preserves_existing_meets(const JoinSemilattice& s, const Congruence& c) {
  const std::size_t n = s.size();
  for (Index a = 0; a < n; ++a) {
    for (Index b = a + 1; b < n; ++b) {
      if (!c.related(a, b)) continue;
      for (Index x = 0; x < n; ++x) {
        const auto ma = partial_meet(s.order(), x, a);
        const auto mb = partial_meet(s.order(), x, b);
        if (ma && mb && !c.related(*ma, *mb)) return false;
      }
    }
  }
  return true;
}

Congruence principal_congruence(const JoinSemilattice& s, Index a, Index b,
                                CongruenceKind kind) {
  const std::size_t n = s.size();
  if (a >= n || b >= n) throw Error(ErrorCode::InvalidArgument, "element outside the carrier");
  const Lattice* lattice = kind == CongruenceKind::lattice
                               ? &require_lattice(s, "principal_congruence")
                               : nullptr;
  UnionFind uf(n);
  uf.unite(a, b);
  close_under_operations(s, lattice, uf);
  return Congruence::from_labels(uf.labels(), kind);
}

std::size_t ConLattice::TableHash::operator()(const std::vector<Index>& t) const noexcept {
  std::size_t h = t.size();
  for (Index x : t) h = h * 1000003u ^ std::hash<Index>{}(x);
  return h;
}

ConLattice::ConLattice(CongruenceKind kind, std::vector<Congruence> members)
    : kind_(kind), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end(), [](const Congruence& a, const Congruence& b) {
    if (a.block_count() != b.block_count()) return a.block_count() > b.block_count();
    return a.table() < b.table();
  });
  for (Index i = 0; i < members_.size(); ++i) {
    if (members_[i].kind() != kind) {
      throw Error(ErrorCode::KindMismatch, "congruence of the wrong kind in ConLattice");
    }
    if (!index_.emplace(members_[i].table(), i).second) {
      throw Error(ErrorCode::DuplicateMember, "congruence listed twice");
    }
  }
}

std::optional<Index> ConLattice::index_of(const Congruence& c) const {
  auto it = index_.find(c.table());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Index ConLattice::join(Index i, Index j) const {
  auto k = index_of(latgraph::join(members_.at(i), members_.at(j)));
  if (!k) throw std::logic_error("ConLattice::join left the congruence lattice");
  return *k;
}

Index ConLattice::meet(Index i, Index j) const {
  auto k = index_of(latgraph::meet(members_.at(i), members_.at(j)));
  if (!k) throw std::logic_error("ConLattice::meet left the congruence lattice");
  return *k;
}

Poset ConLattice::refinement_order(const Poset& carrier) const {
  const std::size_t m = members_.size();
  std::vector<std::string> names;
  names.reserve(m);
  for (const auto& c : members_) names.push_back(c.describe(carrier));
  std::vector<ElementSet> down(m, ElementSet(m));
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < m; ++j) {
      if (members_[j].refines(members_[i])) down[i].insert(j);
    }
  }
  return poset_from_down_sets(std::move(names), std::move(down));
}

ConLattice all_congruences(const JoinSemilattice& s, CongruenceKind kind) {
  const std::size_t n = s.size();
  if (kind == CongruenceKind::lattice) {
    require_lattice(s, "all_congruences");
    enforce_guard(n, 40, "all_congruences (lattice kind)");
  } else {
    enforce_guard(n, 16, "all_congruences (semilattice kind)");
  }

  struct Hash {
    std::size_t operator()(const std::vector<Index>& t) const noexcept {
      std::size_t h = t.size();
      for (Index x : t) h = h * 1000003u ^ std::hash<Index>{}(x);
      return h;
    }
  };
  std::unordered_set<std::vector<Index>, Hash> seen;
  std::vector<Congruence> found;
  std::vector<Congruence> principals;
  auto admit = [&](Congruence c) {
    if (!seen.insert(c.table()).second) return false;
    found.push_back(std::move(c));
    return true;
  };

  admit(Congruence::identity(n, kind));
  for (Index a = 0; a < n; ++a) {
    for (Index b = a + 1; b < n; ++b) {
      Congruence p = principal_congruence(s, a, b, kind);
      if (admit(p)) principals.push_back(std::move(p));
    }
  }
  // Every congruence of a finite algebra is a join of principal ones.
  for (std::size_t next = 0; next < found.size(); ++next) {
    for (const auto& p : principals) {
      if (admit(join(found[next], p))) {
        enforce_guard(found.size(), 4096, "all_congruences (congruence count)");
      }
    }
  }
  return ConLattice(kind, std::move(found));
}

Lattice con_as_lattice(const JoinSemilattice& s, const ConLattice& con) {
  // Structural checks on the result are cubic in its size.
  enforce_guard(con.size(), 512, "con_as_lattice (congruence count)");
  return build_lattice(build_semilattice(con.refinement_order(s.order())));
}

bool leq_theta(const JoinSemilattice& s, const Congruence& theta, Index a, Index b) {
  return theta.related(s.join(a, b), b);
}

ElementSet j_theta(const JoinSemilattice& s, const Congruence& theta) {
  ElementSet out(s.size());
  for (Index u : join_irreducibles(s)) {
    bool separated = true;
    for (Index x : s.order().down(u)) {
      if (x != u && theta.related(x, u)) {
        separated = false;
        break;
      }
    }
    if (separated) out.insert(u);
  }
  return out;
}

ElementSet j_bar_theta(const JoinSemilattice& s, const Congruence& theta) {
  ElementSet out(s.size());
  for (Index u : join_irreducibles(s)) {
    bool ok = true;
    for (Index x = 0; x < s.size() && ok; ++x) {
      ok = !leq_theta(s, theta, u, x) || s.leq(u, x);
    }
    if (ok) out.insert(u);
  }
  return out;
}

Congruence congruence_from_hereditary(const JoinSemilattice& s, const DepGraph& g,
                                      const ElementSet& h, CongruenceKind kind) {
  if (!is_hereditary(g, h)) {
    throw Error(ErrorCode::NotHereditary, "set is not hereditary in the dependency graph");
  }
  std::map<ElementSet, Index> signature;
  std::vector<Index> labels(s.size());
  for (Index a = 0; a < s.size(); ++a) {
    auto [it, fresh] = signature.emplace(s.order().down(a) & h, signature.size());
    labels[a] = it->second;
  }
  return Congruence::from_labels(labels, kind);
}

Congruence congruence_from_hereditary(const JoinSemilattice& s, const ElementSet& h,
                                      CongruenceKind kind) {
  return congruence_from_hereditary(s, dependency_graph(s), h, kind);
}

ElementSet galois_F(const JoinSemilattice& s, const DepGraph& g, const Congruence& theta) {
  if (theta.kind() == CongruenceKind::lattice) return j_theta(s, theta);
  return hereditary_interior(g, j_bar_theta(s, theta));
}

ElementSet galois_F(const JoinSemilattice& s, const Congruence& theta) {
  return galois_F(s, dependency_graph(s), theta);
}

Congruence galois_G(const JoinSemilattice& s, const DepGraph& g, const ElementSet& h,
                    CongruenceKind kind) {
  return congruence_from_hereditary(s, g, h, kind);
}

void LawCheck::record(bool ok, const std::function<std::string()>& witness) {
  ++checked;
  if (ok) return;
  ++violations;
  if (counterexamples.size() < 5) counterexamples.push_back(witness());
}

std::size_t GaloisReport::counterexample_count() const {
  std::size_t c = 0;
  for (const auto& law : laws) c += law.violations;
  return c;
}

GaloisReport verify_galois(const JoinSemilattice& s, CongruenceKind kind) {
  GaloisReport r;
  r.kind = kind;
  const Poset& p = s.order();
  const DepGraph g = dependency_graph(s);
  const HereditaryFamily herd = all_hereditary(g);
  const ConLattice con = all_congruences(s, kind);
  r.hereditary = herd.members();
  r.congruences = con.members();
  r.particle = is_particle(s);

  std::vector<Congruence> g_of;
  for (const auto& h : herd) {
    g_of.push_back(galois_G(s, g, h, kind));
    r.g_images.push_back(con.index_of(g_of.back()));
  }
  for (const auto& theta : con) r.f_images.push_back(galois_F(s, g, theta));

  const auto name_h = [&](const ElementSet& h) { return p.describe(h); };
  const auto name_c = [&](const Congruence& c) { return c.describe(p); };

  LawCheck lands_f{"F(Θ) is hereditary"};
  for (Index i = 0; i < con.size(); ++i) {
    lands_f.record(is_hereditary(g, r.f_images[i]),
                   [&] { return "F(" + name_c(con[i]) + ") = " + name_h(r.f_images[i]); });
  }
  LawCheck lands_g{"G(H) is a congruence of the requested kind"};
  for (Index j = 0; j < herd.size(); ++j) {
    lands_g.record(r.g_images[j].has_value() && is_compatible(s, g_of[j]),
                   [&] { return "G(" + name_h(herd[j]) + ") = " + name_c(g_of[j]); });
  }

  LawCheck antitone_f{"F is antitone"};
  for (Index i = 0; i < con.size(); ++i) {
    for (Index k = 0; k < con.size(); ++k) {
      if (!con.leq(i, k)) continue;
      antitone_f.record(r.f_images[k].is_subset_of(r.f_images[i]), [&] {
        return name_c(con[i]) + " ⊆ " + name_c(con[k]) + " but F grows";
      });
    }
  }
  LawCheck antitone_g{"G is antitone"};
  for (Index a = 0; a < herd.size(); ++a) {
    for (Index b = 0; b < herd.size(); ++b) {
      if (!herd[a].is_subset_of(herd[b])) continue;
      antitone_g.record(g_of[b].refines(g_of[a]), [&] {
        return name_h(herd[a]) + " ⊆ " + name_h(herd[b]) + " but G grows";
      });
    }
  }

  LawCheck adjunction{"Θ ⊆ G(H) iff H ⊆ F(Θ)"};
  for (Index i = 0; i < con.size(); ++i) {
    for (Index j = 0; j < herd.size(); ++j) {
      const bool left = con[i].refines(g_of[j]);
      const bool right = herd[j].is_subset_of(r.f_images[i]);
      adjunction.record(left == right, [&] {
        return "Θ = " + name_c(con[i]) + ", H = " + name_h(herd[j]);
      });
    }
  }

  LawCheck unit{"Θ ⊆ GF(Θ)"};
  std::vector<Congruence> gf;
  for (Index i = 0; i < con.size(); ++i) {
    gf.push_back(galois_G(s, g, r.f_images[i], kind));
    unit.record(con[i].refines(gf.back()), [&] { return "Θ = " + name_c(con[i]); });
  }
  LawCheck counit{"H ⊆ FG(H)"};
  std::vector<ElementSet> fg;
  for (Index j = 0; j < herd.size(); ++j) {
    fg.push_back(galois_F(s, g, g_of[j]));
    counit.record(herd[j].is_subset_of(fg.back()), [&] { return "H = " + name_h(herd[j]); });
  }

  r.gf_is_identity = true;
  for (Index i = 0; i < con.size(); ++i) r.gf_is_identity &= gf[i] == con[i];

  r.laws = {lands_f, lands_g, antitone_f, antitone_g, adjunction, unit, counit};

  if (kind == CongruenceKind::lattice) {
    const Lattice& lattice = require_lattice(s, "verify_galois");
    for (const auto& h : herd) {
      if (closure(lattice, h) == h) r.closed_hereditary.push_back(h);
    }
    if (r.particle) {
      LawCheck gf_id{"GF = id on Con(L)"};
      for (Index i = 0; i < con.size(); ++i) {
        gf_id.record(gf[i] == con[i], [&] {
          return "Θ = " + name_c(con[i]) + ", GF(Θ) = " + name_c(gf[i]);
        });
      }
      r.laws.push_back(gf_id);
    } else {
      r.notes.push_back("structure is not particle; GF = id not required");
    }
    LawCheck fg_id{"FG = id on closed hereditary sets"};
    r.fg_is_identity_on_closed = true;
    for (Index j = 0; j < herd.size(); ++j) {
      if (closure(lattice, herd[j]) != herd[j]) continue;
      const bool ok = fg[j] == herd[j];
      r.fg_is_identity_on_closed &= ok;
      fg_id.record(ok, [&] { return "H = " + name_h(herd[j]) + ", FG(H) = " + name_h(fg[j]); });
    }
    r.laws.push_back(fg_id);
  } else {
    r.fg_is_identity_on_closed = true;
    for (Index j = 0; j < herd.size(); ++j) r.fg_is_identity_on_closed &= fg[j] == herd[j];
    r.notes.push_back(
        "semilattice kind: the topology is not applied; FG is evaluated on all hereditary sets");
    if (!r.gf_is_identity) {
      r.notes.push_back("GF is not the identity on semilattice congruences (" +
                        std::to_string(con.size()) + " congruences, " +
                        std::to_string(herd.size()) + " hereditary sets)");
    }
  }
  r.notes.push_back("finite carrier: DCC holds, so particle reduces to join-generation by J(S)");
  return r;
}

}  // namespace latgraph
