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

#include "latgraph/topology.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "latgraph/error.hpp"

namespace latgraph {

ElementSet neighborhood(const Lattice& l, Index v, Index x) {
  const std::size_t n = l.size();
  if (v >= n || x >= n) throw Error(ErrorCode::BadPair, "element outside the carrier");
  const ElementSet j = join_irreducibles(l);
  if (!j.contains(v)) {
    throw Error(ErrorCode::BadPair, "V(v,x) needs v join-irreducible, got " + l.order().name(v));
  }
  if (!l.less(x, v)) {
    throw Error(ErrorCode::BadPair,
                "V(v,x) needs x < v, got " + l.order().name(x) + ", " + l.order().name(v));
  }
  return (l.order().down(v) - l.order().down(x)) & j;
}

NeighborhoodBasis neighborhood_basis(const Lattice& l) {
  const ElementSet j = join_irreducibles(l);
  NeighborhoodBasis b;
  for (Index v : j) {
    BasisAt at;
    at.point = v;
    for (Index x : l.order().down(v)) {
      if (x == v) continue;
      at.below.push_back(x);
      at.sets.push_back((l.order().down(v) - l.order().down(x)) & j);
    }
    b.at.push_back(std::move(at));
  }
  return b;
}

ElementSet closure(const Lattice& l, const NeighborhoodBasis& basis, const ElementSet& x) {
  ElementSet out(l.size());
  for (const auto& at : basis.at) {
    const bool adherent = std::all_of(at.sets.begin(), at.sets.end(),
                                      [&](const ElementSet& v) { return v.intersects(x); });
    if (adherent) out.insert(at.point);
  }
  return out;
}

ElementSet closure(const Lattice& l, const ElementSet& x) {
  return closure(l, neighborhood_basis(l), x);
}

bool is_open(const Lattice& l, const ElementSet& u) {
  const NeighborhoodBasis basis = neighborhood_basis(l);
  for (const auto& at : basis.at) {
    if (!u.contains(at.point)) continue;
    const bool interior = std::any_of(at.sets.begin(), at.sets.end(),
                                      [&](const ElementSet& v) { return v.is_subset_of(u); });
    if (!interior) return false;
  }
  return (u - join_irreducibles(l)).empty();
}

bool is_discrete(const Lattice& l) {
  for (const auto& at : neighborhood_basis(l).at) {
    const bool singleton = std::any_of(at.sets.begin(), at.sets.end(),
                                       [](const ElementSet& v) { return v.count() == 1; });
    if (!singleton) return false;
  }
  return true;
}

HereditaryFamily closed_hereditary(const Lattice& l, const DepGraph& g) {
  enforce_guard(g.vertices().count(), 20, "closed_hereditary");
  const NeighborhoodBasis basis = neighborhood_basis(l);
  std::vector<ElementSet> out;
  for (const auto& h : all_hereditary(g)) {
    if (closure(l, basis, h) == h) out.push_back(h);
  }
  return HereditaryFamily(std::move(out));
}

HereditaryFamily closed_hereditary(const Lattice& l) {
  return closed_hereditary(l, dependency_graph(l));
}

bool TopologyReport::passed() const {
  return discrete && std::all_of(laws.begin(), laws.end(),
                                 [](const LawCheck& c) { return c.passed(); });
}

namespace {

std::vector<ElementSet> sample_subsets(const ElementSet& j, std::size_t n) {
  const std::vector<Index> pts = j.indices();
  std::vector<ElementSet> out;
  if (pts.size() <= 8) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pts.size()); ++mask) {
      ElementSet s(n);
      for (std::size_t k = 0; k < pts.size(); ++k) {
        if ((mask >> k) & 1u) s.insert(pts[k]);
      }
      out.push_back(std::move(s));
    }
    return out;
  }
  std::mt19937_64 rng(0x5eed0000u + n);
  out.push_back(ElementSet(n));
  out.push_back(j);
  while (out.size() < 256) {
    ElementSet s(n);
    for (Index p : pts) {
      if (rng() & 1u) s.insert(p);
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

TopologyReport verify_topology(const Lattice& l) {
  TopologyReport r;
  const Poset& p = l.order();
  const ElementSet j = join_irreducibles(l);
  const NeighborhoodBasis basis = neighborhood_basis(l);
  r.discrete = is_discrete(l);

  LawCheck nonempty{"every point has a basic neighbourhood"};
  LawCheck member{"v ∈ V(v,x)"};
  LawCheck directed{"V(v,y1∨y2) ⊆ V(v,y1) ∩ V(v,y2) with y1∨y2 < v"};
  LawCheck shrink{"u ∈ V(v,x) implies V(u,u∧x) ⊆ V(v,x)"};
  LawCheck meets{"u ∈ V(v1,x1) ∩ V(v2,x2) implies V(u,(u∧x1)∨(u∧x2)) ⊆ V(v1,x1) ∩ V(v2,x2)"};
  LawCheck t1{"⋂ V(v,·) = {v}"};
  LawCheck clopen{"basic neighbourhoods are closed"};

  struct Basic {
    Index v;
    Index x;
    const ElementSet* set;
  };
  std::vector<Basic> all_basic;
  std::vector<Index> slot(l.size(), 0);
  for (Index k = 0; k < basis.at.size(); ++k) slot[basis.at[k].point] = k;
  // Basic set V(u, y) looked up in the precomputed basis; y < u is checked by the caller.
  const auto basic = [&](Index u, Index y) -> const ElementSet& {
    const BasisAt& at = basis.at[slot[u]];
    const auto it = std::find(at.below.begin(), at.below.end(), y);
    return at.sets[it - at.below.begin()];
  };

  for (const auto& at : basis.at) {
    const std::string v = p.name(at.point);
    nonempty.record(!at.sets.empty(), [&] { return v + " has no element below it"; });
    ElementSet inter = j;
    for (std::size_t a = 0; a < at.sets.size(); ++a) {
      const std::string x = p.name(at.below[a]);
      all_basic.push_back({at.point, at.below[a], &at.sets[a]});
      member.record(at.sets[a].contains(at.point), [&] { return "V(" + v + "," + x + ")"; });
      clopen.record(closure(l, basis, at.sets[a]) == at.sets[a],
                    [&] { return "V(" + v + "," + x + ")"; });
      inter &= at.sets[a];
      for (std::size_t b = a + 1; b < at.sets.size(); ++b) {
        const Index y = l.join(at.below[a], at.below[b]);
        const bool ok = l.less(y, at.point) &&
                        basic(at.point, y).is_subset_of(at.sets[a] & at.sets[b]);
        directed.record(ok, [&] {
          return "v = " + v + ", y1 = " + x + ", y2 = " + p.name(at.below[b]);
        });
      }
      for (Index u : at.sets[a]) {
        const Index ux = l.meet(u, at.below[a]);
        shrink.record(l.less(ux, u) && basic(u, ux).is_subset_of(at.sets[a]), [&] {
          return "u = " + p.name(u) + " in V(" + v + "," + x + ")";
        });
      }
    }
    ElementSet single(l.size());
    single.insert(at.point);
    t1.record(inter == single, [&] { return v + ": " + p.describe(inter); });
  }
  for (std::size_t a = 0; a < all_basic.size(); ++a) {
    for (std::size_t b = a; b < all_basic.size(); ++b) {
      const ElementSet both = *all_basic[a].set & *all_basic[b].set;
      for (Index u : both) {
        const Index y = l.join(l.meet(u, all_basic[a].x), l.meet(u, all_basic[b].x));
        meets.record(l.less(y, u) && basic(u, y).is_subset_of(both), [&] {
          return "u = " + p.name(u) + " in V(" + p.name(all_basic[a].v) + "," +
                 p.name(all_basic[a].x) + ") ∩ V(" + p.name(all_basic[b].v) + "," +
                 p.name(all_basic[b].x) + ")";
        });
      }
    }
  }

  LawCheck empty_closed{"cl(∅) = ∅"};
  empty_closed.record(closure(l, basis, ElementSet(l.size())).empty(), [] { return "cl(∅)"; });
  LawCheck inflationary{"X ⊆ cl(X)"};
  LawCheck idempotent{"cl(cl(X)) = cl(X)"};
  LawCheck monotone{"X ⊆ Y implies cl(X) ⊆ cl(Y)"};
  LawCheck unions{"cl(X ∪ Y) = cl(X) ∪ cl(Y)"};
  const std::vector<ElementSet> subsets = sample_subsets(j, l.size());
  std::vector<ElementSet> cl;
  cl.reserve(subsets.size());
  for (const auto& x : subsets) cl.push_back(closure(l, basis, x));
  for (std::size_t a = 0; a < subsets.size(); ++a) {
    const auto name_x = [&] { return "X = " + p.describe(subsets[a]); };
    inflationary.record(subsets[a].is_subset_of(cl[a]), name_x);
    idempotent.record(closure(l, basis, cl[a]) == cl[a], name_x);
    for (std::size_t b = 0; b < subsets.size(); ++b) {
      const auto name_xy = [&] {
        return "X = " + p.describe(subsets[a]) + ", Y = " + p.describe(subsets[b]);
      };
      if (subsets[a].is_subset_of(subsets[b])) {
        monotone.record(cl[a].is_subset_of(cl[b]), name_xy);
      }
      if (a < b) {
        unions.record(closure(l, basis, subsets[a] | subsets[b]) == (cl[a] | cl[b]), name_xy);
      }
    }
  }
  LawCheck discrete{"every {v} is open"};
  discrete.record(r.discrete, [] { return "some point has no singleton neighbourhood"; });
  r.laws = {nonempty,     member,     directed, shrink, meets,  t1,
            clopen,       empty_closed, inflationary, idempotent, monotone, unions, discrete};
  return r;
}

GaloisReport verify_main_theorem(const Lattice& l) {
  GaloisReport r = verify_galois(l, CongruenceKind::lattice);
  const Poset& p = l.order();
  const ElementSet j = join_irreducibles(l);
  const std::vector<ElementSet>& closed = r.closed_hereditary;
  const std::size_t m = r.congruences.size();

  LawCheck image{"image(F) = closed hereditary sets"};
  const std::set<ElementSet> f_set(r.f_images.begin(), r.f_images.end());
  const std::set<ElementSet> cl_set(closed.begin(), closed.end());
  for (const auto& h : cl_set) {
    image.record(f_set.count(h) == 1, [&] { return p.describe(h) + " is not F of anything"; });
  }
  for (const auto& h : f_set) {
    image.record(cl_set.count(h) == 1, [&] { return p.describe(h) + " is not closed"; });
  }

  LawCheck injective{"F is injective"};
  injective.record(f_set.size() == m, [&] {
    return std::to_string(m) + " congruences, " + std::to_string(f_set.size()) + " images";
  });

  LawCheck reversing{"Θ ⊆ Ψ iff F(Ψ) ⊆ F(Θ)"};
  for (Index a = 0; a < m; ++a) {
    for (Index b = 0; b < m; ++b) {
      const bool left = r.congruences[a].refines(r.congruences[b]);
      const bool right = r.f_images[b].is_subset_of(r.f_images[a]);
      reversing.record(left == right, [&] {
        return "Θ = " + r.congruences[a].describe(p) + ", Ψ = " + r.congruences[b].describe(p);
      });
    }
  }

  // Con(L) is isomorphic to the open co-hereditary sets via Θ ↦ J \ F(Θ).
  LawCheck open_cohereditary{"Θ ↦ J \\ F(Θ) is onto the open co-hereditary sets"};
  std::set<ElementSet> open_co;
  for (const auto& h : r.hereditary) {
    const ElementSet u = j - h;
    if (is_open(l, u)) open_co.insert(u);
  }
  std::set<ElementSet> complements;
  for (const auto& f : r.f_images) complements.insert(j - f);
  open_cohereditary.record(open_co == complements && complements.size() == m, [&] {
    return std::to_string(open_co.size()) + " open co-hereditary sets, " +
           std::to_string(complements.size()) + " complements of F-images";
  });

  r.laws.push_back(image);
  r.laws.push_back(injective);
  r.laws.push_back(reversing);
  r.laws.push_back(open_cohereditary);
  if (is_discrete(l)) r.notes.push_back("topology is discrete: every hereditary set is closed");
  return r;
}

bool is_strongly_distributive(const Lattice& l) {
  // On a finite lattice, distributivity is J(L) = P(L); every element must
  // then also be the join of the join-primes below it.
  const ElementSet primes = join_primes(l);
  if (join_irreducibles(l) != primes) return false;
  for (Index a = 0; a < l.size(); ++a) {
    if (l.join_of(l.order().down(a) & primes) != a) return false;
  }
  return true;
}

}  // namespace latgraph
