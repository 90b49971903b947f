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

#include <doctest.h>

#include "fixtures.hpp"
#include "latgraph/topology.hpp"

using namespace latgraph;
using fixtures::code_of;
using fixtures::named;

TEST_CASE("neighbourhoods") {
  const Lattice m = fixtures::lattice("m3");
  const Poset& p = m.order();
  const Index u = p.index_of("u");
  CHECK(neighborhood(m, u, m.zero()) == named(p, {"u"}));
  CHECK(code_of([&] { neighborhood(m, p.index_of("1"), u); }) == ErrorCode::BadPair);
  CHECK(code_of([&] { neighborhood(m, u, p.index_of("v")); }) == ErrorCode::BadPair);
  CHECK(code_of([&] { neighborhood(m, u, u); }) == ErrorCode::BadPair);

  const Lattice c = fixtures::lattice("chain_4");
  const Poset& q = c.order();
  CHECK(neighborhood(c, q.index_of("3"), q.index_of("0")) == named(q, {"1", "2", "3"}));
  CHECK(neighborhood(c, q.index_of("3"), q.index_of("2")) == named(q, {"3"}));
}

TEST_CASE("closure on finite lattices is the identity") {
  const Lattice n = fixtures::lattice("n5");
  const ElementSet j = join_irreducibles(n);
  CHECK(closure(n, ElementSet(5)).empty());
  CHECK(closure(n, j) == j);
  CHECK(closure(n, named(n.order(), {"b"})) == named(n.order(), {"b"}));
  CHECK(is_discrete(n));
  CHECK(is_discrete(fixtures::lattice("m3")));
  CHECK(is_discrete(fixtures::lattice("bool_3")));
  CHECK(is_open(n, named(n.order(), {"a", "b"})));
  CHECK_FALSE(is_open(n, named(n.order(), {"1"})));
}

TEST_CASE("closed hereditary sets") {
  const Lattice m = fixtures::lattice("m3");
  const auto cm = closed_hereditary(m);
  CHECK(cm.size() == 2);
  CHECK(cm.contains(named(m.order(), {"u", "v", "w"})));
  CHECK(closed_hereditary(fixtures::lattice("bool_2")).size() == 4);
  CHECK(closed_hereditary(fixtures::lattice("n5")).size() == 5);
}

TEST_CASE("topology laws hold on every catalog lattice") {
  for (const auto& name : fixtures::catalog_instances()) {
    const Structure s = catalog(name);
    const Lattice l = build_lattice(*s.semilattice());
    const TopologyReport r = verify_topology(l);
    CHECK_MESSAGE(r.passed(), name);
    CHECK(r.discrete);
    const auto basis = neighborhood_basis(l);
    for (const auto& at : basis.at) {
      for (std::size_t k = 0; k < at.sets.size(); ++k) {
        CHECK(at.sets[k] == neighborhood(l, at.point, at.below[k]));
      }
    }
  }
}

TEST_CASE("main theorem on the catalog") {
  for (const auto& name : fixtures::catalog_instances()) {
    const Lattice l = build_lattice(*catalog(name).semilattice());
    const GaloisReport r = verify_main_theorem(l);
    CHECK_MESSAGE(r.passed(), name);
    CHECK(r.congruences.size() == r.closed_hereditary.size());
  }
  const GaloisReport n5 = verify_main_theorem(fixtures::lattice("n5"));
  CHECK(n5.congruences.size() == 5);
  CHECK(n5.closed_hereditary.size() == 5);
}

TEST_CASE("strong distributivity") {
  CHECK_FALSE(is_strongly_distributive(fixtures::lattice("m3")));
  CHECK_FALSE(is_strongly_distributive(fixtures::lattice("n5")));
  CHECK(is_strongly_distributive(fixtures::lattice("bool_3")));
  CHECK(is_strongly_distributive(fixtures::lattice("chain_4")));
  const std::vector<std::pair<std::string, std::string>> none;
  const Poset anti = build_poset({"a", "b", "c"}, none);
  CHECK(is_strongly_distributive(build_lattice(build_semilattice(order_ideals(anti)))));

  for (const auto& name : fixtures::catalog_instances()) {
    const Lattice l = build_lattice(*catalog(name).semilattice());
    CHECK(is_strongly_distributive(l) == is_distributive(l));
    const Lattice con = con_as_lattice(l, all_congruences(l, CongruenceKind::lattice));
    CHECK_MESSAGE(is_strongly_distributive(con), name);
  }
}

TEST_CASE("strong distributivity of random order-ideal lattices") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Structure s = random_structure(seed, 1 + seed % 7, StructureKind::poset);
    const Lattice l = build_lattice(build_semilattice(order_ideals(s.order())));
    CHECK(is_strongly_distributive(l));
    CHECK(is_distributive(l));
  }
}

TEST_CASE("basic neighbourhoods at a point are directed, not intersection-closed") {
  // M3 with a new top t: t is join-irreducible with lower cover 1.
  const std::vector<std::pair<std::string, std::string>> covers{
      {"0", "p"}, {"0", "q"}, {"0", "r"}, {"p", "1"}, {"q", "1"}, {"r", "1"}, {"1", "t"}};
  const Lattice l =
      build_lattice(build_semilattice(build_poset({"0", "p", "q", "r", "1", "t"}, covers)));
  const Poset& o = l.order();
  const Index t = o.index_of("t");
  const ElementSet vp = neighborhood(l, t, o.index_of("p"));
  const ElementSet vq = neighborhood(l, t, o.index_of("q"));
  const ElementSet v1 = neighborhood(l, t, o.index_of("1"));
  CHECK((vp & vq) == named(o, {"r", "t"}));
  CHECK(v1 == named(o, {"t"}));
  CHECK(v1.is_subset_of(vp & vq));
  CHECK(verify_topology(l).passed());
}
