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

#include <random>

#include "fixtures.hpp"
#include "latgraph/semilattice.hpp"
#include "oracles.hpp"

using namespace latgraph;
using fixtures::code_of;
using fixtures::named;

namespace {

using Pairs = std::vector<std::pair<std::string, std::string>>;

std::set<oracle::Mask> masks(const FamilyOfSubsets& f) {
  std::set<oracle::Mask> out;
  for (const auto& m : f) out.insert(m.to_mask());
  return out;
}

std::vector<Index> as_vector(const ElementSet& s) { return s.indices(); }

// Catalog instances plus seeded random ones of both kinds.
std::vector<JoinSemilattice> corpus(std::size_t random_count, std::size_t max_size) {
  std::vector<JoinSemilattice> out;
  for (const auto& n : fixtures::catalog_instances()) out.push_back(*catalog(n).semilattice());
  for (std::size_t k = 0; k < random_count; ++k) {
    const auto kind = k % 2 == 0 ? StructureKind::lattice : StructureKind::semilattice;
    out.push_back(*random_structure(1000 + k, 1 + k % max_size, kind).semilattice());
  }
  return out;
}

}  // namespace

TEST_CASE("building semilattices") {
  const JoinSemilattice c = fixtures::semilattice("chain_3");
  CHECK(c.join(0, 2) == 2);
  CHECK(c.zero() == 0);

  const Pairs none;
  CHECK(code_of([&] { build_semilattice(build_poset({"a", "b"}, none)); }) ==
        ErrorCode::NoZero);
  CHECK(code_of([&] { build_semilattice(build_poset({}, none)); }) == ErrorCode::NoZero);
  const Pairs bowtie{{"0", "a"}, {"0", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}};
  CHECK(code_of([&] { build_semilattice(build_poset({"0", "a", "b", "c", "d"}, bowtie)); }) ==
        ErrorCode::NoJoin);

  const JoinSemilattice f = fixtures::semilattice("fig1");
  const Poset& p = f.order();
  CHECK(f.size() == 7);
  CHECK(p.name(f.join(p.index_of("u"), p.index_of("x"))) == "1");
  CHECK(p.name(f.join(p.index_of("x"), p.index_of("v"))) == "a");
  CHECK(f.join_of(ElementSet(7)) == f.zero());
}

TEST_CASE("building lattices") {
  const Lattice b = fixtures::lattice("bool_2");
  const Poset& p = b.order();
  CHECK(p.name(b.meet(p.index_of("a"), p.index_of("b"))) == "0");
  CHECK(p.name(b.meet(p.index_of("ab"), p.index_of("b"))) == "b");
  const Lattice m = fixtures::lattice("m3");
  CHECK(m.order().name(m.meet(m.order().index_of("u"), m.order().index_of("v"))) == "0");
  CHECK(m.order().name(m.top()) == "1");
  CHECK(m.meet_of(ElementSet(5)) == m.top());
}

TEST_CASE("partial meets in a poset without a lattice structure") {
  const Pairs bowtie{{"0", "a"}, {"0", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}};
  const Poset p = build_poset({"0", "a", "b", "c", "d"}, bowtie);
  CHECK_FALSE(partial_meet(p, p.index_of("c"), p.index_of("d")).has_value());
  CHECK(partial_meet(p, p.index_of("a"), p.index_of("b")) == p.index_of("0"));
}

TEST_CASE("join-irreducibles, join-primes and atoms") {
  const JoinSemilattice m = fixtures::semilattice("m3");
  CHECK(join_irreducibles(m) == named(m.order(), {"u", "v", "w"}));
  CHECK(join_primes(m).empty());
  CHECK(atoms(m) == named(m.order(), {"u", "v", "w"}));
  CHECK(is_atomistic(m));

  const JoinSemilattice c = fixtures::semilattice("chain_4");
  CHECK(join_irreducibles(c) == named(c.order(), {"1", "2", "3"}));
  CHECK(join_primes(c) == named(c.order(), {"1", "2", "3"}));
  CHECK_FALSE(is_atomistic(fixtures::semilattice("chain_3")));

  const JoinSemilattice f = fixtures::semilattice("fig1");
  CHECK(join_irreducibles(f) == named(f.order(), {"u", "x", "v", "w"}));

  const JoinSemilattice b = fixtures::semilattice("bool_3");
  CHECK(join_primes(b) == named(b.order(), {"a", "b", "c"}));
  CHECK(is_atomistic(b));

  CHECK(is_particle(fixtures::semilattice("chain_1")));
  CHECK(is_particle(m));
}

TEST_CASE("minimal I-covers") {
  const JoinSemilattice m = fixtures::semilattice("m3");
  const Poset& p = m.order();
  const Index top = p.index_of("1");
  const auto covers = minimal_i_covers(m, top, named(p, {"u", "v", "w"}));
  CHECK(masks(covers) == std::set<oracle::Mask>{named(p, {"u", "v"}).to_mask(),
                                                named(p, {"u", "w"}).to_mask(),
                                                named(p, {"v", "w"}).to_mask()});
  CHECK(masks(minimal_join_covers(m, top)) == masks(covers));
  CHECK(masks(minimal_i_covers(m, m.zero(), named(p, {"u"}))) == std::set<oracle::Mask>{0});
  CHECK(code_of([&] { minimal_i_covers(m, top, named(p, {"u"})); }) == ErrorCode::NoCover);

  const JoinSemilattice f = fixtures::semilattice("fig1");
  const Poset& q = f.order();
  // u∨x = u∨v = 1 lies above a, and nothing in ↓{u,x} or ↓{u,v} covers a more finely.
  CHECK(masks(minimal_i_covers(f, q.index_of("a"), join_irreducibles(f))) ==
        std::set<oracle::Mask>{named(q, {"x", "v"}).to_mask(), named(q, {"u", "x"}).to_mask(),
                               named(q, {"u", "v"}).to_mask()});
  CHECK(masks(minimal_join_covers(f, q.index_of("a"))) ==
        oracle::minimal_join_covers(q, q.index_of("a")));

  const JoinSemilattice c = fixtures::semilattice("chain_4");
  CHECK(masks(minimal_join_covers(c, 3)) == std::set<oracle::Mask>{1u << 3});
}

TEST_CASE("weak minimal join-cover refinement") {
  for (const char* n : {"m3", "fig1", "chain_5", "n5"}) {
    const auto r = has_wmjcrp(fixtures::semilattice(n));
    CHECK(r.holds);
    CHECK(r.verified_constructively);
  }
  const auto big = has_wmjcrp(fixtures::semilattice("chain_20"));
  CHECK(big.holds);
  CHECK_FALSE(big.verified_constructively);
}

TEST_CASE("lattice predicates on the catalog") {
  const auto m3 = fixtures::semilattice("m3");
  const auto n5 = fixtures::semilattice("n5");
  const auto b3 = fixtures::semilattice("bool_3");
  const auto c3 = fixtures::semilattice("chain_3");
  CHECK_FALSE(is_distributive(m3));
  CHECK(is_modular(m3));
  CHECK(is_relatively_complemented(m3));
  CHECK_FALSE(is_distributive(n5));
  CHECK_FALSE(is_modular(n5));
  CHECK(is_distributive(b3));
  CHECK(is_modular(b3));
  CHECK(is_relatively_complemented(b3));
  CHECK(is_distributive(c3));
  CHECK_FALSE(is_relatively_complemented(c3));
  CHECK_FALSE(is_distributive(fixtures::semilattice("fig1")));
}

TEST_CASE("distributivity criteria agree on lattices") {
  for (const auto& n : fixtures::catalog_instances()) {
    const Structure s = catalog(n);
    if (const Lattice* l = s.lattice()) {
      bool identity = true;
      for (Index a = 0; a < l->size(); ++a) {
        for (Index b = 0; b < l->size(); ++b) {
          for (Index c = 0; c < l->size(); ++c) {
            identity = identity && l->meet(a, l->join(b, c)) ==
                                       l->join(l->meet(a, b), l->meet(a, c));
          }
        }
      }
      CHECK_MESSAGE(is_distributive(*l) == identity, n);
    }
  }
}

TEST_CASE("join tables match least upper bounds recomputed from the order") {
  for (const auto& s : corpus(60, 12)) {
    const Poset& p = s.order();
    for (Index a = 0; a < s.size(); ++a) {
      for (Index b = 0; b < s.size(); ++b) REQUIRE(s.join(a, b) == *oracle::lub(p, a, b));
    }
  }
}

TEST_CASE("irreducibles and primes agree with their subset definitions") {
  for (const auto& s : corpus(60, 10)) {
    const ElementSet j = join_irreducibles(s);
    const ElementSet pr = join_primes(s);
    CHECK(as_vector(j) == oracle::join_irreducibles(s.order()));
    CHECK(as_vector(pr) == oracle::join_primes(s.order()));
    CHECK(pr.is_subset_of(j));
    CHECK(is_particle(s));
    CHECK((pr == j) == is_distributive(s));
    if (is_distributive(s)) CHECK(is_modular(s));
  }
}

TEST_CASE("minimal join-covers agree with the brute-force minimality check") {
  for (const auto& s : corpus(40, 8)) {
    const ElementSet j = join_irreducibles(s);
    for (Index a = 0; a < s.size(); ++a) {
      const auto covers = minimal_join_covers(s, a);
      for (const auto& m : covers) {
        CHECK(is_antichain(s.order(), m));
        CHECK(m.is_subset_of(j));
        CHECK(s.leq(a, s.join_of(m)));
      }
      CHECK(masks(covers) == oracle::minimal_join_covers(s.order(), a));
    }
  }
}
