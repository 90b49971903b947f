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
#include "latgraph/depgraph.hpp"
#include "oracles.hpp"

using namespace latgraph;
using fixtures::code_of;
using fixtures::named;

namespace {

std::set<std::pair<Index, Index>> edge_set(const DepGraph& g) {
  const auto e = g.edges();
  return {e.begin(), e.end()};
}

std::set<oracle::Mask> masks(const HereditaryFamily& f) {
  std::set<oracle::Mask> out;
  for (const auto& h : f) out.insert(h.to_mask());
  return out;
}

}  // namespace

TEST_CASE("dependency graph of M3 is complete with loops") {
  const auto m = fixtures::semilattice("m3");
  const DepGraph g = dependency_graph(m);
  CHECK(g.vertices() == named(m.order(), {"u", "v", "w"}));
  CHECK(g.edge_count() == 9);
  CHECK(g.is_symmetric());
  CHECK_FALSE(g.loops_only());
  CHECK(g == edges_via_min_covers(m));
}

TEST_CASE("dependency graph of the fig1 instance") {
  const auto f = fixtures::semilattice("fig1");
  const Poset& p = f.order();
  const DepGraph g = dependency_graph(f);
  CHECK(g.has_edge(p.index_of("u"), p.index_of("w")));
  CHECK(g.has_edge(p.index_of("v"), p.index_of("u")));
  for (Index u : g.vertices()) CHECK(g.has_edge(u, u));
}

TEST_CASE("dependency graph of N5") {
  const auto n = fixtures::semilattice("n5");
  const Poset& p = n.order();
  const DepGraph g = edges_via_min_covers(n);
  const Index a = p.index_of("a"), b = p.index_of("b"), c = p.index_of("c");
  CHECK(edge_set(g) == std::set<std::pair<Index, Index>>{{a, a}, {b, b}, {c, c}, {b, a}, {b, c}});
  CHECK(g == dependency_graph(n));
}

TEST_CASE("distributive structures have loops only") {
  CHECK(dependency_graph(fixtures::semilattice("chain_5")).loops_only());
  CHECK(edges_via_min_covers(fixtures::semilattice("bool_2")).loops_only());
}

TEST_CASE("graph edges must join vertices") {
  DepGraph g({"a", "b"}, ElementSet::of(2, {0}));
  CHECK(code_of([&] { g.add_edge(0, 1); }) == ErrorCode::InvalidArgument);
  CHECK(g.successors(1).empty());
}

TEST_CASE("hereditary interior") {
  const auto m = fixtures::semilattice("m3");
  const DepGraph gm = dependency_graph(m);
  CHECK(hereditary_interior(gm, named(m.order(), {"u", "v"})).empty());
  CHECK(hereditary_interior(gm, gm.vertices()) == gm.vertices());

  const auto n = fixtures::semilattice("n5");
  const DepGraph gn = dependency_graph(n);
  CHECK(hereditary_interior(gn, named(n.order(), {"a", "b"})) == named(n.order(), {"a"}));
  CHECK(is_hereditary(gn, named(n.order(), {"a", "c"})));
  CHECK_FALSE(is_hereditary(gn, named(n.order(), {"b"})));
}

TEST_CASE("hereditary families") {
  const auto m = fixtures::semilattice("m3");
  const auto hm = all_hereditary(dependency_graph(m));
  CHECK(hm.size() == 2);
  CHECK(hm.contains(ElementSet(5)));
  CHECK(hm.contains(named(m.order(), {"u", "v", "w"})));

  const auto n = fixtures::semilattice("n5");
  const Poset& p = n.order();
  const auto hn = all_hereditary(dependency_graph(n));
  CHECK(masks(hn) == std::set<oracle::Mask>{0, named(p, {"a"}).to_mask(),
                                            named(p, {"c"}).to_mask(),
                                            named(p, {"a", "c"}).to_mask(),
                                            named(p, {"a", "b", "c"}).to_mask()});
  CHECK(hn.is_lattice_of_sets());
  CHECK(all_hereditary(dependency_graph(fixtures::semilattice("bool_3"))).size() == 8);
  CHECK(hn.position(named(p, {"c"})) < hn.size());
  CHECK(hn.position(named(p, {"b"})) == hn.size());
}

TEST_CASE("reachability quotient") {
  const auto m = fixtures::semilattice("m3");
  const DepGraph gm = dependency_graph(m);
  CHECK(reachability_quotient(gm).quotient.poset.size() == 1);
  CHECK(check_herd_ideal_correspondence(gm).holds());

  const auto n = fixtures::semilattice("n5");
  const Poset& p = n.order();
  const DepGraph gn = dependency_graph(n);
  const auto rq = reachability_quotient(gn);
  const Poset& q = rq.quotient.poset;
  CHECK(q.size() == 3);
  const auto block = [&](const char* name) {
    for (Index k = 0; k < rq.vertex_list.size(); ++k) {
      if (rq.vertex_list[k] == p.index_of(name)) return rq.quotient.block_map[k];
    }
    return Index{99};
  };
  // b reaches a and c, so its block precedes theirs.
  CHECK(q.less(block("b"), block("a")));
  CHECK(q.less(block("b"), block("c")));
  CHECK_FALSE(q.comparable(block("a"), block("c")));
  const auto corr = check_herd_ideal_correspondence(gn);
  CHECK(corr.hereditary_count == 5);
  CHECK(corr.ideal_count == 5);
  CHECK(corr.holds());

  const DepGraph gb = dependency_graph(fixtures::semilattice("bool_2"));
  CHECK(reachability_quotient(gb).quotient.poset.covers().empty());
  CHECK(check_herd_ideal_correspondence(gb).ideal_count == 4);
}

TEST_CASE("graph properties over catalog and random instances") {
  std::vector<JoinSemilattice> corpus;
  for (const auto& n : fixtures::catalog_instances()) corpus.push_back(*catalog(n).semilattice());
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto kind = seed % 2 ? StructureKind::semilattice : StructureKind::lattice;
    corpus.push_back(*random_structure(seed, 1 + seed % 10, kind).semilattice());
  }
  std::mt19937_64 rng(3);
  for (const auto& s : corpus) {
    const DepGraph g = dependency_graph(s);
    CHECK(g.vertices() == join_irreducibles(s));
    CHECK(edge_set(g) == oracle::dependency_edges(s.order()));
    CHECK(g == edges_via_min_covers(s));
    if (is_distributive(s)) CHECK(g.loops_only());
    if (is_modular(s) || is_relatively_complemented(s)) CHECK(g.is_symmetric());
    for (Index u : join_primes(s)) CHECK(g.successors(u) == ElementSet::of(s.size(), {u}));

    const auto herd = all_hereditary(g);
    CHECK(masks(herd) == oracle::hereditary_sets(s.order()));
    CHECK(herd.contains(ElementSet(s.size())));
    CHECK(herd.contains(g.vertices()));
    CHECK(herd.is_lattice_of_sets());
    CHECK(check_herd_ideal_correspondence(g).holds());

    const auto verts = g.vertices().indices();
    for (int k = 0; k < 5; ++k) {
      ElementSet x(s.size()), y(s.size());
      for (Index v : verts) {
        if (rng() % 2) x.insert(v);
        if (rng() % 2) y.insert(v);
      }
      y |= x;
      const ElementSet hx = hereditary_interior(g, x);
      CHECK(hx.is_subset_of(x));
      CHECK(is_hereditary(g, hx));
      CHECK(hereditary_interior(g, hx) == hx);
      CHECK(hx.is_subset_of(hereditary_interior(g, y)));
      for (const auto& h : herd) {
        if (h.is_subset_of(x)) CHECK(h.is_subset_of(hx));
      }
    }
  }
}
