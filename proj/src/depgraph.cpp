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

#include "latgraph/depgraph.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "latgraph/error.hpp"

namespace latgraph {

DepGraph::DepGraph(std::vector<std::string> names, ElementSet vertices)
    : names_(std::move(names)), vertices_(std::move(vertices)) {
  if (vertices_.universe() != names_.size()) {
    throw Error(ErrorCode::CarrierMismatch, "vertex set over the wrong carrier");
  }
  successors_.assign(names_.size(), ElementSet(names_.size()));
}

void DepGraph::add_edge(Index u, Index v) {
  if (!vertices_.contains(u) || !vertices_.contains(v)) {
    throw Error(ErrorCode::InvalidArgument, "edge endpoint is not a vertex");
  }
  successors_[u].insert(v);
}

std::vector<std::pair<Index, Index>> DepGraph::edges() const {
  std::vector<std::pair<Index, Index>> out;
  for (Index u : vertices_) {
    for (Index v : successors_[u]) out.emplace_back(u, v);
  }
  return out;
}

std::size_t DepGraph::edge_count() const {
  std::size_t c = 0;
  for (Index u : vertices_) c += successors_[u].count();
  return c;
}

bool DepGraph::is_symmetric() const {
  for (Index u : vertices_) {
    for (Index v : successors_[u]) {
      if (!successors_[v].contains(u)) return false;
    }
  }
  return true;
}

bool DepGraph::loops_only() const {
  for (Index u : vertices_) {
    for (Index v : successors_[u]) {
      if (u != v) return false;
    }
  }
  return true;
}

HereditaryFamily::HereditaryFamily(std::vector<ElementSet> members)
    : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool HereditaryFamily::contains(const ElementSet& h) const {
  return std::binary_search(members_.begin(), members_.end(), h);
}

std::size_t HereditaryFamily::position(const ElementSet& h) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), h);
  if (it == members_.end() || *it != h) return members_.size();
  return static_cast<std::size_t>(it - members_.begin());
}

bool HereditaryFamily::is_lattice_of_sets() const {
  for (const auto& a : members_) {
    for (const auto& b : members_) {
      if (!contains(a | b) || !contains(a & b)) return false;
    }
  }
  return true;
}

DepGraph dependency_graph(const JoinSemilattice& s) {
  const std::size_t n = s.size();
  const ElementSet j = join_irreducibles(s);
  DepGraph g(s.order().names(), j);
  for (Index u : j) {
    for (Index v : j) {
      const ElementSet strictly_below = s.order().down(v) - ElementSet::of(n, {v});
      for (Index x = 0; x < n; ++x) {
        if (!s.leq(u, s.join(x, v))) continue;
        const bool tight = std::none_of(strictly_below.begin(), strictly_below.end(),
                                        [&](Index y) { return s.leq(u, s.join(x, y)); });
        if (tight) {
          g.add_edge(u, v);
          break;
        }
      }
    }
  }
  return g;
}

DepGraph edges_via_min_covers(const JoinSemilattice& s) {
  const ElementSet j = join_irreducibles(s);
  DepGraph g(s.order().names(), j);
  for (Index u : j) {
    for (const auto& cover : minimal_join_covers(s, u)) {
      for (Index v : cover) g.add_edge(u, v);
    }
  }
  return g;
}

bool is_hereditary(const DepGraph& g, const ElementSet& h) {
  if (h.universe() != g.carrier_size() || !h.is_subset_of(g.vertices())) return false;
  for (Index u : h) {
    if (!g.successors(u).is_subset_of(h)) return false;
  }
  return true;
}

ElementSet hereditary_interior(const DepGraph& g, const ElementSet& x) {
  ElementSet current = x & g.vertices();
  bool changed = true;
  while (changed) {
    changed = false;
    for (Index u : current) {
      if (!g.successors(u).is_subset_of(current)) {
        current.erase(u);
        changed = true;
      }
    }
  }
  return current;
}

HereditaryFamily all_hereditary(const DepGraph& g) {
  const std::vector<Index> verts = g.vertices().indices();
  const std::size_t k = verts.size();
  enforce_subset_guard(k, 20, "all_hereditary");
  std::vector<std::uint64_t> succ_mask(k, 0);
  for (Index i = 0; i < k; ++i) {
    for (Index t = 0; t < k; ++t) {
      if (g.has_edge(verts[i], verts[t])) succ_mask[i] |= std::uint64_t{1} << t;
    }
  }
  std::vector<ElementSet> members;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    bool closed = true;
    for (std::uint64_t rest = mask; rest != 0 && closed; rest &= rest - 1) {
      closed = (succ_mask[static_cast<Index>(std::countr_zero(rest))] & ~mask) == 0;
    }
    if (!closed) continue;
    ElementSet h(g.carrier_size());
    for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
      h.insert(verts[static_cast<Index>(std::countr_zero(rest))]);
    }
    members.push_back(std::move(h));
  }
  return HereditaryFamily(std::move(members));
}

ReachabilityQuotient reachability_quotient(const DepGraph& g) {
  std::vector<Index> verts = g.vertices().indices();
  std::vector<std::string> names;
  std::vector<Index> position(g.carrier_size(), 0);
  for (Index k = 0; k < verts.size(); ++k) {
    names.push_back(g.names()[verts[k]]);
    position[verts[k]] = k;
  }
  std::vector<std::pair<Index, Index>> pairs;
  for (const auto& [u, v] : g.edges()) pairs.emplace_back(position[u], position[v]);
  const QuasiOrder reach = QuasiOrder::closure_of(std::move(names), pairs);
  return {std::move(verts), max_antisym_quotient(reach)};
}

HerdIdealCorrespondence check_herd_ideal_correspondence(const DepGraph& g) {
  HerdIdealCorrespondence out;
  const HereditaryFamily herd = all_hereditary(g);
  const ReachabilityQuotient rq = reachability_quotient(g);
  const Poset& q = rq.quotient.poset;
  const Poset ideals = order_ideals(q);
  out.hereditary_count = herd.size();
  out.ideal_count = ideals.size();

  std::map<ElementSet, std::size_t> image_of;
  std::vector<ElementSet> images;
  for (const auto& h : herd) {
    ElementSet image(q.size());
    for (Index k = 0; k < rq.vertex_list.size(); ++k) {
      if (!h.contains(rq.vertex_list[k])) image.insert(rq.quotient.block_map[k]);
    }
    images.push_back(image);
    image_of.emplace(image, images.size() - 1);
  }
  // Every image must be an ideal, distinct images, and as many as ideals.
  bool all_ideals = std::all_of(images.begin(), images.end(), [&](const ElementSet& i) {
    return down_set(q, i) == i;
  });
  out.bijective = all_ideals && image_of.size() == herd.size() &&
                  image_of.size() == ideals.size();
  out.inclusion_reversing = true;
  for (std::size_t a = 0; a < herd.size() && out.inclusion_reversing; ++a) {
    for (std::size_t b = 0; b < herd.size(); ++b) {
      if (herd[a].is_subset_of(herd[b]) != images[b].is_subset_of(images[a])) {
        out.inclusion_reversing = false;
        break;
      }
    }
  }
  return out;
}

}  // namespace latgraph
