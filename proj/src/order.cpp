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

#include "latgraph/order.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <numeric>
#include <queue>

#include "latgraph/error.hpp"

namespace latgraph {
namespace {

void check_unique_names(const std::vector<std::string>& names) {
  std::unordered_map<std::string_view, Index> seen;
  for (Index i = 0; i < names.size(); ++i) {
    if (!seen.emplace(names[i], i).second) {
      throw Error(ErrorCode::DuplicateName, "element name '" + names[i] + "' repeated");
    }
  }
}

// rows[i] |= rows[k] whenever k ∈ rows[i]; Warshall over bitset rows.
void close_transitively(std::vector<ElementSet>& rows) {
  for (Index k = 0; k < rows.size(); ++k) {
    for (Index i = 0; i < rows.size(); ++i) {
      if (i != k && rows[i].contains(k)) rows[i] |= rows[k];
    }
  }
}

}  // namespace

Poset::Poset(std::vector<std::string> names, std::vector<ElementSet> down)
    : names_(std::move(names)), down_(std::move(down)) {
  const std::size_t n = names_.size();
  for (Index i = 0; i < n; ++i) by_name_.emplace(names_[i], i);

  up_.assign(n, ElementSet(n));
  for (Index b = 0; b < n; ++b) {
    for (Index a : down_[b]) up_[a].insert(b);
  }

  linear_.resize(n);
  std::iota(linear_.begin(), linear_.end(), Index{0});
  std::vector<std::size_t> height(n);
  for (Index i = 0; i < n; ++i) height[i] = down_[i].count();
  std::stable_sort(linear_.begin(), linear_.end(),
                   [&](Index a, Index b) { return height[a] < height[b]; });

  // a ≺ b iff the interval [a, b] has exactly two elements.
  lower_covers_.assign(n, ElementSet(n));
  upper_covers_.assign(n, ElementSet(n));
  for (Index b = 0; b < n; ++b) {
    for (Index a : down_[b]) {
      if (a != b && ElementSet::intersection_count(up_[a], down_[b]) == 2) {
        covers_.emplace_back(a, b);
        lower_covers_[b].insert(a);
        upper_covers_[a].insert(b);
      }
    }
  }
  std::sort(covers_.begin(), covers_.end());
}

std::optional<Index> Poset::find(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

Index Poset::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw Error(ErrorCode::UnknownName, "no element named '" + std::string(name) + "'");
}

std::string Poset::describe(const ElementSet& set) const {
  std::string out = "{";
  bool first = true;
  for (Index i : set) {
    if (!first) out += ',';
    out += names_.at(i);
    first = false;
  }
  out += '}';
  return out;
}

Poset build_poset(std::vector<std::string> names,
                  std::span<const std::pair<std::string, std::string>> covers) {
  check_unique_names(names);
  std::unordered_map<std::string_view, Index> by_name;
  for (Index i = 0; i < names.size(); ++i) by_name.emplace(names[i], i);
  std::vector<std::pair<Index, Index>> pairs;
  pairs.reserve(covers.size());
  for (const auto& [lo, hi] : covers) {
    auto a = by_name.find(lo);
    auto b = by_name.find(hi);
    if (a == by_name.end()) {
      throw Error(ErrorCode::UnknownName, "cover references unknown element '" + lo + "'");
    }
    if (b == by_name.end()) {
      throw Error(ErrorCode::UnknownName, "cover references unknown element '" + hi + "'");
    }
    pairs.emplace_back(a->second, b->second);
  }
  return build_poset_indexed(std::move(names), pairs);
}

Poset build_poset_indexed(std::vector<std::string> names,
                          std::span<const std::pair<Index, Index>> relations) {
  check_unique_names(names);
  const std::size_t n = names.size();
  std::vector<std::vector<Index>> succ(n);
  std::vector<std::size_t> indegree(n, 0);
  for (const auto& [a, b] : relations) {
    if (a >= n || b >= n) {
      throw Error(ErrorCode::UnknownName, "relation index outside the carrier");
    }
    if (a == b) {
      throw Error(ErrorCode::CycleDetected,
                  "element '" + names[a] + "' cannot cover itself");
    }
    succ[a].push_back(b);
    ++indegree[b];
  }

  // Kahn's algorithm; whatever is left unvisited lies on a cycle.
  std::vector<ElementSet> down(n, ElementSet(n));
  for (Index i = 0; i < n; ++i) down[i].insert(i);
  std::queue<Index> ready;
  for (Index i = 0; i < n; ++i) {
    if (indegree[i] == 0) ready.push(i);
  }
  std::size_t visited = 0;
  while (!ready.empty()) {
    const Index a = ready.front();
    ready.pop();
    ++visited;
    for (Index b : succ[a]) {
      down[b] |= down[a];
      if (--indegree[b] == 0) ready.push(b);
    }
  }
  if (visited != n) {
    const auto it = std::find_if(indegree.begin(), indegree.end(),
                                 [](std::size_t d) { return d != 0; });
    const auto culprit = static_cast<Index>(it - indegree.begin());
    throw Error(ErrorCode::CycleDetected,
                "order is not antisymmetric around '" + names[culprit] + "'");
  }
  return Poset(std::move(names), std::move(down));
}

Poset poset_from_down_sets(std::vector<std::string> names, std::vector<ElementSet> down) {
  check_unique_names(names);
  const std::size_t n = names.size();
  if (down.size() != n) {
    throw Error(ErrorCode::InvalidOrder, "one down-set per element is required");
  }
  for (Index b = 0; b < n; ++b) {
    if (down[b].universe() != n) {
      throw Error(ErrorCode::CarrierMismatch, "down-set over the wrong carrier");
    }
    if (!down[b].contains(b)) {
      throw Error(ErrorCode::InvalidOrder, "order is not reflexive at '" + names[b] + "'");
    }
  }
  for (Index b = 0; b < n; ++b) {
    for (Index a : down[b]) {
      if (a != b && down[a].contains(b)) {
        throw Error(ErrorCode::CycleDetected, "'" + names[a] + "' and '" + names[b] +
                                                  "' are mutually below each other");
      }
      if (!down[a].is_subset_of(down[b])) {
        throw Error(ErrorCode::InvalidOrder, "order is not transitive through '" +
                                                 names[a] + "'");
      }
    }
  }
  return Poset(std::move(names), std::move(down));
}

QuasiOrder::QuasiOrder(std::vector<std::string> names, std::vector<ElementSet> rows)
    : names_(std::move(names)), rows_(std::move(rows)) {
  const std::size_t n = names_.size();
  if (rows_.size() != n) {
    throw Error(ErrorCode::NotQuasiOrder, "one row per element is required");
  }
  for (Index a = 0; a < n; ++a) {
    if (rows_[a].universe() != n) {
      throw Error(ErrorCode::CarrierMismatch, "row over the wrong carrier");
    }
    if (!rows_[a].contains(a)) {
      throw Error(ErrorCode::NotQuasiOrder, "relation is not reflexive at '" + names_[a] + "'");
    }
  }
  for (Index a = 0; a < n; ++a) {
    for (Index b : rows_[a]) {
      if (!rows_[b].is_subset_of(rows_[a])) {
        throw Error(ErrorCode::NotQuasiOrder, "relation is not transitive through '" +
                                                  names_[b] + "'");
      }
    }
  }
}

QuasiOrder QuasiOrder::closure_of(std::vector<std::string> names,
                                  std::span<const std::pair<Index, Index>> pairs) {
  const std::size_t n = names.size();
  std::vector<ElementSet> rows(n, ElementSet(n));
  for (Index i = 0; i < n; ++i) rows[i].insert(i);
  for (const auto& [a, b] : pairs) rows.at(a).insert(b);
  close_transitively(rows);
  return QuasiOrder(std::move(names), std::move(rows));
}

FamilyOfSubsets::FamilyOfSubsets(std::size_t universe, std::vector<ElementSet> members)
    : universe_(universe) {
  members_.reserve(members.size());
  for (auto& m : members) add(std::move(m));
}

void FamilyOfSubsets::add(ElementSet member) {
  if (member.universe() != universe_) {
    throw Error(ErrorCode::CarrierMismatch, "member over a carrier of size " +
                                                std::to_string(member.universe()) +
                                                ", family over " + std::to_string(universe_));
  }
  if (!index_.insert(member).second) {
    throw Error(ErrorCode::DuplicateMember, "subset already in the family");
  }
  members_.push_back(std::move(member));
}

FamilyOfSubsets FamilyOfSubsets::sorted() const {
  return FamilyOfSubsets(universe_, std::vector<ElementSet>(index_.begin(), index_.end()));
}

ElementSet down_set(const Poset& p, const ElementSet& x) {
  ElementSet out = p.none();
  for (Index i : x) out |= p.down(i);
  return out;
}

ElementSet up_set(const Poset& p, const ElementSet& x) {
  ElementSet out = p.none();
  for (Index i : x) out |= p.up(i);
  return out;
}

bool is_antichain(const Poset& p, const ElementSet& a) {
  for (Index i : a) {
    if (ElementSet::intersection_count(p.down(i), a) != 1) return false;
  }
  return true;
}

bool join_refines(const Poset& p, const ElementSet& x, const ElementSet& y) {
  return x.is_subset_of(down_set(p, y));
}

ElementSet canonical_antichain(const Poset& p, const ElementSet& x) {
  ElementSet out = p.none();
  for (Index i : x) {
    if (ElementSet::intersection_count(p.up(i), x) == 1) out.insert(i);
  }
  return out;
}

bool is_saturated(const Poset& p, const FamilyOfSubsets& family) {
  std::vector<const ElementSet*> antichains;
  for (const auto& m : family) {
    if (is_antichain(p, m)) antichains.push_back(&m);
  }
  for (const auto& x : family) {
    if (x.empty()) continue;
    const bool witnessed = std::any_of(antichains.begin(), antichains.end(),
                                       [&](const ElementSet* a) { return a->is_subset_of(x); });
    if (!witnessed) return false;
  }
  return true;
}

ElementSet find_c_minimal(const Poset& p, const FamilyOfSubsets& family) {
  if (family.empty()) throw Error(ErrorCode::EmptyFamily, "family has no members");
  if (family.universe() != p.size()) {
    throw Error(ErrorCode::CarrierMismatch, "family and poset disagree on the carrier");
  }
  if (!is_saturated(p, family)) {
    throw Error(ErrorCode::NotSaturated,
                "some non-empty member contains no antichain member");
  }
  std::vector<ElementSet> downs;
  downs.reserve(family.size());
  for (const auto& m : family) downs.push_back(down_set(p, m));

  std::vector<std::size_t> order(family.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return family[a] < family[b]; });
  for (std::size_t xi : order) {
    const ElementSet& x = family[xi];
    bool minimal = true;
    for (const auto& y : family) {
      if (y.is_subset_of(downs[xi]) && !x.is_subset_of(y)) {
        minimal = false;
        break;
      }
    }
    if (minimal) return x;
  }
  // Unreachable on finite posets: a saturated family always has a minimal member.
  throw std::logic_error("find_c_minimal: saturated family without a minimal member");
}

Poset order_ideals(const Poset& p) {
  const std::size_t n = p.size();
  enforce_subset_guard(n, 20, "order_ideals");
  std::vector<std::uint64_t> down_mask(n);
  for (Index i = 0; i < n; ++i) down_mask[i] = p.down(i).to_mask();

  std::vector<std::uint64_t> ideals;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    bool closed = true;
    for (std::uint64_t rest = mask; rest != 0 && closed; rest &= rest - 1) {
      const auto i = static_cast<Index>(std::countr_zero(rest));
      closed = (down_mask[i] & ~mask) == 0;
    }
    if (closed) ideals.push_back(mask);
  }
  enforce_guard(ideals.size(), 4096, "order_ideals (ideal count)");

  std::unordered_map<std::uint64_t, Index> position;
  std::vector<std::string> names;
  names.reserve(ideals.size());
  for (Index k = 0; k < ideals.size(); ++k) {
    position.emplace(ideals[k], k);
    char buf[24];
    std::snprintf(buf, sizeof buf, "0x%llx", static_cast<unsigned long long>(ideals[k]));
    names.emplace_back(buf);
  }
  // I ≺ J exactly when J = I ∪ {x} for a single element x.
  std::vector<std::pair<Index, Index>> covers;
  for (Index k = 0; k < ideals.size(); ++k) {
    for (Index x = 0; x < n; ++x) {
      const std::uint64_t bit = std::uint64_t{1} << x;
      if ((ideals[k] & bit) != 0) continue;
      auto it = position.find(ideals[k] | bit);
      if (it != position.end()) covers.emplace_back(k, it->second);
    }
  }
  return build_poset_indexed(std::move(names), covers);
}

Quotient max_antisym_quotient(const QuasiOrder& q) {
  const std::size_t n = q.size();
  constexpr Index kUnassigned = static_cast<Index>(-1);
  std::vector<Index> block_map(n, kUnassigned);
  std::vector<Index> representative;
  std::vector<std::string> names;
  for (Index i = 0; i < n; ++i) {
    if (block_map[i] != kUnassigned) continue;
    const Index block = representative.size();
    representative.push_back(i);
    std::vector<Index> members;
    for (Index j = i; j < n; ++j) {
      if (q.related(i, j) && q.related(j, i)) {
        block_map[j] = block;
        members.push_back(j);
      }
    }
    if (members.size() == 1) {
      names.push_back(q.names()[i]);
    } else {
      std::string label = "{";
      for (std::size_t k = 0; k < members.size(); ++k) {
        if (k != 0) label += ',';
        label += q.names()[members[k]];
      }
      names.push_back(label + "}");
    }
  }
  const std::size_t m = representative.size();
  std::vector<ElementSet> down(m, ElementSet(m));
  for (Index b = 0; b < m; ++b) {
    for (Index a = 0; a < m; ++a) {
      if (q.related(representative[a], representative[b])) down[b].insert(a);
    }
  }
  return {poset_from_down_sets(std::move(names), std::move(down)), std::move(block_map)};
}

}  // namespace latgraph
