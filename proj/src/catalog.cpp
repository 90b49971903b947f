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

#include "latgraph/catalog.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <random>

#include "latgraph/error.hpp"

namespace latgraph {
namespace {

using Pairs = std::vector<std::pair<std::string, std::string>>;

Structure from_covers(std::string name, StructureKind kind, std::vector<std::string> names,
                      const Pairs& covers) {
  return make_structure(std::move(name), kind, build_poset(std::move(names), covers));
}

[[noreturn]] void unknown(std::string_view name) {
  throw Error(ErrorCode::UnknownCatalogName, "no catalog entry '" + std::string(name) + "'");
}

std::size_t suffix(std::string_view name, std::string_view prefix, std::size_t lo,
                   std::size_t hi) {
  const std::string_view digits = name.substr(prefix.size());
  std::size_t k = 0;
  const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
  if (digits.empty() || ec != std::errc{} || end != digits.data() + digits.size() || k < lo ||
      k > hi) {
    unknown(name);
  }
  return k;
}

Structure chain(std::size_t k) {
  std::vector<std::string> names;
  Pairs covers;
  for (std::size_t i = 0; i < k; ++i) {
    names.push_back(std::to_string(i));
    if (i > 0) covers.emplace_back(names[i - 1], names[i]);
  }
  return from_covers("chain_" + std::to_string(k), StructureKind::lattice, std::move(names),
                     covers);
}

std::string subset_name(std::uint32_t mask) {
  if (mask == 0) return "0";
  std::string out;
  for (int i = 0; i < 32; ++i) {
    if ((mask >> i) & 1u) out += static_cast<char>('a' + i);
  }
  return out;
}

Structure boolean(std::size_t k) {
  std::vector<std::string> names;
  Pairs covers;
  for (std::uint32_t m = 0; m < (1u << k); ++m) {
    names.push_back(subset_name(m));
    for (std::size_t i = 0; i < k; ++i) {
      if ((m >> i) & 1u) covers.emplace_back(subset_name(m & ~(1u << i)), names.back());
    }
  }
  return from_covers("bool_" + std::to_string(k), StructureKind::lattice, std::move(names),
                     covers);
}

Structure mk(std::size_t k) {
  std::vector<std::string> names{"0"};
  Pairs covers;
  for (std::size_t i = 1; i <= k; ++i) {
    names.push_back("a" + std::to_string(i));
    covers.emplace_back("0", names.back());
    covers.emplace_back(names.back(), "1");
  }
  names.push_back("1");
  return from_covers("mk_" + std::to_string(k), StructureKind::lattice, std::move(names),
                     covers);
}

// Families of subsets of a ground set, as bitmasks, ordered by inclusion.
Structure from_family(std::string name, StructureKind kind,
                      const std::vector<std::uint32_t>& family) {
  const std::size_t n = family.size();
  std::vector<std::string> names;
  std::vector<ElementSet> down(n, ElementSet(n));
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(subset_name(family[i]));
    for (std::size_t j = 0; j < n; ++j) {
      if ((family[j] & ~family[i]) == 0) down[i].insert(j);
    }
  }
  return make_structure(std::move(name), kind,
                        poset_from_down_sets(std::move(names), std::move(down)));
}

// family ∪ {r} closed under op; one pass suffices since family is closed.
template <typename Op>
std::vector<std::uint32_t> close_with(std::vector<std::uint32_t> family, std::uint32_t r, Op op) {
  if (std::find(family.begin(), family.end(), r) != family.end()) return family;
  family.push_back(r);
  for (std::uint32_t f : std::vector<std::uint32_t>(family)) {
    const std::uint32_t c = op(f, r);
    if (std::find(family.begin(), family.end(), c) == family.end()) family.push_back(c);
  }
  return family;
}

}  // namespace

std::vector<std::string> catalog_names() {
  return {"m3", "n5", "fig1", "chain_k", "bool_k", "mk_k"};
}

Structure catalog(std::string_view name) {
  if (name == "m3") {
    return from_covers("m3", StructureKind::lattice, {"0", "u", "v", "w", "1"},
                       {{"0", "u"}, {"0", "v"}, {"0", "w"}, {"u", "1"}, {"v", "1"}, {"w", "1"}});
  }
  if (name == "n5") {
    return from_covers("n5", StructureKind::lattice, {"0", "a", "b", "c", "1"},
                       {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}});
  }
  if (name == "fig1") {
    return from_covers("fig1", StructureKind::semilattice, {"0", "u", "x", "v", "w", "a", "1"},
                       {{"0", "u"}, {"0", "x"}, {"0", "v"}, {"x", "w"}, {"x", "a"}, {"v", "a"},
                        {"u", "1"}, {"a", "1"}, {"w", "1"}});
  }
  if (name.starts_with("chain_")) return chain(suffix(name, "chain_", 1, 64));
  if (name.starts_with("bool_")) return boolean(suffix(name, "bool_", 0, 6));
  if (name.starts_with("mk_")) return mk(suffix(name, "mk_", 1, 62));
  unknown(name);
}

Structure random_structure(std::uint64_t seed, std::size_t size, StructureKind kind) {
  if (size < 1 || size > 16) {
    throw Error(ErrorCode::SizeOutOfRange,
                "random structures have 1 to 16 elements, got " + std::to_string(size));
  }
  std::mt19937_64 rng(seed);
  const std::string name = "random_" + std::string(to_string(kind)) + "_" +
                           std::to_string(seed) + "_" + std::to_string(size);
  const std::uint32_t ground = (1u << size) - 1;

  if (kind == StructureKind::poset) {
    std::vector<std::string> names;
    std::vector<std::pair<Index, Index>> covers;
    for (std::size_t j = 0; j < size; ++j) {
      names.push_back("p" + std::to_string(j));
      for (std::size_t i = 0; i < j; ++i) {
        if (rng() % 10 < 3) covers.emplace_back(i, j);
      }
    }
    return make_structure(name, kind, build_poset_indexed(std::move(names), covers));
  }

  const bool meets = kind == StructureKind::lattice;
  const auto op = [meets](std::uint32_t a, std::uint32_t b) { return meets ? a & b : a | b; };
  std::vector<std::uint32_t> family{meets ? ground : 0u};
  while (family.size() < size) {
    bool grown = false;
    for (int attempt = 0; attempt < 64 && !grown; ++attempt) {
      const auto r = static_cast<std::uint32_t>(rng()) & ground;
      auto next = close_with(family, r, op);
      if (next.size() > family.size() && next.size() <= size) {
        family = std::move(next);
        grown = true;
      }
    }
    if (grown) continue;
    // A minimal missing set (maximal, for unions) adds exactly one member.
    std::uint32_t pick = 0;
    int best = meets ? 33 : -1;
    for (std::uint32_t m = 0; m <= ground; ++m) {
      if (std::find(family.begin(), family.end(), m) != family.end()) continue;
      const int c = std::popcount(m);
      if (meets ? c < best : c > best) {
        best = c;
        pick = m;
      }
    }
    family.push_back(pick);
  }
  std::sort(family.begin(), family.end());
  return from_family(name, kind, family);
}

}  // namespace latgraph
