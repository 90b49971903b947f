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

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "latgraph/depgraph.hpp"
#include "latgraph/order.hpp"
#include "latgraph/semilattice.hpp"

namespace latgraph {

enum class StructureKind { poset, semilattice, lattice };

std::string_view to_string(StructureKind kind) noexcept;
/// Throws ParseError on anything but "poset", "semilattice" or "lattice".
StructureKind parse_kind(std::string_view text);

struct Structure {
  std::string name;
  StructureKind kind = StructureKind::poset;
  std::variant<Poset, JoinSemilattice, Lattice> value;

  const Poset& order() const;
  /// Null for the poset kind.
  const JoinSemilattice* semilattice() const;
  /// Null unless the kind is lattice.
  const Lattice* lattice() const;
};

/// Validates p against kind; builder errors propagate unchanged.
Structure make_structure(std::string name, StructureKind kind, Poset p);

Structure parse_structure(const std::filesystem::path& path);
/// `source` only labels error messages.
Structure parse_structure_text(std::string_view text, std::string_view source = "<input>");

/// Covers-only JSON; parse_structure_text reads it back.
std::string serialize_structure(const Structure& s);

/// Vertices sorted by name, edges sorted by (source, target) name.
std::string export_dot(const DepGraph& g);

}  // namespace latgraph
