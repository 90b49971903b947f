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

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "latgraph/congruence.hpp"
#include "latgraph/structure_io.hpp"

namespace latgraph {

std::string_view library_version() noexcept;

/// A JSON object with sorted keys, tagged with the library version and,
/// when the instance is random, its seed.
struct ReportDocument {
  nlohmann::json data = nlohmann::json::object();
  std::size_t counterexamples = 0;

  static ReportDocument make(std::string_view command, std::optional<std::uint64_t> seed = {});
};

std::string export_report(const ReportDocument& r);

nlohmann::json describe_structure(const Structure& s);

/// Predicates, irreducibles, graph and counts.
nlohmann::json analyze(const Structure& s);

nlohmann::json congruence_summary(const Structure& s, CongruenceKind kind);

nlohmann::json law_json(const LawCheck& law);

nlohmann::json galois_json(const JoinSemilattice& s, const GaloisReport& r);

/// The Galois checks, plus with `all` the graph, topology and strong
/// distributivity suites. Sections beyond an enumeration guard are reported
/// as skipped.
ReportDocument verify_all(const Structure& s, bool all = true);

}  // namespace latgraph
