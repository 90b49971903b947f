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

#include <filesystem>
#include <fstream>

#include "fixtures.hpp"
#include "latgraph/report.hpp"
#include "latgraph/structure_io.hpp"

using namespace latgraph;
using fixtures::code_of;

namespace {

const std::filesystem::path kData = LATGRAPH_DATA_DIR;

bool same_structure(const Structure& a, const Structure& b) {
  if (a.kind != b.kind || a.name != b.name) return false;
  const Poset& p = a.order();
  const Poset& q = b.order();
  if (p.names() != q.names()) return false;
  for (Index i = 0; i < p.size(); ++i) {
    if (p.down(i) != q.down(i)) return false;
  }
  return true;
}

std::string error_text(std::string_view text) {
  try {
    parse_structure_text(text, "t.json");
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("parsing the bundled data files") {
  const Structure m = parse_structure(kData / "m3.lat.json");
  CHECK(m.kind == StructureKind::lattice);
  CHECK(m.lattice() != nullptr);
  CHECK(m.order().size() == 5);
  CHECK(same_structure(m, catalog("m3")));

  const Structure f = parse_structure(kData / "fig1.slat.json");
  CHECK(f.kind == StructureKind::semilattice);
  CHECK(f.lattice() == nullptr);
  CHECK(f.semilattice() != nullptr);
  CHECK(same_structure(f, catalog("fig1")));
  CHECK(same_structure(parse_structure(kData / "n5.lat.json"), catalog("n5")));
}

TEST_CASE("parse errors carry a location") {
  CHECK(error_text(R"({"name": "x", "kind": "poset", "elements": ["a"], "covers": [["a", "q"]]})")
            .find("covers[0]") != std::string::npos);
  CHECK(code_of([] {
          parse_structure_text(R"({"name": "x", "kind": "poset", "elements": ["a"], "covers": [["a", "q"]]})");
        }) == ErrorCode::ParseError);
  CHECK(error_text("{\n  \"name\": \"x\",\n  oops\n}").find("line 3") != std::string::npos);
  CHECK(error_text(R"({"name": "x", "kind": "ring", "elements": [], "covers": []})")
            .find("kind") != std::string::npos);
  CHECK(error_text(R"({"name": "x", "kind": "poset", "covers": []})").find("elements") !=
        std::string::npos);
  CHECK(error_text(R"([1, 2])").find("expected an object") != std::string::npos);
  CHECK(code_of([] { parse_structure("/nonexistent/file.json"); }) == ErrorCode::ParseError);
}

TEST_CASE("kind validation surfaces builder errors") {
  CHECK(code_of([] {
          parse_structure_text(
              R"({"name": "x", "kind": "semilattice", "elements": ["a", "b"], "covers": []})");
        }) == ErrorCode::NoZero);
  CHECK(code_of([] {
          parse_structure_text(
              R"({"name": "x", "kind": "poset", "elements": ["a", "b"], "covers": [["a","b"],["b","a"]]})");
        }) == ErrorCode::CycleDetected);
  const Structure p = parse_structure_text(
      R"({"name": "x", "kind": "poset", "elements": ["a", "b"], "covers": []})");
  CHECK(p.semilattice() == nullptr);
}

TEST_CASE("catalog") {
  CHECK(catalog("chain_3").order().size() == 3);
  CHECK(catalog("bool_3").order().size() == 8);
  CHECK(catalog("mk_4").order().size() == 6);
  CHECK(catalog("fig1").kind == StructureKind::semilattice);
  for (const char* bad : {"m4", "chain_", "chain_x", "chain_0", "bool_9", "", "chain_3x"}) {
    CHECK_MESSAGE(code_of([&] { catalog(bad); }) == ErrorCode::UnknownCatalogName, bad);
  }
  CHECK(catalog_names().size() == 6);
}

TEST_CASE("random structures") {
  CHECK(random_structure(1, 1, StructureKind::semilattice).order().size() == 1);
  const Structure l = random_structure(42, 8, StructureKind::lattice);
  CHECK(l.order().size() == 8);
  CHECK(l.lattice() != nullptr);
  CHECK(same_structure(random_structure(9, 12, StructureKind::semilattice),
                       random_structure(9, 12, StructureKind::semilattice)));
  CHECK(code_of([] { random_structure(1, 17, StructureKind::lattice); }) ==
        ErrorCode::SizeOutOfRange);
  CHECK(code_of([] { random_structure(1, 0, StructureKind::lattice); }) ==
        ErrorCode::SizeOutOfRange);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    for (std::size_t size = 1; size <= 16; size += 5) {
      for (auto kind : {StructureKind::lattice, StructureKind::semilattice, StructureKind::poset}) {
        CHECK(random_structure(seed, size, kind).order().size() == size);
      }
    }
  }
}

TEST_CASE("serialization round trips") {
  std::vector<Structure> all;
  for (const auto& n : fixtures::catalog_instances()) all.push_back(catalog(n));
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    all.push_back(random_structure(seed, 1 + seed % 16, StructureKind(seed % 3)));
  }
  for (const auto& s : all) {
    CHECK_MESSAGE(same_structure(parse_structure_text(serialize_structure(s)), s), s.name);
  }
}

TEST_CASE("DOT export") {
  const std::string m3 = export_dot(dependency_graph(*catalog("m3").semilattice()));
  CHECK(m3 ==
        "digraph G {\n  \"u\";\n  \"v\";\n  \"w\";\n"
        "  \"u\" -> \"u\";\n  \"u\" -> \"v\";\n  \"u\" -> \"w\";\n"
        "  \"v\" -> \"u\";\n  \"v\" -> \"v\";\n  \"v\" -> \"w\";\n"
        "  \"w\" -> \"u\";\n  \"w\" -> \"v\";\n  \"w\" -> \"w\";\n}\n");
  CHECK(export_dot(dependency_graph(*catalog("chain_2").semilattice())) ==
        "digraph G {\n  \"1\";\n  \"1\" -> \"1\";\n}\n");
  CHECK(export_dot(DepGraph({}, ElementSet(0))) == "digraph G {\n}\n");
}

TEST_CASE("reports") {
  const auto a = analyze(catalog("m3"));
  CHECK(a["congruence_counts"]["semilattice"] == 12);
  CHECK(a["congruence_counts"]["lattice"] == 2);
  CHECK(a["hereditary_count"] == 2);
  CHECK(a["predicates"]["modular"] == true);

  ReportDocument doc = ReportDocument::make("random", 5);
  doc.data["zeta"] = 1;
  doc.data["alpha"] = 2;
  const std::string text = export_report(doc);
  CHECK(text.find("\"alpha\"") < text.find("\"zeta\""));
  CHECK(text.find("\"seed\": 5") != std::string::npos);
  CHECK(text.find(std::string(library_version())) != std::string::npos);

  const ReportDocument v = verify_all(catalog("n5"));
  CHECK(v.counterexamples == 0);
  CHECK(v.data["checks"].contains("topology"));
  const ReportDocument big = verify_all(catalog("mk_15"), false);
  CHECK(big.data["checks"]["galois_semilattice"].contains("skipped"));
  CHECK(big.data["checks"]["main_theorem"]["passed"] == true);
  CHECK(big.counterexamples == 0);
}
