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

#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "latgraph/catalog.hpp"
#include "latgraph/congruence.hpp"
#include "latgraph/depgraph.hpp"
#include "latgraph/error.hpp"
#include "latgraph/report.hpp"
#include "latgraph/structure_io.hpp"

namespace {

using latgraph::CongruenceKind;
using latgraph::Structure;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kCounterexample = 2;

// "catalog:<name>" loads a built-in instance instead of a file.
Structure load(const std::string& arg) {
  constexpr std::string_view prefix = "catalog:";
  if (arg.starts_with(prefix)) return latgraph::catalog(arg.substr(prefix.size()));
  return latgraph::parse_structure(arg);
}

CongruenceKind kind_of(const std::string& text) {
  return text == "lattice" ? CongruenceKind::lattice : CongruenceKind::semilattice;
}

const latgraph::JoinSemilattice& require_semilattice(const Structure& s) {
  const auto* sl = s.semilattice();
  if (sl == nullptr) {
    throw latgraph::Error(latgraph::ErrorCode::KindMismatch,
                          s.name + " is a poset; this command needs a semilattice");
  }
  return *sl;
}

void print_analysis(const json& a) {
  std::cout << a["name"].get<std::string>() << " (" << a["kind"].get<std::string>() << ", "
            << a["size"] << " elements)\n";
  if (!a.contains("predicates")) {
    std::cout << "order ideals: " << a["order_ideals"].dump() << "\n";
    return;
  }
  std::cout << "join-irreducibles: " << a["join_irreducibles"].dump() << "\n"
            << "join-primes: " << a["join_primes"].dump() << "\n";
  for (const auto& [name, value] : a["predicates"].items()) {
    std::cout << name << ": " << value.dump() << "\n";
  }
  std::cout << "dependency edges: " << a["graph"]["edge_count"] << "\n"
            << "hereditary sets: " << a["hereditary_count"].dump() << "\n"
            << "congruences: " << a["congruence_counts"].dump() << "\n";
}

int print_laws(const json& laws) {
  int failures = 0;
  for (const auto& law : laws) {
    const bool ok = law["violations"].get<std::size_t>() == 0;
    failures += ok ? 0 : 1;
    std::cout << (ok ? "  ok    " : "  FAIL  ") << law["law"].get<std::string>() << " ("
              << law["checked"] << " checked)\n";
    for (const auto& c : law["counterexamples"]) {
      std::cout << "        " << c.get<std::string>() << "\n";
    }
  }
  return failures;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dependency graphs and congruence lattices of finite semilattices"};
  app.set_version_flag("--version", std::string(latgraph::library_version()));
  app.require_subcommand(1);

  std::string file;
  bool as_json = false;
  std::string dot_out;
  std::string kind_text = "lattice";
  std::vector<std::string> files;
  bool all = false;
  std::string catalog_name;
  std::uint64_t seed = 0;
  std::size_t size = 0;
  std::string random_kind = "lattice";
  const std::vector<std::string> kinds{"lattice", "semilattice"};

  auto* analyze = app.add_subcommand("analyze", "Predicates, irreducibles and counts");
  analyze->add_option("file", file, "Structure file or catalog:<name>")->required();
  analyze->add_flag("--json", as_json, "Emit a JSON report");

  auto* graph = app.add_subcommand("graph", "Export the dependency graph");
  graph->add_option("file", file)->required();
  graph->add_option("--dot", dot_out, "Output path, - for stdout")->required();

  auto* congruences = app.add_subcommand("congruences", "Enumerate the congruence lattice");
  congruences->add_option("file", file)->required();
  congruences->add_option("--kind", kind_text)->check(CLI::IsMember(kinds));
  congruences->add_flag("--json", as_json);

  auto* galois = app.add_subcommand("galois", "Check the Galois connection laws");
  galois->add_option("file", file)->required();
  galois->add_option("--kind", kind_text)->check(CLI::IsMember(kinds));
  galois->add_flag("--json", as_json);

  auto* verify = app.add_subcommand("verify", "Verify one or more structures");
  verify->add_option("files", files)->required();
  verify->add_flag("--all", all, "Also run the graph, topology and distributivity suites");
  verify->add_flag("--json", as_json);

  auto* catalog = app.add_subcommand("catalog", "List or print built-in structures");
  catalog->add_option("name", catalog_name);

  auto* random = app.add_subcommand("random", "Print a seeded random structure");
  random->add_option("--seed", seed)->required();
  random->add_option("--size", size)->required();
  random->add_option("--kind", random_kind)
      ->check(CLI::IsMember({"poset", "semilattice", "lattice"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (analyze->parsed()) {
      const json a = latgraph::analyze(load(file));
      if (as_json) {
        latgraph::ReportDocument doc = latgraph::ReportDocument::make("analyze");
        doc.data["analysis"] = a;
        std::cout << latgraph::export_report(doc);
      } else {
        print_analysis(a);
      }
      return kOk;
    }

    if (graph->parsed()) {
      const Structure s = load(file);
      const std::string dot = latgraph::export_dot(latgraph::dependency_graph(require_semilattice(s)));
      if (dot_out == "-") {
        std::cout << dot;
      } else {
        std::ofstream out(dot_out, std::ios::binary);
        if (!out) throw latgraph::Error(latgraph::ErrorCode::InvalidArgument, "cannot write " + dot_out);
        out << dot;
      }
      return kOk;
    }

    if (congruences->parsed()) {
      const json c = latgraph::congruence_summary(load(file), kind_of(kind_text));
      if (as_json) {
        latgraph::ReportDocument doc = latgraph::ReportDocument::make("congruences");
        doc.data["congruences"] = c;
        std::cout << latgraph::export_report(doc);
      } else {
        std::cout << c["count"] << " " << kind_text << " congruences\n";
        for (const auto& m : c["congruences"]) std::cout << "  " << m.get<std::string>() << "\n";
      }
      return kOk;
    }

    if (galois->parsed()) {
      const Structure s = load(file);
      const auto& sl = require_semilattice(s);
      const auto r = latgraph::verify_galois(sl, kind_of(kind_text));
      latgraph::ReportDocument doc = latgraph::ReportDocument::make("galois");
      doc.data["structure"] = s.name;
      doc.data["galois"] = latgraph::galois_json(sl, r);
      doc.counterexamples = r.counterexample_count();
      if (as_json) {
        std::cout << latgraph::export_report(doc);
      } else {
        std::cout << s.name << ", " << kind_text << " kind: " << r.congruences.size()
                  << " congruences, " << r.hereditary.size() << " hereditary sets\n";
        print_laws(doc.data["galois"]["laws"]);
        for (const auto& n : r.notes) std::cout << "  note: " << n << "\n";
      }
      return doc.counterexamples == 0 ? kOk : kCounterexample;
    }

    if (verify->parsed()) {
      // Each instance is verified on its own structure; output is serialized below.
      std::vector<std::future<latgraph::ReportDocument>> jobs;
      for (const auto& f : files) {
        jobs.push_back(std::async(std::launch::async, [f, all] {
          return latgraph::verify_all(load(f), all);
        }));
      }
      std::vector<latgraph::ReportDocument> docs;
      for (auto& j : jobs) docs.push_back(j.get());

      std::size_t total = 0;
      json reports = json::array();
      for (std::size_t i = 0; i < docs.size(); ++i) {
        total += docs[i].counterexamples;
        if (as_json) {
          reports.push_back(json::parse(latgraph::export_report(docs[i])));
          continue;
        }
        std::cout << files[i] << ": "
                  << (docs[i].counterexamples == 0 ? "PASS" : "FAIL") << " ("
                  << docs[i].counterexamples << " counterexamples)\n";
        for (const auto& [name, check] : docs[i].data["checks"].items()) {
          if (check.contains("skipped")) {
            std::cout << " " << name << ": skipped, " << check["skipped"].get<std::string>()
                      << "\n";
            continue;
          }
          std::cout << " " << name << "\n";
          print_laws(check["laws"]);
        }
      }
      if (as_json) std::cout << reports.dump(2) << "\n";
      return total == 0 ? kOk : kCounterexample;
    }

    if (catalog->parsed()) {
      if (catalog_name.empty()) {
        for (const auto& n : latgraph::catalog_names()) std::cout << n << "\n";
      } else {
        std::cout << latgraph::serialize_structure(latgraph::catalog(catalog_name));
      }
      return kOk;
    }

    if (random->parsed()) {
      const Structure s =
          latgraph::random_structure(seed, size, latgraph::parse_kind(random_kind));
      json doc = json::parse(latgraph::serialize_structure(s));
      doc["seed"] = seed;
      std::cout << doc.dump(2) << "\n";
      return kOk;
    }
  } catch (const latgraph::Error& e) {
    std::cerr << "latgraph: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
