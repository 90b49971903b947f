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

#include "latgraph/report.hpp"

#include "latgraph/depgraph.hpp"
#include "latgraph/error.hpp"
#include "latgraph/semilattice.hpp"
#include "latgraph/topology.hpp"

namespace latgraph {
namespace {

using nlohmann::json;

json names_of(const Poset& p, const ElementSet& x) {
  json out = json::array();
  for (Index i : x) out.push_back(p.name(i));
  return out;
}

json graph_json(const DepGraph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({g.names()[u], g.names()[v]});
  json vertices = json::array();
  for (Index v : g.vertices()) vertices.push_back(g.names()[v]);
  return {{"vertices", vertices},
          {"edges", edges},
          {"edge_count", g.edge_count()},
          {"symmetric", g.is_symmetric()},
          {"loops_only", g.loops_only()}};
}

Lattice as_lattice(const Structure& s) {
  if (const Lattice* l = s.lattice()) return *l;
  return build_lattice(*s.semilattice());
}

// Runs one section; guard overruns become a "skipped" entry.
template <typename F>
void section(ReportDocument& doc, const std::string& key, F&& body) {
  try {
    body(doc.data["checks"][key]);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::CarrierTooLarge) throw;
    doc.data["checks"][key] = {{"skipped", e.what()}};
  }
}

void add_laws(ReportDocument& doc, json& out, const std::vector<LawCheck>& laws) {
  out["laws"] = json::array();
  for (const auto& law : laws) {
    out["laws"].push_back(law_json(law));
    doc.counterexamples += law.violations;
  }
}

}  // namespace

std::string_view library_version() noexcept { return LATGRAPH_VERSION; }

ReportDocument ReportDocument::make(std::string_view command, std::optional<std::uint64_t> seed) {
  ReportDocument r;
  r.data["command"] = std::string(command);
  r.data["version"] = std::string(library_version());
  if (seed) r.data["seed"] = *seed;
  return r;
}

std::string export_report(const ReportDocument& r) {
  json out = r.data;
  out["counterexamples"] = r.counterexamples;
  return out.dump(2) + "\n";
}

json describe_structure(const Structure& s) {
  const Poset& p = s.order();
  json covers = json::array();
  for (Index b = 0; b < p.size(); ++b) {
    for (Index a : p.lower_covers(b)) covers.push_back({p.name(a), p.name(b)});
  }
  return {{"name", s.name},
          {"kind", std::string(to_string(s.kind))},
          {"size", p.size()},
          {"elements", p.names()},
          {"covers", covers}};
}

json analyze(const Structure& s) {
  json out = describe_structure(s);
  const Poset& p = s.order();
  const JoinSemilattice* sl = s.semilattice();
  if (sl == nullptr) {
    try {
      out["order_ideals"] = order_ideals(p).size();
    } catch (const Error& e) {
      if (e.code() != ErrorCode::CarrierTooLarge) throw;
      out["order_ideals"] = {{"skipped", e.what()}};
    }
    return out;
  }

  const ElementSet j = join_irreducibles(*sl);
  out["zero"] = p.name(sl->zero());
  out["join_irreducibles"] = names_of(p, j);
  out["join_primes"] = names_of(p, join_primes(*sl));
  out["atoms"] = names_of(p, atoms(*sl));
  const WmjcrpResult w = has_wmjcrp(*sl);
  json predicates = {{"distributive", is_distributive(*sl)},
                     {"modular", is_modular(*sl)},
                     {"relatively_complemented", is_relatively_complemented(*sl)},
                     {"atomistic", is_atomistic(*sl)},
                     {"particle", is_particle(*sl)},
                     {"wmjcrp", {{"holds", w.holds}, {"constructive", w.verified_constructively}}}};
  if (const Lattice* l = s.lattice()) {
    predicates["strongly_distributive"] = is_strongly_distributive(*l);
    predicates["discrete_topology"] = is_discrete(*l);
  }
  out["predicates"] = predicates;

  const DepGraph g = dependency_graph(*sl);
  out["graph"] = graph_json(g);
  try {
    out["hereditary_count"] = all_hereditary(g).size();
    const auto rq = reachability_quotient(g);
    out["reachability_quotient_size"] = rq.quotient.poset.size();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::CarrierTooLarge) throw;
    out["hereditary_count"] = {{"skipped", e.what()}};
  }
  json counts = json::object();
  const auto count = [&](CongruenceKind kind) -> json {
    try {
      return all_congruences(*sl, kind).size();
    } catch (const Error& e) {
      if (e.code() != ErrorCode::CarrierTooLarge) throw;
      return {{"skipped", e.what()}};
    }
  };
  counts["semilattice"] = count(CongruenceKind::semilattice);
  if (s.lattice() != nullptr) counts["lattice"] = count(CongruenceKind::lattice);
  out["congruence_counts"] = counts;
  out["notes"] = {"completely join-prime and join-prime coincide on finite carriers"};
  return out;
}

json congruence_summary(const Structure& s, CongruenceKind kind) {
  const JoinSemilattice* sl = s.semilattice();
  if (sl == nullptr) {
    throw Error(ErrorCode::KindMismatch, "congruences need a semilattice or lattice");
  }
  const Poset& p = s.order();
  const ConLattice con = all_congruences(*sl, kind);
  json members = json::array();
  for (const auto& c : con) members.push_back(c.describe(p));
  json out = {{"kind", std::string(to_string(kind))},
              {"count", con.size()},
              {"congruences", members}};
  try {
    const Lattice cl = con_as_lattice(*sl, con);
    json covers = json::array();
    for (Index b = 0; b < cl.size(); ++b) {
      for (Index a : cl.order().lower_covers(b)) covers.push_back({a, b});
    }
    out["refinement_covers"] = covers;
    out["distributive"] = is_distributive(cl);
    out["strongly_distributive"] = is_strongly_distributive(cl);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::CarrierTooLarge) throw;
    out["refinement_covers"] = {{"skipped", e.what()}};
  }
  return out;
}

json law_json(const LawCheck& law) {
  return {{"law", law.law},
          {"checked", law.checked},
          {"violations", law.violations},
          {"counterexamples", law.counterexamples}};
}

json galois_json(const JoinSemilattice& s, const GaloisReport& r) {
  const Poset& p = s.order();
  json congruences = json::array();
  for (Index i = 0; i < r.congruences.size(); ++i) {
    congruences.push_back({{"blocks", r.congruences[i].describe(p)},
                           {"F", names_of(p, r.f_images[i])},
                           {"J", names_of(p, j_theta(s, r.congruences[i]))},
                           {"J_bar", names_of(p, j_bar_theta(s, r.congruences[i]))}});
  }
  json hereditary = json::array();
  for (Index k = 0; k < r.hereditary.size(); ++k) {
    json g = nullptr;
    if (r.g_images[k]) g = r.congruences[*r.g_images[k]].describe(p);
    hereditary.push_back({{"set", names_of(p, r.hereditary[k])}, {"G", g}});
  }
  json closed = json::array();
  for (const auto& h : r.closed_hereditary) closed.push_back(names_of(p, h));
  json laws = json::array();
  for (const auto& law : r.laws) laws.push_back(law_json(law));
  return {{"kind", std::string(to_string(r.kind))},
          {"congruences", congruences},
          {"hereditary", hereditary},
          {"closed_hereditary", closed},
          {"particle", r.particle},
          {"gf_is_identity", r.gf_is_identity},
          {"fg_is_identity_on_closed", r.fg_is_identity_on_closed},
          {"laws", laws},
          {"notes", r.notes},
          {"passed", r.passed()}};
}

ReportDocument verify_all(const Structure& s, bool all) {
  ReportDocument doc = ReportDocument::make("verify");
  doc.data["structure"] = describe_structure(s);
  doc.data["checks"] = json::object();
  const Poset& p = s.order();
  const JoinSemilattice* sl = s.semilattice();

  if (sl == nullptr) {
    section(doc, "order_ideals", [&](json& out) {
      const Lattice ideals = build_lattice(build_semilattice(order_ideals(p)));
      LawCheck law{"order ideals form a strongly distributive lattice"};
      law.record(is_strongly_distributive(ideals), [] { return "ideal lattice"; });
      out["size"] = ideals.size();
      add_laws(doc, out, {law});
    });
    return doc;
  }

  const DepGraph g = dependency_graph(*sl);
  if (all) {
    section(doc, "edge_oracle", [&](json& out) {
      LawCheck law{"dependency graph equals the minimal-cover graph"};
      const DepGraph h = edges_via_min_covers(*sl);
      law.record(g == h, [&] {
        return std::to_string(g.edge_count()) + " vs " + std::to_string(h.edge_count()) + " edges";
      });
      add_laws(doc, out, {law});
    });

    section(doc, "graph_shape", [&](json& out) {
      LawCheck dist{"distributive implies loops only"};
      LawCheck mod{"modular implies symmetric"};
      LawCheck rc{"relatively complemented implies symmetric"};
      LawCheck primes{"join-prime sources have only loops"};
      if (is_distributive(*sl)) dist.record(g.loops_only(), [] { return "distributive"; });
      if (is_modular(*sl)) mod.record(g.is_symmetric(), [] { return "modular"; });
      if (is_relatively_complemented(*sl)) rc.record(g.is_symmetric(), [] { return "rc"; });
      for (Index u : join_primes(*sl)) {
        ElementSet self(p.size());
        self.insert(u);
        primes.record(g.successors(u) == self, [&] { return p.name(u); });
      }
      add_laws(doc, out, {dist, mod, rc, primes});
    });

    section(doc, "hereditary_ideals", [&](json& out) {
      const auto c = check_herd_ideal_correspondence(g);
      LawCheck law{"hereditary sets correspond to order ideals of the quotient"};
      law.record(c.holds(), [&] {
        return std::to_string(c.hereditary_count) + " hereditary, " +
               std::to_string(c.ideal_count) + " ideals";
      });
      out["hereditary_count"] = c.hereditary_count;
      add_laws(doc, out, {law});
    });
  }

  section(doc, "galois_semilattice", [&](json& out) {
    const GaloisReport r = verify_galois(*sl, CongruenceKind::semilattice);
    out = galois_json(*sl, r);
    doc.counterexamples += r.counterexample_count();
  });

  const Lattice l = as_lattice(s);
  section(doc, "main_theorem", [&](json& out) {
    const GaloisReport r = verify_main_theorem(l);
    out = galois_json(l, r);
    doc.counterexamples += r.counterexample_count();
  });

  if (!all) return doc;
  section(doc, "topology", [&](json& out) {
    const TopologyReport r = verify_topology(l);
    out["discrete"] = r.discrete;
    add_laws(doc, out, r.laws);
  });

  section(doc, "strong_distributivity", [&](json& out) {
    const ConLattice con = all_congruences(l, CongruenceKind::lattice);
    const Lattice cl = con_as_lattice(l, con);
    LawCheck law{"Con(L) is strongly distributive"};
    law.record(is_strongly_distributive(cl), [&] { return s.name; });
    out["atomistic"] = is_atomistic(l);
    out["con_size"] = con.size();
    add_laws(doc, out, {law});
  });
  return doc;
}

}  // namespace latgraph
