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

#include "latgraph/structure_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "latgraph/error.hpp"

namespace latgraph {
namespace {

using nlohmann::json;

[[noreturn]] void fail(std::string_view source, const std::string& where, const std::string& what) {
  throw Error(ErrorCode::ParseError, std::string(source) + ": " + where + ": " + what);
}

std::string location(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

const json& field(const json& doc, const char* key, json::value_t type, std::string_view source) {
  const auto it = doc.find(key);
  if (it == doc.end()) fail(source, std::string("field '") + key + "'", "missing");
  const bool ok = type == json::value_t::string ? it->is_string() : it->is_array();
  if (!ok) {
    fail(source, std::string("field '") + key + "'",
         type == json::value_t::string ? "expected a string" : "expected an array");
  }
  return *it;
}

}  // namespace

std::string_view to_string(StructureKind kind) noexcept {
  switch (kind) {
    case StructureKind::poset: return "poset";
    case StructureKind::semilattice: return "semilattice";
    case StructureKind::lattice: return "lattice";
  }
  return "poset";
}

StructureKind parse_kind(std::string_view text) {
  if (text == "poset") return StructureKind::poset;
  if (text == "semilattice") return StructureKind::semilattice;
  if (text == "lattice") return StructureKind::lattice;
  throw Error(ErrorCode::ParseError, "unknown kind '" + std::string(text) + "'");
}

const Poset& Structure::order() const {
  return std::visit(
      [](const auto& v) -> const Poset& {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, Poset>) {
          return v;
        } else {
          return v.order();
        }
      },
      value);
}

const JoinSemilattice* Structure::semilattice() const {
  if (const auto* s = std::get_if<JoinSemilattice>(&value)) return s;
  return std::get_if<Lattice>(&value);
}

const Lattice* Structure::lattice() const { return std::get_if<Lattice>(&value); }

Structure make_structure(std::string name, StructureKind kind, Poset p) {
  Structure s;
  s.name = std::move(name);
  s.kind = kind;
  switch (kind) {
    case StructureKind::poset:
      s.value = std::move(p);
      break;
    case StructureKind::semilattice:
      s.value = build_semilattice(std::move(p));
      break;
    case StructureKind::lattice:
      s.value = build_lattice(build_semilattice(std::move(p)));
      break;
  }
  return s;
}

Structure parse_structure(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, path.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_structure_text(buf.str(), path.string());
}

Structure parse_structure_text(std::string_view text, std::string_view source) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    fail(source, location(text, e.byte == 0 ? 0 : e.byte - 1), "malformed JSON");
  }
  if (!doc.is_object()) fail(source, "document", "expected an object");

  const std::string name = field(doc, "name", json::value_t::string, source).get<std::string>();
  const std::string kind_text =
      field(doc, "kind", json::value_t::string, source).get<std::string>();
  StructureKind kind;
  try {
    kind = parse_kind(kind_text);
  } catch (const Error&) {
    fail(source, "field 'kind'", "unknown kind '" + kind_text + "'");
  }

  const json& elements = field(doc, "elements", json::value_t::array, source);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (!elements[i].is_string()) {
      fail(source, "field 'elements[" + std::to_string(i) + "]'", "expected a string");
    }
    names.push_back(elements[i].get<std::string>());
  }

  const json& covers = field(doc, "covers", json::value_t::array, source);
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t i = 0; i < covers.size(); ++i) {
    const std::string where = "field 'covers[" + std::to_string(i) + "]'";
    const json& c = covers[i];
    if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string()) {
      fail(source, where, "expected a pair of element names");
    }
    for (const auto& end : c) {
      const std::string n = end.get<std::string>();
      if (std::find(names.begin(), names.end(), n) == names.end()) {
        fail(source, where, "unknown element name '" + n + "'");
      }
    }
    pairs.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
  }

  return make_structure(name, kind, build_poset(std::move(names), pairs));
}

std::string serialize_structure(const Structure& s) {
  const Poset& p = s.order();
  json covers = json::array();
  for (Index b = 0; b < p.size(); ++b) {
    for (Index a : p.lower_covers(b)) covers.push_back({p.name(a), p.name(b)});
  }
  json doc = json::object();
  doc["name"] = s.name;
  doc["kind"] = std::string(to_string(s.kind));
  doc["elements"] = p.names();
  doc["covers"] = std::move(covers);
  return doc.dump(2) + "\n";
}

std::string export_dot(const DepGraph& g) {
  const auto& names = g.names();
  std::vector<Index> vs = g.vertices().indices();
  std::sort(vs.begin(), vs.end(), [&](Index a, Index b) { return names[a] < names[b]; });
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& [u, v] : g.edges()) edges.emplace_back(names[u], names[v]);
  std::sort(edges.begin(), edges.end());

  const auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  };
  std::string out = "digraph G {\n";
  for (Index v : vs) out += "  " + quote(names[v]) + ";\n";
  for (const auto& [u, v] : edges) out += "  " + quote(u) + " -> " + quote(v) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace latgraph
