// Copyright 2026 The fourcolor Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "fourcolor/io.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "fourcolor/embedding.hpp"
#include "fourcolor/errors.hpp"

namespace fourcolor::io {
namespace {

Json id_json(VertexId v, const LabelTable& labels) {
  if (labels.empty()) return v.value;
  return label_of(labels, v);
}

bool all_digits(std::string_view s) {
  return !s.empty() && s.size() < 10 && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

// Maps JSON ids (integers or label strings) back to VertexIds.
class IdResolver {
 public:
  explicit IdResolver(const LabelTable& labels) : numeric_(labels.empty()) {
    for (const auto& [v, name] : labels) by_name_.emplace(name, v);
  }

  VertexId operator()(const Json& j) const {
    if (j.is_number_unsigned()) {
      if (!numeric_) throw InvalidInputError("integer id " + j.dump() + " used where labels are expected");
      return VertexId{j.get<std::uint32_t>()};
    }
    if (j.is_string()) return key(j.get<std::string>());
    throw InvalidInputError("vertex id must be a non-negative integer or a string, got " + j.dump());
  }

  VertexId key(const std::string& name) const {
    if (auto it = by_name_.find(name); it != by_name_.end()) return it->second;
    if (numeric_ && all_digits(name)) return VertexId{static_cast<std::uint32_t>(std::stoul(name))};
    throw InvalidInputError("unknown vertex '" + name + "'");
  }

 private:
  bool numeric_;
  std::map<std::string, VertexId> by_name_;
};

const Json& require(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw InvalidInputError(std::string("missing \"") + key + "\"");
  return doc.at(key);
}

const Json& require_array(const Json& doc, const char* key) {
  const Json& j = require(doc, key);
  if (!j.is_array()) throw InvalidInputError(std::string("\"") + key + "\" must be an array");
  return j;
}

// Reads "vertices" and "edges"; labels are set when the ids are strings.
EdgeListGraph read_vertices_edges(const Json& doc) {
  const Json& vs = require_array(doc, "vertices");
  if (vs.empty()) throw InvalidInputError("graph has no vertices");
  const bool strings = vs.front().is_string();
  EdgeListGraph g;
  std::set<VertexId> seen;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const Json& v = vs[i];
    VertexId id;
    if (strings && v.is_string()) {
      id = VertexId{static_cast<std::uint32_t>(i)};
      const auto name = v.get<std::string>();
      for (const auto& [other, existing] : g.labels)
        if (existing == name) throw InvalidInputError("duplicate vertex '" + name + "'");
      g.labels[id] = name;
    } else if (!strings && v.is_number_unsigned()) {
      id = VertexId{v.get<std::uint32_t>()};
    } else {
      throw InvalidInputError("vertex ids must be all strings or all non-negative integers");
    }
    if (!seen.insert(id).second) throw InvalidInputError("duplicate vertex " + v.dump());
    g.vertices.push_back(id);
  }
  std::sort(g.vertices.begin(), g.vertices.end());

  IdResolver resolve(g.labels);
  for (const Json& e : require_array(doc, "edges")) {
    if (!e.is_array() || e.size() != 2) throw InvalidInputError("edge must be a pair, got " + e.dump());
    VertexId a = resolve(e[0]);
    VertexId b = resolve(e[1]);
    if (!seen.contains(a) || !seen.contains(b)) throw InvalidInputError("edge " + e.dump() + " names an unknown vertex");
    g.edges.emplace_back(a, b);
  }
  return g;
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInputError(std::string("malformed JSON: ") + e.what());
  }
}

Json graph_to_json(const EmbeddedGraph& g) {
  const LabelTable& labels = g.labels();
  Json doc = Json::object();
  Json vertices = Json::array();
  for (VertexId v : g.vertices()) vertices.push_back(id_json(v, labels));
  Json edges = Json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back(Json::array({id_json(a, labels), id_json(b, labels)}));
  Json rotation = Json::object();
  for (const auto& [v, rot] : g.rotations()) {
    Json r = Json::array();
    for (VertexId w : rot) r.push_back(id_json(w, labels));
    rotation[label_of(labels, v)] = std::move(r);
  }
  doc["vertices"] = std::move(vertices);
  doc["edges"] = std::move(edges);
  doc["rotation"] = std::move(rotation);
  if (g.outer_face()) {
    Json outer = Json::array();
    for (VertexId v : *g.outer_face()) outer.push_back(id_json(v, labels));
    doc["outer_face"] = std::move(outer);
  }
  return doc;
}

EdgeListGraph edge_list_from_json(const Json& doc) { return read_vertices_edges(doc); }

EmbeddedGraph graph_from_json(const Json& doc) {
  EdgeListGraph base = read_vertices_edges(doc);
  IdResolver resolve(base.labels);

  EmbeddedGraph g;
  if (doc.contains("rotation")) {
    const Json& rot = doc.at("rotation");
    if (!rot.is_object()) throw InvalidInputError("\"rotation\" must be an object");
    EmbeddedGraph::RotationMap rotation;
    for (VertexId v : base.vertices) rotation[v];
    for (const auto& [key, list] : rot.items()) {
      VertexId v = resolve.key(key);
      if (!rotation.contains(v)) throw InvalidInputError("rotation names unknown vertex '" + key + "'");
      if (!list.is_array()) throw InvalidInputError("rotation of '" + key + "' must be an array");
      for (const Json& w : list) rotation[v].push_back(resolve(w));
    }
    std::set<Edge> from_edges;
    for (const auto& [a, b] : base.edges) from_edges.insert(make_edge(a, b));
    std::set<Edge> from_rotation;
    for (const auto& [v, list] : rotation)
      for (VertexId w : list) from_rotation.insert(make_edge(v, w));
    if (from_edges != from_rotation) throw InvalidInputError("\"rotation\" and \"edges\" describe different graphs");
    g = EmbeddedGraph::from_rotation(std::move(rotation), std::nullopt, base.labels);
    validate(g);
  } else {
    g = compute_embedding(base);
  }

  if (doc.contains("outer_face")) {
    const Json& outer = doc.at("outer_face");
    if (!outer.is_array()) throw InvalidInputError("\"outer_face\" must be an array");
    std::vector<VertexId> walk;
    for (const Json& v : outer) walk.push_back(resolve(v));
    std::vector<VertexId> reversed(walk.rbegin(), walk.rend());
    for (const FaceWalk& f : trace_faces(g)) {
      if (same_cycle(f.vertices, walk) || same_cycle(f.vertices, reversed)) {
        g.set_outer(f.vertices);
        return g;
      }
    }
    throw InvalidInputError("\"outer_face\" is not a face of the embedding");
  }
  return g;
}

std::string edge_list_to_text(const EdgeListGraph& g) {
  auto name = [&](VertexId v) {
    std::string s = label_of(g.labels, v);
    if (s.empty() || std::any_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c) || c == '#'; }))
      throw InvalidInputError("label '" + s + "' cannot be written in the edge-list format");
    return s;
  };
  std::vector<VertexId> vertices = g.vertices;
  std::sort(vertices.begin(), vertices.end());
  std::vector<Edge> edges;
  for (const auto& [a, b] : g.edges) edges.push_back(make_edge(a, b));
  std::sort(edges.begin(), edges.end());

  std::ostringstream os;
  os << "#! vertices";
  for (VertexId v : vertices) os << ' ' << name(v);
  os << '\n';
  for (const auto& [a, b] : edges) os << name(a) << ' ' << name(b) << '\n';
  return os.str();
}

EdgeListGraph edge_list_from_text(std::string_view text) {
  std::vector<std::string> declared;
  std::vector<std::pair<std::string, std::string>> pairs;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.rfind("#! vertices", 0) == 0) {
      std::istringstream ls(line.substr(11));
      for (std::string tok; ls >> tok;) declared.push_back(tok);
      continue;
    }
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    for (std::string tok; ls >> tok;) tokens.push_back(tok);
    if (tokens.empty()) continue;
    if (tokens.size() != 2)
      throw InvalidInputError("line " + std::to_string(lineno) + ": expected `u v`, got '" + line + "'");
    pairs.emplace_back(tokens[0], tokens[1]);
  }

  std::vector<std::string> order = declared;
  for (const auto& [a, b] : pairs) {
    order.push_back(a);
    order.push_back(b);
  }
  std::vector<std::string> names;
  std::set<std::string> seen;
  for (const std::string& s : order)
    if (seen.insert(s).second) names.push_back(s);

  EdgeListGraph g;
  std::map<std::string, VertexId> id;
  const bool numeric = std::all_of(names.begin(), names.end(), [](const std::string& s) { return all_digits(s); });
  for (std::size_t i = 0; i < names.size(); ++i) {
    VertexId v = numeric ? VertexId{static_cast<std::uint32_t>(std::stoul(names[i]))}
                         : VertexId{static_cast<std::uint32_t>(i)};
    if (!numeric) g.labels[v] = names[i];
    id[names[i]] = v;
    g.vertices.push_back(v);
  }
  std::sort(g.vertices.begin(), g.vertices.end());
  for (const auto& [a, b] : pairs) g.edges.emplace_back(id.at(a), id.at(b));
  return g;
}

Json oplog_to_json(const OpLog& log) {
  Json doc = Json::array();
  for (const OpEntry& e : log.entries) {
    Json entry = Json::object();
    entry["op"] = is_inside(e.kind) ? "in" : "out";
    entry["v"] = id_json(e.vertex, log.labels);
    entry["anchors"] = Json::array();
    for (VertexId a : e.anchors) entry["anchors"].push_back(id_json(a, log.labels));
    if (e.entrapped) entry["entrap"] = id_json(*e.entrapped, log.labels);
    doc.push_back(std::move(entry));
  }
  return doc;
}

OpLog oplog_from_json(const Json& doc, bool creations, const LabelTable& labels) {
  if (!doc.is_array()) throw InvalidInputError("operation log must be an array");
  IdResolver resolve(labels);
  OpLog log;
  log.labels = labels;
  for (const Json& j : doc) {
    const Json& op = require(j, "op");
    OpEntry e;
    if (op == "in") e.kind = creations ? OpKind::InsideCreate : OpKind::InsideAnnihilate;
    else if (op == "out") e.kind = creations ? OpKind::OutsideCreate : OpKind::OutsideAnnihilate;
    else throw InvalidInputError("unknown op " + op.dump());
    e.vertex = resolve(require(j, "v"));
    const Json& anchors = require_array(j, "anchors");
    if (anchors.size() != 3) throw InvalidInputError("anchors must name three vertices");
    for (std::size_t i = 0; i < 3; ++i) e.anchors[i] = resolve(anchors[i]);
    std::sort(e.anchors.begin(), e.anchors.end());
    if (j.contains("entrap")) {
      if (op != "out") throw InvalidInputError("\"entrap\" is only meaningful for outside entries");
      e.entrapped = resolve(j.at("entrap"));
      if (std::find(e.anchors.begin(), e.anchors.end(), *e.entrapped) == e.anchors.end())
        throw InvalidInputError("\"entrap\" must be one of the anchors");
    }
    log.entries.push_back(e);
  }
  return log;
}

Json triangulation_to_json(const TriangulationRecord& record, const LabelTable& labels) {
  Json added = Json::array();
  for (const AddedEdge& e : record.added) {
    Json j = Json::object();
    j["u"] = id_json(e.u, labels);
    j["v"] = id_json(e.v, labels);
    added.push_back(std::move(j));
  }
  Json doc = Json::object();
  doc["added"] = std::move(added);
  return doc;
}

TriangulationRecord triangulation_from_json(const Json& doc, const LabelTable& labels) {
  IdResolver resolve(labels);
  TriangulationRecord record;
  for (const Json& j : require_array(doc, "added")) record.added.push_back(AddedEdge{resolve(require(j, "u")), resolve(require(j, "v")), {}});
  return record;
}

Json coloring_to_json(const Coloring& coloring, const LabelTable& labels) {
  Json colors = Json::object();
  for (const auto& [v, c] : coloring) colors[label_of(labels, v)] = static_cast<int>(c);
  Json palette = Json::array();
  for (Color c : kPalette) palette.push_back(display_name(c));
  Json doc = Json::object();
  doc["colors"] = std::move(colors);
  doc["palette"] = std::move(palette);
  return doc;
}

Coloring coloring_from_json(const Json& doc, const LabelTable& labels) {
  const Json& colors = require(doc, "colors");
  if (!colors.is_object()) throw InvalidInputError("\"colors\" must be an object");
  IdResolver resolve(labels);
  Coloring out;
  for (const auto& [key, value] : colors.items()) {
    if (!value.is_number_integer() || value.get<int>() < 1 || value.get<int>() > 4)
      throw InvalidInputError("colour of '" + key + "' must be 1, 2, 3 or 4");
    out[resolve.key(key)] = static_cast<Color>(value.get<int>());
  }
  return out;
}

MapDoc map_from_json(const Json& doc) {
  MapDoc map;
  for (const Json& c : require_array(doc, "countries")) {
    if (!c.is_string()) throw InvalidInputError("country names must be strings");
    map.countries.push_back(c.get<std::string>());
  }
  for (const Json& b : require_array(doc, "borders")) {
    if (!b.is_array() || b.size() != 2 || !b[0].is_string() || !b[1].is_string())
      throw InvalidInputError("border must be a pair of country names, got " + b.dump());
    map.borders.emplace_back(b[0].get<std::string>(), b[1].get<std::string>());
  }
  return map;
}

Json map_coloring_to_json(const MapColoring& coloring) {
  Json colors = Json::object();
  for (const auto& [country, c] : coloring.colors) colors[country] = display_name(c);
  Json palette = Json::array();
  for (Color c : kPalette) palette.push_back(display_name(c));
  Json provenance = Json::object();
  provenance["triangulation"] = triangulation_to_json(coloring.triangulation, coloring.log.labels);
  provenance["log"] = oplog_to_json(coloring.log);
  Json doc = Json::object();
  doc["colors"] = std::move(colors);
  doc["palette"] = std::move(palette);
  doc["provenance"] = std::move(provenance);
  return doc;
}

std::string to_dot(const EdgeListGraph& g, const Coloring* coloring) {
  std::vector<VertexId> vertices = g.vertices;
  std::sort(vertices.begin(), vertices.end());
  std::vector<Edge> edges;
  for (const auto& [a, b] : g.edges) edges.push_back(make_edge(a, b));
  std::sort(edges.begin(), edges.end());

  std::ostringstream os;
  os << "graph fourcolor {\n";
  if (coloring) os << "  node [style=filled];\n";
  for (VertexId v : vertices) {
    os << "  " << dot_quote(label_of(g.labels, v));
    if (coloring) {
      auto it = coloring->find(v);
      if (it != coloring->end()) os << " [fillcolor=" << display_name(it->second) << "]";
    }
    os << ";\n";
  }
  for (const auto& [a, b] : edges)
    os << "  " << dot_quote(label_of(g.labels, a)) << " -- " << dot_quote(label_of(g.labels, b)) << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace fourcolor::io
