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


#include "fourcolor/map_pipeline.hpp"

#include <map>
#include <set>

#include "fourcolor/embedding.hpp"
#include "fourcolor/errors.hpp"

namespace fourcolor {

EdgeListGraph map_to_graph(const MapDoc& map) {
  EdgeListGraph g;
  std::map<std::string, VertexId> id;
  for (const std::string& name : map.countries) {
    if (name.empty()) throw InvalidInputError("country with an empty name");
    const VertexId v{static_cast<std::uint32_t>(g.vertices.size())};
    if (!id.emplace(name, v).second) throw InvalidInputError("duplicate country '" + name + "'");
    g.vertices.push_back(v);
    g.labels[v] = name;
  }
  std::set<Edge> seen;
  for (const auto& [a, b] : map.borders) {
    auto ia = id.find(a);
    auto ib = id.find(b);
    if (ia == id.end()) throw InvalidInputError("border names unknown country '" + a + "'");
    if (ib == id.end()) throw InvalidInputError("border names unknown country '" + b + "'");
    if (a == b) throw InvalidInputError("country '" + a + "' borders itself");
    const Edge e = make_edge(ia->second, ib->second);
    if (seen.insert(e).second) g.edges.push_back(e);
  }
  return g;
}

PipelineResult color_graph(const EdgeListGraph& g, Strategy strategy) {
  EmbeddedGraph embedded = compute_embedding(g);
  PipelineResult out;
  if (embedded.vertex_count() < 4) {
    std::size_t i = 0;
    for (VertexId v : embedded.vertices()) out.coloring[v] = kPalette[i++];
    return out;
  }
  const Triangulation tri = triangulate(embedded);
  Reduction reduced = reduce_to_k4(tri.mpg, strategy);
  Replay replayed = replay_coloring(std::move(reduced.k4), creation_script(reduced.log));
  if (replayed.graph != tri.mpg) throw StructuralError("replayed graph differs from the triangulated graph");
  EmbeddedGraph restricted = restrict_graph(replayed.graph, tri.record);
  if (restricted != embedded) throw StructuralError("restricted graph differs from the input embedding");

  out.coloring = std::move(replayed.coloring);
  out.triangulation = tri.record;
  out.log = std::move(reduced.log);
  return out;
}

MapColoring color_map(const MapDoc& map, Strategy strategy) {
  const EdgeListGraph g = map_to_graph(map);
  PipelineResult result = color_graph(g, strategy);
  MapColoring out;
  for (VertexId v : g.vertices) out.colors.emplace_back(g.labels.at(v), result.coloring.at(v));
  out.triangulation = std::move(result.triangulation);
  out.log = std::move(result.log);
  return out;
}

bool borders_respected(const MapDoc& map, const MapColoring& coloring) {
  std::map<std::string, Color> by_name(coloring.colors.begin(), coloring.colors.end());
  for (const std::string& c : map.countries)
    if (!by_name.contains(c)) return false;
  for (const auto& [a, b] : map.borders) {
    auto ia = by_name.find(a);
    auto ib = by_name.find(b);
    if (ia == by_name.end() || ib == by_name.end() || ia->second == ib->second) return false;
  }
  return true;
}

}  // namespace fourcolor
