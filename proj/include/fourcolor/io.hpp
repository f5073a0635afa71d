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


#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "fourcolor/coloring.hpp"
#include "fourcolor/graph.hpp"
#include "fourcolor/map_pipeline.hpp"
#include "fourcolor/operations.hpp"
#include "fourcolor/triangulation.hpp"

namespace fourcolor::io {

using Json = nlohmann::ordered_json;

// Vertex ids are written as JSON integers when a graph carries no labels and
// as label strings otherwise. Readers accept either form, but not a mixture.

/// {"vertices": [...], "edges": [[u,v],...], "rotation": {v: [...]}, "outer_face": [...]}
Json graph_to_json(const EmbeddedGraph& g);

/// Uses "rotation" when present (checked against "edges"), otherwise embeds
/// the edge list. "outer_face" may be given in either orientation.
EmbeddedGraph graph_from_json(const Json& doc);

/// Vertices and edges only; no planarity requirement.
EdgeListGraph edge_list_from_json(const Json& doc);

/// One `u v` pair per line; `#` starts a comment. Isolated vertices cannot
/// be expressed.
std::string edge_list_to_text(const EdgeListGraph& g);
EdgeListGraph edge_list_from_text(std::string_view text);

/// [{"op": "in"|"out", "v": id, "anchors": [a,b,c]}, ...]; outside entries
/// also carry "entrap" when known.
Json oplog_to_json(const OpLog& log);
/// `creations` selects the direction the "in"/"out" tags are read in. String
/// ids are resolved through `labels`.
OpLog oplog_from_json(const Json& doc, bool creations, const LabelTable& labels = {});

/// {"added": [{"u": .., "v": ..}, ...]}
Json triangulation_to_json(const TriangulationRecord& record, const LabelTable& labels);
TriangulationRecord triangulation_from_json(const Json& doc, const LabelTable& labels = {});

/// {"colors": {id: 1..4}, "palette": ["blue", "yellow", "red", "green"]}
Json coloring_to_json(const Coloring& coloring, const LabelTable& labels);
Coloring coloring_from_json(const Json& doc, const LabelTable& labels = {});

/// {"countries": [...], "borders": [[a,b],...]}
MapDoc map_from_json(const Json& doc);
/// {"colors": {country: name}, "palette": [...], "provenance": {"triangulation": .., "log": ..}}
Json map_coloring_to_json(const MapColoring& coloring);

/// Nodes and edges in id order; fill colours blue/yellow/red/green.
std::string to_dot(const EdgeListGraph& g, const Coloring* coloring = nullptr);

/// Parses text as JSON, mapping syntax errors to InvalidInputError.
Json parse_json(std::string_view text);

}  // namespace fourcolor::io
