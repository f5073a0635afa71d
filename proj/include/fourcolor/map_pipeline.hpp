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

#include <string>
#include <utility>
#include <vector>

#include "fourcolor/coloring.hpp"
#include "fourcolor/graph.hpp"
#include "fourcolor/operations.hpp"
#include "fourcolor/triangulation.hpp"

namespace fourcolor {

struct MapDoc {
  std::vector<std::string> countries;
  std::vector<std::pair<std::string, std::string>> borders;
};

/// One vertex per country (ids follow country order, labels are the
/// names) and one edge per distinct border. Throws InvalidInputError for
/// unknown or duplicate countries and self-borders.
EdgeListGraph map_to_graph(const MapDoc& map);

/// A coloured graph plus the operations that produced it.
struct PipelineResult {
  Coloring coloring;
  TriangulationRecord triangulation;
  OpLog log;
};

/// embed -> triangulate -> reduce -> colour K4 -> replay -> restrict.
/// Graphs with fewer than four vertices are coloured c1, c2, ... directly.
/// Throws NonPlanarError, DisconnectedError or StuckError.
PipelineResult color_graph(const EdgeListGraph& g, Strategy strategy = Strategy::Any);

struct MapColoring {
  /// Country order.
  std::vector<std::pair<std::string, Color>> colors;
  TriangulationRecord triangulation;
  OpLog log;
};

MapColoring color_map(const MapDoc& map, Strategy strategy = Strategy::Any);

/// Checks the border constraint directly on the map.
bool borders_respected(const MapDoc& map, const MapColoring& coloring);

}  // namespace fourcolor
