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

#include <array>
#include <cstddef>
#include <map>
#include <string_view>
#include <vector>

#include "fourcolor/graph.hpp"
#include "fourcolor/operations.hpp"

namespace fourcolor {

enum class Color : std::uint8_t { c1 = 1, c2 = 2, c3 = 3, c4 = 4 };

inline constexpr std::array<Color, 4> kPalette{Color::c1, Color::c2, Color::c3, Color::c4};

/// Display names used at the CLI boundary: blue, yellow, red, green.
std::string_view display_name(Color c);

using Coloring = std::map<VertexId, Color>;

/// Colours the four vertices c1..c4 in id order. Throws PreconditionError
/// unless `g` is K4.
Coloring color_k4(const EmbeddedGraph& g);

/// The palette colour missing from {a, b, c}. Throws PreconditionError on
/// repeated inputs.
Color fourth_color(Color a, Color b, Color c);

struct Replay {
  EmbeddedGraph graph;
  Coloring coloring;
};

/// Colours `k4` with color_k4 and then applies each creation in `script`,
/// giving the new vertex the fourth colour of its anchors.
Replay replay_coloring(EmbeddedGraph k4, const OpLog& script);

struct Verdict {
  bool proper = true;
  /// Monochromatic edges, sorted.
  std::vector<Edge> violations;
};

/// Throws PreconditionError when a vertex of `g` is uncoloured.
Verdict verify_proper(const EdgeListGraph& g, const Coloring& coloring);
Verdict verify_proper(const EmbeddedGraph& g, const Coloring& coloring);
Verdict verify_proper(const EdgeListGraph& g, const std::map<VertexId, int>& coloring);

std::size_t distinct_colors(const Coloring& coloring);

struct ChromaticResult {
  int chromatic = 0;
  /// Colours 1..chromatic.
  std::map<VertexId, int> witness;
};

inline constexpr std::size_t kDefaultOracleBound = 16;

/// Exhaustive backtracking: vertices in decreasing degree order, the first
/// one fixed to colour 1, and a vertex never opens more than one new colour.
/// Throws BoundExceededError for graphs over `max_vertices`.
ChromaticResult brute_force_chromatic(const EdgeListGraph& g, std::size_t max_vertices = kDefaultOracleBound);
ChromaticResult brute_force_chromatic(const EmbeddedGraph& g, std::size_t max_vertices = kDefaultOracleBound);

}  // namespace fourcolor
