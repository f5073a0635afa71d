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
#include <vector>

#include "fourcolor/graph.hpp"

namespace fourcolor {

struct AddedEdge {
  VertexId u;
  VertexId v;
  /// Face walk the chord split, as it was just before insertion.
  std::vector<VertexId> host_face;

  friend bool operator==(const AddedEdge&, const AddedEdge&) = default;
};

struct TriangulationRecord {
  std::vector<AddedEdge> added;
  /// Outer face of the input, restored by restrict_graph.
  std::optional<std::vector<VertexId>> original_outer;

  friend bool operator==(const TriangulationRecord&, const TriangulationRecord&) = default;
};

struct Triangulation {
  EmbeddedGraph mpg;
  TriangulationRecord record;
};

/// Adds chords until every face is a triangle, aiming for a result that
/// reduces to K4 by degree-3 annihilations. Vertices of degree at most 3 are
/// eliminated one at a time: a vertex already of degree 3 inside three
/// triangles is removed first, otherwise the vertex needing the fewest chords
/// to reach that state (chords join it to vertices on its own faces, or cut
/// off corners) is closed and removed. Ties go to the lowest id. Whatever is
/// left is finished by ears: first non-triangular face, walk from its
/// lowest-id vertex, first chord i to i+2 with distinct non-adjacent ends.
/// When elimination stalls, the whole run is retried in up to 31 seeded
/// shuffled candidate orders; the first complete run wins, else the first.
/// Deterministic for a given input.
///
/// The outer face of the result is what remains of the input's outer face
/// (the first traced face when none is designated), then re-selected so that
/// a trapped degree-3 vertex is exposed when possible.
Triangulation triangulate(const EmbeddedGraph& g);

/// Removes recorded chords in reverse order and restores the original outer
/// face. Throws MismatchError when a recorded chord is absent.
EmbeddedGraph restrict_graph(const EmbeddedGraph& g, const TriangulationRecord& record);

}  // namespace fourcolor
