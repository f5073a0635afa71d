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
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fourcolor/errors.hpp"
#include "fourcolor/graph.hpp"

namespace fourcolor {

enum class OpKind { InsideCreate, OutsideCreate, InsideAnnihilate, OutsideAnnihilate };

bool is_creation(OpKind kind);
bool is_inside(OpKind kind);
/// Create <-> Annihilate, keeping inside/outside.
OpKind inverse(OpKind kind);

/// One creation or annihilation. `anchors` is the triangle the vertex is
/// attached to / detached from, sorted by id.
///
/// For outside entries `entrapped` names the anchor that is trapped on the
/// creation side of the event (the vertex an outside creation encloses, or
/// the vertex an outside annihilation releases back onto the boundary).
/// The textual notation omits it.
struct OpEntry {
  OpKind kind = OpKind::InsideCreate;
  VertexId vertex;
  std::array<VertexId, 3> anchors{};
  std::optional<VertexId> entrapped;

  friend bool operator==(const OpEntry&, const OpEntry&) = default;
};

struct OpLog {
  std::vector<OpEntry> entries;
  /// Names of every vertex the entries mention.
  LabelTable labels;

  std::size_t size() const { return entries.size(); }
  friend bool operator==(const OpLog&, const OpLog&) = default;
};

/// `in(E)_ACD` / `out(C)_BDE`. Anchor names are concatenated when each is a
/// single character and comma-joined otherwise.
std::string to_notation(const OpEntry& entry, const LabelTable& labels);
/// `[in(F)_BCE, out(C)_BDE]`
std::string to_notation(const OpLog& log);

/// Reverses an annihilation log into the creation script that rebuilds the
/// graph.
OpLog creation_script(const OpLog& annihilations);

struct Step {
  EmbeddedGraph graph;
  OpEntry entry;
};

/// Inserts `v` into the interior face with vertex set `face`. The outer face
/// is unchanged and `v` is trapped.
Step inside_create(EmbeddedGraph g, const std::array<VertexId, 3>& face, VertexId v, std::string label = {});

/// Inserts `v` into the outer face and joins it to the three boundary
/// vertices; `entrap` leaves the boundary, `v` joins it.
Step outside_create(EmbeddedGraph g, VertexId entrap, VertexId v, std::string label = {});

Step inside_annihilate(EmbeddedGraph g, VertexId v);
Step outside_annihilate(EmbeddedGraph g, VertexId v);

/// Inside or outside annihilation according to classify_vertex.
Step annihilate(EmbeddedGraph g, VertexId v);

/// Replays a logged entry (either direction). Created vertices take their
/// names from `labels`.
Step apply_entry(EmbeddedGraph g, const OpEntry& entry, const LabelTable& labels = {});

enum class Strategy {
  /// Lowest-id trapped degree-3 vertex, else lowest-id boundary one.
  TrappedFirst,
  /// Lowest-id degree-3 vertex regardless of class.
  Any,
};

struct Degree3Vertex {
  VertexId vertex;
  VertexClass cls;
};

std::optional<Degree3Vertex> find_degree3(const EmbeddedGraph& g, Strategy strategy = Strategy::TrappedFirst);

/// Re-selects the outer face to maximise the number of trapped degree-3
/// vertices. The current outer face (or the first traced face when none is
/// designated) wins ties, then trace order decides.
EmbeddedGraph prefer_trapped_degree3(EmbeddedGraph g);

/// Raised when an MPG with more than four vertices has no degree-3 vertex
/// under any choice of outer face.
class StuckError : public Error {
 public:
  StuckError(EmbeddedGraph graph, std::vector<std::size_t> degrees);

  const EmbeddedGraph& graph() const { return graph_; }
  const std::vector<std::size_t>& degrees() const { return degrees_; }

 private:
  EmbeddedGraph graph_;
  std::vector<std::size_t> degrees_;
};

/// Called with the state after each operation together with the entry that
/// produced it.
using StepObserver = std::function<void(const EmbeddedGraph&, const OpEntry&)>;

struct Reduction {
  EmbeddedGraph k4;
  OpLog log;
};

/// Annihilates degree-3 vertices until K4 remains. When no degree-3 vertex is
/// found, every outer face is tried once before StuckError.
Reduction reduce_to_k4(EmbeddedGraph g, Strategy strategy = Strategy::Any,
                       const StepObserver& observer = {});

struct Generated {
  EmbeddedGraph graph;
  OpLog log;
};

/// Starts from K4 on ids 0..3 and applies n-4 creations, each picking inside
/// or outside with equal odds and then a target uniformly (an interior face,
/// or the boundary vertex to entrap). Deterministic for a given seed.
Generated random_induced_mpg(std::size_t n, std::uint64_t seed, const StepObserver& observer = {});

}  // namespace fourcolor
