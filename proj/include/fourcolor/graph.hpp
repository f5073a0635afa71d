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

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fourcolor/ids.hpp"

namespace fourcolor {

/// A closed walk around one face. Consecutive entries (and the last/first
/// pair) are the directed edges of the face.
struct FaceWalk {
  std::vector<VertexId> vertices;

  std::size_t size() const { return vertices.size(); }
  std::vector<std::pair<VertexId, VertexId>> darts() const;

  friend bool operator==(const FaceWalk&, const FaceWalk&) = default;
};

/// True when `a` and `b` are the same cyclic sequence (same orientation).
bool same_cycle(std::span<const VertexId> a, std::span<const VertexId> b);

/// Rotates a closed walk to its lexicographically smallest starting point.
std::vector<VertexId> canonical_cycle(std::vector<VertexId> walk);

struct EulerCounts {
  std::size_t faces = 0;
  std::size_t vertices = 0;
  std::size_t edges = 0;

  friend bool operator==(const EulerCounts&, const EulerCounts&) = default;
};

enum class VertexClass { Boundary, Trapped };

/// Vertices with a rotation system (cyclic neighbour order per vertex) and an
/// optional designated outer face.
///
/// Rotations are stored canonically, starting at the smallest neighbour, so
/// two graphs with the same cyclic orders compare equal. The outer face is
/// stored in canonical_cycle() form.
///
/// The editing members (add_vertex, insert_neighbor_after, erase_edge, ...)
/// are the low-level primitives used by the operation modules. They keep the
/// canonical forms but may leave the rotation system asymmetric between
/// calls; validate() checks the full set of invariants.
class EmbeddedGraph {
 public:
  using RotationMap = std::map<VertexId, std::vector<VertexId>>;

  EmbeddedGraph() = default;

  /// Builds a graph from a rotation system. Throws StructuralError when the
  /// rotation is asymmetric or not simple, or when `outer` is not a traced
  /// face.
  static EmbeddedGraph from_rotation(RotationMap rotation,
                                     std::optional<std::vector<VertexId>> outer = std::nullopt,
                                     LabelTable labels = {});

  std::size_t vertex_count() const { return rotation_.size(); }
  std::size_t edge_count() const { return half_edges_ / 2; }
  bool contains(VertexId v) const { return rotation_.contains(v); }
  bool adjacent(VertexId u, VertexId v) const;
  std::size_t degree(VertexId v) const { return rotation(v).size(); }

  /// Throws PreconditionError for an unknown vertex.
  std::span<const VertexId> rotation(VertexId v) const;
  const RotationMap& rotations() const { return rotation_; }

  std::vector<VertexId> vertices() const;
  /// Every edge once, as (smaller, larger), sorted.
  std::vector<Edge> edges() const;
  /// Smallest id strictly greater than every vertex id (0 for an empty graph).
  VertexId next_free_id() const;

  const std::optional<std::vector<VertexId>>& outer_face() const { return outer_; }

  const LabelTable& labels() const { return labels_; }
  std::string label(VertexId v) const { return label_of(labels_, v); }

  // Editing primitives.
  void add_vertex(VertexId v, std::vector<VertexId> rotation = {}, std::string label = {});
  /// Removes an isolated vertex (its rotation must already be empty).
  void erase_vertex(VertexId v);
  /// Inserts `w` into rotation(v) immediately after `after`; appends when
  /// rotation(v) is empty.
  void insert_neighbor_after(VertexId v, VertexId after, VertexId w);
  /// Removes `v` from rotation(u) only.
  void erase_neighbor(VertexId u, VertexId v);
  /// Removes u-v from both rotations.
  void erase_edge(VertexId u, VertexId v);
  void set_outer(std::optional<std::vector<VertexId>> walk);

  friend bool operator==(const EmbeddedGraph&, const EmbeddedGraph&) = default;

 private:
  RotationMap rotation_;
  std::optional<std::vector<VertexId>> outer_;
  LabelTable labels_;
  std::size_t half_edges_ = 0;
};

/// The neighbour immediately after `u` in rotation(v): the successor of the
/// directed edge (u, v) along its face.
VertexId face_successor(const EmbeddedGraph& g, VertexId u, VertexId v);

/// Traces the single face containing the directed edge (u, v).
FaceWalk trace_face(const EmbeddedGraph& g, VertexId u, VertexId v);

/// All faces. From directed edge (u, v) the walk continues with (v, w), w the
/// neighbour right after u in rotation(v). Faces are returned in order of
/// their first dart (vertex id, then rotation position); each walk starts at
/// that dart. Throws StructuralError naming the pair on an asymmetric
/// rotation.
std::vector<FaceWalk> trace_faces(const EmbeddedGraph& g);

/// (F, V, E) with the Euler identity F + V = E + 2 checked. A single
/// isolated vertex counts one face. Throws StructuralError reporting the
/// genus defect on violation.
EulerCounts euler_counts(const EmbeddedGraph& g);

bool is_connected(const EmbeddedGraph& g);

/// Full invariant check: symmetry, simplicity, connectivity, Euler identity,
/// and outer face being a traced face. Throws StructuralError /
/// DisconnectedError.
void validate(const EmbeddedGraph& g);

/// Maximal planar: V >= 4, connected, planar-embedded and every traced face
/// (outer included) is a triangle.
bool is_mpg(const EmbeddedGraph& g);

VertexClass classify_vertex(const EmbeddedGraph& g, VertexId v);

/// Returns a copy with `face` (one of trace_faces(g)) designated as outer.
EmbeddedGraph set_outer_face(const EmbeddedGraph& g, const FaceWalk& face);

/// Degrees sorted ascending.
std::vector<std::size_t> degree_multiset(const EmbeddedGraph& g);

/// K4 with outer face (a, b, c) and `d` trapped.
EmbeddedGraph make_k4(VertexId a, VertexId b, VertexId c, VertexId d, LabelTable labels = {});

/// Undirected edge list plus vertex set; the form maps and text files arrive in.
struct EdgeListGraph {
  std::vector<VertexId> vertices;
  std::vector<Edge> edges;
  LabelTable labels;
};

EdgeListGraph to_edge_list(const EmbeddedGraph& g);

}  // namespace fourcolor
