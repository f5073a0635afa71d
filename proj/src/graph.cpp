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


#include "fourcolor/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "fourcolor/errors.hpp"

namespace fourcolor {
namespace {

void canonicalize_rotation(std::vector<VertexId>& rot) {
  if (!rot.empty()) std::rotate(rot.begin(), std::min_element(rot.begin(), rot.end()), rot.end());
}

std::string pair_name(const EmbeddedGraph& g, VertexId u, VertexId v) {
  return "(" + g.label(u) + ", " + g.label(v) + ")";
}

// Dense view of a rotation system: vertex i owns darts offset[i] ..
// offset[i+1], head[d] is the neighbour index of dart d and twin[d] its
// reverse dart.
struct DartTable {
  std::vector<VertexId> ids;
  std::vector<std::size_t> offset{0};
  std::vector<std::size_t> head;
  std::vector<std::size_t> twin;

  explicit DartTable(const EmbeddedGraph& g) {
    const auto& rotations = g.rotations();
    ids.reserve(rotations.size());
    for (const auto& [v, rot] : rotations) {
      ids.push_back(v);
      offset.push_back(offset.back() + rot.size());
    }
    head.resize(offset.back());
    std::size_t d = 0;
    for (const auto& [v, rot] : rotations) {
      for (VertexId w : rot) {
        auto it = std::lower_bound(ids.begin(), ids.end(), w);
        if (it == ids.end() || *it != w) throw StructuralError("rotation names unknown vertex " + pair_name(g, v, w));
        head[d++] = static_cast<std::size_t>(it - ids.begin());
      }
    }
    twin.resize(head.size());
    for (std::size_t i = 0; i < ids.size(); ++i) {
      for (std::size_t e = offset[i]; e < offset[i + 1]; ++e) {
        const std::size_t j = head[e];
        std::size_t back = offset[j];
        while (back < offset[j + 1] && head[back] != i) ++back;
        if (back == offset[j + 1])
          throw StructuralError("asymmetric rotation: " + pair_name(g, ids[i], ids[j]) + " has no reverse entry");
        twin[e] = back;
      }
    }
  }

  bool simple() const {
    for (std::size_t i = 0; i < ids.size(); ++i)
      for (std::size_t d = offset[i]; d < offset[i + 1]; ++d) {
        if (head[d] == i) return false;
        for (std::size_t e = offset[i]; e < d; ++e)
          if (head[e] == head[d]) return false;
      }
    return true;
  }

  bool connected() const {
    if (ids.empty()) return true;
    std::vector<char> seen(ids.size(), 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t d = offset[v]; d < offset[v + 1]; ++d)
        if (!seen[head[d]]) {
          seen[head[d]] = 1;
          ++count;
          stack.push_back(head[d]);
        }
    }
    return count == ids.size();
  }

  // Calls visit(face, vertex_index) along every face in trace order; returns
  // the face count. From dart (u, v) the walk leaves v through the neighbour
  // after u.
  template <typename Visit>
  std::size_t walk_faces(Visit&& visit) const {
    std::vector<char> used(head.size(), 0);
    std::size_t faces = 0;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      for (std::size_t start = offset[i]; start < offset[i + 1]; ++start) {
        if (used[start]) continue;
        std::size_t d = start;
        std::size_t tail = i;
        while (!used[d]) {
          used[d] = 1;
          visit(faces, tail);
          const std::size_t h = head[d];
          const std::size_t t = twin[d];
          d = (t + 1 == offset[h + 1]) ? offset[h] : t + 1;
          tail = h;
        }
        if (d != start) throw StructuralError("face walk does not close");
        ++faces;
      }
    }
    return faces;
  }
};

void check_simple_symmetric(const EmbeddedGraph& g) {
  for (const auto& [v, rot] : g.rotations()) {
    for (auto it = rot.begin(); it != rot.end(); ++it) {
      const VertexId w = *it;
      if (w == v) throw StructuralError("self-loop at " + g.label(v));
      if (std::find(rot.begin(), it, w) != it) throw StructuralError("repeated neighbour in rotation " + pair_name(g, v, w));
      if (!g.contains(w)) throw StructuralError("rotation names unknown vertex " + pair_name(g, v, w));
      auto back = g.rotation(w);
      if (std::find(back.begin(), back.end(), v) == back.end())
        throw StructuralError("asymmetric rotation: " + pair_name(g, v, w) + " has no reverse entry");
    }
  }
}

std::size_t index_in(std::span<const VertexId> rot, VertexId x) {
  auto it = std::find(rot.begin(), rot.end(), x);
  return it == rot.end() ? rot.size() : static_cast<std::size_t>(it - rot.begin());
}

}  // namespace

std::vector<std::pair<VertexId, VertexId>> FaceWalk::darts() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    out.emplace_back(vertices[i], vertices[(i + 1) % vertices.size()]);
  return out;
}

bool same_cycle(std::span<const VertexId> a, std::span<const VertexId> b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  const std::size_t n = a.size();
  for (std::size_t shift = 0; shift < n; ++shift) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) ok = a[i] == b[(i + shift) % n];
    if (ok) return true;
  }
  return false;
}

std::vector<VertexId> canonical_cycle(std::vector<VertexId> walk) {
  const std::size_t n = walk.size();
  std::size_t best = 0;
  for (std::size_t s = 1; s < n; ++s) {
    for (std::size_t i = 0; i < n; ++i) {
      VertexId a = walk[(s + i) % n];
      VertexId b = walk[(best + i) % n];
      if (a != b) {
        if (a < b) best = s;
        break;
      }
    }
  }
  std::rotate(walk.begin(), walk.begin() + static_cast<std::ptrdiff_t>(best), walk.end());
  return walk;
}

EmbeddedGraph EmbeddedGraph::from_rotation(RotationMap rotation, std::optional<std::vector<VertexId>> outer,
                                           LabelTable labels) {
  EmbeddedGraph g;
  for (auto& [v, rot] : rotation) {
    canonicalize_rotation(rot);
    g.half_edges_ += rot.size();
  }
  g.rotation_ = std::move(rotation);
  std::set<std::string> names;
  for (auto& [v, name] : labels) {
    if (!g.contains(v)) continue;
    if (!names.insert(name).second) throw StructuralError("duplicate vertex label '" + name + "'");
    g.labels_.emplace(v, std::move(name));
  }
  check_simple_symmetric(g);
  if (outer) {
    bool found = false;
    for (const FaceWalk& f : trace_faces(g)) {
      if (same_cycle(f.vertices, *outer)) {
        found = true;
        break;
      }
    }
    if (!found) throw StructuralError("outer face is not a traced face of the rotation system");
    g.set_outer(std::move(outer));
  }
  return g;
}

bool EmbeddedGraph::adjacent(VertexId u, VertexId v) const {
  auto it = rotation_.find(u);
  if (it == rotation_.end()) return false;
  return std::find(it->second.begin(), it->second.end(), v) != it->second.end();
}

std::span<const VertexId> EmbeddedGraph::rotation(VertexId v) const {
  auto it = rotation_.find(v);
  if (it == rotation_.end()) throw PreconditionError("unknown vertex " + label(v));
  return it->second;
}

std::vector<VertexId> EmbeddedGraph::vertices() const {
  std::vector<VertexId> out;
  out.reserve(rotation_.size());
  for (const auto& [v, rot] : rotation_) out.push_back(v);
  return out;
}

std::vector<Edge> EmbeddedGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (const auto& [v, rot] : rotation_)
    for (VertexId w : rot)
      if (v < w) out.emplace_back(v, w);
  std::sort(out.begin(), out.end());
  return out;
}

VertexId EmbeddedGraph::next_free_id() const {
  return rotation_.empty() ? VertexId{0} : VertexId{rotation_.rbegin()->first.value + 1};
}

void EmbeddedGraph::add_vertex(VertexId v, std::vector<VertexId> rotation, std::string label) {
  if (contains(v)) throw PreconditionError("vertex " + this->label(v) + " already present");
  if (!label.empty()) {
    for (const auto& [id, name] : labels_)
      if (name == label) throw PreconditionError("label '" + label + "' already in use");
    labels_[v] = std::move(label);
  }
  canonicalize_rotation(rotation);
  half_edges_ += rotation.size();
  rotation_.emplace(v, std::move(rotation));
}

void EmbeddedGraph::erase_vertex(VertexId v) {
  auto it = rotation_.find(v);
  if (it == rotation_.end()) throw PreconditionError("unknown vertex " + label(v));
  if (!it->second.empty()) throw PreconditionError("vertex " + label(v) + " still has edges");
  rotation_.erase(it);
  labels_.erase(v);
}

void EmbeddedGraph::insert_neighbor_after(VertexId v, VertexId after, VertexId w) {
  auto it = rotation_.find(v);
  if (it == rotation_.end()) throw PreconditionError("unknown vertex " + label(v));
  auto& rot = it->second;
  if (rot.empty()) {
    rot.push_back(w);
  } else {
    auto pos = std::find(rot.begin(), rot.end(), after);
    if (pos == rot.end()) throw PreconditionError(label(after) + " is not a neighbour of " + label(v));
    rot.insert(pos + 1, w);
    canonicalize_rotation(rot);
  }
  ++half_edges_;
}

void EmbeddedGraph::erase_neighbor(VertexId u, VertexId v) {
  auto it = rotation_.find(u);
  if (it == rotation_.end()) throw PreconditionError("unknown vertex " + label(u));
  auto& rot = it->second;
  auto pos = std::find(rot.begin(), rot.end(), v);
  if (pos == rot.end()) throw PreconditionError(label(v) + " is not a neighbour of " + label(u));
  rot.erase(pos);
  canonicalize_rotation(rot);
  --half_edges_;
}

void EmbeddedGraph::erase_edge(VertexId u, VertexId v) {
  erase_neighbor(u, v);
  erase_neighbor(v, u);
}

void EmbeddedGraph::set_outer(std::optional<std::vector<VertexId>> walk) {
  if (walk) walk = canonical_cycle(std::move(*walk));
  outer_ = std::move(walk);
}

VertexId face_successor(const EmbeddedGraph& g, VertexId u, VertexId v) {
  auto rot = g.rotation(v);
  std::size_t i = index_in(rot, u);
  if (i == rot.size())
    throw StructuralError("asymmetric rotation: " + pair_name(g, u, v) + " has no reverse entry");
  return rot[(i + 1) % rot.size()];
}

FaceWalk trace_face(const EmbeddedGraph& g, VertexId u, VertexId v) {
  FaceWalk walk;
  const std::size_t limit = 2 * g.edge_count() + 1;
  VertexId a = u;
  VertexId b = v;
  do {
    walk.vertices.push_back(a);
    if (walk.vertices.size() > limit) throw StructuralError("face walk does not close");
    VertexId c = face_successor(g, a, b);
    a = b;
    b = c;
  } while (a != u || b != v);
  return walk;
}

std::vector<FaceWalk> trace_faces(const EmbeddedGraph& g) {
  const DartTable table(g);
  std::vector<FaceWalk> faces;
  table.walk_faces([&](std::size_t face, std::size_t vertex) {
    if (face == faces.size()) faces.emplace_back();
    faces.back().vertices.push_back(table.ids[vertex]);
  });
  return faces;
}

EulerCounts euler_counts(const EmbeddedGraph& g) {
  if (g.vertex_count() == 0) throw PreconditionError("empty graph");
  EulerCounts c;
  c.vertices = g.vertex_count();
  c.edges = g.edge_count();
  c.faces = c.edges == 0 ? 1 : DartTable(g).walk_faces([](std::size_t, std::size_t) {});
  if (c.faces + c.vertices != c.edges + 2) {
    long chi = static_cast<long>(c.vertices) - static_cast<long>(c.edges) + static_cast<long>(c.faces);
    std::ostringstream os;
    os << "Euler identity violated: F=" << c.faces << " V=" << c.vertices << " E=" << c.edges
       << " gives V-E+F=" << chi << ", genus defect " << (2 - chi) << "/2";
    throw StructuralError(os.str());
  }
  return c;
}

bool is_connected(const EmbeddedGraph& g) {
  if (g.vertex_count() == 0) return true;
  std::set<VertexId> seen{g.rotations().begin()->first};
  std::deque<VertexId> queue{g.rotations().begin()->first};
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (VertexId w : g.rotation(v))
      if (seen.insert(w).second) queue.push_back(w);
  }
  return seen.size() == g.vertex_count();
}

void validate(const EmbeddedGraph& g) {
  check_simple_symmetric(g);
  if (!is_connected(g)) throw DisconnectedError("graph is not connected");
  euler_counts(g);
  if (const auto& outer = g.outer_face()) {
    for (const FaceWalk& f : trace_faces(g))
      if (same_cycle(f.vertices, *outer)) return;
    throw StructuralError("outer face is not a traced face of the rotation system");
  }
}

bool is_mpg(const EmbeddedGraph& g) {
  if (g.vertex_count() < 4 || g.edge_count() != 3 * g.vertex_count() - 6) return false;
  try {
    const DartTable table(g);
    if (!table.simple() || !table.connected()) return false;
    std::vector<std::size_t> lengths;
    table.walk_faces([&](std::size_t face, std::size_t) {
      if (face == lengths.size()) lengths.push_back(0);
      ++lengths.back();
    });
    if (lengths.size() + g.vertex_count() != g.edge_count() + 2) return false;
    return std::all_of(lengths.begin(), lengths.end(), [](std::size_t n) { return n == 3; });
  } catch (const StructuralError&) {
    return false;
  }
}

VertexClass classify_vertex(const EmbeddedGraph& g, VertexId v) {
  if (!g.outer_face()) throw PreconditionError("outer face is not designated");
  if (!g.contains(v)) throw PreconditionError("unknown vertex " + g.label(v));
  const auto& outer = *g.outer_face();
  return std::find(outer.begin(), outer.end(), v) != outer.end() ? VertexClass::Boundary : VertexClass::Trapped;
}

EmbeddedGraph set_outer_face(const EmbeddedGraph& g, const FaceWalk& face) {
  for (const FaceWalk& f : trace_faces(g)) {
    if (same_cycle(f.vertices, face.vertices)) {
      EmbeddedGraph out = g;
      out.set_outer(face.vertices);
      return out;
    }
  }
  throw PreconditionError("walk is not a traced face of the graph");
}

std::vector<std::size_t> degree_multiset(const EmbeddedGraph& g) {
  std::vector<std::size_t> out;
  out.reserve(g.vertex_count());
  for (const auto& [v, rot] : g.rotations()) out.push_back(rot.size());
  std::sort(out.begin(), out.end());
  return out;
}

EmbeddedGraph make_k4(VertexId a, VertexId b, VertexId c, VertexId d, LabelTable labels) {
  EmbeddedGraph::RotationMap rot;
  rot[a] = {b, d, c};
  rot[b] = {c, d, a};
  rot[c] = {a, d, b};
  rot[d] = {a, b, c};
  return EmbeddedGraph::from_rotation(std::move(rot), std::vector<VertexId>{a, b, c}, std::move(labels));
}

EdgeListGraph to_edge_list(const EmbeddedGraph& g) {
  return EdgeListGraph{g.vertices(), g.edges(), g.labels()};
}

}  // namespace fourcolor
