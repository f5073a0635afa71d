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


#include "fourcolor/operations.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace fourcolor {
namespace {

std::array<VertexId, 3> sorted_triple(VertexId a, VertexId b, VertexId c) {
  std::array<VertexId, 3> t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

bool is_triangle_face(const EmbeddedGraph& g, VertexId a, VertexId b, VertexId c) {
  return face_successor(g, a, b) == c && face_successor(g, b, c) == a && face_successor(g, c, a) == b;
}

void check_invariants([[maybe_unused]] const EmbeddedGraph& g) {
#ifdef FOURCOLOR_CHECK_INVARIANTS
  // is_mpg covers symmetry, connectivity and the Euler identity.
  if (!is_mpg(g)) throw StructuralError("operation left a graph that is not maximal planar");
  const auto& outer = g.outer_face();
  if (!outer || outer->size() != 3 || !is_triangle_face(g, (*outer)[0], (*outer)[1], (*outer)[2]))
    throw StructuralError("outer face is not a traced triangle");
#endif
}

// The face walk over exactly the vertices {a, b, c}, if one is traced.
std::optional<std::array<VertexId, 3>> locate_triangle(const EmbeddedGraph& g, const std::array<VertexId, 3>& t) {
  const auto [a, b, c] = t;
  for (VertexId v : t)
    if (!g.contains(v)) return std::nullopt;
  if (a == b || b == c || a == c) return std::nullopt;
  if (!g.adjacent(a, b) || !g.adjacent(b, c) || !g.adjacent(a, c)) return std::nullopt;
  if (is_triangle_face(g, a, b, c)) return std::array<VertexId, 3>{a, b, c};
  if (is_triangle_face(g, a, c, b)) return std::array<VertexId, 3>{a, c, b};
  return std::nullopt;
}

bool is_outer(const EmbeddedGraph& g, const std::array<VertexId, 3>& walk) {
  return g.outer_face() && same_cycle(*g.outer_face(), walk);
}

// Splits the triangular face x->y->z around a new vertex v.
void insert_into_face(EmbeddedGraph& g, VertexId x, VertexId y, VertexId z, VertexId v, std::string label) {
  g.add_vertex(v, {x, z, y}, std::move(label));
  g.insert_neighbor_after(y, x, v);
  g.insert_neighbor_after(z, y, v);
  g.insert_neighbor_after(x, z, v);
}

void require_fresh(const EmbeddedGraph& g, VertexId v) {
  if (g.contains(v)) throw PreconditionError("vertex " + g.label(v) + " already present");
}

void require_mpg_size(const EmbeddedGraph& g) {
  if (g.vertex_count() < 4) throw PreconditionError("operation requires a maximal planar graph with at least 4 vertices");
}

std::string describe_degrees(const std::vector<std::size_t>& degrees) {
  std::map<std::size_t, std::size_t> counts;
  for (std::size_t d : degrees) ++counts[d];
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, k] : counts) {
    os << (first ? "" : ", ") << d << "x" << k;
    first = false;
  }
  return os.str();
}

// Shared body of both annihilations; `expected` is the class the caller
// asked for.
Step annihilate_as(EmbeddedGraph g, VertexId v, VertexClass expected) {
  if (!g.contains(v)) throw PreconditionError("unknown vertex " + g.label(v));
  if (g.degree(v) != 3)
    throw PreconditionError("annihilation needs a degree-3 vertex; " + g.label(v) + " has degree " +
                            std::to_string(g.degree(v)));
  if (g.vertex_count() <= 4) throw PreconditionError("annihilation would reduce the graph below K4");
  const VertexClass cls = classify_vertex(g, v);
  if (cls != expected)
    throw PreconditionError(g.label(v) + (cls == VertexClass::Boundary
                                              ? " is a boundary vertex; use outside annihilation"
                                              : " is trapped; use inside annihilation"));

  const std::array<VertexId, 3> nb{g.rotation(v)[0], g.rotation(v)[1], g.rotation(v)[2]};
  OpEntry entry;
  entry.kind = cls == VertexClass::Boundary ? OpKind::OutsideAnnihilate : OpKind::InsideAnnihilate;
  entry.vertex = v;
  entry.anchors = sorted_triple(nb[0], nb[1], nb[2]);
  if (cls == VertexClass::Boundary) {
    for (VertexId w : nb)
      if (classify_vertex(g, w) == VertexClass::Trapped) entry.entrapped = w;
  }

  for (VertexId w : nb) g.erase_edge(v, w);
  g.erase_vertex(v);

  auto merged = locate_triangle(g, entry.anchors);
  if (!merged) throw StructuralError("neighbours of an annihilated vertex do not bound a face");
  if (cls == VertexClass::Boundary) g.set_outer(std::vector<VertexId>(merged->begin(), merged->end()));
  check_invariants(g);
  return Step{std::move(g), entry};
}

}  // namespace

bool is_creation(OpKind kind) { return kind == OpKind::InsideCreate || kind == OpKind::OutsideCreate; }

bool is_inside(OpKind kind) { return kind == OpKind::InsideCreate || kind == OpKind::InsideAnnihilate; }

OpKind inverse(OpKind kind) {
  switch (kind) {
    case OpKind::InsideCreate: return OpKind::InsideAnnihilate;
    case OpKind::OutsideCreate: return OpKind::OutsideAnnihilate;
    case OpKind::InsideAnnihilate: return OpKind::InsideCreate;
    case OpKind::OutsideAnnihilate: return OpKind::OutsideCreate;
  }
  return kind;
}

std::string to_notation(const OpEntry& entry, const LabelTable& labels) {
  std::string out = is_inside(entry.kind) ? "in(" : "out(";
  out += label_of(labels, entry.vertex);
  out += ")_";
  bool single = true;
  for (VertexId a : entry.anchors) single = single && label_of(labels, a).size() == 1;
  for (std::size_t i = 0; i < 3; ++i) {
    if (i > 0 && !single) out += ",";
    out += label_of(labels, entry.anchors[i]);
  }
  return out;
}

std::string to_notation(const OpLog& log) {
  std::string out = "[";
  for (std::size_t i = 0; i < log.entries.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_notation(log.entries[i], log.labels);
  }
  return out + "]";
}

OpLog creation_script(const OpLog& annihilations) {
  OpLog script;
  script.labels = annihilations.labels;
  for (auto it = annihilations.entries.rbegin(); it != annihilations.entries.rend(); ++it) {
    OpEntry e = *it;
    e.kind = inverse(e.kind);
    script.entries.push_back(e);
  }
  return script;
}

Step inside_create(EmbeddedGraph g, const std::array<VertexId, 3>& face, VertexId v, std::string label) {
  require_mpg_size(g);
  require_fresh(g, v);
  auto walk = locate_triangle(g, face);
  if (!walk) throw PreconditionError("anchors do not form a traced triangular face");
  if (is_outer(g, *walk)) throw PreconditionError("anchors form the outer face; use outside creation");
  insert_into_face(g, (*walk)[0], (*walk)[1], (*walk)[2], v, std::move(label));
  check_invariants(g);
  OpEntry entry{OpKind::InsideCreate, v, sorted_triple(face[0], face[1], face[2]), std::nullopt};
  return Step{std::move(g), entry};
}

Step outside_create(EmbeddedGraph g, VertexId entrap, VertexId v, std::string label) {
  require_mpg_size(g);
  require_fresh(g, v);
  if (!g.outer_face()) throw PreconditionError("outer face is not designated");
  const auto outer = *g.outer_face();
  if (outer.size() != 3) throw PreconditionError("outer face is not a triangle");
  auto pos = std::find(outer.begin(), outer.end(), entrap);
  if (pos == outer.end()) throw PreconditionError(g.label(entrap) + " is not a boundary vertex");

  const VertexId x = outer[0], y = outer[1], z = outer[2];
  insert_into_face(g, x, y, z, v, std::move(label));
  // The new outer face is the one of (x,y,v), (y,z,v), (z,x,v) that avoids
  // the entrapped vertex.
  std::vector<VertexId> next_outer;
  if (entrap == z) next_outer = {x, y, v};
  else if (entrap == x) next_outer = {y, z, v};
  else next_outer = {z, x, v};
  g.set_outer(std::move(next_outer));
  check_invariants(g);
  OpEntry entry{OpKind::OutsideCreate, v, sorted_triple(x, y, z), entrap};
  return Step{std::move(g), entry};
}

Step inside_annihilate(EmbeddedGraph g, VertexId v) { return annihilate_as(std::move(g), v, VertexClass::Trapped); }

Step outside_annihilate(EmbeddedGraph g, VertexId v) {
  return annihilate_as(std::move(g), v, VertexClass::Boundary);
}

Step annihilate(EmbeddedGraph g, VertexId v) {
  const VertexClass cls = classify_vertex(g, v);
  return annihilate_as(std::move(g), v, cls);
}

Step apply_entry(EmbeddedGraph g, const OpEntry& entry, const LabelTable& labels) {
  auto name = [&](VertexId v) {
    auto it = labels.find(v);
    return it == labels.end() ? std::string{} : it->second;
  };
  switch (entry.kind) {
    case OpKind::InsideCreate:
      return inside_create(std::move(g), entry.anchors, entry.vertex, name(entry.vertex));
    case OpKind::OutsideCreate: {
      if (!g.outer_face()) throw PreconditionError("outer face is not designated");
      auto outer = *g.outer_face();
      std::sort(outer.begin(), outer.end());
      if (!std::equal(outer.begin(), outer.end(), entry.anchors.begin(), entry.anchors.end()))
        throw PreconditionError("outside creation anchors are not the boundary vertices");
      VertexId entrap = entry.entrapped.value_or(entry.anchors[0]);
      return outside_create(std::move(g), entrap, entry.vertex, name(entry.vertex));
    }
    case OpKind::InsideAnnihilate:
    case OpKind::OutsideAnnihilate: {
      if (!g.contains(entry.vertex)) throw PreconditionError("unknown vertex " + g.label(entry.vertex));
      auto nb = g.rotation(entry.vertex);
      if (nb.size() != 3 || sorted_triple(nb[0], nb[1], nb[2]) != entry.anchors)
        throw PreconditionError("annihilation anchors do not match the neighbours of " + g.label(entry.vertex));
      return entry.kind == OpKind::InsideAnnihilate ? inside_annihilate(std::move(g), entry.vertex)
                                                    : outside_annihilate(std::move(g), entry.vertex);
    }
  }
  throw PreconditionError("unknown operation kind");
}

std::optional<Degree3Vertex> find_degree3(const EmbeddedGraph& g, Strategy strategy) {
  std::optional<Degree3Vertex> boundary;
  for (const auto& [v, rot] : g.rotations()) {
    if (rot.size() != 3) continue;
    const VertexClass cls = classify_vertex(g, v);
    if (strategy == Strategy::Any || cls == VertexClass::Trapped) return Degree3Vertex{v, cls};
    if (!boundary) boundary = Degree3Vertex{v, cls};
  }
  return boundary;
}

EmbeddedGraph prefer_trapped_degree3(EmbeddedGraph g) {
  const auto faces = trace_faces(g);
  if (faces.empty()) return g;
  if (!g.outer_face()) g.set_outer(faces.front().vertices);
  // Trapped degree-3 count = all degree-3 vertices minus those on the outer
  // face, so the best outer face is the one touching the fewest of them.
  auto on_face = [&](const std::vector<VertexId>& walk) {
    return std::count_if(walk.begin(), walk.end(), [&](VertexId v) { return g.degree(v) == 3; });
  };
  auto best = on_face(*g.outer_face());
  const std::vector<VertexId>* choice = nullptr;
  for (const FaceWalk& f : faces) {
    if (auto n = on_face(f.vertices); n < best) {
      best = n;
      choice = &f.vertices;
    }
  }
  if (choice) g.set_outer(*choice);
  return g;
}

StuckError::StuckError(EmbeddedGraph graph, std::vector<std::size_t> degrees)
    : Error("no degree-3 vertex in a maximal planar graph with " + std::to_string(graph.vertex_count()) +
            " vertices (degrees " + describe_degrees(degrees) + ")"),
      graph_(std::move(graph)),
      degrees_(std::move(degrees)) {}

Reduction reduce_to_k4(EmbeddedGraph g, Strategy strategy, const StepObserver& observer) {
  if (!is_mpg(g)) throw PreconditionError("reduction requires a maximal planar graph");
  if (!g.outer_face()) throw PreconditionError("outer face is not designated");

  Reduction out;
  out.log.labels = g.labels();
  while (g.vertex_count() > 4) {
    auto pick = find_degree3(g, strategy);
    if (!pick) {
      // Degrees do not depend on the outer face, so this cannot succeed on an
      // MPG; it is tried once before giving up.
      for (const FaceWalk& f : trace_faces(g)) {
        EmbeddedGraph reselected = set_outer_face(g, f);
        if ((pick = find_degree3(reselected, strategy))) {
          g = std::move(reselected);
          break;
        }
      }
    }
    if (!pick) {
      auto degrees = degree_multiset(g);
      throw StuckError(std::move(g), std::move(degrees));
    }
    Step step = annihilate(std::move(g), pick->vertex);
    if (observer) observer(step.graph, step.entry);
    out.log.entries.push_back(step.entry);
    g = std::move(step.graph);
  }
  out.k4 = std::move(g);
  return out;
}

Generated random_induced_mpg(std::size_t n, std::uint64_t seed, const StepObserver& observer) {
  if (n < 4) throw PreconditionError("generator needs at least 4 vertices");
  std::mt19937_64 rng(seed);
  Generated out;
  out.graph = make_k4(VertexId{0}, VertexId{1}, VertexId{2}, VertexId{3});
  for (std::size_t i = 4; i < n; ++i) {
    const VertexId v{static_cast<std::uint32_t>(i)};
    const bool inside = std::uniform_int_distribution<int>(0, 1)(rng) == 0;
    Step step;
    if (inside) {
      std::vector<FaceWalk> interior;
      for (FaceWalk& f : trace_faces(out.graph))
        if (!same_cycle(f.vertices, *out.graph.outer_face())) interior.push_back(std::move(f));
      const auto& f = interior[std::uniform_int_distribution<std::size_t>(0, interior.size() - 1)(rng)];
      step = inside_create(std::move(out.graph), {f.vertices[0], f.vertices[1], f.vertices[2]}, v);
    } else {
      const auto& outer = *out.graph.outer_face();
      const VertexId entrap = outer[std::uniform_int_distribution<std::size_t>(0, 2)(rng)];
      step = outside_create(std::move(out.graph), entrap, v);
    }
    if (observer) observer(step.graph, step.entry);
    out.log.entries.push_back(step.entry);
    out.graph = std::move(step.graph);
  }
  return out;
}

}  // namespace fourcolor
