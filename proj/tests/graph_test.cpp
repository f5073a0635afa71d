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

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "fourcolor/errors.hpp"
#include "oracles.hpp"

namespace fourcolor {
namespace {

using namespace testing;

EmbeddedGraph triangle() { return EmbeddedGraph::from_rotation({{A, {B, C}}, {B, {C, A}}, {C, {A, B}}}); }

std::set<VertexId> trapped(const EmbeddedGraph& g) {
  std::set<VertexId> out;
  for (VertexId v : g.vertices())
    if (classify_vertex(g, v) == VertexClass::Trapped) out.insert(v);
  return out;
}

FaceWalk face_on(const EmbeddedGraph& g, std::set<VertexId> vs) {
  for (const FaceWalk& f : trace_faces(g))
    if (std::set<VertexId>(f.vertices.begin(), f.vertices.end()) == vs) return f;
  ADD_FAILURE() << "no such face";
  return {};
}

TEST(Faces, K4HasFourTriangles) {
  auto faces = trace_faces(k4_abcd());
  ASSERT_EQ(faces.size(), 4u);
  for (const auto& f : faces) EXPECT_EQ(f.size(), 3u);
}

TEST(Faces, TriangleHasInnerAndOuterWalk) {
  auto faces = trace_faces(triangle());
  ASSERT_EQ(faces.size(), 2u);
  EXPECT_EQ(faces[0].size(), 3u);
  EXPECT_EQ(faces[1].size(), 3u);
  // Opposite orientations of the same cycle.
  std::vector<VertexId> rev(faces[1].vertices.rbegin(), faces[1].vertices.rend());
  EXPECT_TRUE(same_cycle(faces[0].vertices, rev));
}

TEST(Faces, InsideCreationGivesSixTriangles) {
  auto faces = trace_faces(fig2a());
  ASSERT_EQ(faces.size(), 6u);
  for (const auto& f : faces) EXPECT_EQ(f.size(), 3u);
}

TEST(Faces, EveryDartUsedOnce) {
  const auto g = random_induced_mpg(40, 3).graph;
  std::set<std::pair<VertexId, VertexId>> darts;
  for (const auto& f : trace_faces(g))
    for (const auto& d : f.darts()) EXPECT_TRUE(darts.insert(d).second);
  EXPECT_EQ(darts.size(), 2 * g.edge_count());
}

TEST(Faces, TraceFaceFollowsSuccessor) {
  const auto g = k4_abcd();
  const FaceWalk f = trace_face(g, A, B);
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(f.vertices[0], A);
  EXPECT_EQ(f.vertices[1], B);
  EXPECT_EQ(f.vertices[2], face_successor(g, A, B));
}

TEST(Euler, Counts) {
  EXPECT_EQ(euler_counts(k4_abcd()), (EulerCounts{4, 4, 6}));
  EXPECT_EQ(euler_counts(fig2a()), (EulerCounts{6, 5, 9}));
  EXPECT_EQ(euler_counts(triangle()), (EulerCounts{2, 3, 3}));
}

TEST(Euler, SingleVertexIsOneFace) {
  EmbeddedGraph g;
  g.add_vertex(A);
  EXPECT_EQ(euler_counts(g), (EulerCounts{1, 1, 0}));
}

TEST(Euler, ToroidalRotationIsRejected) {
  // K4 with one rotation reversed traces fewer faces than a sphere allows.
  auto rot = k4_abcd().rotations();
  std::reverse(rot[A].begin(), rot[A].end());
  const auto g = EmbeddedGraph::from_rotation(rot);
  EXPECT_LT(trace_faces(g).size(), 4u);
  EXPECT_THROW(euler_counts(g), StructuralError);
  EXPECT_THROW(validate(g), StructuralError);
  EXPECT_FALSE(is_mpg(g));
}

TEST(Mpg, Recognition) {
  EXPECT_TRUE(is_mpg(k4_abcd()));
  EXPECT_TRUE(is_mpg(fig2b()));
  EXPECT_FALSE(is_mpg(compute_embedding(k33(true))));
  EXPECT_FALSE(is_mpg(triangle()));
}

TEST(Mpg, EdgeCountMatchesArithmetic) {
  for (std::size_t n : {4u, 5u, 12u, 60u}) {
    const auto g = random_induced_mpg(n, n).graph;
    EXPECT_EQ(g.edge_count(), mpg_edges(n));
    EXPECT_EQ(trace_faces(g).size(), mpg_faces(n));
  }
}

TEST(Classify, K4WithOuterABC) {
  const auto g = k4_abcd();
  EXPECT_EQ(classify_vertex(g, D), VertexClass::Trapped);
  for (VertexId v : {A, B, C}) EXPECT_EQ(classify_vertex(g, v), VertexClass::Boundary);
}

TEST(Classify, ReembeddingFlipsA) {
  const auto g = set_outer_face(k4_abcd(), face_on(k4_abcd(), {B, C, D}));
  EXPECT_EQ(classify_vertex(g, A), VertexClass::Trapped);
  EXPECT_EQ(trapped(g), (std::set<VertexId>{A}));
}

TEST(Classify, NeedsOuterFace) {
  auto g = k4_abcd();
  g.set_outer(std::nullopt);
  EXPECT_THROW(classify_vertex(g, A), PreconditionError);
}

TEST(OuterFace, RedesignatingCurrentIsIdentity) {
  const auto g = k4_abcd();
  EXPECT_EQ(set_outer_face(g, FaceWalk{*g.outer_face()}), g);
}

TEST(OuterFace, DegreesDoNotDependOnOuterFace) {
  const auto g = fig2b();
  const auto expected = sorted_degrees(to_edge_list(g));
  EXPECT_EQ(expected, (std::vector<std::size_t>{3, 3, 4, 4, 4}));
  const auto faces = trace_faces(g);
  ASSERT_EQ(faces.size(), 6u);
  for (const auto& f : faces) EXPECT_EQ(degree_multiset(set_outer_face(g, f)), expected);
}

TEST(OuterFace, RejectsNonFace) {
  EXPECT_THROW(set_outer_face(k4_abcd(), FaceWalk{{A, C, B, D}}), PreconditionError);
  EXPECT_THROW(EmbeddedGraph::from_rotation(k4_abcd().rotations(), std::vector<VertexId>{A, B}), StructuralError);
}

TEST(Cycles, SameCycleAndCanonical) {
  std::vector<VertexId> x{C, A, B}, y{A, B, C}, z{A, C, B};
  EXPECT_TRUE(same_cycle(x, y));
  EXPECT_FALSE(same_cycle(x, z));
  EXPECT_EQ(canonical_cycle(x), y);
}

TEST(Structure, AsymmetricRotationNamesPair) {
  try {
    EmbeddedGraph::from_rotation({{A, {B, C}}, {B, {C}}, {C, {A, B}}});
    FAIL();
  } catch (const StructuralError& e) {
    EXPECT_NE(std::string(e.what()).find("0"), std::string::npos);
  }
}

TEST(Structure, RejectsLoopsAndRepeats) {
  EXPECT_THROW(EmbeddedGraph::from_rotation({{A, {A}}}), StructuralError);
  EXPECT_THROW(EmbeddedGraph::from_rotation({{A, {B, B}}, {B, {A, A}}}), StructuralError);
}

TEST(Structure, DisconnectedFailsValidation) {
  auto g = EmbeddedGraph::from_rotation({{A, {B}}, {B, {A}}});
  g.add_vertex(C);
  EXPECT_FALSE(is_connected(g));
  EXPECT_THROW(validate(g), DisconnectedError);
}

TEST(Structure, RotationsAreCanonical) {
  auto g = EmbeddedGraph::from_rotation({{A, {C, B}}, {B, {A, C}}, {C, {B, A}}});
  auto rot = g.rotation(A);
  EXPECT_EQ(rot.front(), B);
  EXPECT_EQ(g, EmbeddedGraph::from_rotation({{A, {B, C}}, {B, {C, A}}, {C, {A, B}}}));
}

TEST(Structure, Accessors) {
  const auto g = fig2a();
  EXPECT_EQ(g.vertex_count(), 5u);
  EXPECT_EQ(g.edge_count(), 9u);
  EXPECT_EQ(g.next_free_id(), F);
  EXPECT_TRUE(g.adjacent(E, A));
  EXPECT_FALSE(g.adjacent(E, B));
  EXPECT_EQ(g.label(E), "E");
  EXPECT_THROW(g.rotation(F), PreconditionError);
  auto edges = g.edges();
  EXPECT_TRUE(std::is_sorted(edges.begin(), edges.end()));
  for (const auto& [u, v] : edges) EXPECT_LT(u, v);
}

TEST(Structure, DegreesAgreeWithEdgeCount) {
  const auto g = random_induced_mpg(30, 11).graph;
  const auto oracle = degrees_from_edges(to_edge_list(g));
  for (VertexId v : g.vertices()) EXPECT_EQ(g.degree(v), oracle.at(v));
}

TEST(Structure, EditingPrimitives) {
  auto g = triangle();
  g.erase_edge(A, B);
  EXPECT_FALSE(g.adjacent(A, B));
  EXPECT_EQ(g.edge_count(), 2u);
  g.insert_neighbor_after(A, C, B);
  g.insert_neighbor_after(B, C, A);
  EXPECT_EQ(g, triangle());
}

}  // namespace
}  // namespace fourcolor
