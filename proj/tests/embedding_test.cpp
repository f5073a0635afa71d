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


#include "fourcolor/embedding.hpp"

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "fourcolor/errors.hpp"
#include "oracles.hpp"

namespace fourcolor {
namespace {

using namespace testing;

TEST(Embedding, K4) {
  const auto g = compute_embedding(complete_graph(4));
  validate(g);
  EXPECT_EQ(trace_faces(g).size(), 4u);
  EXPECT_FALSE(g.outer_face().has_value());
}

TEST(Embedding, KeepsEdgesAndLabels) {
  const auto in = k33(true);
  const auto g = compute_embedding(in);
  EXPECT_EQ(edge_set(to_edge_list(g)), edge_set(in));
  EXPECT_EQ(g.labels(), in.labels);
  EXPECT_EQ(euler_counts(g), (EulerCounts{4, 6, 8}));
}

TEST(Embedding, IcosahedronIsMaximal) {
  const auto g = compute_embedding(icosahedron_edges());
  EXPECT_TRUE(is_mpg(g));
  EXPECT_EQ(trace_faces(g).size(), mpg_faces(12));
}

void expect_nonplanar(const EdgeListGraph& in) {
  try {
    compute_embedding(in);
    FAIL() << "embedded a non-planar graph";
  } catch (const NonPlanarError& e) {
    const auto all = edge_set(in);
    EXPECT_FALSE(e.witness().empty());
    for (const auto& [a, b] : e.witness()) EXPECT_TRUE(all.contains(make_edge(a, b)));
  }
}

TEST(Embedding, K5IsNonPlanar) { expect_nonplanar(complete_graph(5)); }
TEST(Embedding, K33IsNonPlanar) { expect_nonplanar(k33(false)); }

TEST(Embedding, K33WitnessIsWholeGraph) {
  try {
    compute_embedding(k33(false));
    FAIL();
  } catch (const NonPlanarError& e) {
    EXPECT_EQ(e.witness().size(), 9u);
  }
}

TEST(Embedding, RejectsBadInput) {
  EdgeListGraph loop{{A, B}, {{A, B}, {A, A}}, {}};
  EXPECT_THROW(compute_embedding(loop), InvalidInputError);
  EdgeListGraph repeated{{A, B}, {{A, B}, {B, A}}, {}};
  EXPECT_THROW(compute_embedding(repeated), InvalidInputError);
  EdgeListGraph unknown{{A, B}, {{A, C}}, {}};
  EXPECT_THROW(compute_embedding(unknown), InvalidInputError);
  EdgeListGraph split{{A, B, C, D}, {{A, B}, {C, D}}, {}};
  EXPECT_THROW(compute_embedding(split), DisconnectedError);
}

TEST(Embedding, TinyGraphs) {
  EXPECT_EQ(compute_embedding(EdgeListGraph{{A}, {}, {}}).vertex_count(), 1u);
  const auto edge = compute_embedding(EdgeListGraph{{A, B}, {{A, B}}, {}});
  EXPECT_EQ(euler_counts(edge), (EulerCounts{1, 2, 1}));
}

TEST(Embedding, Deterministic) {
  const auto in = icosahedron_edges();
  EXPECT_EQ(compute_embedding(in), compute_embedding(in));
}

}  // namespace
}  // namespace fourcolor
