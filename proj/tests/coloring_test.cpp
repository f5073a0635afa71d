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


#include "fourcolor/coloring.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "fourcolor/errors.hpp"
#include "oracles.hpp"

namespace fourcolor {
namespace {

using namespace testing;
using enum Color;

OpLog script_of(std::initializer_list<OpEntry> entries) {
  OpLog log;
  log.entries = entries;
  log.labels = letters();
  return log;
}

// Colour absent from the three given, by set difference.
Color missing(Color a, Color b, Color c) {
  std::set<Color> left(kPalette.begin(), kPalette.end());
  left.erase(a);
  left.erase(b);
  left.erase(c);
  EXPECT_EQ(left.size(), 1u);
  return *left.begin();
}

TEST(ColorK4, IdOrder) {
  EXPECT_EQ(color_k4(k4_abcd()), (Coloring{{A, c1}, {B, c2}, {C, c3}, {D, c4}}));
  EXPECT_EQ(color_k4(make_k4(B, C, D, E)), (Coloring{{B, c1}, {C, c2}, {D, c3}, {E, c4}}));
  EXPECT_THROW(color_k4(fig2a()), PreconditionError);
}

TEST(FourthColor, Cases) {
  EXPECT_EQ(fourth_color(c1, c2, c3), c4);
  EXPECT_EQ(fourth_color(c2, c3, c4), c1);
  EXPECT_EQ(fourth_color(c4, c1, c2), c3);
  EXPECT_THROW(fourth_color(c1, c1, c2), PreconditionError);
}

TEST(DisplayNames, Palette) {
  EXPECT_EQ(display_name(c1), "blue");
  EXPECT_EQ(display_name(c2), "yellow");
  EXPECT_EQ(display_name(c3), "red");
  EXPECT_EQ(display_name(c4), "green");
}

TEST(Replay, InsideCreationCopiesB) {
  const auto r = replay_coloring(k4_abcd(), script_of({{OpKind::InsideCreate, E, {A, C, D}, {}}}));
  EXPECT_EQ(r.coloring.at(E), c2);
  EXPECT_EQ(r.coloring.at(E), r.coloring.at(B));
  EXPECT_EQ(r.graph, fig2a());
}

TEST(Replay, OutsideCreationCopiesD) {
  const auto r = replay_coloring(k4_abcd(), script_of({{OpKind::OutsideCreate, E, {A, B, C}, C}}));
  EXPECT_EQ(r.coloring.at(E), c4);
  EXPECT_EQ(r.coloring.at(E), r.coloring.at(D));
  EXPECT_EQ(r.graph, fig2b());
}

TEST(Replay, TwoStepScript) {
  const auto base = make_k4(B, D, E, A, letters());
  const auto r = replay_coloring(base, script_of({{OpKind::OutsideCreate, C, {B, D, E}, E},
                                                  {OpKind::InsideCreate, F, {B, C, E}, {}}}));
  const auto& col = r.coloring;
  EXPECT_EQ(col.at(C), missing(col.at(B), col.at(D), col.at(E)));
  EXPECT_EQ(col.at(F), missing(col.at(B), col.at(C), col.at(E)));
  EXPECT_TRUE(verify_proper(r.graph, col).proper);
  EXPECT_EQ(distinct_colors(col), 4u);
}

TEST(Replay, RejectsAnnihilations) {
  EXPECT_THROW(replay_coloring(k4_abcd(), script_of({{OpKind::InsideAnnihilate, E, {A, C, D}, {}}})),
               PreconditionError);
}

TEST(Replay, GeneratedGraphsAreProper) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto gen = random_induced_mpg(4 + seed * 3, seed);
    const auto r = replay_coloring(make_k4(VertexId{0}, VertexId{1}, VertexId{2}, VertexId{3}), gen.log);
    EXPECT_EQ(r.graph, gen.graph);
    // Check edges directly rather than through verify_proper.
    for (const auto& [u, v] : gen.graph.edges()) EXPECT_NE(r.coloring.at(u), r.coloring.at(v));
    EXPECT_LE(distinct_colors(r.coloring), 4u);
  }
}

TEST(Verify, K4) {
  const auto g = k4_abcd();
  EXPECT_TRUE(verify_proper(g, color_k4(g)).proper);
  Coloring bad{{A, c1}, {B, c1}, {C, c3}, {D, c4}};
  const Verdict v = verify_proper(g, bad);
  EXPECT_FALSE(v.proper);
  EXPECT_EQ(v.violations, (std::vector<Edge>{{A, B}}));
  EXPECT_THROW(verify_proper(g, Coloring{{A, c1}}), PreconditionError);
}

TEST(Verify, IntegerColours) {
  const auto g = to_edge_list(k4_abcd());
  EXPECT_TRUE(verify_proper(g, std::map<VertexId, int>{{A, 1}, {B, 2}, {C, 3}, {D, 7}}).proper);
  EXPECT_FALSE(verify_proper(g, std::map<VertexId, int>{{A, 1}, {B, 2}, {C, 3}, {D, 1}}).proper);
}

TEST(Oracle, KnownValues) {
  EXPECT_EQ(brute_force_chromatic(complete_graph(4)).chromatic, 4);
  EXPECT_EQ(brute_force_chromatic(k33(false)).chromatic, 2);
  EXPECT_EQ(brute_force_chromatic(k33(true)).chromatic, 2);
  const auto k5e = to_edge_list(fig2b());
  EXPECT_EQ(naive_chromatic(k5e), 4);
  EXPECT_EQ(brute_force_chromatic(k5e).chromatic, 4);
  EXPECT_EQ(brute_force_chromatic(complete_graph(1)).chromatic, 1);
  EXPECT_EQ(brute_force_chromatic(EdgeListGraph{}).chromatic, 0);
}

TEST(Oracle, WitnessIsProper) {
  const auto g = to_edge_list(icosahedron());
  const auto r = brute_force_chromatic(g);
  EXPECT_EQ(r.chromatic, 4);
  EXPECT_TRUE(verify_proper(g, r.witness).proper);
  std::set<int> used;
  for (const auto& [v, c] : r.witness) used.insert(c);
  EXPECT_EQ(used.size(), 4u);
}

TEST(Oracle, AgreesWithExhaustiveEnumeration) {
  std::mt19937_64 rng(5);
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto g = to_edge_list(random_induced_mpg(4 + seed % 5, seed).graph);
    std::shuffle(g.edges.begin(), g.edges.end(), rng);
    g.edges.resize(g.edges.size() - seed % (g.edges.size() / 2));
    const auto r = brute_force_chromatic(g);
    EXPECT_EQ(r.chromatic, naive_chromatic(g)) << "seed " << seed;
    EXPECT_TRUE(verify_proper(g, r.witness).proper);
  }
}

TEST(Oracle, Bound) {
  EXPECT_THROW(brute_force_chromatic(complete_graph(17)), BoundExceededError);
  EXPECT_EQ(brute_force_chromatic(complete_graph(5), 5).chromatic, 5);
  EXPECT_THROW(brute_force_chromatic(complete_graph(5), 4), BoundExceededError);
}

}  // namespace
}  // namespace fourcolor
