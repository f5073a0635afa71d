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

// Graphs from the worked examples, shared by the unit and acceptance suites.

#include <string>
#include <vector>

#include "fourcolor/embedding.hpp"
#include "fourcolor/graph.hpp"
#include "fourcolor/map_pipeline.hpp"
#include "fourcolor/operations.hpp"

namespace fourcolor::testing {

inline constexpr VertexId A{0}, B{1}, C{2}, D{3}, E{4}, F{5};

inline LabelTable letters(std::size_t n = 6) {
  LabelTable t;
  for (std::size_t i = 0; i < n; ++i) t[VertexId{static_cast<std::uint32_t>(i)}] = std::string(1, char('A' + i));
  return t;
}

/// K4 drawn with boundary A, B, C and D trapped.
inline EmbeddedGraph k4_abcd() { return make_k4(A, B, C, D, letters(4)); }

/// K4 plus E inside face ACD.
inline EmbeddedGraph fig2a() { return inside_create(k4_abcd(), {A, C, D}, E, "E").graph; }

/// K4 plus E outside, entrapping C.
inline EmbeddedGraph fig2b() { return outside_create(k4_abcd(), C, E, "E").graph; }

inline EdgeListGraph complete_graph(std::size_t n) {
  EdgeListGraph g;
  for (std::uint32_t i = 0; i < n; ++i) g.vertices.push_back(VertexId{i});
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j) g.edges.emplace_back(VertexId{i}, VertexId{j});
  return g;
}

/// Parts {A,C,E} x {B,D,F}; with `minus_af` the edge A-F is dropped.
inline EdgeListGraph k33(bool minus_af) {
  EdgeListGraph g;
  g.vertices = {A, B, C, D, E, F};
  g.labels = letters();
  for (VertexId x : {A, C, E})
    for (VertexId y : {B, D, F})
      if (!(minus_af && x == A && y == F)) g.edges.emplace_back(x, y);
  return g;
}

inline MapDoc k33e_map() {
  MapDoc m;
  m.countries = {"A", "B", "C", "D", "E", "F"};
  for (const auto& [a, b] : k33(true).edges)
    m.borders.emplace_back(std::string(1, char('A' + a.value)), std::string(1, char('A' + b.value)));
  return m;
}

inline EdgeListGraph icosahedron_edges() {
  EdgeListGraph g;
  for (std::uint32_t i = 0; i < 12; ++i) g.vertices.push_back(VertexId{i});
  auto add = [&](std::uint32_t a, std::uint32_t b) { g.edges.emplace_back(VertexId{a}, VertexId{b}); };
  for (std::uint32_t i = 0; i < 5; ++i) {
    const std::uint32_t up = 1 + i, up_next = 1 + (i + 1) % 5;
    const std::uint32_t lo = 6 + i, lo_next = 6 + (i + 1) % 5;
    add(0, up);
    add(up, up_next);
    add(up, lo);
    add(up, lo_next);
    add(lo, lo_next);
    add(lo, 11);
  }
  return g;
}

inline EmbeddedGraph icosahedron() {
  EmbeddedGraph g = compute_embedding(icosahedron_edges());
  g.set_outer(trace_faces(g).front().vertices);
  return g;
}

}  // namespace fourcolor::testing
