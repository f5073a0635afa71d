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

#include <algorithm>
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/connected_components.hpp>
#include <iterator>
#include <map>
#include <set>
#include <vector>

#include "fourcolor/errors.hpp"

namespace fourcolor {
namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::property<boost::vertex_index_t, int>,
                                         boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

}  // namespace

EmbeddedGraph compute_embedding(const EdgeListGraph& input) {
  const std::size_t n = input.vertices.size();
  if (n == 0) throw InvalidInputError("graph has no vertices");

  std::map<VertexId, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i)
    if (!index.emplace(input.vertices[i], i).second)
      throw InvalidInputError("duplicate vertex " + label_of(input.labels, input.vertices[i]));

  BoostGraph bg(n);
  std::set<Edge> seen;
  for (const auto& [a, b] : input.edges) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end() || ib == index.end())
      throw InvalidInputError("edge names an unknown vertex");
    if (a == b) throw InvalidInputError("self-loop at " + label_of(input.labels, a));
    if (!seen.insert(make_edge(a, b)).second)
      throw InvalidInputError("repeated edge " + label_of(input.labels, a) + "-" + label_of(input.labels, b));
    boost::add_edge(ia->second, ib->second, bg);
  }

  std::vector<int> component(n);
  if (n > 1 && boost::connected_components(bg, component.data()) != 1)
    throw DisconnectedError("graph is not connected");

  int next_edge = 0;
  for (auto [it, end] = boost::edges(bg); it != end; ++it) boost::put(boost::edge_index, bg, *it, next_edge++);

  std::vector<std::vector<BoostEdge>> embedding(n);
  std::vector<BoostEdge> kuratowski;
  const bool planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg, boost::boyer_myrvold_params::embedding = embedding.data(),
      boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kuratowski));

  if (!planar) {
    std::vector<Edge> witness;
    for (const BoostEdge& e : kuratowski)
      witness.push_back(make_edge(input.vertices[boost::source(e, bg)], input.vertices[boost::target(e, bg)]));
    std::sort(witness.begin(), witness.end());
    std::string what = "graph is not planar; Kuratowski subdivision:";
    for (const auto& [a, b] : witness) what += " " + label_of(input.labels, a) + "-" + label_of(input.labels, b);
    throw NonPlanarError(what, std::move(witness));
  }

  EmbeddedGraph::RotationMap rotation;
  for (std::size_t i = 0; i < n; ++i) {
    auto& rot = rotation[input.vertices[i]];
    for (const BoostEdge& e : embedding[i]) {
      std::size_t other = boost::source(e, bg) == i ? boost::target(e, bg) : boost::source(e, bg);
      rot.push_back(input.vertices[other]);
    }
  }
  EmbeddedGraph g = EmbeddedGraph::from_rotation(std::move(rotation), std::nullopt, input.labels);
  // Post-hoc check of the planarity result.
  euler_counts(g);
  return g;
}

}  // namespace fourcolor
