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

#include <algorithm>
#include <set>

#include "fourcolor/errors.hpp"

namespace fourcolor {
namespace {

template <typename Assignment>
Verdict check_edges(const EdgeListGraph& g, const Assignment& coloring) {
  for (VertexId v : g.vertices)
    if (!coloring.contains(v)) throw PreconditionError("vertex " + label_of(g.labels, v) + " is not coloured");
  Verdict verdict;
  for (const auto& [a, b] : g.edges)
    if (coloring.at(a) == coloring.at(b)) verdict.violations.push_back(make_edge(a, b));
  std::sort(verdict.violations.begin(), verdict.violations.end());
  verdict.proper = verdict.violations.empty();
  return verdict;
}

class Backtracker {
 public:
  Backtracker(const EdgeListGraph& g) {
    std::map<VertexId, std::size_t> index;
    order_ = g.vertices;
    std::map<VertexId, std::set<VertexId>> nb;
    for (const auto& [a, b] : g.edges) {
      nb[a].insert(b);
      nb[b].insert(a);
    }
    std::stable_sort(order_.begin(), order_.end(), [&](VertexId x, VertexId y) {
      if (nb[x].size() != nb[y].size()) return nb[x].size() > nb[y].size();
      return x < y;
    });
    for (std::size_t i = 0; i < order_.size(); ++i) index[order_[i]] = i;
    earlier_.resize(order_.size());
    for (std::size_t i = 0; i < order_.size(); ++i)
      for (VertexId w : nb[order_[i]])
        if (index[w] < i) earlier_[i].push_back(index[w]);
    color_.assign(order_.size(), 0);
  }

  bool colorable(int k) {
    k_ = k;
    std::fill(color_.begin(), color_.end(), 0);
    return assign(0, 0);
  }

  std::map<VertexId, int> witness() const {
    std::map<VertexId, int> out;
    for (std::size_t i = 0; i < order_.size(); ++i) out[order_[i]] = color_[i];
    return out;
  }

 private:
  bool assign(std::size_t i, int used) {
    if (i == order_.size()) return true;
    const int limit = std::min(k_, used + 1);
    for (int c = 1; c <= limit; ++c) {
      bool clash = false;
      for (std::size_t j : earlier_[i])
        if (color_[j] == c) {
          clash = true;
          break;
        }
      if (clash) continue;
      color_[i] = c;
      if (assign(i + 1, std::max(used, c))) return true;
    }
    color_[i] = 0;
    return false;
  }

  std::vector<VertexId> order_;
  std::vector<std::vector<std::size_t>> earlier_;
  std::vector<int> color_;
  int k_ = 0;
};

}  // namespace

std::string_view display_name(Color c) {
  switch (c) {
    case Color::c1: return "blue";
    case Color::c2: return "yellow";
    case Color::c3: return "red";
    case Color::c4: return "green";
  }
  return "?";
}

Coloring color_k4(const EmbeddedGraph& g) {
  if (g.vertex_count() != 4 || g.edge_count() != 6) throw PreconditionError("graph is not K4");
  Coloring out;
  std::size_t i = 0;
  for (VertexId v : g.vertices()) out[v] = kPalette[i++];
  return out;
}

Color fourth_color(Color a, Color b, Color c) {
  if (a == b || b == c || a == c) throw PreconditionError("fourth_color needs three distinct colours");
  for (Color x : kPalette)
    if (x != a && x != b && x != c) return x;
  throw PreconditionError("colour outside the palette");
}

Replay replay_coloring(EmbeddedGraph k4, const OpLog& script) {
  Replay out;
  out.coloring = color_k4(k4);
  out.graph = std::move(k4);
  for (const OpEntry& entry : script.entries) {
    if (!is_creation(entry.kind)) throw PreconditionError("replay script must contain creations only");
    if (out.coloring.contains(entry.vertex))
      throw PreconditionError("vertex " + label_of(script.labels, entry.vertex) + " already coloured");
    Step step = apply_entry(std::move(out.graph), entry, script.labels);
    const auto& a = entry.anchors;
    out.coloring[entry.vertex] = fourth_color(out.coloring.at(a[0]), out.coloring.at(a[1]), out.coloring.at(a[2]));
    out.graph = std::move(step.graph);
  }
  return out;
}

Verdict verify_proper(const EdgeListGraph& g, const Coloring& coloring) { return check_edges(g, coloring); }

Verdict verify_proper(const EmbeddedGraph& g, const Coloring& coloring) {
  return check_edges(to_edge_list(g), coloring);
}

Verdict verify_proper(const EdgeListGraph& g, const std::map<VertexId, int>& coloring) {
  return check_edges(g, coloring);
}

std::size_t distinct_colors(const Coloring& coloring) {
  std::set<Color> used;
  for (const auto& [v, c] : coloring) used.insert(c);
  return used.size();
}

ChromaticResult brute_force_chromatic(const EdgeListGraph& g, std::size_t max_vertices) {
  if (g.vertices.size() > max_vertices)
    throw BoundExceededError("oracle bound exceeded: " + std::to_string(g.vertices.size()) + " vertices > " +
                             std::to_string(max_vertices));
  ChromaticResult out;
  if (g.vertices.empty()) return out;
  Backtracker search(g);
  for (int k = 1;; ++k) {
    if (search.colorable(k)) {
      out.chromatic = k;
      out.witness = search.witness();
      return out;
    }
  }
}

ChromaticResult brute_force_chromatic(const EmbeddedGraph& g, std::size_t max_vertices) {
  return brute_force_chromatic(to_edge_list(g), max_vertices);
}

}  // namespace fourcolor
