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


#include "fourcolor/triangulation.hpp"

#include <algorithm>
#include <optional>
#include <random>

#include "fourcolor/errors.hpp"
#include "fourcolor/operations.hpp"

namespace fourcolor {
namespace {

// Chords are chosen on a shrinking copy `h` of the graph: a vertex whose
// neighbourhood has been closed into three triangles is set aside, since
// in the final graph it is a degree-3 vertex whatever else gets added. Each
// chord goes into both `h` and `full`. A face of `h` longer than three is
// also a face of `full` (set-aside vertices only ever sit inside triangles),
// so the same rotation edits apply to both.
class Builder {
 public:
  // Attempt 0 scans candidates in id order; later attempts in an order drawn
  // from a generator seeded with the attempt number.
  Builder(const EmbeddedGraph& g, std::uint64_t attempt) : full_(g), h_(g), attempt_(attempt), rng_(attempt) {
    h_.set_outer(std::nullopt);
  }

  // Repeatedly removes a vertex that is already closed, else closes the
  // cheapest candidate, then ear-triangulates what is left. Returns false
  // when it had to stop early, in which case the result may have no
  // degree-3 vertex.
  bool run() {
    bool complete = true;
    while (h_.vertex_count() > 4) {
      std::vector<VertexId> candidates;
      for (const auto& [v, rot] : h_.rotations())
        if (!rot.empty() && rot.size() <= 3) candidates.push_back(v);
      if (attempt_ != 0) std::shuffle(candidates.begin(), candidates.end(), rng_);

      std::optional<VertexId> best;
      std::vector<Chord> best_plan;
      for (VertexId v : candidates)
        if (closed(v)) {
          best = v;
          break;
        }
      if (!best) {
        for (VertexId v : candidates) {
          std::vector<Chord> plan;
          if (!close(v, plan)) continue;
          for (auto it = plan.rbegin(); it != plan.rend(); ++it) h_.erase_edge(it->a, it->b);
          if (!best || plan.size() < best_plan.size()) {
            best = v;
            best_plan = std::move(plan);
            if (best_plan.size() == 1) break;
          }
        }
      }
      if (!best) {
        complete = false;
        break;
      }
      for (const Chord& c : best_plan) commit(c);
      for (VertexId u : std::vector<VertexId>(h_.rotation(*best).begin(), h_.rotation(*best).end()))
        h_.erase_edge(*best, u);
      h_.erase_vertex(*best);
    }
    finish_with_ears();
    return complete;
  }

  EmbeddedGraph& full() { return full_; }
  TriangulationRecord& record() { return record_; }

 private:
  // Chord from `a` to `b`, entering each endpoint right after the given
  // walk predecessor.
  struct Chord {
    VertexId a, b, before_a, before_b;
  };

  // Part of the face walk that starts with dart (x, v): the whole walk when
  // it has at most kWindow vertices, else kWindow vertices from x onwards
  // followed by the kWindow vertices that precede x. Entry `gap` (the first
  // of the trailing part) has no known predecessor.
  struct Window {
    std::vector<VertexId> w;
    std::size_t gap = 0;  // 0 when the walk is whole
  };

  Window window(VertexId x, VertexId v) const {
    Window out;
    VertexId a = x, b = v;
    out.w.push_back(a);
    while (out.w.size() <= kWindow) {
      const VertexId c = face_successor(h_, a, b);
      if (b == x && c == v) return out;  // walk closed
      out.w.push_back(b);
      a = b;
      b = c;
    }
    out.w.pop_back();
    // Walk backwards from x: the dart before (p, x) enters x just before v.
    std::vector<VertexId> back;
    VertexId cur = x, next = v;
    for (std::size_t i = 0; i < kWindow; ++i) {
      auto rot = h_.rotation(cur);
      const std::size_t at = std::find(rot.begin(), rot.end(), next) - rot.begin();
      const VertexId p = rot[(at + rot.size() - 1) % rot.size()];
      back.push_back(p);
      next = cur;
      cur = p;
    }
    out.gap = out.w.size();
    out.w.insert(out.w.end(), back.rbegin(), back.rend());
    return out;
  }

  bool triangle(VertexId x, VertexId v) const {
    const VertexId y = face_successor(h_, x, v);
    return y != x && face_successor(h_, v, y) == x && face_successor(h_, y, x) == v;
  }

  static Chord chord_at(const Window& win, std::size_t i, std::size_t j) {
    const auto& w = win.w;
    const std::size_t k = w.size();
    return Chord{w[i], w[j], w[(i + k - 1) % k], w[(j + k - 1) % k]};
  }

  static void apply(EmbeddedGraph& g, const Chord& c) {
    g.insert_neighbor_after(c.a, c.before_a, c.b);
    g.insert_neighbor_after(c.b, c.before_b, c.a);
  }

  void commit(const Chord& c) {
    record_.added.push_back(AddedEdge{c.a, c.b, trace_face(h_, c.before_a, c.a).vertices});
    apply(h_, c);
    apply(full_, c);
  }

  bool closed(VertexId v) const {
    if (h_.degree(v) != 3) return false;
    for (VertexId x : h_.rotation(v))
      if (!triangle(x, v)) return false;
    return true;
  }

  void push(const Chord& c, std::vector<Chord>& plan) {
    apply(h_, c);
    plan.push_back(c);
  }
  void pop(std::vector<Chord>& plan) {
    h_.erase_edge(plan.back().a, plan.back().b);
    plan.pop_back();
  }

  // Searches for chords that leave v with degree 3 inside three triangles.
  // On success the chords stay applied to h_ and are listed in `plan`; on
  // failure h_ is unchanged.
  bool close(VertexId v, std::vector<Chord>& plan) {
    const std::size_t mark = plan.size();
    if (h_.degree(v) == 3) {
      // Cut off each corner x -> v -> y that is not yet a triangle.
      for (std::size_t corner = 0; corner < 3; ++corner) {
        const VertexId x = h_.rotation(v)[corner];
        if (triangle(x, v)) continue;
        const Window win = window(x, v);
        if (win.w[0] == win.w[2] || h_.adjacent(win.w[0], win.w[2])) break;
        push(chord_at(win, 0, 2), plan);
      }
      if (closed(v)) return true;
      while (plan.size() > mark) pop(plan);
      return false;
    }
    // Join v to another vertex of one of its faces x -> v -> ..., trying the
    // walk neighbours of the corner first since they close a triangle at once.
    for (VertexId x : std::vector<VertexId>(h_.rotation(v).begin(), h_.rotation(v).end())) {
      const Window win = window(x, v);
      const std::size_t k = win.w.size();
      std::vector<std::size_t> order;
      for (std::size_t d = 0; 3 + d <= k - 1 - d && order.size() < kCandidates; ++d) {
        order.push_back(3 + d);
        if (k - 1 - d != 3 + d) order.push_back(k - 1 - d);
      }
      for (std::size_t j : order) {
        if (j == win.gap || win.w[j] == v || h_.adjacent(v, win.w[j])) continue;
        push(chord_at(win, 1, j), plan);
        if (close(v, plan)) return true;
        pop(plan);
      }
    }
    return false;
  }

  // Repeatedly takes the first face longer than three (trace order), starts
  // its walk at the lowest id and inserts the first chord between positions
  // i and i+2 whose endpoints are distinct and non-adjacent.
  void finish_with_ears() {
    for (;;) {
      auto faces = trace_faces(h_);
      auto it = std::find_if(faces.begin(), faces.end(), [](const FaceWalk& f) { return f.size() > 3; });
      if (it == faces.end()) return;
      Window win{it->vertices, 0};
      std::rotate(win.w.begin(), std::min_element(win.w.begin(), win.w.end()), win.w.end());
      const std::size_t k = win.w.size();
      bool inserted = false;
      for (std::size_t i = 0; i < k && !inserted; ++i) {
        const VertexId a = win.w[i], b = win.w[(i + 2) % k];
        if (a == b || h_.adjacent(a, b)) continue;
        commit(chord_at(win, i, (i + 2) % k));
        inserted = true;
      }
      if (!inserted) throw StructuralError("no admissible chord in a face of length " + std::to_string(k));
    }
  }

  static constexpr std::size_t kCandidates = 6;
  static constexpr std::size_t kWindow = 8;

  EmbeddedGraph full_;
  EmbeddedGraph h_;
  TriangulationRecord record_;
  std::uint64_t attempt_;
  std::mt19937_64 rng_;
};

constexpr std::uint64_t kAttempts = 32;

}  // namespace

Triangulation triangulate(const EmbeddedGraph& g) {
  if (g.vertex_count() < 4) throw PreconditionError("triangulation needs at least 4 vertices");
  if (!is_connected(g)) throw DisconnectedError("graph is not connected");
  validate(g);

  // Chords never remove a dart, so the face that ends up holding this dart is
  // what remains of the input's outer face.
  const std::vector<VertexId> outer = g.outer_face() ? *g.outer_face() : trace_faces(g).front().vertices;
  const VertexId p = outer[0], q = outer[1 % outer.size()];

  std::optional<Builder> builder;
  for (std::uint64_t attempt = 0; attempt < kAttempts; ++attempt) {
    Builder b(g, attempt);
    const bool complete = b.run();
    if (!builder || complete) builder = std::move(b);
    if (complete) break;
  }

  Triangulation out;
  out.mpg = std::move(builder->full());
  out.record = std::move(builder->record());
  out.record.original_outer = g.outer_face();
  out.mpg.set_outer(trace_face(out.mpg, p, q).vertices);
  out.mpg = prefer_trapped_degree3(std::move(out.mpg));
  if (!is_mpg(out.mpg)) throw StructuralError("triangulation did not produce a maximal planar graph");
  return out;
}

EmbeddedGraph restrict_graph(const EmbeddedGraph& g, const TriangulationRecord& record) {
  EmbeddedGraph out = g;
  for (auto it = record.added.rbegin(); it != record.added.rend(); ++it) {
    if (!out.adjacent(it->u, it->v))
      throw MismatchError("recorded edge " + g.label(it->u) + "-" + g.label(it->v) + " is not in the graph");
    out.erase_edge(it->u, it->v);
  }
  out.set_outer(record.original_outer);
  return out;
}

}  // namespace fourcolor
