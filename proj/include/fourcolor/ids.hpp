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

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

namespace fourcolor {

/// Stable, totally ordered vertex handle. All tie-breaking in the toolkit
/// goes through this ordering.
struct VertexId {
  std::uint32_t value = 0;

  constexpr VertexId() = default;
  constexpr explicit VertexId(std::uint32_t v) : value(v) {}

  friend constexpr auto operator<=>(VertexId, VertexId) = default;
};

/// Undirected edge; stored with `first < second` wherever the toolkit
/// produces one.
using Edge = std::pair<VertexId, VertexId>;

inline Edge make_edge(VertexId a, VertexId b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/// Display names. Vertices without an entry are named by their ordinal.
using LabelTable = std::map<VertexId, std::string>;

inline std::string label_of(const LabelTable& labels, VertexId v) {
  auto it = labels.find(v);
  return it == labels.end() ? std::to_string(v.value) : it->second;
}

}  // namespace fourcolor
