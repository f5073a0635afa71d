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

#include "fourcolor/graph.hpp"

namespace fourcolor {

/// Planar embedding of a simple connected graph. The returned rotation
/// system has no outer face designated. Deterministic for a fixed vertex and
/// edge order.
///
/// Throws NonPlanarError (with a Kuratowski witness), DisconnectedError, or
/// InvalidInputError for loops, repeated edges and unknown endpoints.
EmbeddedGraph compute_embedding(const EdgeListGraph& input);

}  // namespace fourcolor
