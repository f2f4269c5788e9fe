/*
 * Copyright 2026 The symparity Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <vector>

#include "symparity/report.hpp"
#include "symparity/vertex_set.hpp"

namespace symparity {

struct AttractorResult {
  VertexSet attractor;
  /// Z_0 = U, Z_1, ...: Z_a holds the vertices attracted in at most a steps
  /// (only filled when layers were requested).
  std::vector<VertexSet> layers;
};

/**
 * Attr_p(U) inside the subgame on `within` (whole game when null); U must lie
 * inside it. With `strategy`, each p-vertex added in layer a gets as choice
 * its lowest-id successor in layer a-1 (entries of `strategy` are indexed by
 * vertex id).
 */
AttractorResult attractor(SymbolicGame& sg, Player p, const VertexSet& u,
                          const VertexSet* within = nullptr, bool record_layers = false,
                          std::vector<Vertex>* strategy = nullptr);

/// True iff `p` cannot leave u: u ⊆ cpre(opponent(p), u).
bool is_trap(SymbolicGame& sg, Player p, const VertexSet& u, const VertexSet* within = nullptr);

/// Recursive attractor-based solver.
SolveReport classic_parity(const ParityGame& game, const SolveOptions& options = {});

}  // namespace symparity
