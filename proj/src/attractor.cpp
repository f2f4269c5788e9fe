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

#include "symparity/attractor.hpp"

namespace symparity {

AttractorResult attractor(SymbolicGame& sg, Player p, const VertexSet& u, const VertexSet* within,
                          bool record_layers, std::vector<Vertex>* strategy) {
  AttractorResult out;
  out.attractor = u;
  if (record_layers) out.layers.push_back(u);
  VertexSet previous_layer;
  if (strategy) previous_layer = u;

  while (true) {
    VertexSet next = sg.cpre(p, out.attractor, within);
    if (sg.subset(next, out.attractor)) break;
    if (strategy || record_layers) {
      VertexSet layer = sg.subtract(next, out.attractor);
      if (strategy) {
        VertexSet todo = sg.intersect(layer, sg.owned_by(p));
        for (Vertex v : sg.members(previous_layer)) {
          if (sg.is_empty(todo)) break;
          VertexSet hit = sg.pre(sg.singleton(v), within);
          sg.intersect_in(hit, todo);
          for (Vertex w : sg.members(hit)) (*strategy)[w] = v;
          sg.subtract_in(todo, hit);
        }
        previous_layer = layer;
      }
      sg.unite_in(out.attractor, next);
      if (record_layers) out.layers.push_back(out.attractor);
    } else {
      sg.unite_in(out.attractor, next);
    }
  }
  return out;
}

bool is_trap(SymbolicGame& sg, Player p, const VertexSet& u, const VertexSet* within) {
  return sg.subset(u, sg.cpre(opponent(p), u, within));
}

}  // namespace symparity
