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

#include <string>
#include <vector>

#include "symparity/symparity.hpp"

namespace symparity::testing {

enum : Vertex { A = 0, B, C, D, E, F, G, H };

/// The eight-vertex running example (a..h).
inline ParityGame ex1() {
  using P = Player;
  return build_game({P::Even, P::Odd, P::Even, P::Even, P::Odd, P::Odd, P::Even, P::Even},
                    {1, 0, 1, 0, 3, 4, 2, 1},
                    {{B}, {A, D}, {B, D}, {F}, {D}, {G}, {E}, {C, G}},
                    {"a", "b", "c", "d", "e", "f", "g", "h"});
}

inline VertexList vs(const std::string& letters) {
  VertexList out;
  for (char ch : letters) out.push_back(static_cast<Vertex>(ch - 'a'));
  return out;
}

inline std::string letters(const VertexList& list) {
  std::string out;
  for (Vertex v : list) out += static_cast<char>('a' + v);
  return out;
}

inline VertexList complement(const VertexList& w, std::size_t n) {
  std::vector<bool> in(n, false);
  for (Vertex v : w) in[v] = true;
  VertexList out;
  for (Vertex v = 0; v < n; ++v) {
    if (!in[v]) out.push_back(v);
  }
  return out;
}

}  // namespace symparity::testing
