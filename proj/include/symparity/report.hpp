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

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "symparity/game.hpp"
#include "symparity/strategy.hpp"
#include "symparity/vertex_set.hpp"

namespace symparity {

struct SolveOptions {
  BackendKind backend = BackendKind::Bits;
  GraphKernel kernel = GraphKernel::Auto;
  bool strategies = false;
  bool check_invariants = false;
  std::ostream* trace = nullptr;
};

struct SolveReport {
  std::string algorithm;
  VertexList winning_even;  // sorted
  VertexList winning_odd;   // sorted
  std::optional<Strategy> strategy_even;
  std::optional<Strategy> strategy_odd;
  OpCounters counters;
  std::chrono::nanoseconds wall_time{0};
  /// Solver-specific numbers (iteration counts, invariant violations, ...).
  std::map<std::string, std::int64_t> diagnostics;

  const VertexList& winning(Player p) const {
    return p == Player::Even ? winning_even : winning_odd;
  }
  /// Both sets sorted, disjoint and covering 0..n-1.
  bool is_partition(std::size_t n) const;
};

/// Explicit progress measure on the whole game, as a report.
SolveReport solve_explicit(const ParityGame& game, const SolveOptions& options = {});

}  // namespace symparity
