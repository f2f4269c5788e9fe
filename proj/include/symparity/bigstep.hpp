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

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

#include "symparity/report.hpp"

namespace symparity {

using Rational = boost::rational<std::int64_t>;

/// c/3 + 1/2 - 4/(c²-1) for odd c, c/3 + 1/2 - 1/(3c) - 4/c² for even c.
Rational gamma(std::int64_t c);
/// γ(c) / (⌊c/2⌋ + 1), for c >= 3.
Rational beta(std::int64_t c);

struct BigStepPolicy {
  enum class Kind { Sqrt, Gamma, Fixed };
  Kind kind = Kind::Gamma;
  std::uint32_t fixed_h = 0;

  static BigStepPolicy sqrt() { return {Kind::Sqrt, 0}; }
  static BigStepPolicy gamma() { return {Kind::Gamma, 0}; }
  static BigStepPolicy fixed(std::uint32_t h) { return {Kind::Fixed, h}; }

  /// "sqrt", "gamma" or "fixed:<h>"; throws std::invalid_argument otherwise.
  static BigStepPolicy parse(std::string_view text);
  std::string to_string() const;
};

/// Bound h for a level with n_current vertices and c priorities; n0 is the
/// vertex count at the outermost call. Always within [0, n_current].
std::uint32_t choose_h(const BigStepPolicy& policy, std::size_t n0, std::size_t n_current,
                       std::uint32_t c);

/**
 * Attractor recursion where each round first peels the opponent's bounded
 * dominion (when the level has more than two priorities).
 *
 * diagnostics: "iterations", "max_level_iterations", "dominion_calls",
 * "dominion_vertices", "removal_bound_violations" (non-final rounds that
 * removed fewer than h+2 vertices), "iteration_bound_violations",
 * "invariant_violations".
 */
SolveReport symbolic_big_step(const ParityGame& game, const BigStepPolicy& policy,
                              const SolveOptions& options = {});

}  // namespace symparity
