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
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "symparity/game.hpp"
#include "symparity/report.hpp"
#include "symparity/strategy.hpp"

namespace symparity {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& reason)
      : std::runtime_error("line " + std::to_string(line) + ": " + reason),
        line_(line),
        reason_(reason) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::size_t line_;
  std::string reason_;
};

/**
 * PGSolver game format: optional `parity <max-id>;` header, then one vertex
 * per line, `<id> <priority> <owner> <succ>(,<succ>)* ["<name>"];`, owner 0
 * for Even and 1 for Odd. Ids must be exactly 0..n-1. `start` lines are
 * skipped. With `repair_sinks` vertices without successors get a self-loop.
 */
ParityGame parse_pgsolver(std::string_view text, bool repair_sinks = false);

/// Always writes the header; names are written when the game has them.
std::string emit_game(const ParityGame& game);

enum class SolutionFormat { Text, Structured };

/**
 * Text: `paritysol <max-id>;` then `<id> <winner> [<succ>];` per vertex, the
 * successor being the winner's strategy choice when known. Structured: one
 * `key: value` per line with the winning sets, strategies, every counter and
 * the solver diagnostics.
 */
std::string emit_solution(const SolveReport& report, SolutionFormat format);

struct ParsedSolution {
  VertexList winning_even;
  VertexList winning_odd;
  Strategy strategy_even;
  Strategy strategy_odd;
};

/// Reads the text solution format back.
ParsedSolution parse_solution(std::string_view text, std::size_t vertex_count);

/**
 * Random game: owners and priorities uniform, out-degree uniform in
 * [min_deg, max_deg] with distinct successors, priorities normalized after.
 * Deterministic for a fixed seed.
 */
ParityGame gen_random(std::size_t n, Priority c, std::size_t min_deg, std::size_t max_deg,
                      std::uint64_t seed);

}  // namespace symparity
