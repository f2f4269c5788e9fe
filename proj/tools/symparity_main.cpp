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

// symparity command-line driver.

#include <glob.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "symparity/symparity.hpp"

using namespace symparity;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDisagree = 1;
constexpr int kExitParse = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::vector<std::string> expand_glob(const std::string& pattern) {
  glob_t g{};
  std::vector<std::string> out;
  if (::glob(pattern.c_str(), 0, nullptr, &g) == 0) {
    for (std::size_t i = 0; i < g.gl_pathc; ++i) out.emplace_back(g.gl_pathv[i]);
  }
  globfree(&g);
  return out;
}

struct SolveArgs {
  std::string file;
  std::string algo = "bigstep";
  std::string policy = "gamma";
  std::string backend = "bits";
  bool strategies = false;
  bool check_invariants = false;
  bool self_loops = false;
  bool structured = false;
  bool glob = false;
};

SolveReport run_solver(const ParityGame& game, const SolveArgs& args, const SolveOptions& opts) {
  if (args.algo == "zielonka") return classic_parity(game, opts);
  if (args.algo == "pm") return solve_pm_symbolic(game, opts);
  if (args.algo == "explicit") return solve_explicit(game, opts);
  return symbolic_big_step(game, BigStepPolicy::parse(args.policy), opts);
}

SolveOptions make_options(const SolveArgs& args) {
  SolveOptions opts;
  opts.backend = args.backend == "bdd" ? BackendKind::Bdd : BackendKind::Bits;
  opts.strategies = args.strategies;
  opts.check_invariants = args.check_invariants;
  const char* trace = std::getenv("PARITY_TRACE");
  if (trace && std::string(trace) == "1") opts.trace = &std::cerr;
  return opts;
}

int solve_one(const std::string& path, const SolveArgs& args, bool counters_only) {
  const ParityGame game = parse_pgsolver(read_file(path), args.self_loops);
  const SolveReport report = run_solver(game, args, make_options(args));
  if (counters_only) {
    std::cout << emit_solution(report, SolutionFormat::Structured);
    return kExitOk;
  }
  if (args.glob) std::cout << "# " << path << '\n';
  std::cout << emit_solution(report, args.structured ? SolutionFormat::Structured
                                                     : SolutionFormat::Text);
  return kExitOk;
}

int cmd_solve(const SolveArgs& args, bool counters_only) {
  if (!args.glob) return solve_one(args.file, args, counters_only);
  const auto files = expand_glob(args.file);
  if (files.empty()) {
    std::cerr << "no files match " << args.file << '\n';
    return kExitParse;
  }
  int status = kExitOk;
  for (const auto& f : files) {
    try {
      status = std::max(status, solve_one(f, args, counters_only));
    } catch (const ParseError& e) {
      std::cerr << f << ": " << e.what() << '\n';
      status = kExitParse;
    }
  }
  return status;
}

int cmd_dominion(const std::string& file, const std::string& player, std::uint32_t h,
                 bool self_loops) {
  const ParityGame game = parse_pgsolver(read_file(file), self_loops);
  SymbolicGame sg(game);
  const Player p = player == "odd" ? Player::Odd : Player::Even;
  DominionResult res = dominion(sg, nullptr, p, h);
  const VertexList d = sg.members(res.dominion);
  std::cout << "player: " << to_string(p) << "\nh: " << h << "\nsize: " << d.size()
            << "\ndominion:";
  for (Vertex v : d) std::cout << ' ' << v;
  std::cout << "\ncpre_ops: " << sg.counters().cpre_ops << '\n';
  return kExitOk;
}

int cmd_verify(const std::string& game_file, const std::string& sol_file) {
  const ParityGame game = parse_pgsolver(read_file(game_file));
  const ParsedSolution sol = parse_solution(read_file(sol_file), game.vertex_count());
  const VertexList truth = explicit_winning_even(game);
  int status = kExitOk;
  if (truth != sol.winning_even) {
    std::cout << "winning sets differ from the explicit solver\n";
    status = kExitDisagree;
  }
  for (Player p : {Player::Even, Player::Odd}) {
    const Strategy& s = p == Player::Even ? sol.strategy_even : sol.strategy_odd;
    const VertexList& w = p == Player::Even ? sol.winning_even : sol.winning_odd;
    if (s.domain().empty()) continue;
    const StrategyCheck check = verify_strategy(game, p, w, s);
    if (!check) {
      std::cout << to_string(p) << " strategy rejected: " << check.reason << '\n';
      status = kExitDisagree;
    }
  }
  if (status == kExitOk) std::cout << "ok\n";
  return status;
}

int cmd_gen(std::size_t n, Priority c, const std::string& deg, std::uint64_t seed) {
  std::size_t lo = 1, hi = 3;
  const auto colon = deg.find(':');
  try {
    if (colon == std::string::npos) {
      lo = hi = std::stoul(deg);
    } else {
      lo = std::stoul(deg.substr(0, colon));
      hi = std::stoul(deg.substr(colon + 1));
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("--deg expects <k> or <min>:<max>");
  }
  std::cout << emit_game(gen_random(n, c, lo, hi, seed));
  return kExitOk;
}

void add_solver_flags(CLI::App* cmd, SolveArgs& args) {
  cmd->add_option("--algo", args.algo, "zielonka, pm, bigstep or explicit")
      ->check(CLI::IsMember({"zielonka", "pm", "bigstep", "explicit"}));
  cmd->add_option("--policy", args.policy, "big-step bound: sqrt, gamma or fixed:<h>");
  cmd->add_option("--backend", args.backend, "vertex-set backend")
      ->check(CLI::IsMember({"bits", "bdd"}));
  cmd->add_flag("--check-invariants", args.check_invariants, "run the invariant checks");
  cmd->add_flag("--add-self-loops", args.self_loops, "give sink vertices a self-loop");
  cmd->add_flag("--glob", args.glob, "treat the file argument as a glob pattern");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symbolic parity game solver"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "solve a game and print the solution");
  solve->add_option("file", solve_args.file, "PGSolver game file")->required();
  add_solver_flags(solve, solve_args);
  solve->add_flag("--strategies", solve_args.strategies, "extract winning strategies");
  solve->add_flag("--structured", solve_args.structured, "key: value dump with counters");

  SolveArgs stats_args;
  auto* stats = app.add_subcommand("stats", "solve and print counters only");
  stats->add_option("file", stats_args.file, "PGSolver game file")->required();
  add_solver_flags(stats, stats_args);

  std::string dom_file, dom_player = "even";
  std::uint32_t dom_h = 0;
  bool dom_loops = false;
  auto* dom = app.add_subcommand("dominion", "bounded dominion search");
  dom->set_help_flag("--help", "print this help");
  dom->add_option("file", dom_file, "PGSolver game file")->required();
  dom->add_option("--player", dom_player, "even or odd")->check(CLI::IsMember({"even", "odd"}));
  dom->add_option("--h", dom_h, "bound h (dominions up to h+1 vertices)")->required();
  dom->add_flag("--add-self-loops", dom_loops, "give sink vertices a self-loop");

  std::string ver_game, ver_sol;
  auto* ver = app.add_subcommand("verify", "check a solution against the explicit solver");
  ver->add_option("game", ver_game, "PGSolver game file")->required();
  ver->add_option("solution", ver_sol, "solution file")->required();

  std::size_t gen_n = 8;
  Priority gen_c = 4;
  std::string gen_deg = "1:3";
  std::uint64_t gen_seed = 1;
  auto* gen = app.add_subcommand("gen", "print a random game");
  gen->add_option("--n", gen_n, "vertex count");
  gen->add_option("--c", gen_c, "priority count");
  gen->add_option("--deg", gen_deg, "out-degree range <min>:<max>");
  gen->add_option("--seed", gen_seed, "generator seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve) return cmd_solve(solve_args, false);
    if (*stats) return cmd_solve(stats_args, true);
    if (*dom) return cmd_dominion(dom_file, dom_player, dom_h, dom_loops);
    if (*ver) return cmd_verify(ver_game, ver_sol);
    if (*gen) return cmd_gen(gen_n, gen_c, gen_deg, gen_seed);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const GameError& e) {
    std::cerr << "invalid game: " << e.what() << '\n';
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  }
  return kExitOk;
}
