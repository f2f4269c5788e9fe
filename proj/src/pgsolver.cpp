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

#include "symparity/pgsolver.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <random>
#include <sstream>

namespace symparity {
namespace {

class LineScanner {
 public:
  LineScanner(std::string_view text, std::size_t line) : s_(text), line_(line) {}

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_space();
    return pos_ >= s_.size();
  }

  bool peek(char c) {
    skip_space();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  std::uint64_t number(const char* what) {
    skip_space();
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), value);
    if (ec != std::errc() || ptr == s_.data() + pos_) {
      throw ParseError(line_, std::string("expected ") + what);
    }
    pos_ = static_cast<std::size_t>(ptr - s_.data());
    return value;
  }

  std::string quoted() {
    skip_space();
    ++pos_;  // opening quote
    std::string out;
    while (pos_ < s_.size() && s_[pos_] != '"') {
      if (s_[pos_] == '\\' && pos_ + 1 < s_.size()) ++pos_;
      out += s_[pos_++];
    }
    if (pos_ >= s_.size()) throw ParseError(line_, "unterminated name");
    ++pos_;
    return out;
  }

  std::string_view word() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  void rewind() { pos_ = 0; }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
  std::size_t line_;
};

std::string escape(const std::string& name) {
  std::string out;
  for (char ch : name) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out;
}

}  // namespace

ParityGame parse_pgsolver(std::string_view text, bool repair_sinks) {
  struct Row {
    Player owner;
    Priority priority;
    VertexList succ;
    std::string name;
    std::size_t line;
  };
  std::vector<std::optional<Row>> rows;
  std::optional<std::uint64_t> declared_max;
  bool any_name = false;
  std::size_t line_no = 0;
  std::size_t last_line = 0;

  std::size_t begin = 0;
  while (begin <= text.size()) {
    std::size_t end = text.find('\n', begin);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(begin, end - begin);
    ++line_no;
    begin = end + 1;
    LineScanner sc(line, line_no);
    if (sc.at_end()) {
      if (end == text.size()) break;
      continue;
    }
    last_line = line_no;
    const std::string_view keyword = sc.word();
    if (keyword == "parity") {
      declared_max = sc.number("vertex count in header");
      if (!sc.accept(';')) throw ParseError(line_no, "expected ';' after header");
      if (!sc.at_end()) throw ParseError(line_no, "trailing characters after header");
      continue;
    }
    if (keyword == "start") {
      continue;
    }
    if (!keyword.empty()) throw ParseError(line_no, "unexpected '" + std::string(keyword) + "'");
    sc.rewind();

    Row row;
    row.line = line_no;
    const std::uint64_t id = sc.number("vertex id");
    const std::uint64_t prio = sc.number("priority");
    const std::uint64_t owner = sc.number("owner");
    if (owner > 1) throw ParseError(line_no, "owner must be 0 or 1");
    if (prio >= (std::uint64_t{1} << 24)) throw ParseError(line_no, "priority too large");
    row.owner = owner == 0 ? Player::Even : Player::Odd;
    row.priority = static_cast<Priority>(prio);
    if (!sc.peek(';') && !sc.peek('"')) {
      while (true) {
        const std::uint64_t w = sc.number("successor id");
        if (w >= kNoVertex) throw ParseError(line_no, "successor id too large");
        row.succ.push_back(static_cast<Vertex>(w));
        if (!sc.accept(',')) break;
      }
    }
    if (row.succ.empty() && !repair_sinks) throw ParseError(line_no, "empty successor list");
    if (sc.peek('"')) {
      row.name = sc.quoted();
      any_name = true;
    }
    if (!sc.accept(';')) throw ParseError(line_no, "expected ';'");
    if (!sc.at_end()) throw ParseError(line_no, "trailing characters");
    if (id >= kNoVertex - 1) throw ParseError(line_no, "vertex id too large");
    if (declared_max && id > *declared_max) {
      throw ParseError(line_no, "vertex id " + std::to_string(id) + " exceeds header");
    }
    if (id >= rows.size()) rows.resize(id + 1);
    if (rows[id]) throw ParseError(line_no, "duplicate vertex id " + std::to_string(id));
    rows[id] = std::move(row);
  }

  const std::size_t n = declared_max ? static_cast<std::size_t>(*declared_max) + 1 : rows.size();
  if (rows.size() < n) rows.resize(n);
  if (n == 0) throw ParseError(last_line, "game has no vertices");
  std::vector<Player> owners(n);
  std::vector<Priority> priorities(n);
  std::vector<VertexList> succ(n);
  std::vector<std::string> names;
  if (any_name) names.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (!rows[v]) throw ParseError(last_line, "vertex " + std::to_string(v) + " is never defined");
    for (Vertex w : rows[v]->succ) {
      if (w >= n) {
        throw ParseError(rows[v]->line, "edge to unknown vertex " + std::to_string(w));
      }
    }
    owners[v] = rows[v]->owner;
    priorities[v] = rows[v]->priority;
    succ[v] = std::move(rows[v]->succ);
    if (any_name) names[v] = std::move(rows[v]->name);
  }
  if (repair_sinks) succ = add_self_loops(std::move(succ));
  return build_game(std::move(owners), std::move(priorities), succ, std::move(names));
}

std::string emit_game(const ParityGame& game) {
  std::ostringstream out;
  out << "parity " << (game.vertex_count() == 0 ? 0 : game.vertex_count() - 1) << ";\n";
  for (Vertex v = 0; v < game.vertex_count(); ++v) {
    out << v << ' ' << game.priority(v) << ' ' << (game.owner(v) == Player::Even ? 0 : 1) << ' ';
    bool first = true;
    for (Vertex w : game.successors(v)) {
      if (!first) out << ',';
      out << w;
      first = false;
    }
    if (game.has_names()) out << " \"" << escape(game.name(v)) << '"';
    out << ";\n";
  }
  return out.str();
}

namespace {

void write_list(std::ostream& out, const VertexList& list) {
  for (std::size_t i = 0; i < list.size(); ++i) out << (i ? " " : "") << list[i];
}

void write_strategy(std::ostream& out, const std::optional<Strategy>& s) {
  if (!s) {
    out << "none";
    return;
  }
  bool first = true;
  for (Vertex v : s->domain()) {
    out << (first ? "" : " ") << v << "->" << s->choice[v];
    first = false;
  }
}

}  // namespace

std::string emit_solution(const SolveReport& report, SolutionFormat format) {
  const std::size_t n = report.winning_even.size() + report.winning_odd.size();
  if (!report.is_partition(n)) throw std::logic_error("winning sets do not partition the game");
  std::ostringstream out;
  if (format == SolutionFormat::Text) {
    std::vector<int> winner(n, 0);
    for (Vertex v : report.winning_odd) winner[v] = 1;
    out << "paritysol " << (n == 0 ? 0 : n - 1) << ";\n";
    for (Vertex v = 0; v < n; ++v) {
      out << v << ' ' << winner[v];
      const auto& s = winner[v] == 0 ? report.strategy_even : report.strategy_odd;
      if (s && s->defined(v)) out << ' ' << s->choice[v];
      out << ";\n";
    }
    return out.str();
  }

  const OpCounters& c = report.counters;
  out << "algorithm: " << report.algorithm << '\n';
  out << "vertices: " << n << '\n';
  out << "winning_even: ";
  write_list(out, report.winning_even);
  out << "\nwinning_odd: ";
  write_list(out, report.winning_odd);
  out << "\nstrategy_even: ";
  write_strategy(out, report.strategy_even);
  out << "\nstrategy_odd: ";
  write_strategy(out, report.strategy_odd);
  out << '\n';
  out << "unions: " << c.unions << '\n';
  out << "intersections: " << c.intersections << '\n';
  out << "differences: " << c.differences << '\n';
  out << "containment_tests: " << c.containment_tests << '\n';
  out << "equality_tests: " << c.equality_tests << '\n';
  out << "cardinality_queries: " << c.cardinality_queries << '\n';
  out << "basic_ops: " << c.basic_ops() << '\n';
  out << "pre_ops: " << c.pre_ops << '\n';
  out << "cpre_ops: " << c.cpre_ops << '\n';
  out << "peak_live_sets: " << c.peak_live_sets << '\n';
  out << "wall_time_ns: " << report.wall_time.count() << '\n';
  for (const auto& [key, value] : report.diagnostics) out << key << ": " << value << '\n';
  return out.str();
}

ParsedSolution parse_solution(std::string_view text, std::size_t vertex_count) {
  ParsedSolution out;
  out.strategy_even = Strategy(Player::Even, vertex_count);
  out.strategy_odd = Strategy(Player::Odd, vertex_count);
  std::vector<int> winner(vertex_count, -1);
  std::size_t line_no = 0;
  std::size_t begin = 0;
  while (begin < text.size()) {
    std::size_t end = text.find('\n', begin);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(begin, end - begin);
    begin = end + 1;
    ++line_no;
    LineScanner sc(line, line_no);
    if (sc.at_end()) continue;
    const std::string_view keyword = sc.word();
    if (keyword == "paritysol") {
      sc.number("max id");
      sc.accept(';');
      continue;
    }
    if (!keyword.empty()) throw ParseError(line_no, "unexpected '" + std::string(keyword) + "'");
    sc.rewind();
    const std::uint64_t v = sc.number("vertex id");
    const std::uint64_t who = sc.number("winner");
    if (v >= vertex_count) throw ParseError(line_no, "vertex id outside the game");
    if (who > 1) throw ParseError(line_no, "winner must be 0 or 1");
    if (winner[v] != -1) throw ParseError(line_no, "vertex listed twice");
    winner[v] = static_cast<int>(who);
    if (!sc.peek(';')) {
      const std::uint64_t to = sc.number("strategy successor");
      if (to >= vertex_count) throw ParseError(line_no, "strategy successor outside the game");
      (who == 0 ? out.strategy_even : out.strategy_odd).choice[v] = static_cast<Vertex>(to);
    }
    if (!sc.accept(';')) throw ParseError(line_no, "expected ';'");
  }
  for (Vertex v = 0; v < vertex_count; ++v) {
    if (winner[v] == -1) throw ParseError(line_no, "no winner given for vertex " + std::to_string(v));
    (winner[v] == 0 ? out.winning_even : out.winning_odd).push_back(v);
  }
  return out;
}

ParityGame gen_random(std::size_t n, Priority c, std::size_t min_deg, std::size_t max_deg,
                      std::uint64_t seed) {
  if (n == 0 || c == 0 || min_deg < 1 || min_deg > max_deg || max_deg > n) {
    throw std::invalid_argument("gen_random needs n >= 1, c >= 1 and 1 <= min_deg <= max_deg <= n");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> owner_dist(0, 1);
  std::uniform_int_distribution<Priority> prio_dist(0, c - 1);
  std::uniform_int_distribution<std::size_t> deg_dist(min_deg, max_deg);
  std::vector<Player> owners(n);
  std::vector<Priority> priorities(n);
  std::vector<VertexList> succ(n);
  std::vector<Vertex> pool(n);
  for (Vertex v = 0; v < n; ++v) {
    owners[v] = owner_dist(rng) == 0 ? Player::Even : Player::Odd;
    priorities[v] = prio_dist(rng);
    const std::size_t deg = deg_dist(rng);
    std::iota(pool.begin(), pool.end(), Vertex{0});
    // partial Fisher-Yates: the first deg entries are a uniform sample
    for (std::size_t i = 0; i < deg; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, n - 1);
      std::swap(pool[i], pool[pick(rng)]);
    }
    succ[v].assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(deg));
  }
  return normalize_priorities(build_game(std::move(owners), std::move(priorities), succ)).game;
}

}  // namespace symparity
