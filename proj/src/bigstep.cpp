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

#include "symparity/bigstep.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include "recursion.hpp"

namespace symparity {

Rational gamma(std::int64_t c) {
  if (c < 1) throw std::domain_error("gamma needs c >= 1");
  const Rational base = Rational(c, 3) + Rational(1, 2);
  if (c % 2 == 1) {
    if (c == 1) throw std::domain_error("gamma is undefined for c = 1");
    return base - Rational(4, c * c - 1);
  }
  return base - Rational(1, 3 * c) - Rational(4, c * c);
}

Rational beta(std::int64_t c) {
  if (c < 3) throw std::domain_error("beta needs c >= 3");
  return gamma(c) / Rational(c / 2 + 1);
}

BigStepPolicy BigStepPolicy::parse(std::string_view text) {
  if (text == "sqrt") return sqrt();
  if (text == "gamma") return gamma();
  constexpr std::string_view prefix = "fixed:";
  if (text.substr(0, prefix.size()) == prefix) {
    const std::string_view digits = text.substr(prefix.size());
    std::uint32_t h = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), h);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && !digits.empty()) {
      return fixed(h);
    }
  }
  throw std::invalid_argument("unknown policy '" + std::string(text) +
                              "' (expected sqrt, gamma or fixed:<h>)");
}

std::string BigStepPolicy::to_string() const {
  switch (kind) {
    case Kind::Sqrt:
      return "sqrt";
    case Kind::Gamma:
      return "gamma";
    case Kind::Fixed:
      return "fixed:" + std::to_string(fixed_h);
  }
  return "?";
}

namespace {

// Smallest s with s*s >= x.
std::uint64_t ceil_sqrt(std::uint64_t x) {
  auto s = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
  while (s * s < x) ++s;
  while (s > 0 && (s - 1) * (s - 1) >= x) --s;
  return s;
}

}  // namespace

std::uint32_t choose_h(const BigStepPolicy& policy, std::size_t n0, std::size_t n_current,
                       std::uint32_t c) {
  std::uint64_t h = 0;
  switch (policy.kind) {
    case BigStepPolicy::Kind::Sqrt: {
      const std::uint64_t root = ceil_sqrt(2 * static_cast<std::uint64_t>(n_current));
      h = root >= 2 ? root - 2 : 0;
      break;
    }
    case BigStepPolicy::Kind::Gamma: {
      if (c <= 3) {
        h = n_current;
      } else {
        const Rational b = beta(static_cast<std::int64_t>(c) - 1);
        const double exponent =
            static_cast<double>(b.numerator()) / static_cast<double>(b.denominator());
        const double value = 2.0 * std::cbrt(static_cast<double>(c)) *
                             std::pow(static_cast<double>(std::max<std::size_t>(n0, 1)), exponent);
        h = static_cast<std::uint64_t>(std::ceil(value - 1e-9));
      }
      break;
    }
    case BigStepPolicy::Kind::Fixed:
      h = policy.fixed_h;
      break;
  }
  return static_cast<std::uint32_t>(std::min<std::uint64_t>(h, n_current));
}

SolveReport symbolic_big_step(const ParityGame& game, const BigStepPolicy& policy,
                              const SolveOptions& options) {
  return detail::solve_recursive(game, options, &policy, "bigstep/" + policy.to_string());
}

}  // namespace symparity
