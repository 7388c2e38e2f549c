#pragma once

/**
 * @file altbin.hpp
 * @brief Alternating binary expansions.
 *
 * For l_0 >= 0 and l_1, ..., l_d >= 1,
 *
 *     A(l_0, ..., l_d) = sum_{i=0}^{d} (-1)^{d-i} 2^{l_0 + ... + l_i},
 *
 * i.e. the partial sums k_i = l_0 + ... + l_i are strictly increasing
 * exponents with alternating signs, the top one positive.  Every positive
 * integer has exactly two such expansions; exactly one of them has l_1 = 1
 * (the canonical form).
 */

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "diatomic/bigint.hpp"

namespace diatomic {

struct AltBinExpansion {
  std::uint64_t l0 = 0;
  std::vector<std::uint64_t> tail;  // l_1, ..., l_d, each >= 1

  std::uint64_t depth() const { return tail.size(); }  // d
  bool is_canonical() const { return !tail.empty() && tail.front() == 1; }

  friend bool operator==(const AltBinExpansion&,
                         const AltBinExpansion&) = default;
};

inline void validate(const AltBinExpansion& e) {
  for (std::uint64_t l : e.tail) {
    if (l < 1) {
      throw std::invalid_argument(
          "AltBinExpansion: tail entries must be positive");
    }
  }
}

/// A(l_0, ..., l_d).  Satisfies 2^{k_d - 1} <= value <= 2^{k_d}, strict on
/// the right when d > 0.
inline BigInt evaluate(const AltBinExpansion& e) {
  validate(e);
  BigInt acc = 0;
  std::uint64_t exponent = e.l0;
  const std::size_t d = e.tail.size();
  bool negative = d % 2 != 0;  // sign of the i = 0 term is (-1)^d
  for (std::size_t i = 0;; ++i) {
    BigInt term = BigInt(1) << exponent;
    acc += negative ? -term : term;
    negative = !negative;
    if (i == d) break;
    exponent += e.tail[i];
  }
  return acc;
}

/**
 * The unique expansion of n >= 1 with d >= 1 and l_1 = 1.
 *
 * Peels n from the top: with 2^{k-1} <= n < 2^k, the top exponent is k and
 * the rest is the canonical expansion of 2^k - n; a power of two bottoms out
 * as A(l_0, 1).  Exponents are collected descending and reversed once.
 */
inline AltBinExpansion canonical_expansion(const BigInt& n) {
  if (n < 1) {
    throw std::domain_error("canonical_expansion: argument must be >= 1");
  }
  std::vector<std::uint64_t> exps;  // k_d, k_{d-1}, ..., k_0
  BigInt rest = n;
  for (;;) {
    const std::uint64_t k = msb(rest) + 1;  // 2^{k-1} <= rest < 2^k
    exps.push_back(k);
    if (rest == BigInt(1) << (k - 1)) {
      exps.push_back(k - 1);
      break;
    }
    rest = (BigInt(1) << k) - rest;
  }
  AltBinExpansion e;
  e.l0 = exps.back();
  e.tail.reserve(exps.size() - 1);
  for (std::size_t i = exps.size() - 1; i-- > 0;) {
    e.tail.push_back(exps[i] - exps[i + 1]);
  }
  return e;
}

/**
 * The other expansion of the same integer, given the canonical one:
 * A(l_0) when d = 1, else A(l_0, l_2 + 1, l_3, ..., l_d).
 */
inline AltBinExpansion sibling_expansion(const AltBinExpansion& e) {
  validate(e);
  if (!e.is_canonical()) {
    throw std::invalid_argument("sibling_expansion: input must be canonical");
  }
  AltBinExpansion s;
  s.l0 = e.l0;
  if (e.tail.size() > 1) {
    s.tail.assign(e.tail.begin() + 1, e.tail.end());
    s.tail.front() += 1;
  }
  return s;
}

/// Renders "A(l0;l1,...,ld)", or "A(l0)" when the tail is empty.
inline std::string to_string(const AltBinExpansion& e) {
  std::string out = "A(" + std::to_string(e.l0);
  for (std::size_t i = 0; i < e.tail.size(); ++i) {
    out += i == 0 ? ';' : ',';
    out += std::to_string(e.tail[i]);
  }
  out += ')';
  return out;
}

inline AltBinExpansion parse_expansion(std::string_view text) {
  std::string compact;
  compact.reserve(text.size());
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
  }
  if (compact.size() < 4 || compact.front() != 'A' || compact[1] != '(' ||
      compact.back() != ')') {
    throw std::invalid_argument("parse_expansion: expected \"A(l0;l1,...)\"");
  }
  std::string_view body{compact.data() + 2, compact.size() - 3};
  auto take_number = [&](std::string_view part) -> std::uint64_t {
    if (part.empty()) {
      throw std::invalid_argument("parse_expansion: empty number");
    }
    std::uint64_t value = 0;
    for (char ch : part) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) {
        throw std::invalid_argument("parse_expansion: bad digit");
      }
      value = value * 10 + static_cast<std::uint64_t>(ch - '0');
    }
    return value;
  };
  AltBinExpansion e;
  const std::size_t semicolon = body.find(';');
  e.l0 = take_number(body.substr(0, semicolon));
  if (semicolon != std::string_view::npos) {
    std::string_view rest = body.substr(semicolon + 1);
    for (;;) {
      const std::size_t comma = rest.find(',');
      e.tail.push_back(take_number(rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
  }
  validate(e);
  return e;
}

}  // namespace diatomic
