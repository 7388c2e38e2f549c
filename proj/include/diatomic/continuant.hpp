#pragma once

/**
 * @file continuant.hpp
 * @brief Compositions (finite sequences of positive integers) and their
 *        continuants.
 *
 * K(l_1, ..., l_d) is the (1,1) entry of the product
 * M(l_1) ... M(l_d) with M(x) = [[x, 1], [1, 0]]; K of the empty
 * composition is 1.  Equivalently K_d = l_d K_{d-1} + K_{d-2}.
 */

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "diatomic/bigint.hpp"

namespace diatomic {

/// A (possibly empty) sequence of positive integers.
class Composition {
 public:
  Composition() = default;

  explicit Composition(std::vector<std::uint64_t> parts)
      : parts_(std::move(parts)) {
    check();
  }

  Composition(std::initializer_list<std::uint64_t> parts)
      : parts_(parts) {
    check();
  }

  /// Parses "l1,l2,...,ld"; whitespace around numbers is ignored, the empty
  /// string is the empty composition.
  static Composition parse(std::string_view text) {
    std::string compact;
    compact.reserve(text.size());
    for (char ch : text) {
      if (ch != ' ' && ch != '\t') compact += ch;
    }
    std::vector<std::uint64_t> parts;
    std::string_view rest = compact;
    while (!rest.empty()) {
      const std::size_t comma = rest.find(',');
      std::string_view item = rest.substr(0, comma);
      if (item.empty()) {
        throw std::invalid_argument("Composition::parse: empty entry");
      }
      std::uint64_t value = 0;
      for (char ch : item) {
        if (ch < '0' || ch > '9') {
          throw std::invalid_argument("Composition::parse: bad digit");
        }
        value = value * 10 + static_cast<std::uint64_t>(ch - '0');
      }
      parts.push_back(value);
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    return Composition(std::move(parts));
  }

  const std::vector<std::uint64_t>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }      // d
  bool empty() const { return parts_.empty(); }
  std::uint64_t at(std::size_t i) const { return parts_.at(i - 1); }  // l_i

  std::uint64_t sum() const {
    std::uint64_t total = 0;
    for (std::uint64_t p : parts_) total += p;
    return total;
  }

  /// sum() - length(): the number of unit steps above the all-ones floor.
  std::uint64_t weight() const { return sum() - length(); }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(parts_[i]);
    }
    return out;
  }

  friend auto operator<=>(const Composition&, const Composition&) = default;

 private:
  void check() const {
    for (std::uint64_t p : parts_) {
      if (p < 1) {
        throw std::invalid_argument("Composition: entries must be positive");
      }
    }
  }

  std::vector<std::uint64_t> parts_;
};

/// K(l_1, ..., l_d).  Left fold of (a, b) <- (a x + b, a) from (1, 0); after
/// consuming the whole sequence, a is the continuant.
inline BigInt continuant(const Composition& c) {
  BigInt a = 1;
  BigInt b = 0;
  for (std::uint64_t x : c.parts()) {
    BigInt next = a * x + b;
    b = std::move(a);
    a = std::move(next);
  }
  return a;
}

inline Composition reverse(const Composition& c) {
  std::vector<std::uint64_t> parts(c.parts().rbegin(), c.parts().rend());
  return Composition(std::move(parts));
}

/**
 * Replaces l_j (1-based) by the adjacent pair u, v with u + v = l_j.
 * Never decreases the continuant; it is preserved exactly when the split
 * happens at an end with the unit part outermost (j = 1 with u = 1, or
 * j = d with v = 1).
 */
inline Composition split(const Composition& c, std::size_t j, std::uint64_t u,
                         std::uint64_t v) {
  if (j < 1 || j > c.length()) {
    throw std::out_of_range("split: index out of range");
  }
  if (u < 1 || v < 1 || u + v != c.at(j)) {
    throw std::invalid_argument("split: parts must be positive and sum to l_j");
  }
  std::vector<std::uint64_t> parts = c.parts();
  parts[j - 1] = u;
  parts.insert(parts.begin() + static_cast<std::ptrdiff_t>(j), v);
  return Composition(std::move(parts));
}

/**
 * The compositions obtained from the four continuant-preserving rewrites:
 *
 *   K(1, l_2, ...)        = K(l_2 + 1, ...)         (absorb a leading 1)
 *   K(..., l_{d-1}, 1)    = K(..., l_{d-1} + 1)     (absorb a trailing 1)
 *   K(l_1, ...)           = K(1, l_1 - 1, ...)      (peel, needs l_1 >= 2)
 *   K(..., l_d)           = K(..., l_d - 1, 1)      (peel, needs l_d >= 2)
 *
 * Only the rewrites applicable to c are produced; c itself is not included.
 */
inline std::set<Composition> rewrite_identities(const Composition& c) {
  std::set<Composition> out;
  const std::size_t d = c.length();
  if (d >= 2 && c.at(1) == 1) {
    std::vector<std::uint64_t> parts(c.parts().begin() + 1, c.parts().end());
    parts.front() += 1;
    out.insert(Composition(std::move(parts)));
  }
  if (d >= 2 && c.at(d) == 1) {
    std::vector<std::uint64_t> parts(c.parts().begin(), c.parts().end() - 1);
    parts.back() += 1;
    out.insert(Composition(std::move(parts)));
  }
  if (d >= 1 && c.at(1) >= 2) {
    std::vector<std::uint64_t> parts;
    parts.reserve(d + 1);
    parts.push_back(1);
    parts.push_back(c.at(1) - 1);
    parts.insert(parts.end(), c.parts().begin() + 1, c.parts().end());
    out.insert(Composition(std::move(parts)));
  }
  if (d >= 1 && c.at(d) >= 2) {
    std::vector<std::uint64_t> parts = c.parts();
    parts.back() -= 1;
    parts.push_back(1);
    out.insert(Composition(std::move(parts)));
  }
  return out;
}

}  // namespace diatomic
