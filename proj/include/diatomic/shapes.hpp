#pragma once

/**
 * @file shapes.hpp
 * @brief Families of unit-ended compositions and padded kappa shapes.
 *
 * A row-r shape is a composition with l_1 = l_d = 1.  The full class has
 * sum r+1; the relaxed class allows sum <= r+1; sub-classes fix the weight
 * sum(l) - d, or the exact mark pattern (a single 3, or two 2s, between
 * runs of 1s).
 */

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "diatomic/bigint.hpp"
#include "diatomic/continuant.hpp"
#include "diatomic/errors.hpp"
#include "diatomic/sequence.hpp"

namespace diatomic {

struct ShapeClass {
  enum class Kind {
    unit_ends,                    // sum = r+1
    unit_ends_up_to,              // sum <= r+1
    unit_ends_with_weight,        // sum = r+1, weight = a
    unit_ends_up_to_with_weight,  // sum <= r+1, weight = a
    one_mark_3,                   // (1^p0, 3, 1^p1), p0, p1 >= 1, sum = r+1
    two_marks_2,  // (1^p0, 2, 1^p1, 2, 1^p2), p0, p2 >= 1, p1 >= 0, sum = r+1
  };

  Kind kind = Kind::unit_ends;
  std::int64_t r = 0;
  std::uint64_t target_weight = 0;  // used by the *_with_weight kinds only

  static ShapeClass unit_ends(std::int64_t r) {
    return {Kind::unit_ends, r, 0};
  }
  static ShapeClass unit_ends_up_to(std::int64_t r) {
    return {Kind::unit_ends_up_to, r, 0};
  }
  static ShapeClass unit_ends_with_weight(std::int64_t r, std::uint64_t a) {
    return {Kind::unit_ends_with_weight, r, a};
  }
  static ShapeClass unit_ends_up_to_with_weight(std::int64_t r,
                                                std::uint64_t a) {
    return {Kind::unit_ends_up_to_with_weight, r, a};
  }
  static ShapeClass one_mark_3(std::int64_t r) {
    return {Kind::one_mark_3, r, 0};
  }
  static ShapeClass two_marks_2(std::int64_t r) {
    return {Kind::two_marks_2, r, 0};
  }
};

inline bool shape_contains(const ShapeClass& sc, const Composition& c) {
  if (sc.r < 0 || c.empty()) return false;
  const auto& parts = c.parts();
  if (parts.front() != 1 || parts.back() != 1) return false;
  const std::uint64_t budget = static_cast<std::uint64_t>(sc.r) + 1;
  const std::uint64_t sum = c.sum();
  switch (sc.kind) {
    case ShapeClass::Kind::unit_ends:
      return sum == budget;
    case ShapeClass::Kind::unit_ends_up_to:
      return sum <= budget;
    case ShapeClass::Kind::unit_ends_with_weight:
      return sum == budget && c.weight() == sc.target_weight;
    case ShapeClass::Kind::unit_ends_up_to_with_weight:
      return sum <= budget && c.weight() == sc.target_weight;
    case ShapeClass::Kind::one_mark_3: {
      if (sum != budget) return false;
      std::size_t marks = 0;
      for (std::uint64_t p : parts) {
        if (p == 3) ++marks;
        else if (p != 1) return false;
      }
      return marks == 1;
    }
    case ShapeClass::Kind::two_marks_2: {
      if (sum != budget) return false;
      std::size_t marks = 0;
      for (std::uint64_t p : parts) {
        if (p == 2) ++marks;
        else if (p != 1) return false;
      }
      return marks == 2;
    }
  }
  return false;
}

namespace detail {

/// Compositions of s >= 0 in lexicographic order (s = 0 yields one empty
/// composition).
template <typename Fn>
void for_each_composition(std::uint64_t s, std::vector<std::uint64_t>& prefix,
                          Fn&& fn) {
  if (s == 0) {
    fn(prefix);
    return;
  }
  for (std::uint64_t first = 1; first <= s; ++first) {
    prefix.push_back(first);
    for_each_composition(s - first, prefix, fn);
    prefix.pop_back();
  }
}

/// Compositions of s into exactly k positive parts, lexicographic.
template <typename Fn>
void for_each_composition_into(std::uint64_t s, std::uint64_t k,
                               std::vector<std::uint64_t>& prefix, Fn&& fn) {
  if (k == 0) {
    if (s == 0) fn(prefix);
    return;
  }
  if (s < k) return;
  for (std::uint64_t first = 1; first <= s - k + 1; ++first) {
    prefix.push_back(first);
    for_each_composition_into(s - first, k - 1, prefix, fn);
    prefix.pop_back();
  }
}

inline BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  BigInt result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
  }
  return result;
}

// |E_r| = 2^{r-2} for r >= 2; a single shape for r in {0, 1}.
inline BigInt count_unit_ends(std::int64_t r) {
  if (r < 0) return 0;
  if (r <= 1) return 1;
  return BigInt(1) << (r - 2);
}

inline BigInt count_with_weight(std::int64_t r, std::uint64_t a) {
  if (r < 0) return 0;
  if (r <= 1) return a == 0 ? 1 : 0;
  // interior: r-1-a positive parts summing to r-1
  if (a > static_cast<std::uint64_t>(r) - 2) return 0;
  return binomial(static_cast<std::uint64_t>(r) - 2, a);
}

inline BigInt count_shapes(const ShapeClass& sc) {
  switch (sc.kind) {
    case ShapeClass::Kind::unit_ends:
      return count_unit_ends(sc.r);
    case ShapeClass::Kind::unit_ends_up_to: {
      BigInt total = 0;
      for (std::int64_t t = 0; t <= sc.r; ++t) total += count_unit_ends(t);
      return total;
    }
    case ShapeClass::Kind::unit_ends_with_weight:
      return count_with_weight(sc.r, sc.target_weight);
    case ShapeClass::Kind::unit_ends_up_to_with_weight: {
      BigInt total = 0;
      for (std::int64_t t = 0; t <= sc.r; ++t) {
        total += count_with_weight(t, sc.target_weight);
      }
      return total;
    }
    case ShapeClass::Kind::one_mark_3:
      return sc.r >= 4 ? BigInt(sc.r - 3) : 0;
    case ShapeClass::Kind::two_marks_2:
      return sc.r >= 5 ? BigInt(sc.r - 3) * (sc.r - 4) / 2 : 0;
  }
  return 0;
}

inline std::vector<std::uint64_t> ones(std::uint64_t count) {
  return std::vector<std::uint64_t>(count, 1);
}

template <typename Sink>
void emit_unit_ends(std::int64_t r, Sink&& sink) {
  if (r < 0) return;
  if (r == 0) {
    sink(Composition{1});
    return;
  }
  std::vector<std::uint64_t> prefix;
  for_each_composition(static_cast<std::uint64_t>(r) - 1, prefix,
                       [&](const std::vector<std::uint64_t>& interior) {
                         std::vector<std::uint64_t> parts;
                         parts.reserve(interior.size() + 2);
                         parts.push_back(1);
                         parts.insert(parts.end(), interior.begin(),
                                      interior.end());
                         parts.push_back(1);
                         sink(Composition(std::move(parts)));
                       });
}

template <typename Sink>
void emit_with_weight(std::int64_t r, std::uint64_t a, Sink&& sink) {
  if (r < 0) return;
  if (r <= 1) {
    if (a == 0) sink(Composition(ones(static_cast<std::uint64_t>(r) + 1)));
    return;
  }
  if (a > static_cast<std::uint64_t>(r) - 2) return;
  const std::uint64_t interior_sum = static_cast<std::uint64_t>(r) - 1;
  std::vector<std::uint64_t> prefix;
  for_each_composition_into(interior_sum, interior_sum - a, prefix,
                            [&](const std::vector<std::uint64_t>& interior) {
                              std::vector<std::uint64_t> parts;
                              parts.reserve(interior.size() + 2);
                              parts.push_back(1);
                              parts.insert(parts.end(), interior.begin(),
                                           interior.end());
                              parts.push_back(1);
                              sink(Composition(std::move(parts)));
                            });
}

}  // namespace detail

/**
 * All members of the class, in lexicographic order (the sum <= r+1 kinds
 * iterate sub-classes in increasing sum, lexicographic within each).
 * Throws resource_limit_error when the class has more than max_elements
 * members.
 */
inline std::vector<Composition> enumerate_shapes(
    const ShapeClass& sc, std::size_t max_elements = kDefaultEntryCap) {
  if (detail::count_shapes(sc) > max_elements) {
    throw resource_limit_error("enumerate_shapes: class size exceeds cap");
  }
  std::vector<Composition> out;
  auto sink = [&](Composition c) { out.push_back(std::move(c)); };
  switch (sc.kind) {
    case ShapeClass::Kind::unit_ends:
      detail::emit_unit_ends(sc.r, sink);
      break;
    case ShapeClass::Kind::unit_ends_up_to:
      for (std::int64_t t = 0; t <= sc.r; ++t) detail::emit_unit_ends(t, sink);
      break;
    case ShapeClass::Kind::unit_ends_with_weight:
      detail::emit_with_weight(sc.r, sc.target_weight, sink);
      break;
    case ShapeClass::Kind::unit_ends_up_to_with_weight:
      for (std::int64_t t = 0; t <= sc.r; ++t) {
        detail::emit_with_weight(t, sc.target_weight, sink);
      }
      break;
    case ShapeClass::Kind::one_mark_3:
      for (std::int64_t p0 = sc.r - 3; p0 >= 1; --p0) {
        std::vector<std::uint64_t> parts =
            detail::ones(static_cast<std::uint64_t>(p0));
        parts.push_back(3);
        const auto p1 = static_cast<std::uint64_t>(sc.r - 2 - p0);
        parts.insert(parts.end(), p1, 1);
        sink(Composition(std::move(parts)));
      }
      break;
    case ShapeClass::Kind::two_marks_2:
      for (std::int64_t p0 = sc.r - 4; p0 >= 1; --p0) {
        for (std::int64_t p1 = sc.r - 4 - p0; p1 >= 0; --p1) {
          std::vector<std::uint64_t> parts =
              detail::ones(static_cast<std::uint64_t>(p0));
          parts.push_back(2);
          parts.insert(parts.end(), static_cast<std::uint64_t>(p1), 1);
          parts.push_back(2);
          const auto p2 = static_cast<std::uint64_t>(sc.r - 3 - p0 - p1);
          parts.insert(parts.end(), p2, 1);
          sink(Composition(std::move(parts)));
        }
      }
      break;
  }
  return out;
}

/**
 * Runs of 1s interleaved with marks: pads (p_0, ..., p_s) and marks
 * (X_1, ..., X_s) expand to 1^{p_0}, X_1, 1^{p_1}, ..., X_s, 1^{p_s}.
 * Pads may be zero; marks must be >= 2 so the expansion determines the
 * shape uniquely.
 */
struct KappaShape {
  std::vector<std::uint64_t> pads;
  std::vector<std::uint64_t> marks;

  friend bool operator==(const KappaShape&, const KappaShape&) = default;
};

inline void validate(const KappaShape& ks) {
  if (ks.pads.size() != ks.marks.size() + 1) {
    throw std::invalid_argument("KappaShape: need one more pad than marks");
  }
  for (std::uint64_t mark : ks.marks) {
    if (mark < 2) {
      throw std::invalid_argument("KappaShape: marks must be >= 2");
    }
  }
}

inline Composition expand(const KappaShape& ks) {
  validate(ks);
  std::vector<std::uint64_t> parts;
  for (std::size_t i = 0; i < ks.pads.size(); ++i) {
    parts.insert(parts.end(), ks.pads[i], 1);
    if (i < ks.marks.size()) parts.push_back(ks.marks[i]);
  }
  return Composition(std::move(parts));
}

inline BigInt kappa(const KappaShape& ks) { return continuant(expand(ks)); }

/// Renders "p0,p1,...|X1,..."; a mark-free shape keeps the bar: "p0|".
inline std::string to_string(const KappaShape& ks) {
  std::string out;
  for (std::size_t i = 0; i < ks.pads.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(ks.pads[i]);
  }
  out += '|';
  for (std::size_t i = 0; i < ks.marks.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(ks.marks[i]);
  }
  return out;
}

inline KappaShape parse_kappa_shape(std::string_view text) {
  std::string compact;
  compact.reserve(text.size());
  for (char ch : text) {
    if (ch != ' ' && ch != '\t') compact += ch;
  }
  const std::size_t bar = compact.find('|');
  if (bar == std::string::npos) {
    throw std::invalid_argument("parse_kappa_shape: expected \"pads|marks\"");
  }
  auto parse_list = [](std::string_view side) {
    std::vector<std::uint64_t> values;
    std::string_view rest = side;
    while (!rest.empty()) {
      const std::size_t comma = rest.find(',');
      std::string_view item = rest.substr(0, comma);
      if (item.empty()) {
        throw std::invalid_argument("parse_kappa_shape: empty entry");
      }
      std::uint64_t value = 0;
      for (char ch : item) {
        if (ch < '0' || ch > '9') {
          throw std::invalid_argument("parse_kappa_shape: bad digit");
        }
        value = value * 10 + static_cast<std::uint64_t>(ch - '0');
      }
      values.push_back(value);
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    return values;
  };
  KappaShape ks;
  ks.pads = parse_list(std::string_view(compact).substr(0, bar));
  ks.marks = parse_list(std::string_view(compact).substr(bar + 1));
  validate(ks);
  return ks;
}

/**
 * Maps c, a unit-ended composition with sum <= r+1 that is neither the
 * all-ones full-sum shape nor a full-sum single-2 shape, to a member m of
 * the reduced family (all-ones of sum r, or a full-sum weight-2 shape) with
 * continuant(c) <= continuant(m):
 *
 *   weight 0: pad to the all-ones composition of sum r;
 *   weight 1: (1^p0, 2, 1^p1) grows to (1^p0, 3, 1^{r-2-p0});
 *   weight >= 2: split the leftmost interior entry >= 2 as (l_j - 1, 1) and
 *     repeat; a full-sum weight-2 shape is already reduced and is returned
 *     as is.
 *
 * Splitting preserves the sum and drops the weight by one, so the loop
 * terminates; every rewrite is continuant-non-decreasing.
 */
inline Composition reduce_step(const Composition& c, std::int64_t r) {
  if (r < 0) {
    throw std::invalid_argument("reduce_step: r must be >= 0");
  }
  if (!shape_contains(ShapeClass::unit_ends_up_to(r), c)) {
    throw std::invalid_argument(
        "reduce_step: composition is not a unit-ended shape of sum <= r+1");
  }
  const bool full_sum = c.sum() == static_cast<std::uint64_t>(r) + 1;
  if (full_sum && c.weight() <= 1) {
    throw std::invalid_argument(
        "reduce_step: composition is in an excluded sub-class");
  }
  Composition current = c;
  for (;;) {
    const std::uint64_t w = current.weight();
    if (w == 0) {
      // sum <= r here, so padding to sum r never shrinks the composition
      return Composition(detail::ones(static_cast<std::uint64_t>(r)));
    }
    if (w == 1) {
      std::size_t mark = 0;
      while (current.parts()[mark] == 1) ++mark;
      std::vector<std::uint64_t> parts = detail::ones(mark);
      parts.push_back(3);
      const std::uint64_t p1 = static_cast<std::uint64_t>(r) - 2 - mark;
      parts.insert(parts.end(), p1, 1);
      return Composition(std::move(parts));
    }
    if (w == 2 && full_sum) return current;  // already reduced
    std::size_t j = 2;  // leftmost interior entry >= 2 (ends are 1)
    while (current.at(j) == 1) ++j;
    current = split(current, j, current.at(j) - 1, 1);
  }
}

}  // namespace diatomic
