#pragma once

/**
 * @file extremal.hpp
 * @brief Closed forms for the largest row values, the kappa identities,
 *        extremal bounds over the shape classes, and recurrence checkers.
 *
 * The m-th largest distinct value of row r is
 *
 *     F_{r+2} - F_i F_j,  i = 2m-2-b,  j = r-2m+1+b,
 *
 * with b = 0 when m <= floor((r+3)/4) or r is even, else b = 1, valid for
 * 1 <= m <= ceil(r/2).  As a set the top values are
 * {F_{r+2} - F_i F_j : i + j = r - 1, i, j >= 0}.
 */

#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "diatomic/altbin.hpp"
#include "diatomic/bigint.hpp"
#include "diatomic/continuant.hpp"
#include "diatomic/fibonacci.hpp"
#include "diatomic/sequence.hpp"
#include "diatomic/shapes.hpp"

namespace diatomic {

/// Number of ranks the closed form covers for row r: ceil(r/2).
inline std::int64_t closed_form_rank_count(std::int64_t r) {
  return r < 0 ? 0 : (r + 1) / 2;
}

struct ClosedFormResult {
  std::int64_t r = 0;
  std::int64_t m = 0;
  int b = 0;
  std::int64_t i = 0;
  std::int64_t j = 0;
  BigInt value;
};

inline ClosedFormResult closed_form_L(std::int64_t r, std::int64_t m) {
  if (r < 0 || m < 1 || m > closed_form_rank_count(r)) {
    throw std::out_of_range("closed_form_L: rank outside [1, ceil(r/2)]");
  }
  ClosedFormResult out;
  out.r = r;
  out.m = m;
  out.b = (m <= (r + 3) / 4 || r % 2 == 0) ? 0 : 1;
  out.i = 2 * m - 2 - out.b;
  out.j = r - 2 * m + 1 + out.b;
  out.value = fib(r + 2) - fib(out.i) * fib(out.j);
  return out;
}

/// {F_{r+2} - F_i F_j : i + j = r - 1, i, j >= 0}; empty for r = 0 where
/// the index set is empty.  Cardinality ceil(r/2) for r >= 1.
inline std::set<BigInt> top_value_set(std::int64_t r) {
  if (r < 0) throw std::out_of_range("top_value_set: r must be >= 0");
  std::set<BigInt> out;
  const BigInt whole = fib(r + 2);
  for (std::int64_t i = 0; i <= r - 1; ++i) {
    out.insert(whole - fib(i) * fib(r - 1 - i));
  }
  return out;
}

namespace detail {

/// m-th largest row value for any r where it is defined: rank 1 is F_{r+2}
/// for every r >= 0 (the closed form's rank range is empty at r = 0);
/// higher ranks defer to the closed form.
inline BigInt top_value(std::int64_t r, std::int64_t m) {
  if (m == 1 && r >= 0) return fib(r + 2);
  return closed_form_L(r, m).value;
}

}  // namespace detail

/**
 * The three pad-interleaved continuant identities, each evaluated as a
 * closed form and checked against direct evaluation of the expanded shape:
 *
 *   k2  : (1^p0, 2, 1^p1)       F_{p0+p1+3} - F_{p0} F_{p1}
 *   k2' : same shape            F_{p0+p1+2} + F_{p0+p1} + F_{p0-1} F_{p1-1}
 *   k3  : (1^p0, 3, 1^p1)       F_{p0+p1+3} + F_{p0+p1+1} - 2 F_{p0+p1-2}
 *                                 - 2 F_{p0-2} F_{p1-2}
 *   k22 : (1^p0, 2, 1^p1, 2, 1^p2)  see below
 *
 * Negative Fibonacci indices follow F_{-n} = (-1)^{n+1} F_n.
 */
struct KappaClosedForms {
  std::uint64_t p0 = 0;
  std::uint64_t p1 = 0;
  std::uint64_t p2 = 0;
  BigInt mark2;
  BigInt mark2_alt;
  BigInt mark3;
  BigInt marks22;
  bool verified = false;  // all forms match direct continuant evaluation
};

inline KappaClosedForms kappa_closed_forms(std::uint64_t p0, std::uint64_t p1,
                                           std::uint64_t p2) {
  const auto a = static_cast<std::int64_t>(p0);
  const auto b = static_cast<std::int64_t>(p1);
  const auto c = static_cast<std::int64_t>(p2);
  KappaClosedForms out;
  out.p0 = p0;
  out.p1 = p1;
  out.p2 = p2;
  out.mark2 = fib(a + b + 3) - fib(a) * fib(b);
  out.mark2_alt = fib(a + b + 2) + fib(a + b) + fib(a - 1) * fib(b - 1);
  out.mark3 = fib(a + b + 3) + fib(a + b + 1) - 2 * fib(a + b - 2) -
              2 * fib(a - 2) * fib(b - 2);
  const std::int64_t s = a + b + c;
  out.marks22 =
      (fib(s + 4) + fib(s + 2) - fib(s - 4)) -
      (fib(b) * (fib(a - 1) * fib(c - 1) + 3 * fib(a - 2) * fib(c - 1) +
                 3 * fib(a - 1) * fib(c - 2)) +
       2 * fib(a - 2) * fib(b + 1) * fib(c - 2));
  const BigInt direct2 = kappa(KappaShape{{p0, p1}, {2}});
  const BigInt direct3 = kappa(KappaShape{{p0, p1}, {3}});
  const BigInt direct22 = kappa(KappaShape{{p0, p1, p2}, {2, 2}});
  out.verified = out.mark2 == direct2 && out.mark2_alt == direct2 &&
                 out.mark3 == direct3 && out.marks22 == direct22;
  return out;
}

/**
 * The extremal quantities of the weight-1 and weight-2 classes for r >= 6,
 * each computed by enumeration and by closed form:
 *
 *   max over the single-2 shapes  < F_{r+2}
 *   min over the single-2 shapes  = F_{r+1} + F_{r-1}
 *   max over the single-3 shapes  = F_{r+1} + F_{r-1} - 2 F_{r-4}
 *   max over the double-2 shapes  = F_{r+1} + F_{r-1} - F_{r-7}
 *
 * and the comparison: the all-ones shape of sum r together with both
 * weight-2 classes stays <= the single-2 minimum, strictly except at r = 7
 * where the double-2 maximum attains it.
 */
struct ExtremalBounds {
  std::int64_t r = 0;
  BigInt row_max;                // F_{r+2}
  BigInt weight1_max;            // enumerated
  BigInt weight1_min;            // enumerated
  BigInt weight1_min_closed;     // F_{r+1} + F_{r-1}
  BigInt one_mark3_max;          // enumerated
  BigInt one_mark3_max_closed;   // F_{r+1} + F_{r-1} - 2 F_{r-4}
  BigInt two_marks2_max;         // enumerated
  BigInt two_marks2_max_closed;  // F_{r+1} + F_{r-1} - F_{r-7}
  BigInt reduced_max;  // max over all-ones of sum r and both weight-2 classes
  bool comparison_holds = false;   // reduced_max <= weight1_min
  bool comparison_strict = false;  // reduced_max < weight1_min

  bool all_match() const {
    return weight1_min == weight1_min_closed &&
           one_mark3_max == one_mark3_max_closed &&
           two_marks2_max == two_marks2_max_closed && weight1_max < row_max &&
           comparison_holds;
  }
};

inline ExtremalBounds extremal_bounds(std::int64_t r) {
  if (r < 6) throw std::out_of_range("extremal_bounds: r must be >= 6");
  ExtremalBounds out;
  out.r = r;
  out.row_max = fib(r + 2);
  bool first = true;
  for (const Composition& c :
       enumerate_shapes(ShapeClass::unit_ends_with_weight(r, 1))) {
    const BigInt k = continuant(c);
    if (first || k > out.weight1_max) out.weight1_max = k;
    if (first || k < out.weight1_min) out.weight1_min = k;
    first = false;
  }
  for (const Composition& c : enumerate_shapes(ShapeClass::one_mark_3(r))) {
    const BigInt k = continuant(c);
    if (k > out.one_mark3_max) out.one_mark3_max = k;
  }
  for (const Composition& c : enumerate_shapes(ShapeClass::two_marks_2(r))) {
    const BigInt k = continuant(c);
    if (k > out.two_marks2_max) out.two_marks2_max = k;
  }
  out.weight1_min_closed = fib(r + 1) + fib(r - 1);
  out.one_mark3_max_closed = fib(r + 1) + fib(r - 1) - 2 * fib(r - 4);
  out.two_marks2_max_closed = fib(r + 1) + fib(r - 1) - fib(r - 7);
  out.reduced_max = fib(r + 1);  // all-ones of sum r
  if (out.one_mark3_max > out.reduced_max) {
    out.reduced_max = out.one_mark3_max;
  }
  if (out.two_marks2_max > out.reduced_max) {
    out.reduced_max = out.two_marks2_max;
  }
  out.comparison_holds = out.reduced_max <= out.weight1_min;
  out.comparison_strict = out.reduced_max < out.weight1_min;
  return out;
}

/// {K(c) : c unit-ended, sum <= r+1}; equals the distinct value set of
/// row r.
inline std::set<BigInt> row_values_via_continuants(
    std::int64_t r, std::size_t max_elements = kDefaultEntryCap) {
  if (r < 0) {
    throw std::out_of_range("row_values_via_continuants: r must be >= 0");
  }
  std::set<BigInt> out;
  for (const Composition& c :
       enumerate_shapes(ShapeClass::unit_ends_up_to(r), max_elements)) {
    out.insert(continuant(c));
  }
  return out;
}

/// s(n) computed through the expansion route: the continuant of the tail of
/// the canonical expansion of n.
inline BigInt stern_continuant_bridge(const BigInt& n) {
  const AltBinExpansion e = canonical_expansion(n);
  return continuant(Composition(e.tail));
}

struct Conjecture7Witness {
  std::int64_t r = 0;
  std::int64_t m = 0;
  BigInt current;  // m-th value of row r
  BigInt prev;     // row r-1
  BigInt prev2;    // row r-2
  bool holds = false;
};

/// Whether the m-th values satisfy the row recurrence
/// value(r) = value(r-1) + value(r-2), stated for r >= 4m-2.
inline Conjecture7Witness check_conjecture7(std::int64_t r, std::int64_t m) {
  if (m < 1 || r < 4 * m - 2) {
    throw std::out_of_range("check_conjecture7: need m >= 1 and r >= 4m-2");
  }
  Conjecture7Witness out;
  out.r = r;
  out.m = m;
  out.current = detail::top_value(r, m);
  out.prev = detail::top_value(r - 1, m);
  out.prev2 = detail::top_value(r - 2, m);
  out.holds = out.current == out.prev + out.prev2;
  return out;
}

struct Conjecture9Witness {
  std::int64_t r = 0;
  std::int64_t m = 0;
  BigInt higher;   // rank m-1 value of row r
  BigInt lower;    // rank m value of row r
  BigInt fib_gap;  // F_{r-(4m-5)}
  bool holds = false;
};

/// Whether consecutive ranks differ by F_{r-(4m-5)}, stated for m >= 2 and
/// r >= 4m-4.
inline Conjecture9Witness check_conjecture9(std::int64_t r, std::int64_t m) {
  if (m < 2 || r < 4 * m - 4) {
    throw std::out_of_range("check_conjecture9: need m >= 2 and r >= 4m-4");
  }
  Conjecture9Witness out;
  out.r = r;
  out.m = m;
  out.higher = detail::top_value(r, m - 1);
  out.lower = detail::top_value(r, m);
  out.fib_gap = fib(r - (4 * m - 5));
  out.holds = out.higher - out.lower == out.fib_gap;
  return out;
}

}  // namespace diatomic
