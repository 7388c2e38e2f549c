#pragma once

/**
 * @file fibonacci.hpp
 * @brief Fibonacci numbers over all integer indices, exact.
 *
 * F_0 = 0, F_1 = 1, F_n = F_{n-1} + F_{n-2} for every n in Z.  Computation
 * uses binary powering of the matrix
 *
 *     Q = [1 1]      Q^n = [F_{n+1}  F_n    ]
 *         [1 0],           [F_n      F_{n-1}],
 *
 * so fib(n) costs O(log|n|) big-integer multiplications.  Negative indices
 * go through the reflection F_{-n} = (-1)^{n+1} F_n rather than a matrix
 * inverse.
 */

#include <cstdint>
#include <vector>

#include "diatomic/bigint.hpp"

namespace diatomic {

namespace detail {

// Symmetric 2x2 matrix [[a,b],[b,d]].  Powers of Q are symmetric and commute
// with each other, so the product of two of them is symmetric again and needs
// only six multiplications.
struct FibMat {
  BigInt a, b, d;
};

inline FibMat mul(const FibMat& x, const FibMat& y) {
  return {x.a * y.a + x.b * y.b, x.a * y.b + x.b * y.d,
          x.b * y.b + x.d * y.d};
}

}  // namespace detail

/// F_n for any integer n.
inline BigInt fib(std::int64_t n) {
  const bool negate = n < 0 && n % 2 == 0;  // F_{-n} = (-1)^{n+1} F_n
  std::uint64_t e = n < 0 ? 0ULL - static_cast<std::uint64_t>(n)
                          : static_cast<std::uint64_t>(n);
  detail::FibMat acc{1, 0, 1};   // identity
  detail::FibMat base{1, 1, 0};  // Q
  while (e != 0) {
    if (e & 1) acc = detail::mul(acc, base);
    base = detail::mul(base, base);
    e >>= 1;
  }
  return negate ? BigInt(-acc.b) : acc.b;
}

/// F_{n+i} F_{n+j} - F_n F_{n+i+j}.  Always equals (-1)^n F_i F_j.
inline BigInt vajda(std::int64_t n, std::int64_t i, std::int64_t j) {
  return fib(n + i) * fib(n + j) - fib(n) * fib(n + i + j);
}

// One distinct value of {F_i F_j : i,j >= 0, i+j = n}, with the index pair
// that attains it.
struct OrderedProductEntry {
  std::uint64_t rank = 0;  // m, 1-based, ascending by value
  std::uint64_t i = 0;
  std::uint64_t j = 0;  // i + j = n
  BigInt value;         // F_i * F_j
};

/**
 * The distinct values of {F_i F_j : i,j >= 0, i+j = n} in strictly increasing
 * order.  There are exactly ceil((n+1)/2) of them; the m-th carries
 * i = 2m-2-c and j = n-i, where c = 0 if m <= floor((n+4)/4) or n is odd,
 * else c = 1.
 */
inline std::vector<OrderedProductEntry> ordered_products(std::uint64_t n) {
  const std::uint64_t count = (n + 2) / 2;  // ceil((n+1)/2)
  std::vector<OrderedProductEntry> out;
  out.reserve(static_cast<std::size_t>(count));
  for (std::uint64_t m = 1; m <= count; ++m) {
    const std::uint64_t c = (m <= (n + 4) / 4 || n % 2 == 1) ? 0 : 1;
    const std::uint64_t i = 2 * m - 2 - c;
    const std::uint64_t j = n - i;
    out.push_back({m, i, j,
                   fib(static_cast<std::int64_t>(i)) *
                       fib(static_cast<std::int64_t>(j))});
  }
  return out;
}

}  // namespace diatomic
