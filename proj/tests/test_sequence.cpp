#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "diatomic/fibonacci.hpp"
#include "diatomic/sequence.hpp"
#include "oracles.hpp"

using diatomic::BigInt;
using diatomic::stern;
using diatomic::stern_row;

TEST_CASE("stern anchor values") {
  REQUIRE(stern(0) == 0);
  REQUIRE(stern(1) == 1);
  REQUIRE(stern(11) == 5);
  REQUIRE(stern(BigInt(1) << 20) == 1);
  REQUIRE_THROWS_AS(stern(-1), std::domain_error);
}

TEST_CASE("row anchor values") {
  const auto row0 = stern_row(0);
  REQUIRE(row0.words() == std::vector<std::uint64_t>{1, 1});

  const auto row2 = stern_row(2);
  REQUIRE(row2.words() == std::vector<std::uint64_t>{1, 3, 2, 3, 1});

  const auto row4 = stern_row(4);
  REQUIRE(row4.words() ==
          std::vector<std::uint64_t>{1, 5, 4, 7, 3, 8, 5, 7, 2, 7, 5, 8, 3, 7,
                                     4, 5, 1});
}

TEST_CASE("rows agree with the pointwise sequence") {
  for (std::uint32_t r = 0; r <= 16; ++r) {
    const auto row = stern_row(r);
    REQUIRE(row.r() == r);
    REQUIRE(row.size() == (std::size_t{1} << r) + 1);
    const std::uint64_t base = std::uint64_t{1} << r;
    for (std::size_t k = 0; k < row.size(); ++k) {
      REQUIRE(row.words()[k] == oracles::stern(base + k));
      REQUIRE(row.at(k) == stern(BigInt(base) + k));
    }
  }
}

TEST_CASE("recursion holds pointwise") {
  for (std::uint64_t n = 1; n <= (1u << 16); ++n) {
    REQUIRE(stern(2 * n) == stern(n));
    REQUIRE(stern(2 * n + 1) == stern(n) + stern(n + 1));
  }
}

TEST_CASE("row maximum is a Fibonacci number") {
  for (std::uint32_t r = 0; r <= 20; ++r) {
    const auto row = stern_row(r);
    const auto top = diatomic::brute_force_top(row, 1);
    REQUIRE(top.size() == 1);
    REQUIRE(top[0].rank == 1);
    REQUIRE(top[0].value == diatomic::fib(r + 2));
    REQUIRE_FALSE(top[0].positions.empty());
    REQUIRE(std::is_sorted(top[0].positions.begin(), top[0].positions.end()));
    const std::uint64_t base = std::uint64_t{1} << r;
    for (const auto p : top[0].positions) {
      REQUIRE(p >= base);
      REQUIRE(p <= 2 * base);
      REQUIRE(row.at(static_cast<std::size_t>(p - base)) == top[0].value);
    }
  }
}

TEST_CASE("rows are palindromic") {
  for (std::uint32_t r = 0; r <= 16; ++r) {
    const auto row = stern_row(r);
    const auto& w = row.words();
    for (std::size_t k = 0; k < w.size(); ++k) {
      REQUIRE(w[k] == w[w.size() - 1 - k]);
    }
  }
}

TEST_CASE("top anchor values") {
  const auto t43 = diatomic::brute_force_top(4, 3);
  REQUIRE(t43.size() == 3);
  REQUIRE(t43[0].value == 8);
  REQUIRE(t43[1].value == 7);
  REQUIRE(t43[2].value == 5);

  const auto t05 = diatomic::brute_force_top(0, 5);
  REQUIRE(t05.size() == 1);
  REQUIRE(t05[0].value == 1);
  REQUIRE(t05[0].positions == std::vector<std::uint64_t>{1, 2});

  const auto t74 = diatomic::brute_force_top(7, 4);
  REQUIRE(t74.size() == 4);
  REQUIRE(t74[0].value == 34);
  REQUIRE(t74[1].value == 31);
  REQUIRE(t74[2].value == 30);
  REQUIRE(t74[3].value == 29);

  const auto t52 = diatomic::brute_force_top(5, 2);
  REQUIRE(t52[0].value == 13);
  REQUIRE(t52[1].value == 12);

  const auto t63 = diatomic::brute_force_top(6, 3);
  REQUIRE(t63[0].value == 21);
  REQUIRE(t63[1].value == 19);
  REQUIRE(t63[2].value == 18);
}

TEST_CASE("top positions are exactly the attaining indices") {
  for (std::uint32_t r = 2; r <= 12; ++r) {
    const auto row = stern_row(r);
    const auto tops = diatomic::brute_force_top(row, (r + 1) / 2);
    const std::uint64_t base = std::uint64_t{1} << r;
    for (std::size_t m = 1; m < tops.size(); ++m) {
      REQUIRE(tops[m].value < tops[m - 1].value);
      REQUIRE(tops[m].rank == m + 1);
    }
    for (const auto& rv : tops) {
      std::vector<std::uint64_t> expected;
      for (std::size_t k = 0; k < row.size(); ++k) {
        if (row.at(k) == rv.value) expected.push_back(base + k);
      }
      REQUIRE(rv.positions == expected);
    }
  }
}

TEST_CASE("resource caps") {
  REQUIRE_THROWS_AS(stern_row(30), diatomic::resource_limit_error);
  REQUIRE_THROWS_AS(stern_row(5, 10), diatomic::resource_limit_error);
  REQUIRE_NOTHROW(stern_row(5, 33));
  REQUIRE_THROWS_AS(diatomic::brute_force_top(stern_row(3), 0),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(diatomic::brute_force_top(20, 1, 1000),
                    diatomic::resource_limit_error);
}
