#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "diatomic/extremal.hpp"
#include "oracles.hpp"

using diatomic::BigInt;
using diatomic::check_conjecture7;
using diatomic::check_conjecture9;
using diatomic::closed_form_L;
using diatomic::closed_form_rank_count;
using diatomic::extremal_bounds;
using diatomic::fib;
using diatomic::kappa_closed_forms;
using diatomic::stern_continuant_bridge;
using diatomic::top_value_set;

TEST_CASE("closed form anchor values") {
  const auto a = closed_form_L(6, 1);
  REQUIRE(a.value == 21);
  REQUIRE(a.b == 0);
  REQUIRE(a.i == 0);
  REQUIRE(a.j == 5);

  const auto b = closed_form_L(7, 3);
  REQUIRE(b.value == 30);
  REQUIRE(b.b == 1);
  REQUIRE(b.i == 3);
  REQUIRE(b.j == 3);

  const auto c = closed_form_L(4, 2);
  REQUIRE(c.value == 7);
  REQUIRE(c.b == 0);
  REQUIRE(c.i == 2);
  REQUIRE(c.j == 1);

  REQUIRE(closed_form_L(5, 2).value == 12);
  REQUIRE(closed_form_L(6, 2).value == 19);
  REQUIRE(closed_form_L(4, 1).value == 8);
}

TEST_CASE("closed form rank range") {
  REQUIRE(closed_form_rank_count(0) == 0);
  REQUIRE(closed_form_rank_count(7) == 4);
  REQUIRE(closed_form_rank_count(8) == 4);
  REQUIRE_THROWS_AS(closed_form_L(7, 5), std::out_of_range);
  REQUIRE_THROWS_AS(closed_form_L(0, 1), std::out_of_range);
  REQUIRE_THROWS_AS(closed_form_L(4, 0), std::out_of_range);
  REQUIRE_THROWS_AS(closed_form_L(-1, 1), std::out_of_range);
}

TEST_CASE("closed form matches brute force for every covered rank") {
  for (std::int64_t r = 1; r <= 14; ++r) {
    const std::int64_t ranks = closed_form_rank_count(r);
    const auto brute = diatomic::brute_force_top(
        static_cast<std::uint32_t>(r), static_cast<std::uint64_t>(ranks));
    REQUIRE(brute.size() == static_cast<std::size_t>(ranks));
    for (std::int64_t m = 1; m <= ranks; ++m) {
      const auto cf = closed_form_L(r, m);
      REQUIRE(cf.i + cf.j == r - 1);
      REQUIRE(cf.value == brute[static_cast<std::size_t>(m - 1)].value);
    }
  }
}

TEST_CASE("rank values enumerate the top value set") {
  REQUIRE(top_value_set(0).empty());
  REQUIRE(top_value_set(1) == std::set<BigInt>{2});
  REQUIRE(top_value_set(7) == std::set<BigInt>{34, 31, 30, 29});
  for (std::int64_t r = 1; r <= 20; ++r) {
    std::set<BigInt> from_ranks;
    for (std::int64_t m = 1; m <= closed_form_rank_count(r); ++m) {
      from_ranks.insert(closed_form_L(r, m).value);
    }
    REQUIRE(from_ranks.size() ==
            static_cast<std::size_t>(closed_form_rank_count(r)));
    REQUIRE(from_ranks == top_value_set(r));
  }
}

TEST_CASE("expansion route reproduces the sequence") {
  REQUIRE(stern_continuant_bridge(11) == 5);
  REQUIRE(stern_continuant_bridge(5) == 3);
  REQUIRE(stern_continuant_bridge(8) == 1);
  REQUIRE(stern_continuant_bridge(BigInt(1) << 30) == 1);
  for (std::uint64_t n = 1; n <= (1u << 16); ++n) {
    REQUIRE(stern_continuant_bridge(n) == oracles::stern(n));
  }
}

TEST_CASE("relaxed shape continuants give exactly the row values") {
  REQUIRE(diatomic::row_values_via_continuants(0) == std::set<BigInt>{1});
  REQUIRE(diatomic::row_values_via_continuants(2) == std::set<BigInt>{1, 2, 3});
  for (std::int64_t r = 0; r <= 14; ++r) {
    const auto row = diatomic::stern_row(static_cast<std::uint32_t>(r));
    std::set<BigInt> distinct;
    for (std::uint64_t w : row.words()) distinct.insert(BigInt(w));
    REQUIRE(diatomic::row_values_via_continuants(r) == distinct);
  }
}

TEST_CASE("kappa closed forms anchor values") {
  const auto k = kappa_closed_forms(1, 1, 0);
  REQUIRE(k.mark2 == 4);
  REQUIRE(k.verified);
  REQUIRE(kappa_closed_forms(0, 0, 0).mark2 == 2);
  const auto k22 = kappa_closed_forms(2, 0, 1);
  REQUIRE(k22.marks22 == 17);
  REQUIRE(k22.verified);
}

TEST_CASE("kappa closed forms hold over a cube of pad lengths") {
  for (std::uint64_t p0 = 0; p0 <= 12; ++p0) {
    for (std::uint64_t p1 = 0; p1 <= 12; ++p1) {
      for (std::uint64_t p2 = 0; p2 <= 12; ++p2) {
        REQUIRE(kappa_closed_forms(p0, p1, p2).verified);
      }
    }
  }
}

TEST_CASE("extremal bounds anchor values") {
  REQUIRE(extremal_bounds(8).weight1_min == 47);
  REQUIRE(extremal_bounds(6).two_marks2_max == 17);
  const auto seven = extremal_bounds(7);
  REQUIRE(seven.comparison_holds);
  REQUIRE_FALSE(seven.comparison_strict);
  REQUIRE_THROWS_AS(extremal_bounds(5), std::out_of_range);
}

TEST_CASE("extremal bounds hold for r in [6, 20]") {
  for (std::int64_t r = 6; r <= 20; ++r) {
    const auto eb = extremal_bounds(r);
    REQUIRE(eb.all_match());
    REQUIRE(eb.comparison_strict == (r != 7));
    REQUIRE(eb.weight1_max < eb.row_max);
    REQUIRE(eb.one_mark3_max < eb.weight1_min);
    REQUIRE(eb.two_marks2_max <= eb.weight1_min);
  }
}

TEST_CASE("recurrence witnesses anchor values") {
  const auto c7 = check_conjecture7(6, 2);
  REQUIRE(c7.holds);
  REQUIRE(c7.current == 19);
  REQUIRE(c7.prev == 12);
  REQUIRE(c7.prev2 == 7);
  REQUIRE(check_conjecture7(4, 1).holds);
  REQUIRE(check_conjecture7(10, 3).holds);

  const auto c9 = check_conjecture9(6, 2);
  REQUIRE(c9.holds);
  REQUIRE(c9.fib_gap == 2);
  REQUIRE(check_conjecture9(4, 2).holds);
  REQUIRE(check_conjecture9(4, 2).fib_gap == 1);
  REQUIRE(check_conjecture9(12, 3).holds);

  REQUIRE_THROWS_AS(check_conjecture7(5, 2), std::out_of_range);
  REQUIRE_THROWS_AS(check_conjecture7(4, 0), std::out_of_range);
  REQUIRE_THROWS_AS(check_conjecture9(3, 2), std::out_of_range);
  REQUIRE_THROWS_AS(check_conjecture9(10, 1), std::out_of_range);
}

TEST_CASE("recurrences hold across the closed-form range") {
  for (std::int64_t m = 1; 4 * m - 2 <= 40; ++m) {
    for (std::int64_t r = 4 * m - 2; r <= 40; ++r) {
      REQUIRE(check_conjecture7(r, m).holds);
    }
  }
  for (std::int64_t m = 2; 4 * m - 4 <= 40; ++m) {
    for (std::int64_t r = 4 * m - 4; r <= 40; ++r) {
      REQUIRE(check_conjecture9(r, m).holds);
    }
  }
}

TEST_CASE("recurrences agree with brute-force row values") {
  std::map<std::int64_t, std::vector<diatomic::RankedValue>> tops;
  for (std::int64_t r = 0; r <= 14; ++r) {
    const std::uint64_t ranks =
        r == 0 ? 1 : static_cast<std::uint64_t>(closed_form_rank_count(r));
    tops[r] =
        diatomic::brute_force_top(static_cast<std::uint32_t>(r), ranks);
  }
  const auto value = [&](std::int64_t r, std::int64_t m) {
    return tops.at(r).at(static_cast<std::size_t>(m - 1)).value;
  };
  for (std::int64_t m = 1; 4 * m - 2 <= 14; ++m) {
    for (std::int64_t r = 4 * m - 2; r <= 14; ++r) {
      REQUIRE(value(r, m) == value(r - 1, m) + value(r - 2, m));
      const auto w = check_conjecture7(r, m);
      REQUIRE(w.current == value(r, m));
      REQUIRE(w.prev == value(r - 1, m));
      REQUIRE(w.prev2 == value(r - 2, m));
    }
  }
  for (std::int64_t m = 2; 4 * m - 4 <= 14; ++m) {
    for (std::int64_t r = 4 * m - 4; r <= 14; ++r) {
      REQUIRE(value(r, m - 1) - value(r, m) == check_conjecture9(r, m).fib_gap);
    }
  }
}
