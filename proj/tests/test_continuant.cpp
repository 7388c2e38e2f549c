#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "diatomic/continuant.hpp"
#include "oracles.hpp"

using diatomic::BigInt;
using diatomic::Composition;
using diatomic::continuant;
using diatomic::split;

namespace {

template <typename Fn>
void for_each_small(std::size_t d_max, std::uint64_t e_max, Fn&& fn) {
  std::vector<std::uint64_t> prefix;
  oracles::for_each_tuple(d_max, e_max, prefix, fn);
}

}  // namespace

TEST_CASE("continuant anchor values") {
  REQUIRE(continuant(Composition{}) == 1);
  REQUIRE(continuant({1, 1, 1, 1}) == 5);
  REQUIRE(continuant({1, 2, 1}) == 4);
  REQUIRE(continuant({1, 2, 3}) == 10);
  REQUIRE(continuant({3, 2, 1}) == 10);
}

TEST_CASE("weight anchor values") {
  REQUIRE(Composition{}.weight() == 0);
  REQUIRE(Composition{1, 1, 1}.weight() == 0);
  REQUIRE(Composition{1, 3, 1}.weight() == 2);
}

TEST_CASE("fold matches the matrix product and the recursion") {
  for_each_small(8, 5, [](const std::vector<std::uint64_t>& xs) {
    REQUIRE(continuant(Composition(xs)) == oracles::matrix_continuant(xs));
  });
  for_each_small(5, 4, [](const std::vector<std::uint64_t>& xs) {
    REQUIRE(continuant(Composition(xs)) == oracles::recursive_continuant(xs));
  });
}

TEST_CASE("continuants are reversal invariant") {
  for_each_small(8, 5, [](const std::vector<std::uint64_t>& xs) {
    const Composition c(xs);
    const Composition rev = diatomic::reverse(c);
    std::vector<std::uint64_t> expected(xs.rbegin(), xs.rend());
    REQUIRE(rev.parts() == expected);
    REQUIRE(continuant(rev) == continuant(c));
  });
}

TEST_CASE("rewrites preserve the continuant") {
  for_each_small(6, 4, [](const std::vector<std::uint64_t>& xs) {
    const Composition c(xs);
    const BigInt k = continuant(c);
    for (const auto& other : diatomic::rewrite_identities(c)) {
      REQUIRE(other != c);
      REQUIRE(continuant(other) == k);
    }
    // K(1, l_2, ..., l_d) = K(l_2, ..., l_d) + K(l_3, ..., l_d)
    if (!xs.empty() && xs.front() == 1) {
      const std::vector<std::uint64_t> drop1(xs.begin() + 1, xs.end());
      const std::vector<std::uint64_t> drop2(
          xs.begin() + (xs.size() >= 2 ? 2 : 1), xs.end());
      const BigInt rhs2 =
          xs.size() >= 2 ? continuant(Composition(drop2)) : BigInt(0);
      REQUIRE(k == continuant(Composition(drop1)) + rhs2);
    }
  });
}

TEST_CASE("rewrite anchor sets") {
  const std::set<Composition> r121 = diatomic::rewrite_identities({1, 2, 1});
  REQUIRE(r121 == std::set<Composition>{{3, 1}, {1, 3}});
  REQUIRE(diatomic::rewrite_identities({2}) == std::set<Composition>{{1, 1}});
  REQUIRE(diatomic::rewrite_identities({1}).empty());
}

TEST_CASE("split anchor values") {
  REQUIRE(split({2}, 1, 1, 1) == Composition{1, 1});
  REQUIRE(continuant(split({2}, 1, 1, 1)) == 2);
  REQUIRE(split({1, 3, 1}, 2, 1, 2) == Composition{1, 1, 2, 1});
  REQUIRE(continuant({1, 3, 1}) == 5);
  REQUIRE(continuant({1, 1, 2, 1}) == 7);
  REQUIRE(split({1, 3, 1}, 2, 2, 1) == Composition{1, 2, 1, 1});
  REQUIRE(continuant({1, 2, 1, 1}) == 7);
}

TEST_CASE("splitting never decreases the continuant, equality only at ends") {
  // Exact arithmetic over a small range.
  for_each_small(6, 4, [](const std::vector<std::uint64_t>& xs) {
    const Composition c(xs);
    const BigInt k = continuant(c);
    for (std::size_t j = 1; j <= c.length(); ++j) {
      for (std::uint64_t u = 1; u < c.at(j); ++u) {
        const std::uint64_t v = c.at(j) - u;
        const BigInt ks = continuant(split(c, j, u, v));
        REQUIRE(ks >= k);
        const bool at_end =
            (j == 1 && u == 1) || (j == c.length() && v == 1);
        REQUIRE((ks == k) == at_end);
      }
    }
  });
  // Same statement over the wider range, in machine words.
  for_each_small(8, 5, [](const std::vector<std::uint64_t>& xs) {
    const std::uint64_t k = oracles::fold_continuant_u64(xs);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      for (std::uint64_t u = 1; u < xs[j]; ++u) {
        std::vector<std::uint64_t> parts = xs;
        parts[j] = u;
        parts.insert(parts.begin() + static_cast<std::ptrdiff_t>(j) + 1,
                     xs[j] - u);
        const std::uint64_t ks = oracles::fold_continuant_u64(parts);
        REQUIRE(ks >= k);
        const bool at_end = (j == 0 && u == 1) ||
                            (j + 1 == xs.size() && xs[j] - u == 1);
        REQUIRE((ks == k) == at_end);
      }
    }
  });
}

TEST_CASE("split argument errors") {
  REQUIRE_THROWS_AS(split({1, 2}, 0, 1, 1), std::out_of_range);
  REQUIRE_THROWS_AS(split({1, 2}, 3, 1, 1), std::out_of_range);
  REQUIRE_THROWS_AS(split({1, 2}, 2, 1, 2), std::invalid_argument);
  REQUIRE_THROWS_AS(split({1, 2}, 2, 2, 0), std::invalid_argument);
}

TEST_CASE("composition parsing and rendering") {
  REQUIRE(Composition::parse("1,2,1") == Composition{1, 2, 1});
  REQUIRE(Composition::parse(" 1 , 2 ") == Composition{1, 2});
  REQUIRE(Composition::parse("").empty());
  REQUIRE(Composition{1, 2, 1}.to_string() == "1,2,1");
  REQUIRE(Composition{}.to_string().empty());
  for_each_small(5, 4, [](const std::vector<std::uint64_t>& xs) {
    const Composition c(xs);
    REQUIRE(Composition::parse(c.to_string()) == c);
  });
  REQUIRE_THROWS_AS(Composition::parse("1,0"), std::invalid_argument);
  REQUIRE_THROWS_AS(Composition::parse("1,,2"), std::invalid_argument);
  REQUIRE_THROWS_AS(Composition::parse("1,a"), std::invalid_argument);
  REQUIRE_THROWS_AS((Composition{1, 0, 2}), std::invalid_argument);
}
