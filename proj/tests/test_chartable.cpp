#include "doctest.h"

#include <set>

#include "dbl/chartable.hpp"
#include "dbl/config.hpp"

using namespace dbl;

TEST_CASE("dixon table of D8") {
  CharacterTable t = dixon_table(FiniteGroup::construct("d:8"));
  REQUIRE(t.chars.size() == 5);
  std::multiset<std::int64_t> degrees;
  for (std::uint32_t r = 0; r < t.chars.size(); ++r) degrees.insert(t.degree(r));
  CHECK(degrees == std::multiset<std::int64_t>{1, 1, 1, 1, 2});
}

TEST_CASE("dixon table of psl2:7") {
  CharacterTable t = dixon_table(FiniteGroup::construct("psl2:7"));
  REQUIRE(t.chars.size() == 6);
  std::multiset<std::int64_t> degrees;
  std::int64_t sumsq = 0;
  for (std::uint32_t r = 0; r < t.chars.size(); ++r) {
    degrees.insert(t.degree(r));
    sumsq += t.degree(r) * t.degree(r);
  }
  CHECK(degrees == std::multiset<std::int64_t>{1, 3, 3, 6, 7, 8});
  CHECK(sumsq == 168);
}

TEST_CASE("dixon table of s4 and pgl2:5") {
  CharacterTable s4 = dixon_table(FiniteGroup::construct("s:4"));
  std::multiset<std::int64_t> d4;
  for (std::uint32_t r = 0; r < s4.chars.size(); ++r) d4.insert(s4.degree(r));
  CHECK(d4 == std::multiset<std::int64_t>{1, 1, 2, 3, 3});

  CharacterTable s5 = dixon_table(FiniteGroup::construct("pgl2:5"));
  std::multiset<std::int64_t> d5;
  for (std::uint32_t r = 0; r < s5.chars.size(); ++r) d5.insert(s5.degree(r));
  CHECK(d5 == std::multiset<std::int64_t>{1, 1, 4, 4, 5, 5, 6});
}

TEST_CASE("a7 block data and 2-element columns") {
  FiniteGroup g = FiniteGroup::construct("a:7");
  CharacterTable t = dixon_table(g);
  REQUIRE(t.chars.size() == 9);
  BlockData b = principal_block(t);
  CHECK(b.rows.size() == 5);  // 2^(3-2) + 3
  std::uint32_t height_zero = 0;
  for (auto h : b.heights)
    if (h == 0) ++height_zero;
  CHECK(height_zero == 4);

  // Values at the 2-elements 1a, 2a, 4a reproduce the known column data.
  std::uint32_t c1 = t.identity_class, c2 = UINT32_MAX, c4 = UINT32_MAX;
  for (std::uint32_t i = 0; i < t.classes.size(); ++i) {
    if (t.classes[i].element_order == 2) c2 = i;
    if (t.classes[i].element_order == 4) c4 = i;
  }
  REQUIRE(c2 != UINT32_MAX);
  REQUIRE(c4 != UINT32_MAX);
  // expected rows (degree, at 2a, at 4a)
  std::set<std::tuple<std::int64_t, std::int64_t, std::int64_t>> expect{
      {1, 1, 1}, {15, -1, -1}, {21, 1, -1}, {35, -1, 1}, {14, 2, 0}};
  std::set<std::tuple<std::int64_t, std::int64_t, std::int64_t>> got;
  for (auto r : b.rows)
    got.insert({t.degree(r), t.chars[r][c2].integer_value(),
                t.chars[r][c4].integer_value()});
  CHECK(got == expect);
}

TEST_CASE("psl2 block sizes") {
  SUBCASE("psl2:7 has 5 of 6 in the principal block") {
    CharacterTable t = dixon_table(FiniteGroup::construct("psl2:7"));
    BlockData b = principal_block(t);
    CHECK(b.rows.size() == 5);
  }
  SUBCASE("pgl2:5 has 5 of 7, heights 0,0,0,0,1") {
    CharacterTable t = dixon_table(FiniteGroup::construct("pgl2:5"));
    BlockData b = principal_block(t);
    REQUIRE(b.rows.size() == 5);
    std::multiset<std::uint32_t> hs(b.heights.begin(), b.heights.end());
    CHECK(hs == std::multiset<std::uint32_t>{0, 0, 0, 0, 1});
  }
  SUBCASE("d:8 is a single block with heights from the degrees") {
    CharacterTable t = dixon_table(FiniteGroup::construct("d:8"));
    BlockData b = principal_block(t);
    CHECK(b.rows.size() == 5);
    std::multiset<std::uint32_t> hs(b.heights.begin(), b.heights.end());
    CHECK(hs == std::multiset<std::uint32_t>{0, 0, 0, 0, 1});
  }
}

TEST_CASE("principal block l matches the fusion prediction") {
  Rng rng(Config::kDefaultSeed);
  CHECK(principal_block_l(FiniteGroup::construct("d:8"), rng) == 1);
  CHECK(principal_block_l(FiniteGroup::construct("d:16"), rng) == 1);
  CHECK(principal_block_l(FiniteGroup::construct("pgl2:3"), rng) == 2);
  CHECK(principal_block_l(FiniteGroup::construct("pgl2:5"), rng) == 2);
  CHECK(principal_block_l(FiniteGroup::construct("psl2:7"), rng) == 3);
  CHECK(principal_block_l(FiniteGroup::construct("psl2:13"), rng) == 3);
}

TEST_CASE("psl2:17 table is exact at order 2448") {
  FiniteGroup g = FiniteGroup::construct("psl2:17");
  CharacterTable t = dixon_table(g);
  CHECK(t.chars.size() == t.classes.size());
  std::int64_t sumsq = 0;
  for (std::uint32_t r = 0; r < t.chars.size(); ++r) sumsq += t.degree(r) * t.degree(r);
  CHECK(sumsq == 2448);
  BlockData b = principal_block(t);
  CHECK(b.rows.size() == 7);  // 2^(4-2) + 3
  std::uint32_t h0 = 0;
  for (auto h : b.heights)
    if (h == 0) ++h0;
  CHECK(h0 == 4);
}
