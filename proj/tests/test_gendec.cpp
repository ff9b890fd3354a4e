#include "doctest.h"

#include "dbl/gendec.hpp"

using namespace dbl;

namespace {
std::vector<std::int64_t> column_ints(const GenDecMatrix& m, const std::string& label) {
  for (const auto& c : m.columns)
    if (c.label == label) {
      std::vector<std::int64_t> out;
      for (const auto& e : c.entries) out.push_back(e.integer_value());
      return out;
    }
  throw std::runtime_error("no column " + label);
}
}  // namespace

TEST_CASE("case a build, n = 3") {
  GenDecMatrix m = gendec_build(GenDecCase::A, 3);
  CHECK(m.rows() == 5);
  CHECK(m.columns.size() == 5);
  // s-column with a = 1: (1,1,-1,-1, zeta + zeta^-1 = 0)
  CHECK(column_ints(m, "s^1") == std::vector<std::int64_t>{1, 1, -1, -1, 0});
  CHECK(column_ints(m, "t") == std::vector<std::int64_t>{1, -1, 1, -1, 0});
  CHECK(m.cross_section_orthogonal());
}

TEST_CASE("case d build, q = 7: the z column") {
  GenDecMatrix m = gendec_build(GenDecCase::D, 3, 7);
  CHECK(column_ints(m, "z") == std::vector<std::int64_t>{1, -1, -1, -1, 2});
  CHECK(m.cross_section_orthogonal());
}

TEST_CASE("case f build, q = 3: the t column") {
  GenDecMatrix m = gendec_build(GenDecCase::F, 3, 3);
  CHECK(column_ints(m, "t") == std::vector<std::int64_t>{1, 1, -1, -1, 0});
  CHECK(m.cross_section_orthogonal());
}

TEST_CASE("row counts and height pattern for larger n") {
  GenDecMatrix m = gendec_build(GenDecCase::A, 5);
  CHECK(m.rows() == 11);  // 2^3 + 3
  std::uint32_t h0 = 0;
  for (auto h : m.row_heights)
    if (h == 0) ++h0;
  CHECK(h0 == 4);
  CHECK(m.cross_section_orthogonal());
  GenDecMatrix c17 = gendec_build(GenDecCase::C, 4, 17);
  CHECK(c17.rows() == 7);
  CHECK(c17.cross_section_orthogonal());
}

TEST_CASE("parameter mismatches") {
  CHECK_THROWS_AS(gendec_build(GenDecCase::B, 4), CaseParameterMismatch);
  CHECK_THROWS_AS(gendec_build(GenDecCase::C, 3, 7), CaseParameterMismatch);  // (7-1)_2 = 2
  CHECK_THROWS_AS(gendec_build(GenDecCase::D, 3, 9), CaseParameterMismatch);  // (9+1)_2 = 2
  CHECK_THROWS_AS(gendec_build(GenDecCase::E, 3, 3), CaseParameterMismatch);
  CHECK_THROWS_AS(gendec_build(GenDecCase::A, 2), CaseParameterMismatch);
}

TEST_CASE("verify the six cases at n = 3") {
  SUBCASE("a: D8") {
    auto v = gendec_verify(FiniteGroup::construct("d:8"), GenDecCase::A, 3);
    CHECK(v.pass);
    CHECK(v.sections == 4);  // z, s, t, st
  }
  SUBCASE("b: A7") {
    auto v = gendec_verify(FiniteGroup::construct("a:7"), GenDecCase::B, 3);
    CHECK(v.pass);
    CHECK(v.sections == 2);
  }
  SUBCASE("c: psl2:9") {
    auto v = gendec_verify(FiniteGroup::construct("psl2:9"), GenDecCase::C, 3, 9);
    CHECK(v.pass);
    REQUIRE(v.signs.has_value());
    CHECK(v.signs->delta1 == 1);
    CHECK(v.signs->delta2 == -1);
    CHECK(v.signs->delta3 == -1);
  }
  SUBCASE("d: psl2:7") {
    auto v = gendec_verify(FiniteGroup::construct("psl2:7"), GenDecCase::D, 3, 7);
    CHECK(v.pass);
    REQUIRE(v.signs.has_value());
    CHECK(v.signs->delta1 == -1);
    CHECK(v.signs->delta2 == 1);
    CHECK(v.signs->delta3 == 1);
  }
  SUBCASE("e: pgl2:5") {
    auto v = gendec_verify(FiniteGroup::construct("pgl2:5"), GenDecCase::E, 3, 5);
    CHECK(v.pass);
    REQUIRE(v.signs.has_value());
    CHECK(v.signs->delta1 == 1);
    CHECK(v.signs->delta2 == -1);
    CHECK(v.signs->delta3 == -1);
  }
  SUBCASE("f: pgl2:3") {
    auto v = gendec_verify(FiniteGroup::construct("pgl2:3"), GenDecCase::F, 3, 3);
    CHECK(v.pass);
    REQUIRE(v.signs.has_value());
    CHECK(v.signs->delta1 == -1);
    CHECK(v.signs->delta2 == 1);
    CHECK(v.signs->delta3 == -1);
  }
}

TEST_CASE("verify at n = 4") {
  SUBCASE("a: D16") {
    CHECK(gendec_verify(FiniteGroup::construct("d:16"), GenDecCase::A, 4).pass);
  }
  SUBCASE("c: psl2:17") {
    auto v = gendec_verify(FiniteGroup::construct("psl2:17"), GenDecCase::C, 4, 17);
    CHECK(v.pass);
    REQUIRE(v.signs.has_value());
    CHECK(v.signs->delta1 == 1);
    CHECK(v.signs->delta2 == -1);
    CHECK(v.signs->delta3 == -1);
  }
  SUBCASE("e: pgl2:9") {
    auto v = gendec_verify(FiniteGroup::construct("pgl2:9"), GenDecCase::E, 4, 9);
    CHECK(v.pass);
    REQUIRE(v.signs.has_value());
    CHECK(v.signs->delta1 == 1);
    CHECK(v.signs->delta2 == -1);
    CHECK(v.signs->delta3 == -1);
  }
  SUBCASE("f: pgl2:7") {
    auto v = gendec_verify(FiniteGroup::construct("pgl2:7"), GenDecCase::F, 4, 7);
    CHECK(v.pass);
    REQUIRE(v.signs.has_value());
    CHECK(v.signs->delta1 == -1);
    CHECK(v.signs->delta2 == 1);
    CHECK(v.signs->delta3 == -1);
  }
}

TEST_CASE("wrong fusion case throws") {
  CHECK_THROWS_AS(gendec_verify(FiniteGroup::construct("psl2:7"), GenDecCase::A, 3),
                  WrongFusionCase);
}

TEST_CASE("matrix text serialisation") {
  GenDecMatrix m = gendec_build(GenDecCase::D, 3, 7);
  std::string text = m.to_text();
  CHECK(text.find("d 3 7 4") == 0);
  CHECK(text.find("1_G") != std::string::npos);
}
