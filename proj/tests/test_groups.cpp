#include "doctest.h"

#include <set>

#include "dbl/errors.hpp"
#include "dbl/group.hpp"
#include "dbl/pfield.hpp"

using namespace dbl;

TEST_CASE("permutation basics") {
  Permutation a = Permutation::from_cycles(5, {{0, 1, 2}});
  Permutation b = Permutation::from_cycles(5, {{2, 3}});
  CHECK((a * b)[0] == 1);
  CHECK((a * b)[1] == 3);
  CHECK(a.order() == 3);
  CHECK((a * a.inverse()).is_identity());
  CHECK(Permutation::parse(5, "(0,1,2)(3,4)") ==
        Permutation::from_cycles(5, {{0, 1, 2}, {3, 4}}));
  CHECK(Permutation::parse(5, a.to_cycle_string()) == a);
}

TEST_CASE("field table moduli are irreducible") {
  // An irreducible degree-k modulus makes every nonzero element invertible.
  for (std::uint32_t q : {9u, 25u, 27u, 49u, 81u, 125u, 243u, 343u}) {
    PrimePowerField f(q);
    for (std::uint32_t a = 1; a < f.q(); ++a) {
      CHECK(f.mul(a, f.inv(a)) == 1);
    }
    // Generator has full multiplicative order.
    std::uint32_t x = f.generator();
    std::uint32_t ord = 1;
    while (x != 1) { x = f.mul(x, f.generator()); ++ord; }
    CHECK(ord == q - 1);
  }
}

TEST_CASE("orders of the named families") {
  CHECK(FiniteGroup::construct("d:8").order() == 8);
  CHECK(FiniteGroup::construct("d:32").order() == 32);
  CHECK(FiniteGroup::construct("psl2:7").order() == 168);
  CHECK(FiniteGroup::construct("psl2:9").order() == 360);
  CHECK(FiniteGroup::construct("pgl2:5").order() == 120);
  CHECK(FiniteGroup::construct("pgl2:9").order() == 720);
  CHECK(FiniteGroup::construct("a:7").order() == 2520);
  CHECK(FiniteGroup::construct("s:4").order() == 24);
  CHECK(FiniteGroup::construct("prod(s:4,s:4)").order() == 576);
  CHECK_THROWS_AS(FiniteGroup::construct("psl2:4"), UnsupportedParameter);
  CHECK_THROWS_AS(FiniteGroup::construct("psl2:15"), UnsupportedParameter);
  CHECK_THROWS_AS(FiniteGroup::construct("d:6"), DegenerateSpec);
  CHECK_THROWS_AS(GroupSpec::parse("bogus:3"), ParseError);
}

TEST_CASE("psl2/pgl2 order formulas") {
  for (std::uint32_t q : {3u, 5u, 7u, 9u, 13u, 17u}) {
    std::uint64_t expected = static_cast<std::uint64_t>(q) * (q - 1) * (q + 1) / 2;
    CHECK(FiniteGroup::construct("psl2:" + std::to_string(q)).order() == expected);
  }
  for (std::uint32_t q : {3u, 5u, 7u, 9u}) {
    std::uint64_t expected = static_cast<std::uint64_t>(q) * (q - 1) * (q + 1);
    CHECK(FiniteGroup::construct("pgl2:" + std::to_string(q)).order() == expected);
  }
}

TEST_CASE("class sizes satisfy the orbit-stabiliser identity") {
  for (const char* spec : {"d:16", "psl2:7", "pgl2:5", "s:4"}) {
    FiniteGroup g = FiniteGroup::construct(spec);
    std::uint64_t total = 0;
    for (const auto& c : g.classes()) {
      total += c.size;
      FiniteGroup cent = g.centralizer(g.element(c.rep));
      CHECK(cent.order() * c.size == g.order());
    }
    CHECK(total == g.order());
  }
}

TEST_CASE("words reconstruct elements") {
  FiniteGroup g = FiniteGroup::construct("psl2:7");
  for (std::uint32_t idx : {0u, 17u, 100u, 167u}) {
    Permutation p = Permutation::identity(g.domain_size());
    for (auto gi : g.word_for(idx)) p = p * g.generators()[gi];
    CHECK(p == g.element(idx));
  }
}

TEST_CASE("sylow frames") {
  SUBCASE("psl2:7") {
    FiniteGroup g = FiniteGroup::construct("psl2:7");
    auto f = sylow2_dihedral(g);
    CHECK(f.n == 3);
    CHECK(f.s.order() == 4);
    CHECK(f.t.order() == 2);
    CHECK(f.t * f.s * f.t == f.s.inverse());
    CHECK(f.z == f.s * f.s);
    FiniteGroup p = g.subgroup(f.subgroup_generators());
    CHECK(p.order() == 8);
  }
  SUBCASE("dihedral itself") {
    FiniteGroup g = FiniteGroup::construct("d:16");
    auto f = sylow2_dihedral(g);
    CHECK(f.n == 4);
    CHECK(f.s.order() == 8);
    CHECK(g.subgroup(f.subgroup_generators()).order() == 16);
  }
  SUBCASE("Klein four rejected") {
    CHECK_THROWS_AS(sylow2_dihedral(FiniteGroup::construct("psl2:5")), NotDihedralSylow);
    CHECK_THROWS_AS(sylow2_dihedral(FiniteGroup::construct("psl2:13")), NotDihedralSylow);
  }
  SUBCASE("frame is conjugation-stable") {
    FiniteGroup g = FiniteGroup::construct("pgl2:5");
    auto f = sylow2_dihedral(g);
    Permutation c = g.element(37);
    Permutation s = f.s.conjugated_by(c), t = f.t.conjugated_by(c);
    CHECK(t * s * t == s.inverse());
    CHECK(s.order() == f.s.order());
  }
}

TEST_CASE("involution fusion across the corpus") {
  auto fusion_of = [](const char* spec) {
    return involution_fusion(FiniteGroup::construct(spec)).label;
  };
  CHECK(fusion_of("d:8") == FusionCaseLabel::CASE1_NILPOTENT);
  CHECK(fusion_of("d:16") == FusionCaseLabel::CASE1_NILPOTENT);
  CHECK(fusion_of("psl2:7") == FusionCaseLabel::CASE3_PSL);
  CHECK(fusion_of("psl2:13") == FusionCaseLabel::CASE3_PSL);  // Klein-four Sylow
  CHECK(fusion_of("pgl2:3") == FusionCaseLabel::CASE2_PGL);
  CHECK(fusion_of("pgl2:5") == FusionCaseLabel::CASE2_PGL);
  CHECK(fusion_of("a:7") == FusionCaseLabel::CASE3_PSL);
}

TEST_CASE("centralisers from Lemma-style examples") {
  SUBCASE("central element of a 2-group") {
    FiniteGroup g = FiniteGroup::construct("d:8");
    auto f = sylow2_dihedral(g);
    CHECK(g.centralizer(f.z).order() == 8);
  }
  SUBCASE("psl2:7 central involution") {
    FiniteGroup g = FiniteGroup::construct("psl2:7");
    auto f = sylow2_dihedral(g);
    CHECK(g.centralizer(f.z).order() == 8);
  }
  SUBCASE("pgl2:5 reflection with dihedral centraliser of order 12") {
    FiniteGroup g = FiniteGroup::construct("pgl2:5");
    auto f = sylow2_dihedral(g);
    // st is not fused to z; its centraliser is dihedral of order 2(q+1).
    Permutation st = f.s * f.t;
    bool fused = g.class_of(g.index_of(st)) == g.class_of(g.index_of(f.z));
    Permutation unfused = fused ? f.t : st;
    FiniteGroup c = g.centralizer(unfused);
    CHECK(c.order() == 12);
    CHECK(is_dihedral_shape(c));
  }
  SUBCASE("element outside the group") {
    FiniteGroup g = FiniteGroup::construct("d:8");
    CHECK_THROWS_AS(g.centralizer(Permutation::from_cycles(4, {{0, 1, 2}})),
                    ElementNotInGroup);
  }
}

TEST_CASE("diagonal subgroups of products") {
  FiniteGroup g = FiniteGroup::construct("s:4");
  FiniteGroup h = FiniteGroup::construct("s:4");
  FiniteGroup gh = direct_product(g, h);
  CHECK(gh.order() == 576);
  auto fl = sylow2_dihedral(g), fr = sylow2_dihedral(h);
  FiniteGroup dp = diagonal(gh, fl, fr);
  CHECK(dp.order() == 8);
  auto fd = sylow2_dihedral(dp);  // the diagonal is itself dihedral of order 8
  CHECK(fd.n == 3);

  FiniteGroup p57 = FiniteGroup::construct("prod(psl2:7,psl2:9)");
  auto f7 = sylow2_dihedral(FiniteGroup::construct("psl2:7"));
  auto f9 = sylow2_dihedral(FiniteGroup::construct("psl2:9"));
  CHECK(diagonal(p57, f7, f9).order() == 8);

  auto f16 = sylow2_dihedral(FiniteGroup::construct("d:16"));
  CHECK_THROWS_AS(diagonal(p57, f7, f16), FrameMismatch);
}

TEST_CASE("normalizer and sylow2") {
  FiniteGroup g = FiniteGroup::construct("s:4");
  FiniteGroup p = g.sylow2();
  CHECK(p.order() == 8);
  CHECK(g.normalizer(p).order() == 8);
  FiniteGroup a7 = FiniteGroup::construct("a:7");
  CHECK(a7.sylow2().order() == 8);
}

TEST_CASE("frobenius witness") {
  auto w = frobenius_sylow_witness(7, 3);
  CHECK(w.q == 343);
  CHECK(w.sylow_order_matches);
  CHECK(w.frobenius_centralises);
  CHECK(w.holds);

  auto t = frobenius_sylow_witness(3, 1);
  CHECK(t.trivial);
  CHECK(t.holds);

  CHECK_THROWS_AS(frobenius_sylow_witness(5, 3), DefectTooSmall);
  CHECK_THROWS_AS(frobenius_sylow_witness(7, 2), UnsupportedParameter);
}

TEST_CASE("pgl2 reflection fusion split") {
  // Exactly one of the two reflection classes fuses to z.
  for (const char* spec : {"pgl2:3", "pgl2:5", "pgl2:7", "pgl2:9"}) {
    FiniteGroup g = FiniteGroup::construct(spec);
    auto f = sylow2_dihedral(g);
    std::uint32_t cz = g.class_of(g.index_of(f.z));
    std::uint32_t ct = g.class_of(g.index_of(f.t));
    std::uint32_t cst = g.class_of(g.index_of(f.s * f.t));
    CHECK(((ct == cz) != (cst == cz)));
  }
}
