#include "doctest.h"

#include "dbl/config.hpp"
#include "dbl/meataxe.hpp"
#include "dbl/transport.hpp"

using namespace dbl;

namespace {
Rng fresh_rng() { return Rng(Config::from_env().seed); }

struct ProductSetup {
  FiniteGroup left, right, product, diag;
  SylowDihedralFrame frame_left, frame_right;
};

ProductSetup make_product(const char* a, const char* b) {
  ProductSetup s{FiniteGroup::construct(a), FiniteGroup::construct(b), {}, {}, {}, {}};
  s.product = direct_product(s.left, s.right);
  s.frame_left = sylow2_dihedral(s.left);
  s.frame_right = sylow2_dihedral(s.right);
  s.diag = diagonal_fusion_aligned(s.product, s.left, s.frame_left, s.right, s.frame_right);
  return s;
}
}  // namespace

TEST_CASE("projectivity basics") {
  FiniteGroup d8 = FiniteGroup::construct("d:8");
  FiniteGroup p = d8;  // the group is its own Sylow
  GModule reg = GModule::regular(d8, FieldSpec::gf(1));
  GModule triv = GModule::trivial(d8, FieldSpec::gf(1));
  CHECK(is_projective(reg, p));
  CHECK(!is_projective(triv, p));
  // Cross-check the two criteria.
  CHECK(is_projective_higman(reg, p));
  CHECK(!is_projective_higman(triv, p));
}

TEST_CASE("scott at an odd-index subgroup is projective") {
  FiniteGroup g = FiniteGroup::construct("psl2:7");
  Rng rng = fresh_rng();
  GModule sc = scott_module(g, borel_subgroup(g), FieldSpec::gf(1), rng);
  FiniteGroup p = g.sylow2();
  CHECK(is_projective(sc, p));  // it equals P(k) since the Borel has odd order
  CHECK(is_projective_higman(sc, p));
}

TEST_CASE("transport of the trivial module across Sc(S4xS4)") {
  ProductSetup s = make_product("pgl2:3", "pgl2:3");
  Rng rng = fresh_rng();
  GModule m = scott_module(s.product, s.diag, FieldSpec::gf(1), rng);
  CHECK(m.dim() == 24);
  GModule triv = GModule::trivial(s.left, FieldSpec::gf(1));
  TransportResult tr = transport_simple(m, triv, s.left, s.right, rng);
  CHECK(tr.core.dim() == 1);
  CHECK(tr.core_simple);
  CHECK(tr.projective_dims.empty());
  CHECK(hom_to_trivial_dim(tr.core) == 1);
}

TEST_CASE("transport of the 2-dim simple: Morita for S4xS4") {
  ProductSetup s = make_product("pgl2:3", "pgl2:3");
  Rng rng = fresh_rng();
  GModule m = scott_module(s.product, s.diag, FieldSpec::gf(1), rng);
  // The 2-dimensional simple of S4.
  SimpleLibrary lib(s.left, FieldSpec::gf(1), Rng(Config::from_env().seed));
  GModule pm = perm_module(s.left, borel_subgroup(s.left), FieldSpec::gf(1));
  meataxe_chop(pm, lib);
  const GModule* two = nullptr;
  for (const auto& e : lib.simples())
    if (e.module.dim() == 2) two = &e.module;
  REQUIRE(two != nullptr);
  TransportResult tr = transport_simple(m, *two, s.left, s.right, rng);
  CHECK(tr.core.dim() == 2);
  CHECK(tr.core_indecomposable);
  CHECK(tr.core_simple);
}

TEST_CASE("transport of the 2-dim simple: stable-only for S4xS5") {
  ProductSetup s = make_product("pgl2:3", "pgl2:5");
  Rng rng = fresh_rng();
  GModule m = scott_module(s.product, s.diag, FieldSpec::gf(1), rng);
  MESSAGE("Sc(S4xS5, diag) dim = ", m.dim());
  SimpleLibrary lib(s.left, FieldSpec::gf(1), Rng(Config::from_env().seed));
  GModule pm = perm_module(s.left, borel_subgroup(s.left), FieldSpec::gf(1));
  meataxe_chop(pm, lib);
  const GModule* two = nullptr;
  for (const auto& e : lib.simples())
    if (e.module.dim() == 2) two = &e.module;
  REQUIRE(two != nullptr);
  TransportResult tr = transport_simple(m, *two, s.left, s.right, rng);
  CHECK(tr.core.dim() > 0);
  CHECK(tr.core_indecomposable);   // Linckelmann: image is indecomposable
  CHECK(!is_projective(tr.core, s.right.sylow2()));
  CHECK(!tr.core_simple);          // the equivalence is not Morita
}

TEST_CASE("transport of trivial across Sc(S4xS5) is trivial") {
  ProductSetup s = make_product("pgl2:3", "pgl2:5");
  Rng rng = fresh_rng();
  GModule m = scott_module(s.product, s.diag, FieldSpec::gf(1), rng);
  GModule triv = GModule::trivial(s.left, FieldSpec::gf(1));
  TransportResult tr = transport_simple(m, triv, s.left, s.right, rng);
  CHECK(tr.core.dim() == 1);
  CHECK(tr.core_simple);
  CHECK(hom_to_trivial_dim(tr.core) == 1);
}
