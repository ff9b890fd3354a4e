#include "doctest.h"

#include "dbl/brauer.hpp"
#include "dbl/config.hpp"

using namespace dbl;

namespace {
Rng fresh_rng() { return Rng(Config::from_env().seed); }
}

TEST_CASE("fixed points of permutation modules count orbits") {
  FiniteGroup g = FiniteGroup::construct("s:4");
  FiniteGroup p = g.sylow2();
  GModule m = perm_module(g, p, FieldSpec::gf(1));
  for (const auto& q : all_subgroups(p)) {
    // dim fixed = number of q-orbits on the three cosets.
    CosetSpace cs = coset_space(g, p);
    std::vector<std::uint32_t> owner(cs.coset_rep.size());
    for (std::uint32_t i = 0; i < owner.size(); ++i) owner[i] = i;
    // union-find via repeated application of q generators
    std::vector<std::vector<std::uint32_t>> qacts;
    for (const auto& gen : q.generators()) {
      std::vector<std::uint32_t> act(owner.size());
      for (std::uint32_t c = 0; c < owner.size(); ++c)
        act[c] = cs.coset_of[g.index_of(g.element(cs.coset_rep[c]) * gen)];
      qacts.push_back(act);
    }
    std::vector<bool> seen(owner.size(), false);
    std::uint32_t orbits = 0;
    for (std::uint32_t c = 0; c < owner.size(); ++c) {
      if (seen[c]) continue;
      ++orbits;
      std::vector<std::uint32_t> st{c};
      seen[c] = true;
      while (!st.empty()) {
        std::uint32_t x = st.back();
        st.pop_back();
        for (const auto& act : qacts)
          if (!seen[act[x]]) { seen[act[x]] = true; st.push_back(act[x]); }
      }
    }
    CHECK(fixed_points(m, q).rows() == orbits);
  }
}

TEST_CASE("brauer quotient of the regular module vanishes") {
  FiniteGroup g = FiniteGroup::construct("d:8");
  GModule reg = GModule::regular(g, FieldSpec::gf(1));
  for (const auto& q : all_subgroups(g)) {
    if (q.order() == 1) continue;
    BrauerQuotient bq = brauer_quotient(reg, q);
    CHECK(bq.dim == 0);
  }
}

TEST_CASE("brauer quotient of the trivial module is k") {
  FiniteGroup g = FiniteGroup::construct("d:16");
  GModule triv = GModule::trivial(g, FieldSpec::gf(1));
  for (const auto& q : all_subgroups(g)) {
    if (q.order() == 1) continue;
    BrauerQuotient bq = brauer_quotient(triv, q);
    CHECK(bq.dim == 1);  // traces vanish: the index is even in char 2
  }
}

TEST_CASE("subgroup enumeration of dihedral groups") {
  FiniteGroup d8 = FiniteGroup::construct("d:8");
  CHECK(all_subgroups(d8).size() == 10);  // 1,z,t,st,s2t,s3t? (5 C2), C4, 2x V4, D8
  FiniteGroup d16 = FiniteGroup::construct("d:16");
  CHECK(all_subgroups(d16).size() == 19);
}

TEST_CASE("brauer transitivity") {
  // (M(R))(Q) = M(Q) for R normal in Q, checked on S4 with the Sylow.
  FiniteGroup g = FiniteGroup::construct("s:4");
  auto frame = sylow2_dihedral(g);
  FiniteGroup p = g.subgroup(frame.subgroup_generators(), "P");
  GModule m = perm_module(g, p, FieldSpec::gf(1));
  FiniteGroup z = g.subgroup({frame.z}, "z");
  // R = <z> is normal in Q = P.
  BrauerQuotient first = brauer_quotient(m, z);
  FiniteGroup nz = g.normalizer(z);
  GModule mz = first.module_over(m, nz);
  // Q inside the normaliser of R.
  std::vector<Permutation> pgens = frame.subgroup_generators();
  FiniteGroup p_in_n = nz.subgroup(pgens, "P");
  BrauerQuotient second = brauer_quotient(mz, p_in_n);
  BrauerQuotient direct = brauer_quotient(m, p);
  CHECK(second.dim == direct.dim);
  if (second.dim > 0) {
    // Certify the isomorphism over the joint acting group N_G(P) cap N_G(z):
    // P C_G(P) works for both sides; use P itself plus the centraliser.
    FiniteGroup cp = g.centralizer_of_subgroup(p);
    std::vector<Permutation> acting_gens = pgens;
    for (const auto& e : cp.generators()) acting_gens.push_back(e);
    FiniteGroup acting = g.subgroup(acting_gens, "PC");
    GModule lhs = second.module_over(mz, nz.subgroup(acting_gens, "PC"));
    GModule rhs = direct.module_over(m, acting);
    Rng rng = fresh_rng();
    CHECK(modules_isomorphic(lhs, rhs, rng));
  }
}

TEST_CASE("audit: trivial module is brauer indecomposable") {
  FiniteGroup g = FiniteGroup::construct("d:8");
  auto frame = sylow2_dihedral(g);
  GModule triv = GModule::trivial(g, FieldSpec::gf(1));
  Rng rng = fresh_rng();
  BrauerAudit audit = brauer_audit(triv, frame, rng);
  for (const auto& e : audit.entries) {
    CHECK(e.verdict == BrauerVerdict::Indecomposable);
    CHECK(e.dim == 1);
  }
}

TEST_CASE("audit: Sc(psl2:7, P)") {
  FiniteGroup g = FiniteGroup::construct("psl2:7");
  auto frame = sylow2_dihedral(g);
  FiniteGroup p = g.subgroup(frame.subgroup_generators(), "P");
  Rng rng = fresh_rng();
  GModule sc = scott_module(g, p, FieldSpec::gf(1), rng);
  BrauerAudit audit = brauer_audit(sc, frame, rng, true);
  CHECK(audit.all_indecomposable_or_zero());
  MESSAGE("Sc(psl2:7,P) dim = ", sc.dim());
}

TEST_CASE("audit: Sc(pgl2:5, P)") {
  FiniteGroup g = FiniteGroup::construct("pgl2:5");
  auto frame = sylow2_dihedral(g);
  FiniteGroup p = g.subgroup(frame.subgroup_generators(), "P");
  Rng rng = fresh_rng();
  GModule sc = scott_module(g, p, FieldSpec::gf(1), rng);
  BrauerAudit audit = brauer_audit(sc, frame, rng, true);
  CHECK(audit.all_indecomposable_or_zero());
}

TEST_CASE("audit: Sc(S4 x S4, diagonal D8) per the product construction") {
  FiniteGroup a = FiniteGroup::construct("pgl2:3");
  FiniteGroup b = FiniteGroup::construct("pgl2:3");
  FiniteGroup gh = direct_product(a, b);
  auto fl = sylow2_dihedral(a), fr = sylow2_dihedral(b);
  FiniteGroup dp = diagonal_fusion_aligned(gh, a, fl, b, fr);
  Rng rng = fresh_rng();
  GModule sc = scott_module(gh, dp, FieldSpec::gf(1), rng);
  auto frame = sylow2_dihedral(dp);
  BrauerAudit audit = brauer_audit(sc, frame, rng, true);
  CHECK(audit.all_indecomposable_or_zero());
  MESSAGE("Sc(S4xS4, diag) dim = ", sc.dim());
}
