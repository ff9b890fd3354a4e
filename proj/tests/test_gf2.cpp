#include "doctest.h"

#include "dbl/config.hpp"
#include "dbl/gf2.hpp"
#include "dbl/poly2.hpp"

using namespace dbl;

namespace {
FFMatrix random_matrix(std::uint32_t r, std::uint32_t c, FieldSpec f, Rng& rng) {
  FFMatrix m(r, c, f);
  for (std::uint32_t i = 0; i < r; ++i)
    for (std::uint32_t j = 0; j < c; ++j)
      m.set(i, j, static_cast<std::uint8_t>(rng.below(f.size())));
  return m;
}
}  // namespace

TEST_CASE("field tables") {
  for (std::uint8_t e : {std::uint8_t(2), std::uint8_t(4)}) {
    FieldSpec f = FieldSpec::gf(e);
    for (std::uint32_t a = 1; a < f.size(); ++a) {
      CHECK(f.mul(static_cast<std::uint8_t>(a), f.inv(static_cast<std::uint8_t>(a))) == 1);
      for (std::uint32_t b = 0; b < f.size(); ++b)
        for (std::uint32_t c = 0; c < f.size(); ++c) {
          // distributivity sample
          std::uint8_t lhs = f.mul(static_cast<std::uint8_t>(a),
                                   f.add(static_cast<std::uint8_t>(b), static_cast<std::uint8_t>(c)));
          std::uint8_t rhs = f.add(f.mul(static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b)),
                                   f.mul(static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(c)));
          CHECK(lhs == rhs);
        }
    }
  }
}

TEST_CASE("field embeddings commute with arithmetic") {
  FieldSpec f2 = FieldSpec::gf(1), f4 = FieldSpec::gf(2), f16 = FieldSpec::gf(4);
  for (std::uint32_t a = 0; a < 4; ++a)
    for (std::uint32_t b = 0; b < 4; ++b) {
      std::uint8_t prod4 = f4.mul(static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b));
      std::uint8_t lhs = f16.embed_from(prod4, 2);
      std::uint8_t rhs = f16.mul(f16.embed_from(static_cast<std::uint8_t>(a), 2),
                                 f16.embed_from(static_cast<std::uint8_t>(b), 2));
      CHECK(lhs == rhs);
    }
  CHECK(f4.embed_from(1, 1) == 1);
  CHECK(f16.embed_from(f4.embed_from(1, 1), 2) == f16.embed_from(1, 1));
  (void)f2;
}

TEST_CASE("multiply basics") {
  FieldSpec f = FieldSpec::gf(1);
  FFMatrix a(2, 2, f);
  a.set(0, 0, 1); a.set(0, 1, 1); a.set(1, 1, 1);
  FFMatrix sq = a * a;
  CHECK(sq == FFMatrix::identity(2, f));  // [[1,1],[0,1]]^2 = I over GF(2)

  Rng rng(1);
  FFMatrix i17 = FFMatrix::identity(17, f);
  FFMatrix r = random_matrix(17, 23, f, rng);
  CHECK(i17 * r == r);
}

TEST_CASE("transpose of product") {
  Rng rng(2);
  for (std::uint8_t e : {std::uint8_t(1), std::uint8_t(2), std::uint8_t(4)}) {
    FieldSpec f = FieldSpec::gf(e);
    FFMatrix a = random_matrix(17, 23, f, rng);
    FFMatrix b = random_matrix(23, 5, f, rng);
    CHECK((a * b).transposed() == b.transposed() * a.transposed());
  }
}

TEST_CASE("rref rank nullity") {
  Rng rng(3);
  FieldSpec f = FieldSpec::gf(1);
  SUBCASE("zero and identity") {
    FFMatrix z(7, 9, f);
    CHECK(rank(z) == 0);
    CHECK(nullspace(z).rows() == 9);
    CHECK(rank(FFMatrix::identity(6, f)) == 6);
  }
  SUBCASE("random 100x100") {
    FFMatrix a = random_matrix(100, 100, f, rng);
    std::uint32_t rk = rank(a);
    FFMatrix ns = nullspace(a);
    CHECK(rk + ns.rows() == 100);
    // Independent oracle: rank by column elimination on the transpose.
    CHECK(rank(a.transposed()) == rk);
    // Each kernel vector is killed.
    for (std::uint32_t i = 0; i < ns.rows(); ++i)
      CHECK((a * ns.row(i).transposed()).is_zero());
  }
  SUBCASE("rref idempotence") {
    for (std::uint8_t e : {std::uint8_t(1), std::uint8_t(4)}) {
      FFMatrix a = random_matrix(12, 20, FieldSpec::gf(e), rng);
      RrefResult r1 = rref(a);
      RrefResult r2 = rref(r1.r);
      CHECK(r1.r == r2.r);
    }
  }
}

TEST_CASE("solve") {
  Rng rng(4);
  FieldSpec f = FieldSpec::gf(2);
  FFMatrix a = random_matrix(9, 6, f, rng);
  FFMatrix x(1, 6, f);
  for (std::uint32_t j = 0; j < 6; ++j) x.set(0, j, static_cast<std::uint8_t>(rng.below(4)));
  FFMatrix b = (a * x.transposed()).transposed();
  auto sol = solve(a, b);
  REQUIRE(sol.has_value());
  CHECK((a * sol->transposed()).transposed() == b);
  // Consistency is equivalent to rank([a|b]) == rank(a).
  FFMatrix zero_b(1, 9, f);
  zero_b.set(0, 0, 1);
  FFMatrix awful(9, 6, f);  // zero matrix cannot hit a nonzero vector
  CHECK(!solve(awful, zero_b).has_value());
}

TEST_CASE("spin") {
  FieldSpec f = FieldSpec::gf(1);
  SUBCASE("cyclic shift of the all-ones vector") {
    FFMatrix shift(4, 4, f);
    for (std::uint32_t i = 0; i < 4; ++i) shift.set(i, (i + 1) % 4, 1);
    FFMatrix ones(1, 4, f);
    for (std::uint32_t j = 0; j < 4; ++j) ones.set(0, j, 1);
    FFMatrix s = spin(ones, {shift});
    CHECK(s.rows() == 1);
  }
  SUBCASE("spin of full space") {
    FFMatrix id = FFMatrix::identity(5, f);
    CHECK(spin(id, {id}).rows() == 5);
  }
  SUBCASE("stability") {
    Rng rng(5);
    FFMatrix a = random_matrix(8, 8, f, rng);
    FFMatrix v = random_matrix(1, 8, f, rng);
    FFMatrix s = spin(v, {a});
    SubspaceBasis basis(s);
    for (std::uint32_t i = 0; i < s.rows(); ++i) CHECK(basis.contains(s.row(i) * a));
  }
}

TEST_CASE("kron") {
  Rng rng(6);
  FieldSpec f = FieldSpec::gf(1);
  FFMatrix a = random_matrix(3, 4, f, rng);
  FFMatrix b = random_matrix(2, 5, f, rng);
  FFMatrix k = a.kron(b);
  CHECK(k.rows() == 6);
  CHECK(k.cols() == 20);
  CHECK(rank(k) == rank(a) * rank(b));
  FFMatrix i2 = FFMatrix::identity(2, f);
  FFMatrix blockdiag = i2.kron(a);
  for (std::uint32_t i = 0; i < 3; ++i)
    for (std::uint32_t j = 0; j < 4; ++j) {
      CHECK(blockdiag.get(i, j) == a.get(i, j));
      CHECK(blockdiag.get(3 + i, 4 + j) == a.get(i, j));
      CHECK(blockdiag.get(i, 4 + j) == 0);
    }
}

TEST_CASE("subspace sum and intersection dimension identity") {
  Rng rng(7);
  FieldSpec f = FieldSpec::gf(1);
  for (int trial = 0; trial < 20; ++trial) {
    FFMatrix u = rref(random_matrix(4, 10, f, rng)).r;
    FFMatrix w = rref(random_matrix(5, 10, f, rng)).r;
    FFMatrix s = subspace_sum(u, w);
    FFMatrix x = subspace_intersection(u, w);
    CHECK(s.rows() + x.rows() == rank(u) + rank(w));
    SubspaceBasis ub(u), wb(w);
    for (std::uint32_t i = 0; i < x.rows(); ++i) {
      CHECK(ub.contains(x.row(i)));
      CHECK(wb.contains(x.row(i)));
    }
  }
}

TEST_CASE("matrix text roundtrip") {
  Rng rng(8);
  for (std::uint8_t e : {std::uint8_t(1), std::uint8_t(2), std::uint8_t(4)}) {
    FFMatrix a = random_matrix(5, 11, FieldSpec::gf(e), rng);
    CHECK(FFMatrix::from_text(a.to_text()) == a);
  }
}

TEST_CASE("matrix inverse") {
  Rng rng(9);
  FieldSpec f = FieldSpec::gf(4);
  FFMatrix a(4, 4, f);
  do {
    a = random_matrix(4, 4, f, rng);
  } while (rank(a) < 4);
  CHECK(a * a.inverse() == FFMatrix::identity(4, f));
}

TEST_CASE("poly arithmetic and factorisation") {
  FieldSpec f2 = FieldSpec::gf(1);
  SUBCASE("gcd and xgcd") {
    Poly a(f2, {1, 0, 1});       // 1 + x^2 = (1+x)^2
    Poly b(f2, {1, 1});          // 1 + x
    CHECK(poly_gcd(a, b) == b);
    Poly g(f2), u(f2), v(f2);
    Poly c(f2, {1, 1, 1});       // irreducible
    poly_xgcd(a, c, g, u, v);
    CHECK(g.degree() == 0);
    CHECK(u * a + v * c == Poly::one(f2));
  }
  SUBCASE("factor x^4 + x over GF(2)") {
    Poly p(f2, {0, 1, 0, 0, 1});  // x + x^4 = x(1+x)(1+x+x^2)
    auto fs = factor_poly(p);
    REQUIRE(fs.size() == 3);
    CHECK(fs[0].p.degree() == 1);
    CHECK(fs[1].p.degree() == 1);
    CHECK(fs[2].p.degree() == 2);
    Poly prod = Poly::one(f2);
    for (auto& pf : fs)
      for (std::uint32_t m = 0; m < pf.multiplicity; ++m) prod = prod * pf.p;
    CHECK(prod == p.monic());
  }
  SUBCASE("repeated factors") {
    Poly p(f2, {1, 1});
    Poly sq = p * p * p * Poly(f2, {1, 1, 1});
    auto fs = factor_poly(sq);
    REQUIRE(fs.size() == 2);
    CHECK(fs[0].multiplicity == 3);
    CHECK(fs[1].multiplicity == 1);
  }
  SUBCASE("random factorisation products over GF(4)") {
    Rng rng(10);
    FieldSpec f4 = FieldSpec::gf(2);
    for (int t = 0; t < 10; ++t) {
      std::vector<std::uint8_t> cs(8);
      for (auto& c : cs) c = static_cast<std::uint8_t>(rng.below(4));
      cs.push_back(1);
      Poly p(f4, cs);
      auto fs = factor_poly(p);
      Poly prod = Poly::one(f4);
      for (auto& pf : fs) {
        CHECK(is_irreducible(pf.p));
        for (std::uint32_t m = 0; m < pf.multiplicity; ++m) prod = prod * pf.p;
      }
      CHECK(prod == p.monic());
    }
  }
}

TEST_CASE("min and char poly") {
  Rng rng(11);
  SUBCASE("identity") {
    FFMatrix id = FFMatrix::identity(5, FieldSpec::gf(1));
    Poly mu = min_poly(id);
    CHECK(mu.degree() == 1);
    Poly cp = char_poly(id);
    CHECK(cp.degree() == 5);
    CHECK(eval_poly(cp, id).is_zero());
  }
  SUBCASE("random matrices annihilated by both") {
    for (std::uint8_t e : {std::uint8_t(1), std::uint8_t(2)}) {
      FieldSpec f = FieldSpec::gf(e);
      for (int t = 0; t < 6; ++t) {
        FFMatrix a = random_matrix(9, 9, f, rng);
        Poly mu = min_poly(a);
        Poly cp = char_poly(a);
        CHECK(cp.degree() == 9);
        CHECK(eval_poly(mu, a).is_zero());
        CHECK(eval_poly(cp, a).is_zero());
        CHECK((cp % mu).is_zero());
      }
    }
  }
  SUBCASE("nilpotent block") {
    FieldSpec f = FieldSpec::gf(1);
    FFMatrix nil(3, 3, f);
    nil.set(0, 1, 1);
    nil.set(1, 2, 1);
    CHECK(min_poly(nil).degree() == 3);
    CHECK(char_poly(nil).coeff(0) == 0);
  }
}
