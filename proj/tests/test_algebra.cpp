#include "doctest.h"

#include "dbl/algebra.hpp"
#include "dbl/config.hpp"

using namespace dbl;

namespace {

// Group algebra of C_n over GF(2) as a matrix algebra via the regular
// representation: local iff n is a power of 2.
MatrixAlgebra cyclic_group_algebra(std::uint32_t n) {
  FieldSpec f = FieldSpec::gf(1);
  std::vector<FFMatrix> span;
  FFMatrix shift(n, n, f);
  for (std::uint32_t i = 0; i < n; ++i) shift.set(i, (i + 1) % n, 1);
  FFMatrix cur = FFMatrix::identity(n, f);
  for (std::uint32_t k = 0; k < n; ++k) {
    span.push_back(cur);
    cur = cur * shift;
  }
  return MatrixAlgebra::from_span(span, FFMatrix::identity(n, f));
}

}  // namespace

TEST_CASE("field corner is local") {
  // GF(4) as a 2-dimensional GF(2)-algebra.
  FieldSpec f = FieldSpec::gf(1);
  FFMatrix one = FFMatrix::identity(2, f);
  FFMatrix w(2, 2, f);  // companion of x^2+x+1
  w.set(0, 1, 1);
  w.set(1, 0, 1);
  w.set(1, 1, 1);
  MatrixAlgebra alg = MatrixAlgebra::from_span({one, w}, one);
  Rng rng(Config::kDefaultSeed);
  auto idems = primitive_idempotents(alg.ops, rng);
  CHECK(idems.size() == 1);
}

TEST_CASE("kC2 is local, kC3 splits, kC6 mixes") {
  Rng rng(Config::kDefaultSeed);
  CHECK(primitive_idempotents(cyclic_group_algebra(2).ops, rng).size() == 1);
  CHECK(primitive_idempotents(cyclic_group_algebra(4).ops, rng).size() == 1);
  CHECK(primitive_idempotents(cyclic_group_algebra(8).ops, rng).size() == 1);
  // kC3 over GF(2) = GF(2) x GF(4): two blocks.
  CHECK(primitive_idempotents(cyclic_group_algebra(3).ops, rng).size() == 2);
  // kC6 = kC2 (x) kC3: also two blocks, each local of dimension > 1.
  CHECK(primitive_idempotents(cyclic_group_algebra(6).ops, rng).size() == 2);
  // kC7 over GF(2): x^7-1 = (x-1)(deg 3)(deg 3): three blocks.
  CHECK(primitive_idempotents(cyclic_group_algebra(7).ops, rng).size() == 3);
}

TEST_CASE("full matrix algebra splits into n idempotents") {
  FieldSpec f = FieldSpec::gf(1);
  std::uint32_t n = 3;
  std::vector<FFMatrix> span;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) {
      FFMatrix eij(n, n, f);
      eij.set(i, j, 1);
      span.push_back(eij);
    }
  MatrixAlgebra alg = MatrixAlgebra::from_span(span, FFMatrix::identity(n, f));
  Rng rng(Config::kDefaultSeed);
  auto idems = primitive_idempotents(alg.ops, rng);
  CHECK(idems.size() == n);
  // Orthogonal sum equals the identity.
  FFMatrix sum(1, alg.ops.dim, f);
  for (const auto& e : idems) sum = sum + e;
  CHECK(sum == alg.ops.one);
  for (std::size_t a = 0; a < idems.size(); ++a)
    for (std::size_t b = 0; b < idems.size(); ++b) {
      FFMatrix p = alg.ops.mul(idems[a], idems[b]);
      if (a == b)
        CHECK(p == idems[a]);
      else
        CHECK(p.is_zero());
    }
}

TEST_CASE("upper triangular 2x2: two idempotents with radical") {
  FieldSpec f = FieldSpec::gf(1);
  std::vector<FFMatrix> span;
  for (auto [i, j] : {std::pair<int, int>{0, 0}, {0, 1}, {1, 1}}) {
    FFMatrix m(2, 2, f);
    m.set(i, j, 1);
    span.push_back(m);
  }
  MatrixAlgebra alg = MatrixAlgebra::from_span(span, FFMatrix::identity(2, f));
  Rng rng(Config::kDefaultSeed);
  CHECK(primitive_idempotents(alg.ops, rng).size() == 2);
}

TEST_CASE("verdicts are seed independent") {
  for (std::uint64_t seed : {0x5C077ull, 1ull, 2ull, 42ull, 777ull, 0xDEADBEEFull}) {
    Rng rng(seed);
    CHECK(primitive_idempotents(cyclic_group_algebra(6).ops, rng).size() == 2);
    CHECK(primitive_idempotents(cyclic_group_algebra(8).ops, rng).size() == 1);
  }
}
