#include "doctest.h"

#include "dbl/cyclotomic.hpp"

using namespace dbl;

TEST_CASE("roots of unity identities") {
  // zeta_4 + zeta_4^-1 = 0
  Cyclotomic z4 = Cyclotomic::root_power(4, 1);
  CHECK((z4 + Cyclotomic::root_power(4, 3)).is_zero());
  // (zeta_8 + zeta_8^-1)^2 = 2
  Cyclotomic s = Cyclotomic::root_power(8, 1) + Cyclotomic::root_power(8, 7);
  Cyclotomic two = s * s;
  CHECK(two.is_integer());
  CHECK(two.integer_value() == 2);
}

TEST_CASE("conjugation") {
  for (std::uint32_t n : {4u, 8u, 16u, 12u, 420u}) {
    for (std::uint32_t j = 0; j < std::min(n, 10u); ++j) {
      Cyclotomic z = Cyclotomic::root_power(n, j);
      CHECK(z.conj() == Cyclotomic::root_power(n, (n - j) % n));
      CHECK(z.conj().conj() == z);
    }
  }
}

TEST_CASE("canonical form decides equality") {
  // zeta_3 satisfies 1 + z + z^2 = 0.
  Cyclotomic one(1);
  Cyclotomic sum = Cyclotomic::integer(3, 1) + Cyclotomic::root_power(3, 1) +
                   Cyclotomic::root_power(3, 2);
  CHECK(sum.is_zero());
  CHECK(Cyclotomic::root_power(3, 1) * Cyclotomic::root_power(3, 2) == one.rebase(3));
  // Sum over a full set of primitive 8th roots: mu(8) = 0.
  Cyclotomic s8 = Cyclotomic::root_power(8, 1) + Cyclotomic::root_power(8, 3) +
                  Cyclotomic::root_power(8, 5) + Cyclotomic::root_power(8, 7);
  CHECK(s8.is_zero());
}

TEST_CASE("rebase embeds compatibly") {
  Cyclotomic z4 = Cyclotomic::root_power(4, 1);
  Cyclotomic z8sq = Cyclotomic::root_power(8, 2);
  CHECK(z4.rebase(8) == z8sq);
  CHECK(z4.rebase(8).rebase(24) == z4.rebase(24));
  Cyclotomic a = Cyclotomic::root_power(4, 1) + Cyclotomic::integer(4, 5);
  CHECK((a.rebase(16) * Cyclotomic::integer(16, 2)) == (a * 2).rebase(16));
}

TEST_CASE("galois permutes powers") {
  Cyclotomic z = Cyclotomic::root_power(16, 3);
  CHECK(z.galois(3) == Cyclotomic::root_power(16, 9));
  Cyclotomic mix = Cyclotomic::root_power(16, 1) + Cyclotomic::root_power(16, 2) * 4;
  CHECK(mix.galois(5).galois(13) == mix);  // 5*13 = 65 = 1 mod 16
}

TEST_CASE("string round trips") {
  Cyclotomic v = Cyclotomic::root_power(8, 3) * 2 - Cyclotomic::integer(8, 7) +
                 Cyclotomic::root_power(8, 1);
  CHECK(Cyclotomic::parse(8, v.to_string()) == v);
  CHECK(Cyclotomic::parse(8, "z^3+z-7+z^3") ==
        Cyclotomic::root_power(8, 3) * 2 + Cyclotomic::root_power(8, 1) -
            Cyclotomic::integer(8, 7));
  CHECK(Cyclotomic::integer(4, 0).to_string() == "0");
}

TEST_CASE("phi values") {
  CHECK(Cyclotomic::phi(8) == 4);
  CHECK(Cyclotomic::phi(16) == 8);
  CHECK(Cyclotomic::phi(420) == 96);
  CHECK(Cyclotomic::phi(1224) == 384);
}
