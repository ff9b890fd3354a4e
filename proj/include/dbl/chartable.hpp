#pragma once

#include <cstdint>
#include <vector>

#include "dbl/cyclotomic.hpp"
#include "dbl/group.hpp"

namespace dbl {

struct TableClass {
  std::uint32_t rep;            // element index in the group
  std::uint32_t size;
  std::uint64_t element_order;
  std::uint32_t inverse_class;
};

// Ordinary character table with exact cyclotomic values of order exp(G).
// Rows are sorted by (degree, value sequence) so equal tables print
// identically across runs.
struct CharacterTable {
  FiniteGroup group;
  std::uint32_t exponent = 1;
  std::uint32_t lifting_prime = 0;
  std::vector<TableClass> classes;
  std::vector<std::vector<Cyclotomic>> chars;  // chars[r][c]

  std::int64_t degree(std::uint32_t row) const { return chars[row][identity_class].integer_value(); }
  std::uint32_t identity_class = 0;

  bool check_row_orthogonality() const;
  bool check_column_orthogonality() const;
};

// Burnside–Dixon–Schneider over F_p with p = 1 (mod exp G), p minimal
// above the lifting bound 2*sqrt(|G|).
CharacterTable dixon_table(const FiniteGroup& g);

struct BlockData {
  std::vector<std::uint32_t> rows;     // Irr(B0) as row indices
  std::vector<std::uint32_t> heights;  // aligned with rows
  std::uint32_t defect = 0;            // v2(|G|)
};

// Principal-block membership by the central character criterion: for
// every class, |C| chi(g)/chi(1) = |C| modulo the maximal ideal above 2.
BlockData principal_block(const CharacterTable& table);

// l(B0): composition factors of k_P induced to G that lie in the
// principal block, counted over the algebraic closure (a GF(2)-factor
// with endomorphism field GF(2^d) contributes d simples).
std::uint32_t principal_block_l(const FiniteGroup& g, Rng& rng);

// Arithmetic in GF(2^d) used by the membership test (modulus: the
// lexicographically least irreducible of degree d).
class Gf2Ext {
 public:
  explicit Gf2Ext(std::uint32_t degree);
  std::uint32_t degree() const { return d_; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  // An element of exact multiplicative order m (m must divide 2^d - 1).
  std::uint64_t element_of_order(std::uint64_t m) const;

 private:
  std::uint32_t d_;
  std::uint64_t modulus_;  // bit i = coefficient of x^i, degree d
};

// Image of a cyclotomic integer in GF(2^d) under zeta_N -> eta with eta
// of order odd_part(N), the reduction modulo a prime above 2.
std::uint64_t reduce_mod2(const Cyclotomic& value, const Gf2Ext& field, std::uint64_t eta);

}  // namespace dbl
