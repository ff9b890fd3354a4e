#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dbl/gf2.hpp"

namespace dbl {

// Univariate polynomial over GF(2^e), coefficients low degree first.
class Poly {
 public:
  Poly() : field_(FieldSpec::gf(1)) {}
  explicit Poly(FieldSpec f) : field_(f) {}
  Poly(FieldSpec f, std::vector<std::uint8_t> coeffs);

  static Poly zero(FieldSpec f) { return Poly(f); }
  static Poly one(FieldSpec f) { return Poly(f, {1}); }
  static Poly x(FieldSpec f) { return Poly(f, {0, 1}); }

  FieldSpec field() const { return field_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  std::uint8_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  const std::vector<std::uint8_t>& coeffs() const { return c_; }

  Poly operator+(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator%(const Poly& o) const;
  Poly operator/(const Poly& o) const;
  bool operator==(const Poly& o) const { return field_ == o.field_ && c_ == o.c_; }

  Poly monic() const;
  Poly derivative() const;
  std::string to_string() const;

 private:
  FieldSpec field_;
  std::vector<std::uint8_t> c_;
  void trim();
};

Poly poly_gcd(Poly a, Poly b);
Poly poly_lcm(const Poly& a, const Poly& b);
// g = gcd, and u*a + v*b = g.
void poly_xgcd(const Poly& a, const Poly& b, Poly& g, Poly& u, Poly& v);

struct PolyFactor {
  Poly p;
  std::uint32_t multiplicity;
};

// Complete factorisation into monic irreducibles (Berlekamp).
std::vector<PolyFactor> factor_poly(const Poly& f);
bool is_irreducible(const Poly& f);

// Minimal polynomial of the square matrix a: lcm of the annihilators of
// Krylov cycles seeded until the cycles span the whole space.
Poly min_poly(const FFMatrix& a);

// Characteristic polynomial via Hessenberg reduction.
Poly char_poly(const FFMatrix& a);

// p(a) by Horner evaluation.
FFMatrix eval_poly(const Poly& p, const FFMatrix& a);

}  // namespace dbl
