#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dbl/errors.hpp"

namespace dbl {

// Exact element of Z[zeta_N] in the power basis 1, z, ..., z^(phi(N)-1),
// reduced modulo the N-th cyclotomic polynomial.  Equal values have
// equal coefficient vectors, so equality is decidable coefficientwise.
class Cyclotomic {
 public:
  Cyclotomic() : n_(1), c_(1, 0) {}
  explicit Cyclotomic(std::int64_t integer_value);
  // zeta_N^j scaled by an integer.
  static Cyclotomic root_power(std::uint32_t n, std::uint64_t j, std::int64_t scale = 1);
  static Cyclotomic integer(std::uint32_t n, std::int64_t value);

  std::uint32_t order() const { return n_; }
  const std::vector<std::int64_t>& coeffs() const { return c_; }

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic operator*(std::int64_t k) const;
  Cyclotomic operator-() const;
  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  Cyclotomic conj() const;
  // zeta -> zeta^k for k coprime to the order.
  Cyclotomic galois(std::uint64_t k) const;
  // Recoordinatise in Z[zeta_M] for N | M.
  Cyclotomic rebase(std::uint32_t m) const;
  // Exact division by an integer; throws unless every coefficient divides.
  Cyclotomic divide_exact(std::int64_t k) const;

  bool is_zero() const;
  bool is_integer() const;
  std::int64_t integer_value() const;  // requires is_integer()

  std::string to_string() const;  // grammar: <int> | z^<k> | sums thereof
  static Cyclotomic parse(std::uint32_t n, const std::string& text);

  static std::uint32_t phi(std::uint32_t n);
  // Coefficients of the N-th cyclotomic polynomial (monic, ascending).
  static const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint32_t n);

 private:
  std::uint32_t n_;
  std::vector<std::int64_t> c_;  // length phi(n)
  static Cyclotomic with_order(std::uint32_t n);
};

}  // namespace dbl
