#pragma once

#include <cstdint>
#include <vector>

#include "dbl/errors.hpp"

namespace dbl {

// Small finite field GF(p^k) of odd characteristic, used to realise
// PSL2/PGL2 on the projective line.  Elements are encoded as integers
// 0..q-1 via base-p digit vectors of polynomial coefficients; the
// modulus comes from a fixed table of Conway polynomials, so element
// labelling is identical across runs.
class PrimePowerField {
 public:
  // Throws UnsupportedParameter for even q, non prime powers, or
  // prime powers outside the shipped modulus table.
  explicit PrimePowerField(std::uint32_t q);

  std::uint32_t q() const { return q_; }
  std::uint32_t p() const { return p_; }
  std::uint32_t degree() const { return k_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const;

  // A fixed multiplicative generator (smallest element code of order q-1).
  std::uint32_t generator() const { return generator_; }
  // Frobenius x -> x^p.
  std::uint32_t frobenius(std::uint32_t a) const;
  // Embedding of the prime field: c -> constant polynomial c.
  std::uint32_t from_prime(std::uint32_t c) const { return c % p_; }

  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

  static bool is_odd_prime_power(std::uint32_t q, std::uint32_t* p = nullptr,
                                 std::uint32_t* k = nullptr);

 private:
  std::uint32_t q_, p_, k_;
  std::vector<std::uint32_t> modulus_;  // monic, length k+1, coefficients mod p
  std::uint32_t generator_ = 0;
  std::vector<std::uint32_t> mul_table_;  // only for q <= 512

  std::vector<std::uint32_t> decode(std::uint32_t a) const;
  std::uint32_t encode(const std::vector<std::uint32_t>& cs) const;
  std::uint32_t mul_raw(std::uint32_t a, std::uint32_t b) const;
};

}  // namespace dbl
