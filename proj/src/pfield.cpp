#include "dbl/pfield.hpp"

#include <algorithm>
#include <map>

namespace dbl {

namespace {

// Conway polynomials for the supported extension fields, written as
// coefficient lists c_0 + c_1 x + ... + x^k.  Degree-1 fields use x - g
// with g the least primitive root and are generated on the fly.
const std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>>&
conway_table() {
  static const std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>> t = {
      {{3, 2}, {2, 2, 1}},
      {{3, 3}, {1, 2, 0, 1}},
      {{3, 4}, {2, 0, 0, 2, 1}},
      {{3, 5}, {1, 2, 0, 0, 0, 1}},
      {{5, 2}, {2, 4, 1}},
      {{5, 3}, {3, 3, 0, 1}},
      {{7, 2}, {3, 6, 1}},
      {{7, 3}, {4, 0, 6, 1}},
  };
  return t;
}

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

bool PrimePowerField::is_odd_prime_power(std::uint32_t q, std::uint32_t* p_out,
                                         std::uint32_t* k_out) {
  if (q < 3 || q % 2 == 0) return false;
  std::uint32_t p = 0;
  for (std::uint32_t d = 3; d * d <= q; d += 2)
    if (q % d == 0) { p = d; break; }
  if (p == 0) p = q;  // q itself prime
  if (!is_prime(p)) return false;
  std::uint32_t k = 0, m = q;
  while (m % p == 0) { m /= p; ++k; }
  if (m != 1) return false;
  if (p_out) *p_out = p;
  if (k_out) *k_out = k;
  return true;
}

PrimePowerField::PrimePowerField(std::uint32_t q) : q_(q) {
  if (!is_odd_prime_power(q, &p_, &k_))
    throw UnsupportedParameter("q = " + std::to_string(q) + " is not an odd prime power");
  if (k_ == 1) {
    modulus_ = {0, 1};
  } else {
    auto it = conway_table().find({p_, k_});
    if (it == conway_table().end())
      throw UnsupportedParameter("no modulus shipped for GF(" + std::to_string(q) + ")");
    modulus_ = it->second;
  }
  if (q_ <= 512) {
    mul_table_.assign(static_cast<std::size_t>(q_) * q_, 0);
    for (std::uint32_t a = 0; a < q_; ++a)
      for (std::uint32_t b = 0; b < q_; ++b)
        mul_table_[static_cast<std::size_t>(a) * q_ + b] = mul_raw(a, b);
  }
  // Least element of full multiplicative order.
  for (std::uint32_t g = 2; g < q_; ++g) {
    std::uint32_t x = g;
    std::uint32_t ord = 1;
    while (x != 1) { x = mul(x, g); ++ord; }
    if (ord == q_ - 1) { generator_ = g; break; }
  }
  if (generator_ == 0 && q_ == 3) generator_ = 2;
  if (generator_ == 0) throw InternalError("no multiplicative generator found");
}

std::vector<std::uint32_t> PrimePowerField::decode(std::uint32_t a) const {
  std::vector<std::uint32_t> cs(k_, 0);
  for (std::uint32_t i = 0; i < k_; ++i) { cs[i] = a % p_; a /= p_; }
  return cs;
}

std::uint32_t PrimePowerField::encode(const std::vector<std::uint32_t>& cs) const {
  std::uint32_t a = 0;
  for (std::uint32_t i = k_; i-- > 0;) a = a * p_ + (cs[i] % p_);
  return a;
}

std::uint32_t PrimePowerField::add(std::uint32_t a, std::uint32_t b) const {
  if (k_ == 1) return (a + b) % p_;
  auto ca = decode(a), cb = decode(b);
  for (std::uint32_t i = 0; i < k_; ++i) ca[i] = (ca[i] + cb[i]) % p_;
  return encode(ca);
}

std::uint32_t PrimePowerField::neg(std::uint32_t a) const {
  if (k_ == 1) return (p_ - a % p_) % p_;
  auto ca = decode(a);
  for (auto& c : ca) c = (p_ - c) % p_;
  return encode(ca);
}

std::uint32_t PrimePowerField::sub(std::uint32_t a, std::uint32_t b) const {
  return add(a, neg(b));
}

std::uint32_t PrimePowerField::mul_raw(std::uint32_t a, std::uint32_t b) const {
  if (k_ == 1) return (static_cast<std::uint64_t>(a) * b) % p_;
  auto ca = decode(a), cb = decode(b);
  std::vector<std::uint32_t> prod(2 * k_ - 1, 0);
  for (std::uint32_t i = 0; i < k_; ++i)
    for (std::uint32_t j = 0; j < k_; ++j)
      prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
  // Reduce modulo the monic modulus.
  for (std::uint32_t d = 2 * k_ - 2; d + 1 > k_; --d) {
    std::uint32_t c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (std::uint32_t i = 0; i < k_; ++i) {
      std::uint32_t sub_i = d - k_ + i;
      prod[sub_i] = (prod[sub_i] + (p_ - modulus_[i] % p_) * c) % p_;
    }
  }
  prod.resize(k_);
  return encode(prod);
}

std::uint32_t PrimePowerField::mul(std::uint32_t a, std::uint32_t b) const {
  if (!mul_table_.empty()) return mul_table_[static_cast<std::size_t>(a) * q_ + b];
  return mul_raw(a, b);
}

std::uint32_t PrimePowerField::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t r = 1, base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

std::uint32_t PrimePowerField::inv(std::uint32_t a) const {
  if (a == 0) throw InternalError("inverse of zero");
  return pow(a, q_ - 2);
}

std::uint32_t PrimePowerField::frobenius(std::uint32_t a) const { return pow(a, p_); }

}  // namespace dbl
