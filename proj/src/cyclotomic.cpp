#include "dbl/cyclotomic.hpp"

#include <algorithm>
#include <numeric>
#include <map>
#include <mutex>
#include <sstream>

namespace dbl {

namespace {

constexpr std::uint32_t kMaxOrder = 2520;

std::vector<std::int64_t> poly_divide_exact(const std::vector<std::int64_t>& num,
                                            const std::vector<std::int64_t>& den) {
  // Exact division of integer polynomials (den monic), ascending coeffs.
  std::vector<std::int64_t> rem = num;
  std::vector<std::int64_t> quo(num.size() - den.size() + 1, 0);
  for (std::size_t i = quo.size(); i-- > 0;) {
    std::int64_t c = rem[i + den.size() - 1];
    quo[i] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < den.size(); ++j) rem[i + j] -= c * den[j];
  }
  for (auto v : rem)
    if (v != 0) throw InternalError("cyclotomic polynomial division not exact");
  return quo;
}

struct OrderData {
  std::uint32_t n = 0;
  std::uint32_t phi = 0;
  std::vector<std::int64_t> phi_poly;             // Phi_n, ascending, monic
  std::vector<std::vector<std::int64_t>> powers;  // z^j in the basis, j < 2*phi
};

const std::vector<std::int64_t>& build_phi(std::uint32_t n,
                                           std::map<std::uint32_t, std::vector<std::int64_t>>& phis) {
  auto it = phis.find(n);
  if (it != phis.end()) return it->second;
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, computed bottom up.
  std::vector<std::int64_t> poly(n + 1, 0);
  poly[0] = -1;
  poly[n] = 1;
  for (std::uint32_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    poly = poly_divide_exact(poly, build_phi(d, phis));
  }
  return phis.emplace(n, std::move(poly)).first->second;
}

const OrderData& order_data(std::uint32_t n) {
  static std::map<std::uint32_t, OrderData> cache;
  static std::map<std::uint32_t, std::vector<std::int64_t>> phis;
  static std::mutex lock;
  std::lock_guard<std::mutex> guard(lock);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  if (n == 0 || n > kMaxOrder) throw UnsupportedParameter("cyclotomic order out of range");

  std::vector<std::int64_t> poly = build_phi(n, phis);

  OrderData od;
  od.n = n;
  od.phi_poly = poly;
  od.phi = static_cast<std::uint32_t>(poly.size() - 1);
  // Power table: z^j for j < 2*phi (enough for products of reduced values).
  od.powers.resize(std::max<std::uint32_t>(2 * od.phi, 1));
  for (std::uint32_t j = 0; j < od.powers.size(); ++j) {
    std::vector<std::int64_t>& row = od.powers[j];
    row.assign(od.phi, 0);
    if (j < od.phi) {
      row[j] = 1;
    } else {
      // z^j = z * z^(j-1), reduced by Phi_n (z^phi = -lower terms).
      const auto& prev = od.powers[j - 1];
      std::vector<std::int64_t> shifted(od.phi + 1, 0);
      for (std::uint32_t i = 0; i < od.phi; ++i) shifted[i + 1] = prev[i];
      std::int64_t top = shifted[od.phi];
      for (std::uint32_t i = 0; i < od.phi; ++i) row[i] = shifted[i] - top * poly[i];
    }
  }
  cache[n] = std::move(od);
  return cache[n];
}

}  // namespace

std::uint32_t Cyclotomic::phi(std::uint32_t n) { return order_data(n).phi; }

const std::vector<std::int64_t>& Cyclotomic::cyclotomic_polynomial(std::uint32_t n) {
  return order_data(n).phi_poly;
}

Cyclotomic Cyclotomic::with_order(std::uint32_t n) {
  Cyclotomic c;
  c.n_ = n;
  c.c_.assign(order_data(n).phi, 0);
  return c;
}

Cyclotomic::Cyclotomic(std::int64_t v) : n_(1), c_(1, v) {}

Cyclotomic Cyclotomic::integer(std::uint32_t n, std::int64_t value) {
  Cyclotomic c = with_order(n);
  c.c_[0] = value;
  return c;
}

Cyclotomic Cyclotomic::root_power(std::uint32_t n, std::uint64_t j, std::int64_t scale) {
  const OrderData& od = order_data(n);
  Cyclotomic c = with_order(n);
  std::uint32_t jj = static_cast<std::uint32_t>(j % n);
  if (jj < od.powers.size()) {
    for (std::uint32_t i = 0; i < od.phi; ++i) c.c_[i] = scale * od.powers[jj][i];
  } else {
    // j beyond the table: reduce via repeated squaring on the table rows.
    Cyclotomic acc = integer(n, scale);
    Cyclotomic z = root_power(n, 1);
    for (std::uint32_t k = 0; k < jj; ++k) acc = acc * z;
    return acc;
  }
  return c;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  if (n_ != o.n_) {
    std::uint32_t m = std::lcm(n_, o.n_);
    return rebase(m) + o.rebase(m);
  }
  Cyclotomic out = *this;
  for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] += o.c_[i];
  return out;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& v : out.c_) v = -v;
  return out;
}

Cyclotomic Cyclotomic::operator*(std::int64_t k) const {
  Cyclotomic out = *this;
  for (auto& v : out.c_) v *= k;
  return out;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  if (n_ != o.n_) {
    std::uint32_t m = std::lcm(n_, o.n_);
    return rebase(m) * o.rebase(m);
  }
  const OrderData& od = order_data(n_);
  std::uint32_t phi = od.phi;
  std::vector<std::int64_t> prod(2 * phi, 0);
  for (std::uint32_t i = 0; i < phi; ++i) {
    if (c_[i] == 0) continue;
    for (std::uint32_t j = 0; j < phi; ++j) prod[i + j] += c_[i] * o.c_[j];
  }
  Cyclotomic out = with_order(n_);
  for (std::uint32_t d = 0; d < prod.size(); ++d) {
    if (prod[d] == 0) continue;
    const auto& row = od.powers[d];
    for (std::uint32_t i = 0; i < phi; ++i) out.c_[i] += prod[d] * row[i];
  }
  return out;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  if (n_ == o.n_) return c_ == o.c_;
  std::uint32_t m = std::lcm(n_, o.n_);
  return rebase(m).c_ == o.rebase(m).c_;
}

Cyclotomic Cyclotomic::conj() const { return galois(n_ - 1 ? n_ - 1 : 1); }

Cyclotomic Cyclotomic::galois(std::uint64_t k) const {
  if (n_ == 1) return *this;
  if (std::gcd(k % n_, static_cast<std::uint64_t>(n_)) != 1)
    throw UnsupportedParameter("galois exponent not coprime to the order");
  Cyclotomic out = with_order(n_);
  for (std::uint32_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Cyclotomic term = root_power(n_, (static_cast<std::uint64_t>(i) * k) % n_, c_[i]);
    out = out + term;
  }
  return out;
}

Cyclotomic Cyclotomic::rebase(std::uint32_t m) const {
  if (m == n_) return *this;
  if (m % n_ != 0) throw UnsupportedParameter("rebase target must be a multiple");
  std::uint32_t step = m / n_;
  Cyclotomic out = with_order(m);
  for (std::uint32_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    out = out + root_power(m, static_cast<std::uint64_t>(i) * step, c_[i]);
  }
  return out;
}

Cyclotomic Cyclotomic::divide_exact(std::int64_t k) const {
  if (k == 0) throw InternalError("division by zero");
  Cyclotomic out = *this;
  for (auto& v : out.c_) {
    if (v % k != 0) throw NonIntegralCentralCharacter("non-integral cyclotomic division");
    v /= k;
  }
  return out;
}

bool Cyclotomic::is_zero() const {
  for (auto v : c_)
    if (v) return false;
  return true;
}

bool Cyclotomic::is_integer() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i]) return false;
  return true;
}

std::int64_t Cyclotomic::integer_value() const {
  if (!is_integer()) throw InternalError("value is not a rational integer");
  return c_[0];
}

std::string Cyclotomic::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    std::int64_t v = c_[i];
    if (!v) continue;
    if (first) {
      if (v < 0) os << '-';
    } else {
      os << (v < 0 ? '-' : '+');
    }
    std::int64_t a = v < 0 ? -v : v;
    if (i == 0) {
      os << a;
    } else {
      if (a != 1) os << a << '*';
      os << 'z';
      if (i > 1) os << '^' << i;
    }
    first = false;
  }
  return os.str();
}

Cyclotomic Cyclotomic::parse(std::uint32_t n, const std::string& text) {
  Cyclotomic out = with_order(n);
  std::size_t i = 0;
  auto skip = [&] { while (i < text.size() && std::isspace((unsigned char)text[i])) ++i; };
  skip();
  bool any = false;
  while (i < text.size()) {
    std::int64_t sign = 1;
    if (text[i] == '+') { ++i; }
    else if (text[i] == '-') { sign = -1; ++i; }
    else if (any) throw ParseError("expected '+' or '-' in cyclotomic literal");
    skip();
    std::int64_t coeff = 1;
    bool saw_number = false;
    if (i < text.size() && std::isdigit((unsigned char)text[i])) {
      coeff = 0;
      while (i < text.size() && std::isdigit((unsigned char)text[i]))
        coeff = coeff * 10 + (text[i++] - '0');
      saw_number = true;
    }
    skip();
    if (i < text.size() && text[i] == '*') { ++i; skip(); }
    std::uint64_t power = 0;
    if (i < text.size() && text[i] == 'z') {
      ++i;
      power = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        if (i >= text.size() || !std::isdigit((unsigned char)text[i]))
          throw ParseError("expected exponent after '^'");
        power = 0;
        while (i < text.size() && std::isdigit((unsigned char)text[i]))
          power = power * 10 + (text[i++] - '0');
      }
    } else if (!saw_number) {
      throw ParseError("expected term in cyclotomic literal");
    }
    out = out + root_power(n, power, sign * coeff);
    any = true;
    skip();
  }
  if (!any) throw ParseError("empty cyclotomic literal");
  return out;
}

}  // namespace dbl
