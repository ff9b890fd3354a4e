#include "dbl/poly2.hpp"

#include <algorithm>
#include <sstream>

namespace dbl {

Poly::Poly(FieldSpec f, std::vector<std::uint8_t> coeffs) : field_(f), c_(std::move(coeffs)) {
  trim();
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::operator+(const Poly& o) const {
  if (field_ != o.field_) throw FieldMismatch("poly add");
  std::vector<std::uint8_t> out(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = field_.add(coeff(i), o.coeff(i));
  return Poly(field_, std::move(out));
}

Poly Poly::operator*(const Poly& o) const {
  if (field_ != o.field_) throw FieldMismatch("poly mul");
  if (is_zero() || o.is_zero()) return Poly(field_);
  std::vector<std::uint8_t> out(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i]) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      out[i + j] = field_.add(out[i + j], field_.mul(c_[i], o.c_[j]));
  }
  return Poly(field_, std::move(out));
}

namespace {
void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  if (b.is_zero()) throw InternalError("poly division by zero");
  FieldSpec f = a.field();
  std::vector<std::uint8_t> rem(a.coeffs());
  std::vector<std::uint8_t> quo;
  int db = b.degree();
  std::uint8_t lead_inv = f.inv(b.coeff(db));
  if (static_cast<int>(rem.size()) - 1 >= db)
    quo.assign(rem.size() - db, 0);
  for (int i = static_cast<int>(rem.size()) - 1; i >= db; --i) {
    std::uint8_t c = rem[i];
    if (!c) continue;
    std::uint8_t factor = f.mul(c, lead_inv);
    quo[i - db] = factor;
    for (int j = 0; j <= db; ++j)
      rem[i - db + j] = f.add(rem[i - db + j], f.mul(factor, b.coeff(j)));
  }
  q = Poly(f, std::move(quo));
  r = Poly(f, std::move(rem));
}
}  // namespace

Poly Poly::operator%(const Poly& o) const {
  Poly q(field_), r(field_);
  divmod(*this, o, q, r);
  return r;
}

Poly Poly::operator/(const Poly& o) const {
  Poly q(field_), r(field_);
  divmod(*this, o, q, r);
  return q;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  std::uint8_t lead = c_.back();
  if (lead == 1) return *this;
  std::vector<std::uint8_t> out(c_);
  std::uint8_t inv = field_.inv(lead);
  for (auto& v : out) v = field_.mul(v, inv);
  return Poly(field_, std::move(out));
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly(field_);
  std::vector<std::uint8_t> out(c_.size() - 1, 0);
  for (std::size_t i = 1; i < c_.size(); ++i) {
    // i * c_i in characteristic 2: survives only for odd i.
    if (i % 2 == 1) out[i - 1] = c_[i];
  }
  return Poly(field_, std::move(out));
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    std::uint8_t c = coeff(i);
    if (!c) continue;
    if (!first) os << " + ";
    if (i == 0 || c != 1) os << int(c);
    if (i > 0) {
      if (c != 1) os << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = b;
    b = r;
  }
  return a.monic();
}

Poly poly_lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly(a.field());
  return ((a * b) / poly_gcd(a, b)).monic();
}

void poly_xgcd(const Poly& a, const Poly& b, Poly& g, Poly& u, Poly& v) {
  FieldSpec f = a.field();
  Poly r0 = a, r1 = b;
  Poly u0 = Poly::one(f), u1 = Poly::zero(f);
  Poly v0 = Poly::zero(f), v1 = Poly::one(f);
  while (!r1.is_zero()) {
    Poly q(f), r(f);
    divmod(r0, r1, q, r);
    Poly nu = u0 + q * u1;
    Poly nv = v0 + q * v1;
    r0 = r1; r1 = r;
    u0 = u1; u1 = nu;
    v0 = v1; v1 = nv;
  }
  // Normalise to monic gcd.
  if (!r0.is_zero() && r0.coeffs().back() != 1) {
    std::uint8_t inv = f.inv(r0.coeffs().back());
    Poly s(f, {inv});
    r0 = r0 * s; u0 = u0 * s; v0 = v0 * s;
  }
  g = r0; u = u0; v = v0;
}

// ---------------------------------------------------------------------------
// Berlekamp factorisation over GF(2^e)

namespace {

Poly pow_mod(const Poly& base, std::uint64_t exp, const Poly& mod) {
  Poly result = Poly::one(base.field());
  Poly b = base % mod;
  while (exp) {
    if (exp & 1) result = (result * b) % mod;
    b = (b * b) % mod;
    exp >>= 1;
  }
  return result;
}

// Squarefree monic input; returns the irreducible monic factors.
std::vector<Poly> berlekamp_squarefree(const Poly& f) {
  FieldSpec field = f.field();
  std::uint32_t q = field.size();
  int n = f.degree();
  if (n <= 1) return {f};

  // Berlekamp matrix: rows are x^(q*i) mod f expressed in the basis.
  FFMatrix bm(n, n, field);
  for (int i = 0; i < n; ++i) {
    Poly xi = pow_mod(Poly::x(field), static_cast<std::uint64_t>(q) * i, f);
    for (int j = 0; j < n; ++j) bm.set(i, j, xi.coeff(j));
  }
  FFMatrix frob_minus_id = bm + FFMatrix::identity(n, field);
  FFMatrix basis = left_nullspace(frob_minus_id);  // v with v*(B - I) = 0

  std::vector<Poly> factors{f};
  if (basis.rows() <= 1) return factors;

  for (std::uint32_t bi = 0; bi < basis.rows() && factors.size() < basis.rows(); ++bi) {
    std::vector<std::uint8_t> coeffs(n, 0);
    for (int j = 0; j < n; ++j) coeffs[j] = basis.get(bi, j);
    Poly h(field, coeffs);
    if (h.degree() < 1) continue;
    std::vector<Poly> next;
    for (const Poly& g : factors) {
      if (g.degree() <= 1) { next.push_back(g); continue; }
      std::vector<Poly> pieces;
      Poly rest = g;
      for (std::uint32_t c = 0; c < q && rest.degree() > 0; ++c) {
        Poly shifted = h + Poly(field, {static_cast<std::uint8_t>(c)});
        Poly d = poly_gcd(rest, shifted);
        if (d.degree() > 0 && d.degree() < rest.degree()) {
          pieces.push_back(d);
          rest = rest / d;
        }
      }
      if (rest.degree() > 0) pieces.push_back(rest.monic());
      if (pieces.empty()) pieces.push_back(g);
      for (auto& p : pieces) next.push_back(p);
    }
    factors = std::move(next);
  }
  return factors;
}

}  // namespace

std::vector<PolyFactor> factor_poly(const Poly& input) {
  if (input.is_zero()) throw InternalError("factor of zero polynomial");
  Poly f = input.monic();
  std::vector<PolyFactor> out;
  if (f.degree() == 0) return out;

  // Squarefree decomposition adapted to characteristic 2: split off
  // gcd(f, f') and handle perfect squares via the Frobenius.
  struct Item { Poly f; std::uint32_t mult; };
  std::vector<Item> work{{f, 1}};
  std::vector<Item> squarefree;
  while (!work.empty()) {
    Item it = work.back();
    work.pop_back();
    if (it.f.degree() == 0) continue;
    Poly d = it.f.derivative();
    if (d.is_zero()) {
      // f = g(x)^2 in characteristic 2: take the square root coefficientwise.
      std::vector<std::uint8_t> root((it.f.degree() / 2) + 1, 0);
      for (std::size_t i = 0; i < root.size(); ++i) {
        std::uint8_t c = it.f.coeff(2 * i);
        // sqrt in GF(2^e): c -> c^(2^(e-1))
        std::uint8_t s = c;
        for (int k = 1; k < it.f.field().e; ++k) s = it.f.field().mul(s, s);
        // after e-1 squarings s = c^(2^(e-1)) and s*s = c
        root[i] = s;
      }
      work.push_back({Poly(it.f.field(), root), it.mult * 2});
      continue;
    }
    Poly g = poly_gcd(it.f, d);
    if (g.degree() == 0) {
      squarefree.push_back(it);
    } else {
      work.push_back({it.f / g, it.mult});
      work.push_back({g, it.mult});
    }
  }

  // Merge duplicate squarefree parts before the hard factorisation.
  for (auto& it : squarefree) {
    for (const Poly& p : berlekamp_squarefree(it.f)) {
      bool merged = false;
      for (auto& pf : out)
        if (pf.p == p) { pf.multiplicity += it.mult; merged = true; break; }
      if (!merged) out.push_back(PolyFactor{p, it.mult});
    }
  }
  std::sort(out.begin(), out.end(), [](const PolyFactor& a, const PolyFactor& b) {
    if (a.p.degree() != b.p.degree()) return a.p.degree() < b.p.degree();
    return a.p.coeffs() < b.p.coeffs();
  });
  return out;
}

bool is_irreducible(const Poly& f) {
  if (f.degree() <= 0) return false;
  if (f.degree() == 1) return true;
  auto factors = factor_poly(f);
  return factors.size() == 1 && factors[0].multiplicity == 1;
}

// ---------------------------------------------------------------------------
// Matrix polynomials

Poly min_poly(const FFMatrix& a) {
  if (a.rows() != a.cols()) throw ShapeMismatch("min_poly of non-square matrix");
  FieldSpec f = a.field();
  std::uint32_t n = a.rows();
  if (n == 0) return Poly::one(f);

  Poly mu = Poly::one(f);
  SubspaceBasis seen(n, f);
  for (std::uint32_t seed = 0; seed < n && seen.dim() < n; ++seed) {
    FFMatrix v(1, n, f);
    v.set(0, seed, 1);
    if (seen.contains(v)) continue;
    // Krylov cycle for v: record iterates until dependency.
    SubspaceBasis cycle(n, f);
    std::vector<FFMatrix> iterates;
    FFMatrix cur = v;
    while (true) {
      if (!cycle.insert(cur)) break;
      iterates.push_back(cur);
      cur = cur * a;
    }
    // cur = sum c_i * iterates[i]; annihilator = x^k - sum c_i x^i.
    // Solve for the coordinates against the recorded iterates.
    FFMatrix stack(static_cast<std::uint32_t>(iterates.size()), n, f);
    for (std::uint32_t i = 0; i < iterates.size(); ++i) stack.set_row(i, iterates[i]);
    FFMatrix target(1, n, f);
    target = cur;
    // coords * stack = target
    auto sol = solve(stack.transposed(), target);
    if (!sol) throw InternalError("min_poly dependency solve failed");
    std::vector<std::uint8_t> ann(iterates.size() + 1, 0);
    for (std::uint32_t i = 0; i < iterates.size(); ++i) ann[i] = sol->get(0, i);
    ann[iterates.size()] = 1;
    mu = poly_lcm(mu, Poly(f, ann));
    for (const auto& it : iterates) seen.insert(it);
  }
  return mu;
}

Poly char_poly(const FFMatrix& a) {
  if (a.rows() != a.cols()) throw ShapeMismatch("char_poly of non-square matrix");
  FieldSpec f = a.field();
  std::uint32_t n = a.rows();
  if (n == 0) return Poly::one(f);

  // Hessenberg reduction by similarity, then the standard recurrence.
  FFMatrix h = a;
  for (std::uint32_t col = 0; col + 2 <= n; ++col) {
    std::uint32_t pivot = UINT32_MAX;
    for (std::uint32_t i = col + 1; i < n; ++i)
      if (h.get(i, col)) { pivot = i; break; }
    if (pivot == UINT32_MAX) continue;
    if (pivot != col + 1) {
      h.swap_rows(pivot, col + 1);
      // matching column swap
      for (std::uint32_t i = 0; i < n; ++i) {
        std::uint8_t t = h.get(i, pivot);
        h.set(i, pivot, h.get(i, col + 1));
        h.set(i, col + 1, t);
      }
    }
    std::uint8_t inv = f.inv(h.get(col + 1, col));
    for (std::uint32_t i = col + 2; i < n; ++i) {
      std::uint8_t factor = f.mul(h.get(i, col), inv);
      if (!factor) continue;
      h.add_row_into(col + 1, i, factor);  // row_i -= factor * row_{col+1}
      // matching column op: col_{col+1} += factor * col_i
      for (std::uint32_t r = 0; r < n; ++r) {
        std::uint8_t v = h.get(r, i);
        if (v) h.set(r, col + 1, f.add(h.get(r, col + 1), f.mul(factor, v)));
      }
    }
  }

  // p_0 = 1, p_k = (x - h_kk) p_{k-1} - sum over trailing products.
  std::vector<Poly> p(n + 1, Poly::one(f));
  for (std::uint32_t k = 1; k <= n; ++k) {
    Poly xk(f, {h.get(k - 1, k - 1), 1});  // x + h_kk (char 2)
    p[k] = xk * p[k - 1];
    std::uint8_t beta = 1;
    for (std::uint32_t i = 1; i < k; ++i) {
      beta = f.mul(beta, h.get(k - i, k - i - 1));
      std::uint8_t c = f.mul(h.get(k - i - 1, k - 1), beta);
      if (c) p[k] = p[k] + Poly(f, {c}) * p[k - i - 1];
    }
  }
  return p[n];
}

FFMatrix eval_poly(const Poly& p, const FFMatrix& a) {
  std::uint32_t n = a.rows();
  FFMatrix out(n, n, a.field());
  for (int i = p.degree(); i >= 0; --i) {
    out = out * a;
    std::uint8_t c = p.coeff(i);
    if (c)
      for (std::uint32_t d = 0; d < n; ++d) out.set(d, d, a.field().add(out.get(d, d), c));
  }
  return out;
}

}  // namespace dbl
