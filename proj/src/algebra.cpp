#include "dbl/algebra.hpp"

#include <algorithm>

#include "dbl/chop.hpp"
#include "dbl/errors.hpp"

namespace dbl {

namespace {

FFMatrix random_combo(const std::vector<FFMatrix>& rows, FieldSpec f, Rng& rng) {
  FFMatrix out(1, rows.empty() ? 0 : rows[0].cols(), f);
  for (const auto& r : rows) {
    std::uint8_t c = static_cast<std::uint8_t>(rng.below(f.size()));
    if (!c) continue;
    for (std::uint32_t j = 0; j < r.cols(); ++j) {
      std::uint8_t v = r.get(0, j);
      if (v) out.set(0, j, f.add(out.get(0, j), f.mul(c, v)));
    }
  }
  return out;
}


// Working view of a corner algebra eAe inside the ambient coordinate
// space: an echelonised basis plus regular representation machinery.
struct Corner {
  const AlgebraOps* ops;
  FFMatrix e;                    // identity of the corner
  std::vector<FFMatrix> basis;   // ambient coordinate rows, echelonised
  SubspaceBasis span;            // echelon of basis
  std::vector<FFMatrix> reg;     // right-regular rep of basis elements

  Corner(const AlgebraOps& o, const FFMatrix& idem)
      : ops(&o), e(idem), span(o.dim, o.field) {
    for (std::uint32_t j = 0; j < o.dim; ++j) {
      FFMatrix unit(1, o.dim, o.field);
      unit.set(0, j, 1);
      span.insert(o.mul(o.mul(e, unit), e));
    }
    FFMatrix m = span.matrix();
    span = SubspaceBasis(m);  // canonical order
    for (std::uint32_t i = 0; i < m.rows(); ++i) basis.push_back(m.row(i));
    build_reg();
  }

  std::uint32_t dim() const { return static_cast<std::uint32_t>(basis.size()); }

  std::vector<std::uint8_t> coords(const FFMatrix& x) const { return span.coordinates(x); }

  FFMatrix from_coords(const std::vector<std::uint8_t>& c) const {
    FFMatrix out(1, ops->dim, ops->field);
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (!c[i]) continue;
      for (std::uint32_t j = 0; j < ops->dim; ++j) {
        std::uint8_t v = basis[i].get(0, j);
        if (v) out.set(0, j, ops->field.add(out.get(0, j), ops->field.mul(c[i], v)));
      }
    }
    return out;
  }

  void build_reg() {
    reg.clear();
    std::uint32_t d = dim();
    for (std::uint32_t a = 0; a < d; ++a) {
      FFMatrix r(d, d, ops->field);
      for (std::uint32_t i = 0; i < d; ++i) {
        auto c = coords(ops->mul(basis[i], basis[a]));
        for (std::uint32_t j = 0; j < d; ++j) r.set(i, j, c[j]);
      }
      reg.push_back(std::move(r));
    }
  }

  FFMatrix reg_of(const FFMatrix& x) const {
    auto cx = coords(x);
    std::uint32_t d = dim();
    FFMatrix r(d, d, ops->field);
    for (std::uint32_t a = 0; a < d; ++a) {
      if (!cx[a]) continue;
      for (std::uint32_t i = 0; i < d; ++i)
        for (std::uint32_t j = 0; j < d; ++j) {
          std::uint8_t v = reg[a].get(i, j);
          if (v) r.set(i, j, ops->field.add(r.get(i, j), ops->field.mul(cx[a], v)));
        }
    }
    return r;
  }

  FFMatrix eval_in_algebra(const Poly& p, const FFMatrix& x) const {
    FFMatrix acc(1, ops->dim, ops->field);
    for (int i = p.degree(); i >= 0; --i) {
      acc = ops->mul(acc, x);
      std::uint8_t c = p.coeff(i);
      if (c) {
        for (std::uint32_t j = 0; j < ops->dim; ++j) {
          std::uint8_t v = e.get(0, j);
          if (v) acc.set(0, j, ops->field.add(acc.get(0, j), ops->field.mul(c, v)));
        }
      }
    }
    return acc;
  }
};

std::optional<FFMatrix> idempotent_from_minpoly(const Corner& corner, const FFMatrix& x,
                                                const Poly& mu) {
  auto factors = factor_poly(mu);
  if (factors.size() < 2) return std::nullopt;
  Poly f = Poly::one(mu.field());
  for (std::uint32_t m = 0; m < factors[0].multiplicity; ++m) f = f * factors[0].p;
  Poly g = mu / f;
  Poly gg(mu.field()), u(mu.field()), v(mu.field());
  poly_xgcd(f, g, gg, u, v);
  if (gg.degree() != 0) throw InternalError("minpoly factors not coprime");
  return corner.eval_in_algebra(u * f, x);
}

struct RadicalResult {
  std::vector<FFMatrix> basis;  // ambient rows
};

// J(corner) as the joint annihilator of the composition factors of the
// regular module: an element acts nilpotently on the corner exactly when
// it kills every factor, and that set is the radical.
RadicalResult corner_radical(const Corner& corner, Rng& rng) {
  FieldSpec f = corner.ops->field;
  std::uint32_t d = corner.dim();
  auto factors = chop_actions(corner.reg, d, rng);
  std::uint32_t total_cols = 0;
  for (const auto& fac : factors) total_cols += fac.dim * fac.dim;
  FFMatrix cond(d, total_cols, f);
  std::uint32_t col0 = 0;
  for (const auto& fac : factors) {
    for (std::uint32_t a = 0; a < d; ++a) {
      const FFMatrix& rho = fac.actions[a];
      for (std::uint32_t i = 0; i < fac.dim; ++i)
        for (std::uint32_t j = 0; j < fac.dim; ++j) {
          std::uint8_t v = rho.get(i, j);
          if (v) cond.set(a, col0 + i * fac.dim + j, v);
        }
    }
    col0 += fac.dim * fac.dim;
  }
  FFMatrix kernel = left_nullspace(cond);
  RadicalResult out;
  for (std::uint32_t i = 0; i < kernel.rows(); ++i) {
    std::vector<std::uint8_t> cc(d);
    for (std::uint32_t j = 0; j < d; ++j) cc[j] = kernel.get(i, j);
    out.basis.push_back(corner.from_coords(cc));
  }
  return out;
}

// Verify J is a nilpotent two-sided ideal of the corner.  Throwing here
// means the radical search produced garbage, never a wrong verdict.
void verify_nilpotent_ideal(const Corner& corner, const std::vector<FFMatrix>& jbasis) {
  const AlgebraOps& ops = *corner.ops;
  SubspaceBasis jspan(ops.dim, ops.field);
  for (const auto& r : jbasis) jspan.insert(r);
  for (const auto& j : jbasis)
    for (const auto& b : corner.basis) {
      if (!jspan.contains(ops.mul(j, b)) || !jspan.contains(ops.mul(b, j)))
        throw InternalError("radical candidate is not an ideal");
    }
  std::vector<FFMatrix> cur = jbasis;
  std::uint32_t steps = 0;
  while (!cur.empty()) {
    if (++steps > corner.dim() + 2)
      throw InternalError("radical candidate is not nilpotent");
    SubspaceBasis nextspan(ops.dim, ops.field);
    for (const auto& x : cur)
      for (const auto& j : jbasis) nextspan.insert(ops.mul(x, j));
    FFMatrix m = nextspan.matrix();
    cur.clear();
    for (std::uint32_t i = 0; i < m.rows(); ++i) cur.push_back(m.row(i));
  }
}

// corner/J in corner coordinates: reduce against the echelonised J and
// read the canonical coordinates at the non-pivot columns.
struct Quotient {
  const Corner* corner;
  SubspaceBasis jspan;               // J in corner coordinates
  std::vector<std::uint32_t> rep_cols;

  Quotient(const Corner& c, const std::vector<FFMatrix>& jbasis)
      : corner(&c), jspan(c.dim(), c.ops->field) {
    std::uint32_t d = c.dim();
    for (const auto& r : jbasis) {
      auto cc = c.coords(r);
      FFMatrix row(1, d, c.ops->field);
      for (std::uint32_t j = 0; j < d; ++j) row.set(0, j, cc[j]);
      jspan.insert(row);
    }
    FFMatrix jm = jspan.matrix();
    std::vector<bool> pivot(d, false);
    for (std::uint32_t i = 0; i < jm.rows(); ++i)
      for (std::uint32_t j = 0; j < d; ++j)
        if (jm.get(i, j)) { pivot[j] = true; break; }
    for (std::uint32_t j = 0; j < d; ++j)
      if (!pivot[j]) rep_cols.push_back(j);
  }

  std::uint32_t dim() const { return static_cast<std::uint32_t>(rep_cols.size()); }

  std::vector<std::uint8_t> coords(const FFMatrix& x_ambient) const {
    auto cc = corner->coords(x_ambient);
    FFMatrix row(1, corner->dim(), corner->ops->field);
    for (std::uint32_t j = 0; j < corner->dim(); ++j) row.set(0, j, cc[j]);
    FFMatrix residue = jspan.reduce(row);
    std::vector<std::uint8_t> out(rep_cols.size());
    for (std::uint32_t j = 0; j < rep_cols.size(); ++j) out[j] = residue.get(0, rep_cols[j]);
    return out;
  }

  FFMatrix reg_of(const FFMatrix& x) const {
    std::uint32_t dq = dim();
    FFMatrix r(dq, dq, corner->ops->field);
    for (std::uint32_t i = 0; i < dq; ++i) {
      auto c = coords(corner->ops->mul(corner->basis[rep_cols[i]], x));
      for (std::uint32_t j = 0; j < dq; ++j) r.set(i, j, c[j]);
    }
    return r;
  }
};

using IdempotentFilter = std::function<std::uint8_t(const FFMatrix&)>;

void split_recursive(const AlgebraOps& ops, const FFMatrix& e, Rng& rng,
                     std::vector<FFMatrix>& out, std::uint32_t depth,
                     const IdempotentFilter& filter) {
  if (depth > ops.dim + 4) throw InternalError("idempotent recursion too deep");
  Corner corner(ops, e);
  std::uint32_t d = corner.dim();
  if (d == 0) throw InternalError("zero corner encountered");
  if (d == 1) {
    out.push_back(e);
    return;
  }

  // Phase 1: coprime primary components of sampled minimal polynomials.
  std::uint32_t tries = 2 * d + 32;
  for (std::uint32_t t = 0; t < tries; ++t) {
    FFMatrix x = t < d ? corner.basis[t] : random_combo(corner.basis, ops.field, rng);
    Poly mu = min_poly(corner.reg_of(x));
    auto eps = idempotent_from_minpoly(corner, x, mu);
    if (!eps) continue;
    if (!(ops.mul(*eps, *eps) == *eps)) throw InternalError("split idempotent check failed");
    if (eps->is_zero() || *eps == e) continue;
    FFMatrix rest = e + *eps;  // e - eps in characteristic 2
    if (filter) {
      std::uint8_t left = filter(*eps), right = filter(rest);
      if ((left != 0) == (right != 0))
        throw InternalError("idempotent filter not supported on one side");
      split_recursive(ops, left ? *eps : rest, rng, out, depth + 1, filter);
    } else {
      split_recursive(ops, *eps, rng, out, depth + 1, filter);
      split_recursive(ops, rest, rng, out, depth + 1, filter);
    }
    return;
  }

  // Phase 2: certify the corner local, or split through corner/J.
  RadicalResult rad = corner_radical(corner, rng);
  verify_nilpotent_ideal(corner, rad.basis);
  Quotient q(corner, rad.basis);
  std::uint32_t dq = q.dim();
  if (dq == 0) throw InternalError("corner equal to its radical");
  if (dq == 1) {
    out.push_back(e);
    return;
  }
  std::uint32_t qtries = 4 * dq + 96;
  for (std::uint32_t t = 0; t < qtries; ++t) {
    FFMatrix x = t < d ? corner.basis[t] : random_combo(corner.basis, ops.field, rng);
    Poly mu = min_poly(q.reg_of(x));
    if (static_cast<std::uint32_t>(mu.degree()) == dq && is_irreducible(mu)) {
      // corner/J is the field generated by this element, so the corner
      // is local: nonunits all lie in the verified nilpotent ideal.
      out.push_back(e);
      return;
    }
    auto factors = factor_poly(mu);
    if (factors.size() < 2) continue;
    Poly f = Poly::one(ops.field);
    for (std::uint32_t m = 0; m < factors[0].multiplicity; ++m) f = f * factors[0].p;
    Poly g = mu / f;
    Poly gg(ops.field), u(ops.field), v(ops.field);
    poly_xgcd(f, g, gg, u, v);
    FFMatrix eps = corner.eval_in_algebra(u * f, x);
    // Idempotent mod J; squaring squares the nilpotent defect.
    for (std::uint32_t step = 0; step <= d + 2; ++step) {
      if (ops.mul(eps, eps) == eps) break;
      eps = ops.mul(eps, eps);
    }
    if (!(ops.mul(eps, eps) == eps)) throw InternalError("idempotent lifting diverged");
    if (eps.is_zero() || eps == e) continue;
    FFMatrix rest = e + eps;
    if (filter) {
      std::uint8_t left = filter(eps), right = filter(rest);
      if ((left != 0) == (right != 0))
        throw InternalError("idempotent filter not supported on one side");
      split_recursive(ops, left ? eps : rest, rng, out, depth + 1, filter);
    } else {
      split_recursive(ops, eps, rng, out, depth + 1, filter);
      split_recursive(ops, rest, rng, out, depth + 1, filter);
    }
    return;
  }
  throw InternalError("unable to certify corner local or split it");
}

}  // namespace

std::vector<FFMatrix> primitive_idempotents(const AlgebraOps& ops, Rng& rng) {
  std::vector<FFMatrix> out;
  split_recursive(ops, ops.one, rng, out, 0, nullptr);
  return out;
}

FFMatrix isolate_idempotent(const AlgebraOps& ops,
                            const std::function<std::uint8_t(const FFMatrix&)>& pairing,
                            Rng& rng) {
  if (!pairing(ops.one)) throw InternalError("pairing vanishes on the identity");
  std::vector<FFMatrix> out;
  split_recursive(ops, ops.one, rng, out, 0, pairing);
  if (out.size() != 1) throw InternalError("directed split returned several idempotents");
  return out[0];
}

bool is_local_algebra(const AlgebraOps& ops, Rng& rng) {
  return primitive_idempotents(ops, rng).size() == 1;
}

std::optional<std::uint32_t> local_residue_dimension(const AlgebraOps& ops, Rng& rng) {
  if (primitive_idempotents(ops, rng).size() != 1) return std::nullopt;
  Corner corner(ops, ops.one);
  RadicalResult rad = corner_radical(corner, rng);
  verify_nilpotent_ideal(corner, rad.basis);
  Quotient q(corner, rad.basis);
  return q.dim();
}

// ---------------------------------------------------------------------------
// MatrixAlgebra

namespace {
FFMatrix vectorise_matrix(const FFMatrix& m) {
  std::uint32_t n = m.rows();
  FFMatrix v(1, n * m.cols(), m.field());
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < m.cols(); ++j) {
      std::uint8_t x = m.get(i, j);
      if (x) v.set(0, i * m.cols() + j, x);
    }
  return v;
}
}  // namespace

MatrixAlgebra MatrixAlgebra::from_span(const std::vector<FFMatrix>& spanning,
                                       const FFMatrix& identity) {
  MatrixAlgebra alg;
  if (spanning.empty()) throw InternalError("empty spanning set");
  std::uint32_t n = identity.rows();
  FieldSpec f = identity.field();

  SubspaceBasis raw(n * n, f);
  for (const auto& m : spanning) raw.insert(vectorise_matrix(m));
  FFMatrix ech = raw.matrix();
  alg.vec_basis_ = SubspaceBasis(n * n, f);
  for (std::uint32_t r = 0; r < ech.rows(); ++r) {
    alg.vec_basis_.insert(ech.row(r));
    FFMatrix m(n, n, f);
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = 0; j < n; ++j) m.set(i, j, ech.get(r, i * n + j));
    alg.basis.push_back(std::move(m));
  }

  std::uint32_t dim = static_cast<std::uint32_t>(alg.basis.size());
  std::vector<FFMatrix> mats = alg.basis;
  SubspaceBasis vb = alg.vec_basis_;
  alg.ops.field = f;
  alg.ops.dim = dim;
  alg.ops.one = FFMatrix(1, dim, f);
  {
    auto c = vb.coordinates(vectorise_matrix(identity));
    for (std::uint32_t i = 0; i < dim; ++i) alg.ops.one.set(0, i, c[i]);
  }
  alg.ops.mul = [mats, vb, n, f](const FFMatrix& a, const FFMatrix& b) {
    FFMatrix ma(n, n, f), mb(n, n, f);
    for (std::uint32_t i = 0; i < mats.size(); ++i) {
      std::uint8_t ca = a.get(0, i), cb = b.get(0, i);
      if (ca)
        for (std::uint32_t r = 0; r < n; ++r)
          for (std::uint32_t c2 = 0; c2 < n; ++c2) {
            std::uint8_t v = mats[i].get(r, c2);
            if (v) ma.set(r, c2, f.add(ma.get(r, c2), f.mul(ca, v)));
          }
      if (cb)
        for (std::uint32_t r = 0; r < n; ++r)
          for (std::uint32_t c2 = 0; c2 < n; ++c2) {
            std::uint8_t v = mats[i].get(r, c2);
            if (v) mb.set(r, c2, f.add(mb.get(r, c2), f.mul(cb, v)));
          }
    }
    FFMatrix prod = ma * mb;
    auto c = vb.coordinates(vectorise_matrix(prod));
    FFMatrix out(1, static_cast<std::uint32_t>(mats.size()), f);
    for (std::uint32_t i = 0; i < mats.size(); ++i) out.set(0, i, c[i]);
    return out;
  };
  return alg;
}

FFMatrix MatrixAlgebra::to_matrix(const FFMatrix& coords) const {
  std::uint32_t n = basis[0].rows();
  FieldSpec f = basis[0].field();
  FFMatrix out(n, n, f);
  for (std::uint32_t i = 0; i < basis.size(); ++i) {
    std::uint8_t c = coords.get(0, i);
    if (!c) continue;
    for (std::uint32_t r = 0; r < n; ++r)
      for (std::uint32_t cc = 0; cc < n; ++cc) {
        std::uint8_t v = basis[i].get(r, cc);
        if (v) out.set(r, cc, f.add(out.get(r, cc), f.mul(c, v)));
      }
  }
  return out;
}

FFMatrix MatrixAlgebra::coords_of(const FFMatrix& matrix) const {
  auto c = vec_basis_.coordinates(vectorise_matrix(matrix));
  FFMatrix out(1, static_cast<std::uint32_t>(basis.size()), matrix.field());
  for (std::uint32_t i = 0; i < basis.size(); ++i) out.set(0, i, c[i]);
  return out;
}

}  // namespace dbl
