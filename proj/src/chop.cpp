#include "dbl/chop.hpp"

#include <algorithm>

#include "dbl/errors.hpp"

namespace dbl {

namespace {

FFMatrix random_envelope_element(const std::vector<FFMatrix>& actions, std::uint32_t dim,
                                 FieldSpec f, Rng& rng) {
  FFMatrix out(dim, dim, f);
  std::uint32_t terms = 1 + static_cast<std::uint32_t>(rng.below(3));
  for (std::uint32_t t = 0; t < terms; ++t) {
    FFMatrix word = FFMatrix::identity(dim, f);
    std::uint32_t len = 1 + static_cast<std::uint32_t>(rng.below(3));
    for (std::uint32_t l = 0; l < len; ++l)
      word = word * actions[rng.below(actions.size())];
    std::uint8_t c = static_cast<std::uint8_t>(1 + rng.below(f.size() - 1));
    if (f.e == 1) {
      out = out + word;
    } else {
      FFMatrix scaled = word;
      for (std::uint32_t i = 0; i < dim; ++i)
        for (std::uint32_t j = 0; j < dim; ++j)
          scaled.set(i, j, f.mul(c, word.get(i, j)));
      out = out + scaled;
    }
  }
  return out;
}

struct SplitOutcome {
  bool simple = false;
  FFMatrix submodule;  // echelon basis rows when !simple
};

// One meataxe round: either exhibits a proper submodule or certifies the
// module simple via the kernel/dual-kernel criterion applied to an
// element whose chosen minimal-polynomial factor has matching nullity.
SplitOutcome find_submodule(const std::vector<FFMatrix>& actions, std::uint32_t dim,
                            Rng& rng) {
  FieldSpec f = actions.front().field();
  std::vector<FFMatrix> transposed;
  for (const auto& a : actions) transposed.push_back(a.transposed());

  for (std::uint32_t attempt = 0; attempt < 300; ++attempt) {
    FFMatrix theta = random_envelope_element(actions, dim, f, rng);
    Poly mu = min_poly(theta);
    auto factors = factor_poly(mu);
    for (const auto& pf : factors) {
      FFMatrix p_theta = eval_poly(pf.p, theta);
      FFMatrix kernel = left_nullspace(p_theta);
      if (kernel.rows() == 0) throw InternalError("minpoly factor with empty kernel");
      std::uint32_t probe = std::min<std::uint32_t>(kernel.rows(), 4);
      bool decisive = kernel.rows() == static_cast<std::uint32_t>(pf.p.degree());
      for (std::uint32_t vi = 0; vi < probe; ++vi) {
        FFMatrix w = spin(kernel.row(vi), actions);
        if (w.rows() < dim) return SplitOutcome{false, w};
      }
      if (!decisive) continue;
      // Dual side: a submodule avoiding the kernel shows up as a proper
      // spin in the transposed module.
      FFMatrix kernel_t = left_nullspace(p_theta.transposed());
      if (kernel_t.rows() == 0) throw InternalError("transposed kernel empty");
      FFMatrix wt = spin(kernel_t.row(0), transposed);
      if (wt.rows() < dim) {
        // Orthogonal complement of the dual submodule is a submodule.
        FFMatrix sub = left_nullspace(wt.transposed());
        if (sub.rows() == 0 || sub.rows() == dim)
          throw InternalError("dual complement degenerate");
        return SplitOutcome{false, rref(sub).r};
      }
      return SplitOutcome{true, FFMatrix()};
    }
  }
  throw InternalError("meataxe failed to reach a decision");
}

}  // namespace

std::vector<FFMatrix> restrict_actions(const std::vector<FFMatrix>& actions,
                                       const FFMatrix& basis) {
  SubspaceBasis span(basis);
  std::vector<FFMatrix> out;
  for (const auto& a : actions) {
    FFMatrix r(basis.rows(), basis.rows(), a.field());
    for (std::uint32_t i = 0; i < basis.rows(); ++i) {
      auto c = span.coordinates(basis.row(i) * a);
      for (std::uint32_t j = 0; j < basis.rows(); ++j) r.set(i, j, c[j]);
    }
    out.push_back(std::move(r));
  }
  return out;
}

FFMatrix QuotientSpace::project(const FFMatrix& v) const {
  SubspaceBasis span(sub_basis);
  FFMatrix residue = span.reduce(v);
  FFMatrix out(1, static_cast<std::uint32_t>(rep_cols.size()), v.field());
  for (std::uint32_t j = 0; j < rep_cols.size(); ++j) out.set(0, j, residue.get(0, rep_cols[j]));
  return out;
}

QuotientSpace quotient_actions(const std::vector<FFMatrix>& actions, const FFMatrix& basis) {
  QuotientSpace q;
  q.sub_basis = basis;
  std::uint32_t n = actions.empty() ? basis.cols() : actions.front().cols();
  FieldSpec f = actions.empty() ? basis.field() : actions.front().field();
  std::vector<bool> is_pivot(n, false);
  SubspaceBasis span(basis);
  // rref pivots: first nonzero column of each row.
  for (std::uint32_t i = 0; i < basis.rows(); ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      if (basis.get(i, j)) { is_pivot[j] = true; break; }
  for (std::uint32_t j = 0; j < n; ++j)
    if (!is_pivot[j]) q.rep_cols.push_back(j);

  std::uint32_t qd = static_cast<std::uint32_t>(q.rep_cols.size());
  for (const auto& a : actions) {
    FFMatrix qa(qd, qd, f);
    for (std::uint32_t i = 0; i < qd; ++i) {
      FFMatrix unit(1, n, f);
      unit.set(0, q.rep_cols[i], 1);
      FFMatrix img = span.reduce(unit * a);
      for (std::uint32_t j = 0; j < qd; ++j) qa.set(i, j, img.get(0, q.rep_cols[j]));
    }
    q.actions.push_back(std::move(qa));
  }
  return q;
}

std::vector<FFMatrix> hom_space(const std::vector<FFMatrix>& a,
                                const std::vector<FFMatrix>& b) {
  if (a.size() != b.size()) throw ShapeMismatch("hom_space action count");
  std::uint32_t n = a.empty() ? 0 : a.front().rows();
  std::uint32_t m = b.empty() ? 0 : b.front().rows();
  FieldSpec f = a.empty() ? FieldSpec::gf(1) : a.front().field();
  if (a.empty()) throw InternalError("hom_space needs at least one action");

  // Standard-basis style: pick module generators for the source, spin
  // while carrying the matrix that transports a generator image along
  // the same word, and turn every linear dependency into constraints.
  struct Entry {
    FFMatrix v;        // 1 x n
    std::uint32_t gen; // generator index
    FFMatrix w;        // m x m transport matrix
  };
  std::vector<Entry> entries;
  // Augmented with a unit tail per entry so that dependencies read off
  // their coefficients from the reduced residue directly.
  SubspaceBasis span(2 * n, f);
  std::vector<std::uint32_t> gens;
  std::vector<std::uint32_t> queue;

  auto augmented = [&](const FFMatrix& v, std::uint32_t entry_idx) {
    FFMatrix out(1, 2 * n, f);
    for (std::uint32_t j = 0; j < n; ++j) out.set(0, j, v.get(0, j));
    out.set(0, n + entry_idx, 1);
    return out;
  };
  auto plain = [&](const FFMatrix& v) {
    FFMatrix out(1, 2 * n, f);
    for (std::uint32_t j = 0; j < n; ++j) out.set(0, j, v.get(0, j));
    return out;
  };
  auto head_is_zero = [&](const FFMatrix& r) {
    for (std::uint32_t j = 0; j < n; ++j)
      if (r.get(0, j)) return false;
    return true;
  };

  struct Dependency {
    std::vector<std::pair<std::uint32_t, std::uint8_t>> terms;  // entry index, coeff
    std::uint32_t src_entry;
    std::uint32_t action;
  };
  std::vector<Dependency> deps;
  std::uint32_t spanned = 0;

  auto add_generator = [&](std::uint32_t col) {
    FFMatrix v(1, n, f);
    v.set(0, col, 1);
    if (head_is_zero(span.reduce(plain(v)))) return false;
    std::uint32_t idx = static_cast<std::uint32_t>(entries.size());
    entries.push_back(Entry{v, static_cast<std::uint32_t>(gens.size()),
                            FFMatrix::identity(m, f)});
    span.insert(augmented(v, idx));
    ++spanned;
    gens.push_back(col);
    queue.push_back(idx);
    return true;
  };

  std::uint32_t next_col = 0;
  while (spanned < n) {
    while (next_col < n && !add_generator(next_col)) ++next_col;
    while (!queue.empty()) {
      std::uint32_t ei = queue.back();
      queue.pop_back();
      for (std::uint32_t t = 0; t < a.size(); ++t) {
        FFMatrix img = entries[ei].v * a[t];
        FFMatrix residue = span.reduce(plain(img));
        if (head_is_zero(residue)) {
          Dependency d;
          d.src_entry = ei;
          d.action = t;
          for (std::uint32_t i = 0; i < entries.size(); ++i) {
            std::uint8_t cc = residue.get(0, n + i);
            if (cc) d.terms.emplace_back(i, cc);
          }
          deps.push_back(std::move(d));
        } else {
          std::uint32_t idx = static_cast<std::uint32_t>(entries.size());
          entries.push_back(Entry{img, entries[ei].gen, entries[ei].w * b[t]});
          span.insert(augmented(img, idx));
          ++spanned;
          queue.push_back(idx);
        }
      }
    }
  }

  std::uint32_t s = static_cast<std::uint32_t>(gens.size());
  // Solution rows live in F^(s*m): start with everything.
  FFMatrix solution = FFMatrix::identity(s * m, f);
  for (const auto& d : deps) {
    // Constraint matrix D: (s*m) x m with blocks per generator.
    FFMatrix dmat(s * m, m, f);
    const Entry& src = entries[d.src_entry];
    FFMatrix wa = src.w * b[d.action];
    for (std::uint32_t r = 0; r < m; ++r)
      for (std::uint32_t c2 = 0; c2 < m; ++c2) {
        std::uint8_t v = wa.get(r, c2);
        if (v) dmat.set(src.gen * m + r, c2, v);
      }
    for (const auto& [idx, coeff] : d.terms) {
      const Entry& te = entries[idx];
      for (std::uint32_t r = 0; r < m; ++r)
        for (std::uint32_t c2 = 0; c2 < m; ++c2) {
          std::uint8_t v = f.mul(coeff, te.w.get(r, c2));
          if (v) dmat.set(te.gen * m + r, c2, f.add(dmat.get(te.gen * m + r, c2), v));
        }
    }
    if (solution.rows() == 0) break;
    FFMatrix eval = solution * dmat;
    FFMatrix keep = left_nullspace(eval);
    solution = keep * solution;
  }

  // Materialise homomorphism matrices: entries tell how every basis
  // vector of the source maps once generator images are fixed.
  std::vector<FFMatrix> homs;
  for (std::uint32_t r = 0; r < solution.rows(); ++r) {
    // Generator images.
    std::vector<FFMatrix> w(s, FFMatrix(1, m, f));
    for (std::uint32_t g = 0; g < s; ++g)
      for (std::uint32_t j = 0; j < m; ++j) w[g].set(0, j, solution.get(r, g * m + j));
    // Solve for the full matrix T via the entry list: entry.v -> w[gen]*entry.w
    FFMatrix lhs(static_cast<std::uint32_t>(entries.size()), n, f);
    FFMatrix rhs(static_cast<std::uint32_t>(entries.size()), m, f);
    for (std::uint32_t i = 0; i < entries.size(); ++i) {
      lhs.set_row(i, entries[i].v);
      rhs.set_row(i, w[entries[i].gen] * entries[i].w);
    }
    // T with lhs * T = rhs; lhs spans F^n, so pick a row basis and invert.
    FFMatrix t(n, m, f);
    SubspaceBasis lspan(n, f);
    std::vector<std::uint32_t> rows;
    for (std::uint32_t i = 0; i < lhs.rows() && lspan.dim() < n; ++i)
      if (lspan.insert(lhs.row(i))) rows.push_back(i);
    FFMatrix sq(n, n, f), sqr(n, m, f);
    for (std::uint32_t i = 0; i < n; ++i) {
      sq.set_row(i, lhs.row(rows[i]));
      sqr.set_row(i, rhs.row(rows[i]));
    }
    t = sq.inverse() * sqr;
    homs.push_back(std::move(t));
  }
  return homs;
}

std::optional<FFMatrix> module_isomorphism(const std::vector<FFMatrix>& a,
                                           const std::vector<FFMatrix>& b, Rng& rng) {
  if (a.size() != b.size()) throw ShapeMismatch("module_isomorphism action count");
  std::uint32_t n = a.empty() ? 0 : a.front().rows();
  std::uint32_t m = b.empty() ? 0 : b.front().rows();
  if (n != m) return std::nullopt;
  auto homs = hom_space(a, b);
  if (homs.empty()) return std::nullopt;
  FieldSpec f = a.front().field();
  for (const auto& h : homs)
    if (rank(h) == n) return h;
  for (std::uint32_t t = 0; t < 96; ++t) {
    FFMatrix cand(n, n, f);
    for (const auto& h : homs) {
      std::uint8_t c = static_cast<std::uint8_t>(rng.below(f.size()));
      if (!c) continue;
      if (f.e == 1) {
        cand = cand + h;
      } else {
        FFMatrix scaled = h;
        for (std::uint32_t i = 0; i < n; ++i)
          for (std::uint32_t j = 0; j < n; ++j) scaled.set(i, j, f.mul(c, h.get(i, j)));
        cand = cand + scaled;
      }
    }
    if (cand.rows() == n && rank(cand) == n) return cand;
  }
  return std::nullopt;
}

namespace {

void chop_recursive(const std::vector<FFMatrix>& actions, std::uint32_t dim, Rng& rng,
                    std::vector<ActionFactor>& out) {
  if (dim == 0) return;
  if (dim == 1) {
    out.push_back(ActionFactor{1, actions, 1});
    return;
  }
  SplitOutcome s = find_submodule(actions, dim, rng);
  if (s.simple) {
    out.push_back(ActionFactor{dim, actions, 1});
    return;
  }
  chop_recursive(restrict_actions(actions, s.submodule), s.submodule.rows(), rng, out);
  QuotientSpace q = quotient_actions(actions, s.submodule);
  chop_recursive(q.actions, dim - s.submodule.rows(), rng, out);
}

}  // namespace

std::vector<ActionFactor> chop_actions(const std::vector<FFMatrix>& actions,
                                       std::uint32_t dim, Rng& rng) {
  std::vector<ActionFactor> raw;
  if (actions.empty()) {
    // Module over the scalars only: dim copies of the unique simple.
    if (dim > 0) raw.push_back(ActionFactor{1, {}, dim});
    return raw;
  }
  chop_recursive(actions, dim, rng, raw);
  // Group isomorphic factors.
  std::vector<ActionFactor> grouped;
  for (auto& f : raw) {
    bool merged = false;
    for (auto& g : grouped) {
      if (g.dim != f.dim) continue;
      if (module_isomorphism(f.actions, g.actions, rng)) {
        g.multiplicity += 1;
        merged = true;
        break;
      }
    }
    if (!merged) grouped.push_back(std::move(f));
  }
  std::sort(grouped.begin(), grouped.end(),
            [](const ActionFactor& x, const ActionFactor& y) { return x.dim < y.dim; });
  return grouped;
}

bool actions_simple(const std::vector<FFMatrix>& actions, std::uint32_t dim, Rng& rng) {
  if (dim == 0) return false;
  if (actions.empty()) return dim == 1;
  if (dim == 1) return true;
  return find_submodule(actions, dim, rng).simple;
}

}  // namespace dbl
