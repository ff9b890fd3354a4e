#include "dbl/transport.hpp"

#include <algorithm>

#include "dbl/errors.hpp"

namespace dbl {

bool is_projective(const GModule& m, const FiniteGroup& sylow2) {
  if (m.dim() == 0) return true;
  std::uint64_t p_order = sylow2.order();
  if (m.dim() % p_order != 0) return false;
  FFMatrix norm(m.dim(), m.dim(), m.field());
  for (const auto& x : sylow2.elements()) norm = norm + m.action_of(x);
  return static_cast<std::uint64_t>(rank(norm)) * p_order == m.dim();
}

bool is_projective_higman(const GModule& m, const FiniteGroup& sylow2) {
  // Solve sum_{g in P} rho(g) phi rho(g)^-1 = id for a linear phi.
  std::uint32_t n = m.dim();
  if (n == 0) return true;
  FieldSpec f = m.field();
  // Operator T on the n^2-dimensional space of matrices, built column
  // by column on the vectorised side; solvability of T(phi) = id is a
  // rank test of the augmented system.
  std::uint32_t nn = n * n;
  FFMatrix op(nn, nn, f);
  std::vector<std::pair<FFMatrix, FFMatrix>> pairs;  // (rho(g), rho(g)^-1)
  for (const auto& x : sylow2.elements()) {
    FFMatrix a = m.action_of(x);
    pairs.emplace_back(a, a.inverse());
  }
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) {
      FFMatrix e(n, n, f);
      e.set(i, j, 1);
      FFMatrix img(n, n, f);
      for (const auto& [a, ainv] : pairs) img = img + a * e * ainv;
      for (std::uint32_t r = 0; r < n; ++r)
        for (std::uint32_t c = 0; c < n; ++c) {
          std::uint8_t v = img.get(r, c);
          if (v) op.set(i * n + j, r * n + c, v);
        }
    }
  FFMatrix id_vec(1, nn, f);
  for (std::uint32_t i = 0; i < n; ++i) id_vec.set(0, i * n + i, 1);
  // phi with phi_vec * op = id_vec.
  return solve(op.transposed(), id_vec).has_value();
}

GModule tensor_over_left_factor(const GModule& s, const GModule& m,
                                const FiniteGroup& left, const FiniteGroup& right) {
  std::size_t nl = left.generators().size();
  std::size_t nr = right.generators().size();
  if (m.gen_actions().size() != nl + nr)
    throw SideMismatch("bimodule group is not the expected direct product");
  if (s.gen_actions().size() != nl) throw SideMismatch("left module generator count");
  if (s.field() != m.field()) throw FieldMismatch("tensor field");
  FieldSpec f = m.field();
  std::uint32_t ds = s.dim(), dm = m.dim();
  std::uint32_t n = ds * dm;

  // Relation subspace: for each left generator g,
  //   (s*g) (x) m - s (x) (m * rho((g,1))^-1).
  SubspaceBasis rel(n, f);
  FFMatrix idm = FFMatrix::identity(dm, f);
  FFMatrix ids = FFMatrix::identity(ds, f);
  for (std::size_t gi = 0; gi < nl; ++gi) {
    FFMatrix lambda = m.gen_actions()[gi].inverse();
    FFMatrix op = s.gen_actions()[gi].kron(idm) + ids.kron(lambda);
    for (std::uint32_t r = 0; r < n; ++r) rel.insert(op.row(r));
  }
  FFMatrix rel_basis = rel.matrix();

  // Quotient actions for the right factor.
  std::vector<FFMatrix> ambient;
  for (std::size_t gj = 0; gj < nr; ++gj)
    ambient.push_back(ids.kron(m.gen_actions()[nl + gj]));
  QuotientSpace q = quotient_actions(ambient, rel_basis);
  return GModule(right, f, q.actions, s.name() + "(x)" + m.name());
}

TransportResult transport_simple(const GModule& mbim, const GModule& s,
                                 const FiniteGroup& left, const FiniteGroup& right,
                                 Rng& rng) {
  TransportResult out;
  out.image = tensor_over_left_factor(s, mbim, left, right);
  FiniteGroup p2 = right.sylow2();
  auto pieces = indecomposable_summands(out.image, rng);
  std::vector<GModule> cores;
  for (const auto& [piece, mult] : pieces) {
    if (is_projective(piece, p2)) {
      for (std::uint32_t i = 0; i < mult; ++i)
        out.projective_dims.push_back(piece.dim());
    } else {
      for (std::uint32_t i = 0; i < mult; ++i) cores.push_back(piece);
    }
  }
  std::sort(out.projective_dims.begin(), out.projective_dims.end());
  if (cores.empty()) {
    out.core = GModule(right, mbim.field(), std::vector<FFMatrix>(
        right.generators().size(), FFMatrix(0, 0, mbim.field())), "0");
    out.core_indecomposable = false;
    out.core_simple = false;
    return out;
  }
  if (cores.size() > 1) {
    // Several non-projective summands: report the sum as the core.
    // (The stable-equivalence contract predicts exactly one.)
    out.core = cores[0];
    out.core_indecomposable = false;
    out.core_simple = false;
    return out;
  }
  out.core = cores[0];
  out.core_indecomposable = is_absolutely_indecomposable(out.core, rng);
  out.core_simple = is_simple_module(out.core, rng) &&
                    endomorphism_dimension(out.core) == 1;
  return out;
}

}  // namespace dbl
