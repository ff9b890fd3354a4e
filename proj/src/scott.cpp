#include "dbl/scott.hpp"

#include <algorithm>

#include "dbl/errors.hpp"

namespace dbl {

HeckeAlgebra::HeckeAlgebra(const FiniteGroup& g, const FiniteGroup& h, FieldSpec field)
    : field_(field), perm_(perm_module(g, h, field)) {
  CosetSpace cs = coset_space(g, h);
  n_ = static_cast<std::uint32_t>(cs.coset_rep.size());

  // Suborbits: orbits of H acting on the cosets by right multiplication.
  suborbit_of_.assign(n_, UINT32_MAX);
  std::vector<std::vector<std::uint32_t>> hacts;
  for (const auto& gen : h.generators()) {
    std::vector<std::uint32_t> act(n_);
    for (std::uint32_t c = 0; c < n_; ++c)
      act[c] = cs.coset_of[g.index_of(g.element(cs.coset_rep[c]) * gen)];
    hacts.push_back(std::move(act));
  }
  for (std::uint32_t c = 0; c < n_; ++c) {
    if (suborbit_of_[c] != UINT32_MAX) continue;
    std::uint32_t id = static_cast<std::uint32_t>(suborbits_.size());
    std::vector<std::uint32_t> orbit{c};
    suborbit_of_[c] = id;
    std::vector<std::uint32_t> frontier{c};
    while (!frontier.empty()) {
      std::uint32_t x = frontier.back();
      frontier.pop_back();
      for (const auto& act : hacts) {
        std::uint32_t y = act[x];
        if (suborbit_of_[y] == UINT32_MAX) {
          suborbit_of_[y] = id;
          orbit.push_back(y);
          frontier.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    suborbits_.push_back(std::move(orbit));
  }
  rank_ = static_cast<std::uint32_t>(suborbits_.size());

  // Transversal: the coset permutation induced by the representative of
  // each coset (base coset 0 is H itself, represented by the identity).
  transversal_.assign(n_, {});
  {
    // Generator coset actions once more, on all cosets.
    std::vector<std::vector<std::uint32_t>>& gacts = cs.action;
    for (std::uint32_t c = 0; c < n_; ++c) {
      std::vector<std::uint32_t> pi(n_);
      for (std::uint32_t i = 0; i < n_; ++i) pi[i] = i;
      for (auto gi : g.word_for(cs.coset_rep[c]))
        for (std::uint32_t i = 0; i < n_; ++i) pi[i] = gacts[gi][pi[i]];
      transversal_[c] = std::move(pi);
    }
  }

  // Structure constants from the base row of each product: the (i,j)
  // entry list holds the suborbits with odd incidence count.
  mult_table_.assign(static_cast<std::size_t>(rank_) * rank_, {});
  std::vector<std::uint32_t> counter(n_, 0);
  for (std::uint32_t i = 0; i < rank_; ++i) {
    for (std::uint32_t j = 0; j < rank_; ++j) {
      // Row 0 of B_i B_j: sum over w in suborbit_i of row w of B_j,
      // and row w of B_j = suborbit_j mapped through the transversal of w.
      std::vector<std::uint32_t> touched;
      for (std::uint32_t w : suborbits_[i]) {
        const auto& tw = transversal_[w];
        for (std::uint32_t y : suborbits_[j]) {
          std::uint32_t z = tw[y];
          if (counter[z]++ == 0) touched.push_back(z);
        }
      }
      auto& row = mult_table_[static_cast<std::size_t>(i) * rank_ + j];
      // The base row of an endomorphism is constant on suborbits, so a
      // single odd-count representative per suborbit carries the
      // coefficient; count them all to catch inconsistencies.
      std::vector<std::uint32_t> ones_in(rank_, 0);
      for (std::uint32_t z : touched) {
        if (counter[z] & 1u) ++ones_in[suborbit_of_[z]];
        counter[z] = 0;
      }
      for (std::uint32_t k = 0; k < rank_; ++k) {
        if (ones_in[k] == 0) continue;
        if (ones_in[k] != suborbits_[k].size())
          throw InternalError("orbital product row not suborbit-constant");
        row.emplace_back(k, 1);
      }
    }
  }

  ops_.field = field_;
  ops_.dim = rank_;
  ops_.one = FFMatrix(1, rank_, field_);
  ops_.one.set(0, suborbit_of_[0], 1);  // the diagonal orbital: suborbit of the base coset
  auto table = &mult_table_;
  std::uint32_t rank_copy = rank_;
  FieldSpec f = field_;
  ops_.mul = [table, rank_copy, f](const FFMatrix& a, const FFMatrix& b) {
    FFMatrix out(1, rank_copy, f);
    for (std::uint32_t i = 0; i < rank_copy; ++i) {
      std::uint8_t ca = a.get(0, i);
      if (!ca) continue;
      for (std::uint32_t j = 0; j < rank_copy; ++j) {
        std::uint8_t cb = b.get(0, j);
        if (!cb) continue;
        std::uint8_t c = f.mul(ca, cb);
        for (const auto& [k, coeff] : (*table)[static_cast<std::size_t>(i) * rank_copy + j])
          out.set(0, k, f.add(out.get(0, k), f.mul(c, coeff)));
      }
    }
    return out;
  };
}

FFMatrix HeckeAlgebra::element_matrix(const FFMatrix& coords) const {
  FFMatrix out(n_, n_, field_);
  for (std::uint32_t x = 0; x < n_; ++x) {
    const auto& tx = transversal_[x];
    for (std::uint32_t i = 0; i < rank_; ++i) {
      std::uint8_t c = coords.get(0, i);
      if (!c) continue;
      for (std::uint32_t y : suborbits_[i]) out.set(x, tx[y], field_.add(out.get(x, tx[y]), c));
    }
  }
  return out;
}

std::uint8_t HeckeAlgebra::augmentation_pairing(const FFMatrix& coords) const {
  std::uint8_t acc = 0;
  for (std::uint32_t i = 0; i < rank_; ++i) {
    std::uint8_t c = coords.get(0, i);
    if (!c) continue;
    if (suborbits_[i].size() % 2 == 1) acc = field_.add(acc, c);
  }
  return acc;
}

GModule scott_module(const FiniteGroup& g, const FiniteGroup& h, FieldSpec field, Rng& rng) {
  HeckeAlgebra hecke(g, h, field);
  FFMatrix eps = isolate_idempotent(
      hecke.ops(), [&hecke](const FFMatrix& c) { return hecke.augmentation_pairing(c); },
      rng);
  FFMatrix basis = row_basis(hecke.element_matrix(eps));
  GModule sc = hecke.perm().submodule(basis, "Sc(" + g.name() + "," + h.name() + ")");
  // Postcondition: the trivial module sits once in the top and once in
  // the socle.
  if (hom_to_trivial_dim(sc) != 1 || hom_from_trivial_dim(sc) != 1)
    throw InternalError("Scott summand postcondition failed");
  return sc;
}

GModule relative_syzygy(const FiniteGroup& g, const FiniteGroup& q, FieldSpec field,
                        Rng& rng) {
  GModule sc = scott_module(g, q, field, rng);
  // Kernel of the augmentation restricted to the Scott summand.  The
  // submodule basis rows live inside the permutation module, where the
  // augmentation is the all-ones functional; on the abstract module the
  // functional evaluates each basis row.
  // Recover the map to the trivial module via the hom space.
  auto homs = module_hom(sc, GModule::trivial(sc.group(), field));
  if (homs.size() != 1) throw InternalError("scott top not one dimensional");
  FFMatrix functional = homs[0];  // dim x 1
  FFMatrix kernel = left_nullspace(functional);
  return sc.submodule(kernel, "Omega_" + q.name() + "(k)");
}

std::vector<GModule> perm_module_summands(const FiniteGroup& g, const FiniteGroup& h,
                                          FieldSpec field, Rng& rng) {
  HeckeAlgebra hecke(g, h, field);
  auto idems = primitive_idempotents(hecke.ops(), rng);
  std::vector<GModule> out;
  for (const auto& e : idems) {
    FFMatrix basis = row_basis(hecke.element_matrix(e));
    out.push_back(hecke.perm().submodule(basis));
  }
  std::sort(out.begin(), out.end(),
            [](const GModule& a, const GModule& b) { return a.dim() < b.dim(); });
  return out;
}

std::vector<std::pair<GModule, std::uint32_t>> indecomposable_summands(const GModule& m,
                                                                       Rng& rng) {
  std::vector<std::pair<GModule, std::uint32_t>> out;
  if (m.dim() == 0) return out;
  auto homs = module_hom(m, m);
  MatrixAlgebra alg = MatrixAlgebra::from_span(homs, FFMatrix::identity(m.dim(), m.field()));
  auto idems = primitive_idempotents(alg.ops, rng);
  std::vector<GModule> pieces;
  for (const auto& e : idems) {
    FFMatrix basis = row_basis(alg.to_matrix(e));
    pieces.push_back(m.submodule(basis));
  }
  std::sort(pieces.begin(), pieces.end(),
            [](const GModule& a, const GModule& b) { return a.dim() < b.dim(); });
  for (auto& p : pieces) {
    bool merged = false;
    for (auto& [q, mult] : out) {
      if (q.dim() == p.dim() && modules_isomorphic(q, p, rng)) {
        ++mult;
        merged = true;
        break;
      }
    }
    if (!merged) out.emplace_back(std::move(p), 1);
  }
  return out;
}

bool is_indecomposable(const GModule& m, Rng& rng) {
  if (m.dim() == 0) return false;
  auto homs = module_hom(m, m);
  MatrixAlgebra alg = MatrixAlgebra::from_span(homs, FFMatrix::identity(m.dim(), m.field()));
  return is_local_algebra(alg.ops, rng);
}

bool is_absolutely_indecomposable(const GModule& m, Rng& rng) {
  GModule cur = m;
  for (;;) {
    if (cur.dim() == 0) return false;
    auto homs = module_hom(cur, cur);
    MatrixAlgebra alg =
        MatrixAlgebra::from_span(homs, FFMatrix::identity(cur.dim(), cur.field()));
    auto residue = local_residue_dimension(alg.ops, rng);
    if (!residue) return false;
    if (*residue == 1) return true;
    std::uint32_t target = cur.field().e * *residue;
    if (target != 2 && target != 4)
      throw FieldTooSmall("endomorphism residue field of degree " +
                          std::to_string(*residue) + " over GF(2^" +
                          std::to_string(cur.field().e) + ")");
    cur = cur.extended(FieldSpec::gf(static_cast<std::uint8_t>(target)));
  }
}

std::uint32_t hom_to_trivial_dim(const GModule& m) {
  return static_cast<std::uint32_t>(
      module_hom(m, GModule::trivial(m.group(), m.field())).size());
}

std::uint32_t hom_from_trivial_dim(const GModule& m) {
  return static_cast<std::uint32_t>(
      module_hom(GModule::trivial(m.group(), m.field()), m).size());
}

}  // namespace dbl
