#pragma once

#include <cstdint>
#include <vector>

#include "dbl/algebra.hpp"
#include "dbl/meataxe.hpp"
#include "dbl/module.hpp"

namespace dbl {

// Endomorphism algebra of a transitive permutation module, with the
// orbital basis (suborbits of the point stabiliser) and combinatorially
// computed structure constants.  All idempotent hunting happens on the
// coordinate side; a full n x n matrix is only materialised for the
// idempotents that are actually needed.
class HeckeAlgebra {
 public:
  HeckeAlgebra(const FiniteGroup& g, const FiniteGroup& h, FieldSpec field);

  const AlgebraOps& ops() const { return ops_; }
  std::uint32_t points() const { return n_; }
  std::uint32_t rank() const { return rank_; }
  const GModule& perm() const { return perm_; }

  // n x n matrix of an algebra element.
  FFMatrix element_matrix(const FFMatrix& coords) const;
  // Augmentation pairing: nonzero iff the summand cut by the idempotent
  // maps onto the trivial module.
  std::uint8_t augmentation_pairing(const FFMatrix& coords) const;

 private:
  std::uint32_t n_ = 0, rank_ = 0;
  FieldSpec field_;
  GModule perm_;
  std::vector<std::uint32_t> suborbit_of_;            // coset -> suborbit id
  std::vector<std::vector<std::uint32_t>> suborbits_;
  std::vector<std::vector<std::uint32_t>> transversal_; // coset -> coset permutation of g_x
  std::vector<std::vector<std::pair<std::uint32_t, std::uint8_t>>> mult_table_;  // (i,j) -> sparse row
  AlgebraOps ops_;
};

// The unique indecomposable direct summand of k[H\G] with the trivial
// module in its top, returned as a submodule of the permutation module.
// Indecomposability is certified during construction.
GModule scott_module(const FiniteGroup& g, const FiniteGroup& h, FieldSpec field, Rng& rng);

// Kernel of the map Scott -> trivial (the relative syzygy of k).
GModule relative_syzygy(const FiniteGroup& g, const FiniteGroup& q, FieldSpec field,
                        Rng& rng);

// Full list of indecomposable direct summands of the permutation module
// on H\G (with repetitions), each as a submodule.
std::vector<GModule> perm_module_summands(const FiniteGroup& g, const FiniteGroup& h,
                                          FieldSpec field, Rng& rng);

// Indecomposable summands of an arbitrary module via its endomorphism
// algebra; entries are (summand, multiplicity).
std::vector<std::pair<GModule, std::uint32_t>> indecomposable_summands(const GModule& m,
                                                                       Rng& rng);

bool is_indecomposable(const GModule& m, Rng& rng);

// Indecomposability over the algebraic closure: extends the field when
// the endomorphism residue field is larger than the base field.
bool is_absolutely_indecomposable(const GModule& m, Rng& rng);

// dim Hom(m, trivial) and dim Hom(trivial, m).
std::uint32_t hom_to_trivial_dim(const GModule& m);
std::uint32_t hom_from_trivial_dim(const GModule& m);

}  // namespace dbl
