#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "dbl/config.hpp"
#include "dbl/gf2.hpp"
#include "dbl/poly2.hpp"

namespace dbl {

// A finite-dimensional associative unital algebra over GF(2^e), given by
// a coordinate space and a multiplication callback.  Elements are 1 x dim
// row vectors.  Consumers: endomorphism algebras of modules (coordinates
// over an echelonised basis of matrices) and orbital (Hecke) algebras of
// permutation modules (structure-constant multiplication).
struct AlgebraOps {
  FieldSpec field;
  std::uint32_t dim = 0;
  FFMatrix one;  // coordinates of the identity
  std::function<FFMatrix(const FFMatrix&, const FFMatrix&)> mul;
};

// Primitive orthogonal idempotents summing to the identity.
//
// Splitting uses the primary decomposition of minimal polynomials of
// sampled elements; when no sample splits a corner, the corner is
// certified local by exhibiting a nilpotent ideal J (found by the
// characteristic-polynomial-coefficient chain in characteristic 2) whose
// quotient is a field, which is verified directly: J is checked to be a
// nilpotent two-sided ideal and the quotient is checked to be generated
// by a single element with irreducible minimal polynomial of full
// degree.  The certificate is therefore sound independently of the
// radical search.
std::vector<FFMatrix> primitive_idempotents(const AlgebraOps& ops, Rng& rng);

// Convenience: true if the algebra is local (single primitive idempotent).
bool is_local_algebra(const AlgebraOps& ops, Rng& rng);

// Directed variant: recurse only into the side of each split on which
// the pairing functional is nonzero (the pairing must be linear and
// supported on exactly one primitive summand), certifying only that
// chain of corners.  Returns the isolated primitive idempotent.
FFMatrix isolate_idempotent(const AlgebraOps& ops,
                            const std::function<std::uint8_t(const FFMatrix&)>& pairing,
                            Rng& rng);

// If the algebra is local, the dimension of its residue field over the
// base field (1 means the algebra stays local over every extension);
// nullopt if the algebra is not local.
std::optional<std::uint32_t> local_residue_dimension(const AlgebraOps& ops, Rng& rng);

// Ops wrapper for a matrix algebra spanned by the given n x n matrices
// (must be closed under multiplication and contain the identity).
struct MatrixAlgebra {
  std::vector<FFMatrix> basis;
  AlgebraOps ops;

  static MatrixAlgebra from_span(const std::vector<FFMatrix>& spanning,
                                 const FFMatrix& identity);
  FFMatrix to_matrix(const FFMatrix& coords) const;
  FFMatrix coords_of(const FFMatrix& matrix) const;

 private:
  SubspaceBasis vec_basis_{0, FieldSpec::gf(1)};
};

}  // namespace dbl
