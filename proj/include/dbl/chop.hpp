#pragma once

#include <cstdint>
#include <vector>

#include "dbl/config.hpp"
#include "dbl/gf2.hpp"
#include "dbl/poly2.hpp"

namespace dbl {

// Meataxe over an arbitrary list of square action matrices (a module
// over whatever algebra the actions generate).  Vectors are rows acting
// on the right.

struct ActionFactor {
  std::uint32_t dim = 0;
  std::vector<FFMatrix> actions;  // one per input action
  std::uint32_t multiplicity = 1;
};

// Complete list of composition factors with multiplicities.  Factors are
// grouped by isomorphism (certified by an explicit intertwiner).
std::vector<ActionFactor> chop_actions(const std::vector<FFMatrix>& actions,
                                       std::uint32_t dim, Rng& rng);

// Restriction of actions to a submodule given by echelonised basis rows.
std::vector<FFMatrix> restrict_actions(const std::vector<FFMatrix>& actions,
                                       const FFMatrix& basis);

// Induced actions on the quotient by the submodule spanned by basis.
struct QuotientSpace {
  FFMatrix sub_basis;            // echelonised
  std::vector<std::uint32_t> rep_cols;  // ambient coordinates of the representatives
  std::vector<FFMatrix> actions;

  // Project an ambient row vector to quotient coordinates.
  FFMatrix project(const FFMatrix& v) const;
};
QuotientSpace quotient_actions(const std::vector<FFMatrix>& actions, const FFMatrix& basis);

// Module isomorphism test for two action lists of equal length (actions
// must correspond positionwise); returns an invertible intertwiner T
// with T^{-1} A_i T = B_i when one exists.
std::optional<FFMatrix> module_isomorphism(const std::vector<FFMatrix>& a,
                                           const std::vector<FFMatrix>& b, Rng& rng);

// Basis of the space of matrices T with A_i T = T B_i for all i
// (homomorphisms from the A-module to the B-module in row convention).
std::vector<FFMatrix> hom_space(const std::vector<FFMatrix>& a,
                                const std::vector<FFMatrix>& b);

// Is the module given by the actions simple? (single chop factor check)
bool actions_simple(const std::vector<FFMatrix>& actions, std::uint32_t dim, Rng& rng);

}  // namespace dbl
