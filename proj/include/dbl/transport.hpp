#pragma once

#include <cstdint>
#include <vector>

#include "dbl/brauer.hpp"
#include "dbl/scott.hpp"

namespace dbl {

// Projectivity over the group algebra via the Sylow-2 norm rank: the
// restriction to a Sylow 2-subgroup P is free iff the norm element has
// rank dim/|P|, and in characteristic 2 freeness over P is equivalent
// to projectivity over the group.  The linear-system form of Higman's
// criterion is kept alongside for cross-checks at small dimensions.
bool is_projective(const GModule& m, const FiniteGroup& sylow2);
bool is_projective_higman(const GModule& m, const FiniteGroup& sylow2);

struct TransportResult {
  GModule image;                 // the whole S (x)_kG M as a right kG'-module
  GModule core;                  // non-projective part (zero dim if none)
  std::vector<std::uint32_t> projective_dims;
  bool core_indecomposable = false;
  bool core_simple = false;
  bool core_projective_free = true;  // always true by construction
};

// S (x)_{kG} M for a right kG-module S and a right k(G x G')-module M
// whose group was built with direct_product(G, G') (so the first
// generators of the product are (g_i, 1)).  The left G-action on M is
// g*m = m*(g^{-1}, 1).
GModule tensor_over_left_factor(const GModule& s, const GModule& m,
                                const FiniteGroup& left, const FiniteGroup& right);

// Transport of S across the bimodule with projective summands stripped
// and flags reported.
TransportResult transport_simple(const GModule& mbim, const GModule& s,
                                 const FiniteGroup& left, const FiniteGroup& right,
                                 Rng& rng);

}  // namespace dbl
