#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dbl/scott.hpp"

namespace dbl {

// Q-fixed points of the module, as echelonised rows.
FFMatrix fixed_points(const GModule& m, const FiniteGroup& q);

// Image of the relative trace from R to Q inside M^Q (R < Q).
FFMatrix relative_trace(const GModule& m, const FiniteGroup& r, const FiniteGroup& q);

// All subgroups of a small 2-group, as element-index sets of the parent.
std::vector<FiniteGroup> all_subgroups(const FiniteGroup& p);

struct BrauerQuotient {
  FFMatrix fixed;    // basis of M^Q in ambient coordinates
  FFMatrix traces;   // basis of the summed traces from the maximal subgroups
  std::uint32_t dim = 0;

  // Module structure on the quotient for any group normalising Q whose
  // generators act on the ambient module.
  GModule module_over(const GModule& m, const FiniteGroup& acting) const;
};

// V(Q) = M^Q / sum of relative traces from the maximal subgroups of Q.
BrauerQuotient brauer_quotient(const GModule& m, const FiniteGroup& q);

enum class BrauerVerdict { Zero, Indecomposable, Decomposable };
std::string to_string(BrauerVerdict v);

struct BrauerAuditEntry {
  std::uint32_t q_order = 0;
  std::string q_name;       // generators in cycle notation
  std::uint32_t dim = 0;    // dim V(Q)
  BrauerVerdict verdict = BrauerVerdict::Zero;
};

struct BrauerAudit {
  std::vector<BrauerAuditEntry> entries;
  bool all_indecomposable_or_zero() const;
};

// Audit of a 2-permutation module against every conjugacy class of
// subgroups of the given Sylow frame's group: V(Q) restricted to
// Q C_G(Q) must be indecomposable or zero.  `m` must be a submodule of
// a coset module of G (so generator actions exist for all of G).
// q1_certified: the caller certified indecomposability of m during its
// construction (Scott modules from the directed split), so the trivial
// subgroup entry reuses that verdict instead of recomputing End(m).
BrauerAudit brauer_audit(const GModule& m, const SylowDihedralFrame& frame, Rng& rng,
                         bool q1_certified = false);

// Representatives of the G-conjugacy classes of subgroups of P.
std::vector<FiniteGroup> subgroup_class_reps(const FiniteGroup& g, const FiniteGroup& p);

}  // namespace dbl
