#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dbl/config.hpp"
#include "dbl/perm.hpp"

namespace dbl {

// Parsed group description.  Grammar:
//   d:<2^n> | psl2:<q> | pgl2:<q> | a:<m> | s:<m> | prod(<spec>,<spec>)
struct GroupSpec {
  enum class Family { Dihedral, PSL2, PGL2, Alt, Sym, Product };
  Family family = Family::Dihedral;
  std::uint32_t param = 0;  // order 2^n for dihedral, q for psl2/pgl2, m for alt/sym
  std::shared_ptr<GroupSpec> left, right;  // product components

  static GroupSpec parse(const std::string& text);
  std::string to_string() const;
  bool is_product() const { return family == Family::Product; }
};

struct ConjClass {
  std::uint32_t rep;   // element index of the minimal member
  std::uint32_t size;
  std::uint64_t element_order;
};

class FiniteGroup;

// Frame <s,t | s^(2^(n-1)) = t^2 = 1, tst = s^-1> inside a group with
// dihedral Sylow 2-subgroup of order 2^n >= 8.  z = s^(2^(n-2)) spans
// the centre of <s,t>.
struct SylowDihedralFrame {
  Permutation s, t, z;
  std::uint32_t n = 0;
  std::vector<Permutation> subgroup_generators() const { return {s, t}; }
};

enum class FusionCaseLabel { CASE1_NILPOTENT, CASE2_PGL, CASE3_PSL };

struct FusionCase {
  FusionCaseLabel label;
  std::uint32_t involution_class_count;  // 3, 2 or 1
  std::uint32_t predicted_l;             // 1, 2 or 3
};

std::string to_string(FusionCaseLabel label);

struct WitnessReport {
  std::uint32_t r = 0, m = 0;
  std::uint64_t q = 0;
  bool trivial = false;                // m == 1, Frobenius is the identity
  bool sylow_order_matches = false;    // subfield Sylow 2-part equals the big 2-part
  bool frobenius_centralises = false;  // x -> x^r fixes the frame pointwise
  bool holds = false;
};

// Generator-presented permutation group with cached element set and
// conjugacy classes.  Values are immutable once built; the lazy caches
// fill under an internal lock, so instances may be shared between
// threads freely.
class FiniteGroup {
 public:
  FiniteGroup() = default;
  FiniteGroup(std::size_t domain_size, std::vector<Permutation> generators,
              std::string name = "", Config config = Config::from_env());

  static FiniteGroup construct(const GroupSpec& spec, Config config = Config::from_env());
  static FiniteGroup construct(const std::string& spec_text, Config config = Config::from_env());

  std::size_t domain_size() const;
  const std::vector<Permutation>& generators() const;
  const std::string& name() const;
  const Config& config() const;

  std::uint64_t order() const;
  const std::vector<Permutation>& elements() const;  // sorted ascending
  // Index into elements(); throws ElementNotInGroup when absent.
  std::uint32_t index_of(const Permutation& g) const;
  bool contains(const Permutation& g) const;
  const Permutation& element(std::uint32_t idx) const;
  std::uint32_t identity_index() const;

  // Expansion of an element as a product of generators (empty for 1).
  std::vector<std::uint32_t> word_for(std::uint32_t element_index) const;

  const std::vector<ConjClass>& classes() const;
  std::uint32_t class_of(std::uint32_t element_index) const;
  // Some g in G with rep(class)^g = element.
  Permutation class_witness(std::uint32_t element_index) const;
  std::uint64_t exponent() const;

  FiniteGroup subgroup(std::vector<Permutation> gens, const std::string& name = "") const;
  FiniteGroup subgroup_from_elements(const std::vector<Permutation>& elems,
                                     const std::string& name = "") const;
  bool has_subgroup(const FiniteGroup& h) const;

  FiniteGroup centralizer(const Permutation& g) const;
  FiniteGroup centralizer_of_subgroup(const FiniteGroup& s) const;
  FiniteGroup normalizer(const FiniteGroup& s) const;

  // A Sylow 2-subgroup, computed by normaliser growth.
  FiniteGroup sylow2() const;

  const std::optional<GroupSpec>& spec() const;

  bool same_underlying(const FiniteGroup& o) const { return d_ == o.d_; }

 private:
  struct Detail;
  std::shared_ptr<Detail> d_;
};

SylowDihedralFrame sylow2_dihedral(const FiniteGroup& g);

FusionCase involution_fusion(const FiniteGroup& g, const SylowDihedralFrame& frame);
// Variant that also accepts the degenerate Klein-four Sylow case.
FusionCase involution_fusion(const FiniteGroup& g);

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

// Diagonal subgroup of g x h generated by (s,s'),(t,t') for the two
// frames; throws FrameMismatch when the frame orders differ.
FiniteGroup diagonal(const FiniteGroup& product, const SylowDihedralFrame& left,
                     const SylowDihedralFrame& right);

// Diagonal with the frame identification corrected so that fusion
// matches: in the two-class (pgl-type) case the reflection fused to the
// central involution on the left is paired with the one fused on the
// right, replacing t' by s't' when needed.
FiniteGroup diagonal_fusion_aligned(const FiniteGroup& product, const FiniteGroup& g,
                                    const SylowDihedralFrame& left, const FiniteGroup& h,
                                    const SylowDihedralFrame& right);

WitnessReport frobenius_sylow_witness(std::uint32_t r, std::uint32_t m,
                                      Config config = Config::from_env());

// Order 2m with a cyclic subgroup of index 2 inverted by an involution.
bool is_dihedral_shape(const FiniteGroup& g);

std::uint32_t two_part(std::uint64_t n);

}  // namespace dbl
