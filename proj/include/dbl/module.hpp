#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "dbl/gf2.hpp"
#include "dbl/group.hpp"

namespace dbl {

// Representation of a FiniteGroup over GF(2^e) by one invertible matrix
// per group generator.  Right-action convention throughout: vectors are
// rows and act as v * rho(g), so rho(gh) = rho(g) * rho(h).
class GModule {
 public:
  GModule() = default;
  GModule(FiniteGroup group, FieldSpec field, std::vector<FFMatrix> gen_actions,
          std::string name = "");

  const FiniteGroup& group() const { return group_; }
  FieldSpec field() const { return field_; }
  std::uint32_t dim() const { return dim_; }
  const std::vector<FFMatrix>& gen_actions() const { return actions_; }
  const std::string& name() const { return name_; }

  // rho of an arbitrary group element (by BFS word; memoised).
  FFMatrix action_of(const Permutation& g) const;
  FFMatrix action_of_index(std::uint32_t element_index) const;

  GModule extended(FieldSpec target) const;
  GModule dual() const;
  GModule tensor(const GModule& other) const;  // same group, diagonal action

  // Submodule on an echelonised invariant row space.
  GModule submodule(const FFMatrix& basis, const std::string& name = "") const;
  // Quotient by an invariant row space.
  GModule quotient(const FFMatrix& basis, const std::string& name = "") const;
  // Restriction to a subgroup (its generators must lie in group()).
  GModule restricted(const FiniteGroup& subgroup, const std::string& name = "") const;

  static GModule trivial(const FiniteGroup& g, FieldSpec field);
  static GModule regular(const FiniteGroup& g, FieldSpec field);

  std::string to_fixture() const;
  static GModule from_fixture(const std::string& text, Config config = Config::from_env());

 private:
  FiniteGroup group_;
  FieldSpec field_;
  std::uint32_t dim_ = 0;
  std::vector<FFMatrix> actions_;
  std::string name_;
  mutable std::shared_ptr<std::map<std::uint32_t, FFMatrix>> memo_;
};

// Permutation module on the right cosets H\..: basis indexed by cosets
// Hx in order of their minimal element; dim = [G:H].
struct CosetSpace {
  std::vector<std::uint32_t> coset_rep;    // element index of minimal member
  std::vector<std::uint32_t> coset_of;     // element index -> coset index
  std::vector<std::vector<std::uint32_t>> action;  // per generator: coset -> coset
};
CosetSpace coset_space(const FiniteGroup& g, const FiniteGroup& h);

GModule perm_module(const FiniteGroup& g, const FiniteGroup& h, FieldSpec field);

// The Borel subgroup: point stabiliser of infinity for psl2, and its
// image inside the psl2 copy for pgl2.
FiniteGroup borel_subgroup(const FiniteGroup& g);

}  // namespace dbl
