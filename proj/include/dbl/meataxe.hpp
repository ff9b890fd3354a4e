#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dbl/chop.hpp"
#include "dbl/module.hpp"

namespace dbl {

struct SimpleEntry {
  std::string label;
  GModule module;
  // Dimension of the fixed space of each odd-order class representative:
  // a cheap isomorphism-invariant fingerprint.
  std::vector<std::uint32_t> fingerprint;
};

// Registry of pairwise non-isomorphic absolutely irreducible modules of
// one group.  The working field is upgraded (GF(2) -> GF(4) -> GF(16))
// whenever a chop meets a factor whose endomorphism ring exceeds the
// scalars; registered entries are re-chopped over the new field.
class SimpleLibrary {
 public:
  SimpleLibrary(FiniteGroup group, FieldSpec field, Rng rng);

  const FiniteGroup& group() const { return group_; }
  FieldSpec field() const { return field_; }
  const std::vector<SimpleEntry>& simples() const { return simples_; }
  const SimpleEntry& by_label(const std::string& label) const;
  // Label of the dual of the given entry.
  std::string dual_label(const std::string& label);

  // Register a simple module (absolutely irreducible over field());
  // returns the label of the isomorphic entry, adding it if new.
  std::string register_simple(const GModule& s);

  Rng& rng() { return rng_; }

 private:
  FiniteGroup group_;
  FieldSpec field_;
  std::vector<SimpleEntry> simples_;
  Rng rng_;

  friend std::map<std::string, std::uint32_t> meataxe_chop(const GModule& m,
                                                           SimpleLibrary& lib);
  void upgrade_field(FieldSpec target);
  std::vector<std::uint32_t> fingerprint_of(const GModule& s) const;
};

// Composition factors with multiplicity, registering new simples.  The
// module must live over the library's group; if the working field is
// upgraded during the chop, the result is reported over the new field.
std::map<std::string, std::uint32_t> meataxe_chop(const GModule& m, SimpleLibrary& lib);

// dim_k End, computed from the homomorphism space.
std::uint32_t endomorphism_dimension(const GModule& m);

// All homomorphisms between modules of the same group.
std::vector<FFMatrix> module_hom(const GModule& a, const GModule& b);

struct LoewySeries {
  // layers[0] is the top for the radical series; for the socle series
  // layers[0] is the socle (bottom-first).
  std::vector<std::map<std::string, std::uint32_t>> layers;
  std::string to_string() const;
};

LoewySeries loewy_series(const GModule& m, SimpleLibrary& lib);
LoewySeries socle_series(const GModule& m, SimpleLibrary& lib);

// Radical submodule basis (intersection of kernels of all maps to simples).
FFMatrix radical_basis(const GModule& m, SimpleLibrary& lib);

// Semisimple factor multiplicities of an (assumed semisimple) module.
std::map<std::string, std::uint32_t> semisimple_factors(const GModule& m, SimpleLibrary& lib);

bool is_simple_module(const GModule& m, Rng& rng);
bool modules_isomorphic(const GModule& a, const GModule& b, Rng& rng);

}  // namespace dbl
