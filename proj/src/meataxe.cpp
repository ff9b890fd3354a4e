#include "dbl/meataxe.hpp"

#include <algorithm>
#include <sstream>

#include "dbl/errors.hpp"

namespace dbl {

SimpleLibrary::SimpleLibrary(FiniteGroup group, FieldSpec field, Rng rng)
    : group_(std::move(group)), field_(field), rng_(rng) {
  // The trivial module is always present, labelled "1".
  GModule triv = GModule::trivial(group_, field_);
  simples_.push_back(SimpleEntry{"1", triv, fingerprint_of(triv)});
}

const SimpleEntry& SimpleLibrary::by_label(const std::string& label) const {
  for (const auto& s : simples_)
    if (s.label == label) return s;
  throw IncompleteLibrary("no simple labelled " + label);
}

std::vector<std::uint32_t> SimpleLibrary::fingerprint_of(const GModule& s) const {
  std::vector<std::uint32_t> fp;
  fp.push_back(s.dim());
  for (const auto& c : group_.classes()) {
    if (c.element_order % 2 == 0) continue;
    FFMatrix a = s.action_of_index(c.rep) + FFMatrix::identity(s.dim(), s.field());
    fp.push_back(s.dim() - rank(a));  // fixed space dimension
  }
  return fp;
}

std::string SimpleLibrary::register_simple(const GModule& s) {
  if (s.field() != field_) throw FieldMismatch("register_simple field");
  auto fp = fingerprint_of(s);
  for (const auto& e : simples_) {
    if (e.fingerprint != fp) continue;
    if (modules_isomorphic(e.module, s, rng_)) return e.label;
  }
  std::string label;
  if (s.dim() == 1 && fp == fingerprint_of(GModule::trivial(group_, field_))) {
    // Non-trivial 1-dim modules get suffixes; the trivial label is taken.
    bool is_trivial = true;
    for (const auto& a : s.gen_actions())
      if (!(a == FFMatrix::identity(1, field_))) is_trivial = false;
    if (is_trivial) label = "1";
  }
  if (label.empty()) {
    std::uint32_t count = 0;
    for (const auto& e : simples_)
      if (e.module.dim() == s.dim()) ++count;
    label = std::to_string(s.dim());
    label.push_back(static_cast<char>('a' + count));
  }
  simples_.push_back(SimpleEntry{label, s, fp});
  return simples_.back().label;
}

std::string SimpleLibrary::dual_label(const std::string& label) {
  const SimpleEntry& e = by_label(label);
  GModule d = e.module.dual();
  return register_simple(d);
}

void SimpleLibrary::upgrade_field(FieldSpec target) {
  std::vector<GModule> old;
  for (const auto& e : simples_)
    if (e.label != "1") old.push_back(e.module);
  simples_.clear();
  field_ = target;
  GModule triv = GModule::trivial(group_, field_);
  simples_.push_back(SimpleEntry{"1", triv, fingerprint_of(triv)});
  for (const auto& m : old) {
    GModule ext = m.extended(target);
    auto factors = chop_actions(ext.gen_actions(), ext.dim(), rng_);
    for (const auto& f : factors) {
      GModule fm(group_, field_, f.actions);
      register_simple(fm);
    }
  }
}

std::uint32_t endomorphism_dimension(const GModule& m) {
  return static_cast<std::uint32_t>(module_hom(m, m).size());
}

std::vector<FFMatrix> module_hom(const GModule& a, const GModule& b) {
  if (!a.group().same_underlying(b.group())) {
    if (a.group().order() != b.group().order())
      throw ShapeMismatch("module_hom group mismatch");
  }
  if (a.field() != b.field()) throw FieldMismatch("module_hom field");
  if (a.gen_actions().empty()) {
    // Trivial group: every linear map is a homomorphism.
    std::vector<FFMatrix> out;
    for (std::uint32_t i = 0; i < a.dim(); ++i)
      for (std::uint32_t j = 0; j < b.dim(); ++j) {
        FFMatrix e(a.dim(), b.dim(), a.field());
        e.set(i, j, 1);
        out.push_back(std::move(e));
      }
    return out;
  }
  return hom_space(a.gen_actions(), b.gen_actions());
}

std::map<std::string, std::uint32_t> meataxe_chop(const GModule& m, SimpleLibrary& lib) {
  if (!m.group().same_underlying(lib.group()))
    throw ShapeMismatch("chop group does not match the library");
  if (m.dim() > m.group().config().dim_cap)
    throw CapExceeded("module dimension beyond the configured cap");
  GModule work = m.field() == lib.field() ? m : m.extended(lib.field());
  if (work.field() != lib.field()) throw FieldMismatch("chop field");

  for (;;) {
    auto factors = chop_actions(work.gen_actions(), work.dim(), lib.rng_);
    // Absolute irreducibility scan: End(S) must be the scalars.
    bool extended = false;
    for (const auto& f : factors) {
      GModule fm(lib.group(), lib.field(), f.actions);
      std::uint32_t end_dim = endomorphism_dimension(fm);
      if (end_dim == 1) continue;
      std::uint8_t new_e = static_cast<std::uint8_t>(lib.field().e * end_dim);
      if (new_e != 2 && new_e != 4)
        throw FieldTooSmall("End(S) has dimension " + std::to_string(end_dim) +
                            " over GF(2^" + std::to_string(lib.field().e) + ")");
      lib.upgrade_field(FieldSpec::gf(new_e));
      work = work.extended(lib.field());
      extended = true;
      break;
    }
    if (extended) continue;
    std::map<std::string, std::uint32_t> out;
    for (const auto& f : factors) {
      GModule fm(lib.group(), lib.field(), f.actions);
      out[lib.register_simple(fm)] += f.multiplicity;
    }
    return out;
  }
}

FFMatrix radical_basis(const GModule& m, SimpleLibrary& lib) {
  // rad M = intersection of the kernels of all homomorphisms M -> S.
  GModule work = m.field() == lib.field() ? m : m.extended(lib.field());
  std::vector<FFMatrix> homs;
  for (const auto& s : lib.simples()) {
    auto h = module_hom(work, s.module);
    homs.insert(homs.end(), h.begin(), h.end());
  }
  if (homs.empty()) throw IncompleteLibrary("no covering simples; run chop first");
  std::uint32_t total = 0;
  for (const auto& h : homs) total += h.cols();
  FFMatrix stacked(work.dim(), total, work.field());
  std::uint32_t col = 0;
  for (const auto& h : homs) {
    for (std::uint32_t i = 0; i < h.rows(); ++i)
      for (std::uint32_t j = 0; j < h.cols(); ++j) {
        std::uint8_t v = h.get(i, j);
        if (v) stacked.set(i, col + j, v);
      }
    col += h.cols();
  }
  return left_nullspace(stacked);
}

std::map<std::string, std::uint32_t> semisimple_factors(const GModule& m,
                                                        SimpleLibrary& lib) {
  std::map<std::string, std::uint32_t> out;
  GModule work = m.field() == lib.field() ? m : m.extended(lib.field());
  std::uint32_t covered = 0;
  for (const auto& s : lib.simples()) {
    std::uint32_t mult = static_cast<std::uint32_t>(module_hom(work, s.module).size());
    if (mult) {
      out[s.label] = mult;
      covered += mult * s.module.dim();
    }
  }
  if (covered != work.dim())
    throw IncompleteLibrary("semisimple layer not covered by the library");
  return out;
}

namespace {

LoewySeries radical_layers(const GModule& m, SimpleLibrary& lib) {
  LoewySeries out;
  GModule work = m.field() == lib.field() ? m : m.extended(lib.field());
  if (work.dim() == 0) return out;
  meataxe_chop(work, lib);  // make sure every needed simple is registered
  work = m.field() == lib.field() ? m : m.extended(lib.field());

  // Chain of submodules in ambient coordinates.
  GModule cur = work;
  FFMatrix cur_basis = FFMatrix::identity(work.dim(), work.field());
  while (cur.dim() > 0) {
    FFMatrix rad = radical_basis(cur, lib);  // rows in cur coordinates
    GModule layer = cur.quotient(rref(rad).r);
    out.layers.push_back(semisimple_factors(layer, lib));
    if (rad.rows() == 0) break;
    cur = cur.submodule(rref(rad).r);
    cur_basis = rref(rad).r * cur_basis;
  }
  return out;
}

}  // namespace

std::string LoewySeries::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < layers.size(); ++i) {
    if (i) os << " | ";
    bool first = true;
    for (const auto& [label, mult] : layers[i]) {
      for (std::uint32_t k = 0; k < mult; ++k) {
        if (!first) os << (char)0xE2 << (char)0x8A << (char)0x95;  // direct sum sign
        os << label;
        first = false;
      }
    }
  }
  os << ']';
  return os.str();
}

LoewySeries loewy_series(const GModule& m, SimpleLibrary& lib) {
  return radical_layers(m, lib);
}

LoewySeries socle_series(const GModule& m, SimpleLibrary& lib) {
  // soc-series of M = radical series of M* with dualised factors,
  // reported bottom-first.
  GModule work = m.field() == lib.field() ? m : m.extended(lib.field());
  LoewySeries dual_series = radical_layers(work.dual(), lib);
  LoewySeries out;
  for (const auto& layer : dual_series.layers) {
    std::map<std::string, std::uint32_t> dualised;
    for (const auto& [label, mult] : layer) dualised[lib.dual_label(label)] += mult;
    out.layers.push_back(std::move(dualised));
  }
  return out;
}

bool is_simple_module(const GModule& m, Rng& rng) {
  return actions_simple(m.gen_actions(), m.dim(), rng);
}

bool modules_isomorphic(const GModule& a, const GModule& b, Rng& rng) {
  if (a.dim() != b.dim()) return false;
  if (a.gen_actions().empty()) return true;
  return module_isomorphism(a.gen_actions(), b.gen_actions(), rng).has_value();
}

}  // namespace dbl
