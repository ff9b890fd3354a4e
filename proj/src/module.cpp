#include "dbl/module.hpp"

#include <algorithm>
#include <sstream>

#include "dbl/errors.hpp"

namespace dbl {

GModule::GModule(FiniteGroup group, FieldSpec field, std::vector<FFMatrix> gen_actions,
                 std::string name)
    : group_(std::move(group)), field_(field), actions_(std::move(gen_actions)),
      name_(std::move(name)) {
  if (actions_.size() != group_.generators().size())
    throw ShapeMismatch("one action per group generator required");
  dim_ = actions_.empty() ? 0 : actions_[0].rows();
  for (const auto& a : actions_) {
    if (a.rows() != a.cols() || a.rows() != dim_) throw ShapeMismatch("action shape");
    if (a.field() != field_) throw FieldMismatch("action field");
  }
  memo_ = std::make_shared<std::map<std::uint32_t, FFMatrix>>();
}

FFMatrix GModule::action_of_index(std::uint32_t e) const {
  auto it = memo_->find(e);
  if (it != memo_->end()) return it->second;
  FFMatrix m = FFMatrix::identity(dim_, field_);
  for (auto gi : group_.word_for(e)) m = m * actions_[gi];
  memo_->emplace(e, m);
  return m;
}

FFMatrix GModule::action_of(const Permutation& g) const {
  return action_of_index(group_.index_of(g));
}

GModule GModule::extended(FieldSpec target) const {
  std::vector<FFMatrix> acts;
  for (const auto& a : actions_) acts.push_back(a.embedded(target));
  return GModule(group_, target, std::move(acts), name_);
}

GModule GModule::dual() const {
  std::vector<FFMatrix> acts;
  for (const auto& a : actions_) acts.push_back(a.inverse().transposed());
  return GModule(group_, field_, std::move(acts), name_ + "*");
}

GModule GModule::tensor(const GModule& other) const {
  if (!group_.same_underlying(other.group_)) throw ShapeMismatch("tensor group mismatch");
  if (field_ != other.field_) throw FieldMismatch("tensor field mismatch");
  std::vector<FFMatrix> acts;
  for (std::size_t i = 0; i < actions_.size(); ++i)
    acts.push_back(actions_[i].kron(other.actions_[i]));
  return GModule(group_, field_, std::move(acts), name_ + "(x)" + other.name_);
}

GModule GModule::submodule(const FFMatrix& basis, const std::string& name) const {
  SubspaceBasis span(basis);
  std::vector<FFMatrix> acts;
  for (const auto& a : actions_) {
    FFMatrix r(basis.rows(), basis.rows(), field_);
    for (std::uint32_t i = 0; i < basis.rows(); ++i) {
      auto c = span.coordinates(basis.row(i) * a);
      for (std::uint32_t j = 0; j < basis.rows(); ++j) r.set(i, j, c[j]);
    }
    acts.push_back(std::move(r));
  }
  return GModule(group_, field_, std::move(acts), name.empty() ? name_ + ".sub" : name);
}

GModule GModule::quotient(const FFMatrix& basis, const std::string& name) const {
  SubspaceBasis span(basis);
  std::vector<bool> pivot(dim_, false);
  for (std::uint32_t i = 0; i < basis.rows(); ++i)
    for (std::uint32_t j = 0; j < dim_; ++j)
      if (basis.get(i, j)) { pivot[j] = true; break; }
  std::vector<std::uint32_t> reps;
  for (std::uint32_t j = 0; j < dim_; ++j)
    if (!pivot[j]) reps.push_back(j);
  std::uint32_t qd = static_cast<std::uint32_t>(reps.size());
  std::vector<FFMatrix> acts;
  for (const auto& a : actions_) {
    FFMatrix r(qd, qd, field_);
    for (std::uint32_t i = 0; i < qd; ++i) {
      FFMatrix unit(1, dim_, field_);
      unit.set(0, reps[i], 1);
      FFMatrix img = span.reduce(unit * a);
      for (std::uint32_t j = 0; j < qd; ++j) r.set(i, j, img.get(0, reps[j]));
    }
    acts.push_back(std::move(r));
  }
  return GModule(group_, field_, std::move(acts), name.empty() ? name_ + ".quo" : name);
}

GModule GModule::restricted(const FiniteGroup& subgroup, const std::string& name) const {
  std::vector<FFMatrix> acts;
  for (const auto& g : subgroup.generators()) acts.push_back(action_of(g));
  return GModule(subgroup, field_, std::move(acts),
                 name.empty() ? name_ + "|" + subgroup.name() : name);
}

GModule GModule::trivial(const FiniteGroup& g, FieldSpec field) {
  std::vector<FFMatrix> acts(g.generators().size(), FFMatrix::identity(1, field));
  return GModule(g, field, std::move(acts), "k");
}

GModule GModule::regular(const FiniteGroup& g, FieldSpec field) {
  std::uint32_t n = static_cast<std::uint32_t>(g.order());
  std::vector<FFMatrix> acts;
  for (const auto& gen : g.generators()) {
    FFMatrix m(n, n, field);
    for (std::uint32_t i = 0; i < n; ++i)
      m.set(i, g.index_of(g.element(i) * gen), 1);
    acts.push_back(std::move(m));
  }
  return GModule(g, field, std::move(acts), "k" + g.name());
}

std::string GModule::to_fixture() const {
  std::ostringstream os;
  std::string spec = group_.spec() ? group_.spec()->to_string() : group_.name();
  os << spec << ' ' << int(field_.e) << ' ' << dim_ << '\n';
  for (const auto& a : actions_) os << a.to_text();
  return os.str();
}

GModule GModule::from_fixture(const std::string& text, Config config) {
  std::istringstream is(text);
  std::string spec;
  int e;
  std::uint32_t dim;
  if (!(is >> spec >> e >> dim)) throw ParseError("module fixture header");
  FiniteGroup g = FiniteGroup::construct(spec, config);
  std::string rest_line;
  std::getline(is, rest_line);
  std::vector<FFMatrix> acts;
  for (std::size_t i = 0; i < g.generators().size(); ++i) {
    std::string header;
    while (std::getline(is, header) && header.empty()) {}
    std::istringstream hs(header);
    std::uint32_t r, c;
    int ee;
    if (!(hs >> r >> c >> ee)) throw ParseError("matrix block header");
    std::ostringstream one;
    one << header << '\n';
    for (std::uint32_t row = 0; row < r; ++row) {
      std::string line;
      if (!std::getline(is, line)) throw ParseError("matrix block body");
      one << line << '\n';
    }
    acts.push_back(FFMatrix::from_text(one.str()));
  }
  return GModule(g, FieldSpec::gf(static_cast<std::uint8_t>(e)), std::move(acts), spec);
}

// ---------------------------------------------------------------------------

CosetSpace coset_space(const FiniteGroup& g, const FiniteGroup& h) {
  if (!g.has_subgroup(h)) throw NotASubgroup("coset space");
  const auto& elems = g.elements();
  std::size_t n = elems.size();
  CosetSpace cs;
  cs.coset_of.assign(n, UINT32_MAX);
  for (std::uint32_t x = 0; x < n; ++x) {
    if (cs.coset_of[x] != UINT32_MAX) continue;
    std::uint32_t cid = static_cast<std::uint32_t>(cs.coset_rep.size());
    cs.coset_rep.push_back(x);  // minimal member: iteration is ascending
    for (const auto& hh : h.elements()) {
      std::uint32_t y = g.index_of(hh * elems[x]);
      if (cs.coset_of[y] == UINT32_MAX) cs.coset_of[y] = cid;
    }
  }
  for (const auto& gen : g.generators()) {
    std::vector<std::uint32_t> act(cs.coset_rep.size());
    for (std::uint32_t c = 0; c < cs.coset_rep.size(); ++c)
      act[c] = cs.coset_of[g.index_of(elems[cs.coset_rep[c]] * gen)];
    cs.action.push_back(std::move(act));
  }
  return cs;
}

GModule perm_module(const FiniteGroup& g, const FiniteGroup& h, FieldSpec field) {
  CosetSpace cs = coset_space(g, h);
  std::uint32_t n = static_cast<std::uint32_t>(cs.coset_rep.size());
  std::vector<FFMatrix> acts;
  for (const auto& act : cs.action) {
    FFMatrix m(n, n, field);
    for (std::uint32_t c = 0; c < n; ++c) m.set(c, act[c], 1);
    acts.push_back(std::move(m));
  }
  return GModule(g, field, std::move(acts), "k[" + g.name() + "/" + h.name() + "]");
}

FiniteGroup borel_subgroup(const FiniteGroup& g) {
  if (!g.spec()) throw WrongFamily("no construction spec attached");
  GroupSpec spec = *g.spec();
  if (spec.family != GroupSpec::Family::PSL2 && spec.family != GroupSpec::Family::PGL2)
    throw WrongFamily("borel subgroup needs psl2 or pgl2");
  // Point stabiliser of infinity (domain point 0) inside the psl2 copy.
  std::vector<Permutation> inside;
  if (spec.family == GroupSpec::Family::PSL2) {
    for (const auto& x : g.elements())
      if (x[0] == 0) inside.push_back(x);
  } else {
    FiniteGroup h = FiniteGroup::construct("psl2:" + std::to_string(spec.param), g.config());
    for (const auto& x : h.elements())
      if (x[0] == 0) inside.push_back(x);
  }
  return g.subgroup_from_elements(inside, "B(" + std::to_string(spec.param) + ")");
}

}  // namespace dbl
