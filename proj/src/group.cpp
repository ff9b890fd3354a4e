#include "dbl/group.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "dbl/errors.hpp"
#include "dbl/pfield.hpp"

namespace dbl {

std::uint32_t two_part(std::uint64_t n) {
  std::uint32_t t = 1;
  while (n % 2 == 0) { n /= 2; t *= 2; }
  return t;
}

std::string to_string(FusionCaseLabel label) {
  switch (label) {
    case FusionCaseLabel::CASE1_NILPOTENT: return "CASE1_NILPOTENT";
    case FusionCaseLabel::CASE2_PGL: return "CASE2_PGL";
    case FusionCaseLabel::CASE3_PSL: return "CASE3_PSL";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// GroupSpec

namespace {

GroupSpec parse_spec_at(const std::string& s, std::size_t& i);

std::uint32_t parse_uint(const std::string& s, std::size_t& i) {
  if (i >= s.size() || !std::isdigit((unsigned char)s[i])) throw ParseError("expected number in '" + s + "'");
  std::uint64_t v = 0;
  while (i < s.size() && std::isdigit((unsigned char)s[i])) {
    v = v * 10 + (s[i++] - '0');
    if (v > 1'000'000'000ull) throw ParseError("number too large");
  }
  return static_cast<std::uint32_t>(v);
}

GroupSpec parse_spec_at(const std::string& s, std::size_t& i) {
  auto starts = [&](const char* prefix) {
    std::size_t len = std::string(prefix).size();
    return s.compare(i, len, prefix) == 0;
  };
  GroupSpec spec;
  if (starts("prod(")) {
    i += 5;
    spec.family = GroupSpec::Family::Product;
    spec.left = std::make_shared<GroupSpec>(parse_spec_at(s, i));
    if (i >= s.size() || s[i] != ',') throw ParseError("expected ',' in prod spec");
    ++i;
    spec.right = std::make_shared<GroupSpec>(parse_spec_at(s, i));
    if (i >= s.size() || s[i] != ')') throw ParseError("expected ')' in prod spec");
    ++i;
    return spec;
  }
  if (starts("psl2:")) { i += 5; spec.family = GroupSpec::Family::PSL2; }
  else if (starts("pgl2:")) { i += 5; spec.family = GroupSpec::Family::PGL2; }
  else if (starts("d:")) { i += 2; spec.family = GroupSpec::Family::Dihedral; }
  else if (starts("a:")) { i += 2; spec.family = GroupSpec::Family::Alt; }
  else if (starts("s:")) { i += 2; spec.family = GroupSpec::Family::Sym; }
  else throw ParseError("unknown group spec at '" + s.substr(i) + "'");
  spec.param = parse_uint(s, i);
  return spec;
}

}  // namespace

GroupSpec GroupSpec::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace((unsigned char)c)) s.push_back(c);
  std::size_t i = 0;
  GroupSpec spec = parse_spec_at(s, i);
  if (i != s.size()) throw ParseError("trailing characters in spec '" + text + "'");
  return spec;
}

std::string GroupSpec::to_string() const {
  switch (family) {
    case Family::Dihedral: return "d:" + std::to_string(param);
    case Family::PSL2: return "psl2:" + std::to_string(param);
    case Family::PGL2: return "pgl2:" + std::to_string(param);
    case Family::Alt: return "a:" + std::to_string(param);
    case Family::Sym: return "s:" + std::to_string(param);
    case Family::Product: return "prod(" + left->to_string() + "," + right->to_string() + ")";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// FiniteGroup internals

struct FiniteGroup::Detail {
  std::size_t domain = 0;
  std::vector<Permutation> gens;
  std::string name;
  Config config;
  std::optional<GroupSpec> spec;

  mutable std::mutex lock;

  // Element cache: sorted ascending.  bfs_parent/bfs_gen express each
  // element as parent * gen (indices into the sorted list).
  mutable bool have_elements = false;
  mutable std::vector<Permutation> elems;
  mutable std::vector<std::uint32_t> bfs_parent, bfs_gen;
  mutable std::uint32_t id_index = 0;

  // Class cache.
  mutable bool have_classes = false;
  mutable std::vector<ConjClass> cls;
  mutable std::vector<std::uint32_t> class_of;
  // Conjugation witness: element e was reached as w^g with w = wit_parent[e]
  // and g = gens[wit_gen[e]]; the class rep has wit_parent = itself.
  mutable std::vector<std::uint32_t> wit_parent, wit_gen;

  void ensure_elements() const;
  void ensure_classes() const;
  std::int64_t find(const Permutation& g) const;
};

void FiniteGroup::Detail::ensure_elements() const {
  std::lock_guard<std::mutex> guard(lock);
  if (have_elements) return;

  // Breadth-first closure over generator words.
  std::vector<Permutation> order;  // discovery order
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> by_hash;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> parent;  // (parent, gen) in discovery ids

  auto lookup = [&](const Permutation& p) -> std::int64_t {
    auto it = by_hash.find(p.hash());
    if (it == by_hash.end()) return -1;
    for (auto idx : it->second)
      if (order[idx] == p) return idx;
    return -1;
  };
  auto insert = [&](Permutation p, std::uint32_t par, std::uint32_t g) {
    by_hash[p.hash()].push_back(static_cast<std::uint32_t>(order.size()));
    parent.emplace_back(par, g);
    order.push_back(std::move(p));
  };

  insert(Permutation::identity(domain), 0, UINT32_MAX);
  std::size_t head = 0;
  while (head < order.size()) {
    Permutation cur = order[head];
    for (std::uint32_t gi = 0; gi < gens.size(); ++gi) {
      Permutation nxt = cur * gens[gi];
      if (lookup(nxt) < 0) {
        if (order.size() >= config.element_cap)
          throw CapExceeded("element enumeration exceeded cap of " +
                            std::to_string(config.element_cap));
        insert(std::move(nxt), static_cast<std::uint32_t>(head), gi);
      }
    }
    ++head;
  }

  // Re-index sorted.
  std::vector<std::uint32_t> perm(order.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(),
            [&](std::uint32_t a, std::uint32_t b) { return order[a] < order[b]; });
  std::vector<std::uint32_t> rank(order.size());
  for (std::uint32_t i = 0; i < perm.size(); ++i) rank[perm[i]] = i;

  elems.resize(order.size());
  bfs_parent.resize(order.size());
  bfs_gen.resize(order.size());
  for (std::uint32_t i = 0; i < perm.size(); ++i) {
    std::uint32_t disc = perm[i];
    elems[i] = order[disc];
    if (parent[disc].second == UINT32_MAX) {
      id_index = i;
      bfs_parent[i] = i;
      bfs_gen[i] = UINT32_MAX;
    } else {
      bfs_parent[i] = rank[parent[disc].first];
      bfs_gen[i] = parent[disc].second;
    }
  }
  have_elements = true;
}

std::int64_t FiniteGroup::Detail::find(const Permutation& g) const {
  auto it = std::lower_bound(elems.begin(), elems.end(), g);
  if (it == elems.end() || !(*it == g)) return -1;
  return it - elems.begin();
}

void FiniteGroup::Detail::ensure_classes() const {
  ensure_elements();
  std::lock_guard<std::mutex> guard(lock);
  if (have_classes) return;

  std::size_t n = elems.size();
  class_of.assign(n, UINT32_MAX);
  wit_parent.assign(n, 0);
  wit_gen.assign(n, UINT32_MAX);
  cls.clear();

  for (std::uint32_t start = 0; start < n; ++start) {
    if (class_of[start] != UINT32_MAX) continue;
    std::uint32_t cid = static_cast<std::uint32_t>(cls.size());
    std::vector<std::uint32_t> frontier{start};
    class_of[start] = cid;
    wit_parent[start] = start;
    std::uint32_t size = 0;
    while (!frontier.empty()) {
      std::uint32_t e = frontier.back();
      frontier.pop_back();
      ++size;
      for (std::uint32_t gi = 0; gi < gens.size(); ++gi) {
        Permutation conj = elems[e].conjugated_by(gens[gi]);
        std::int64_t idx = find(conj);
        if (idx < 0) throw InternalError("conjugate escaped element set");
        if (class_of[idx] == UINT32_MAX) {
          class_of[idx] = cid;
          wit_parent[idx] = e;
          wit_gen[idx] = gi;
          frontier.push_back(static_cast<std::uint32_t>(idx));
        }
      }
    }
    cls.push_back(ConjClass{start, size, elems[start].order()});
  }
  have_classes = true;
}

// ---------------------------------------------------------------------------
// FiniteGroup surface

FiniteGroup::FiniteGroup(std::size_t domain_size, std::vector<Permutation> generators,
                         std::string name, Config config) {
  d_ = std::make_shared<Detail>();
  d_->domain = domain_size;
  for (auto& g : generators)
    if (g.degree() != domain_size) throw ShapeMismatch("generator degree mismatch");
  d_->gens = std::move(generators);
  d_->name = std::move(name);
  d_->config = config;
}

std::size_t FiniteGroup::domain_size() const { return d_->domain; }
const std::vector<Permutation>& FiniteGroup::generators() const { return d_->gens; }
const std::string& FiniteGroup::name() const { return d_->name; }
const Config& FiniteGroup::config() const { return d_->config; }
const std::optional<GroupSpec>& FiniteGroup::spec() const { return d_->spec; }

std::uint64_t FiniteGroup::order() const {
  d_->ensure_elements();
  return d_->elems.size();
}

const std::vector<Permutation>& FiniteGroup::elements() const {
  d_->ensure_elements();
  return d_->elems;
}

std::uint32_t FiniteGroup::index_of(const Permutation& g) const {
  d_->ensure_elements();
  std::int64_t idx = d_->find(g);
  if (idx < 0) throw ElementNotInGroup(g.to_cycle_string());
  return static_cast<std::uint32_t>(idx);
}

bool FiniteGroup::contains(const Permutation& g) const {
  if (g.degree() != d_->domain) return false;
  d_->ensure_elements();
  return d_->find(g) >= 0;
}

const Permutation& FiniteGroup::element(std::uint32_t idx) const {
  d_->ensure_elements();
  return d_->elems[idx];
}

std::uint32_t FiniteGroup::identity_index() const {
  d_->ensure_elements();
  return d_->id_index;
}

std::vector<std::uint32_t> FiniteGroup::word_for(std::uint32_t e) const {
  d_->ensure_elements();
  std::vector<std::uint32_t> word;
  while (d_->bfs_gen[e] != UINT32_MAX) {
    word.push_back(d_->bfs_gen[e]);
    e = d_->bfs_parent[e];
  }
  std::reverse(word.begin(), word.end());
  return word;
}

const std::vector<ConjClass>& FiniteGroup::classes() const {
  d_->ensure_classes();
  return d_->cls;
}

std::uint32_t FiniteGroup::class_of(std::uint32_t e) const {
  d_->ensure_classes();
  return d_->class_of[e];
}

Permutation FiniteGroup::class_witness(std::uint32_t e) const {
  d_->ensure_classes();
  Permutation g = Permutation::identity(d_->domain);
  // Compose the conjugating generators from rep to e.
  std::vector<std::uint32_t> steps;
  std::uint32_t cur = e;
  while (d_->wit_gen[cur] != UINT32_MAX) {
    steps.push_back(d_->wit_gen[cur]);
    cur = d_->wit_parent[cur];
  }
  std::reverse(steps.begin(), steps.end());
  for (auto gi : steps) g = g * d_->gens[gi];
  return g;
}

std::uint64_t FiniteGroup::exponent() const {
  std::uint64_t e = 1;
  for (const auto& c : classes()) e = std::lcm(e, c.element_order);
  return e;
}

FiniteGroup FiniteGroup::subgroup(std::vector<Permutation> gens, const std::string& name) const {
  FiniteGroup h(d_->domain, std::move(gens), name, d_->config);
  return h;
}

FiniteGroup FiniteGroup::subgroup_from_elements(const std::vector<Permutation>& elems,
                                                const std::string& name) const {
  // Greedy small generating set: add elements that enlarge the closure.
  std::vector<Permutation> gens;
  std::uint64_t size = 1;
  for (const auto& e : elems) {
    if (e.is_identity()) continue;
    auto trial = gens;
    trial.push_back(e);
    FiniteGroup h(d_->domain, trial, "", d_->config);
    if (h.order() > size) {
      gens = std::move(trial);
      size = h.order();
      if (size == elems.size()) break;
    }
  }
  FiniteGroup h(d_->domain, gens, name, d_->config);
  if (h.order() != elems.size()) {
    // The input was not closed under products; fall back to the closure.
    throw InternalError("subgroup_from_elements: input set is not a subgroup");
  }
  return h;
}

bool FiniteGroup::has_subgroup(const FiniteGroup& h) const {
  if (h.domain_size() != domain_size()) return false;
  for (const auto& g : h.generators())
    if (!contains(g)) return false;
  return true;
}

FiniteGroup FiniteGroup::centralizer(const Permutation& g) const {
  if (!contains(g)) throw ElementNotInGroup(g.to_cycle_string());
  if (order() > d_->config.centralizer_cap)
    throw CapExceeded("centralizer filtering beyond configured bound");
  std::vector<Permutation> fix;
  for (const auto& x : elements())
    if (x * g == g * x) fix.push_back(x);
  return subgroup_from_elements(fix, "C(" + g.to_cycle_string() + ")");
}

FiniteGroup FiniteGroup::centralizer_of_subgroup(const FiniteGroup& s) const {
  if (order() > d_->config.centralizer_cap)
    throw CapExceeded("centralizer filtering beyond configured bound");
  std::vector<Permutation> fix;
  for (const auto& x : elements()) {
    bool ok = true;
    for (const auto& g : s.generators())
      if (!(x * g == g * x)) { ok = false; break; }
    if (ok) fix.push_back(x);
  }
  return subgroup_from_elements(fix, "C(" + s.name() + ")");
}

FiniteGroup FiniteGroup::normalizer(const FiniteGroup& s) const {
  if (!has_subgroup(s)) throw NotASubgroup("normalizer argument");
  if (order() > d_->config.centralizer_cap)
    throw CapExceeded("normalizer filtering beyond configured bound");
  std::vector<Permutation> keep;
  for (const auto& x : elements()) {
    bool ok = true;
    for (const auto& g : s.generators())
      if (!s.contains(g.conjugated_by(x))) { ok = false; break; }
    if (ok) keep.push_back(x);
  }
  return subgroup_from_elements(keep, "N(" + s.name() + ")");
}

FiniteGroup FiniteGroup::sylow2() const {
  std::uint64_t target = two_part(order());
  std::vector<Permutation> gens;
  std::uint64_t size = 1;
  while (size < target) {
    FiniteGroup s = subgroup(gens, "sylow2-partial");
    FiniteGroup n = gens.empty() ? *this : normalizer(s);
    bool grown = false;
    for (const auto& x : n.elements()) {
      std::uint64_t ord = x.order();
      if (ord < 2 || (ord & (ord - 1)) != 0) continue;
      if (s.contains(x)) continue;
      auto trial = gens;
      trial.push_back(x);
      FiniteGroup t = subgroup(trial, "");
      std::uint64_t tord = t.order();
      if ((tord & (tord - 1)) == 0 && tord > size) {
        gens = std::move(trial);
        size = tord;
        grown = true;
        break;
      }
    }
    if (!grown) throw InternalError("sylow2 growth stalled");
  }
  return subgroup(gens, "P");
}

// ---------------------------------------------------------------------------
// Construction of the named families

namespace {

FiniteGroup construct_dihedral(std::uint32_t order2n, Config config) {
  if (order2n < 4 || (order2n & (order2n - 1)) != 0)
    throw DegenerateSpec("dihedral parameter must be 2^n with n >= 2");
  if (order2n == 4) {
    // Klein four acting faithfully on two blocks of two points.
    Permutation a = Permutation::from_cycles(4, {{0, 1}});
    Permutation b = Permutation::from_cycles(4, {{2, 3}});
    return FiniteGroup(4, {a, b}, "d:4", config);
  }
  std::uint32_t m = order2n / 2;  // polygon vertices
  std::vector<std::uint16_t> rot(m);
  for (std::uint32_t i = 0; i < m; ++i) rot[i] = static_cast<std::uint16_t>((i + 1) % m);
  std::vector<std::uint16_t> ref(m);
  for (std::uint32_t i = 0; i < m; ++i) ref[i] = static_cast<std::uint16_t>((m - i) % m);
  return FiniteGroup(m, {Permutation(rot), Permutation(ref)},
                     "d:" + std::to_string(order2n), config);
}

// Projective line points: index 0 is (1:0) = infinity, index 1+c is the
// field element with code c.  A matrix [[a,b],[c,d]] acts on row vectors,
// (x:y) -> (xa+yc : xb+yd), which makes the map into permutations a
// homomorphism for left-to-right composition.
Permutation moebius(const PrimePowerField& f, std::uint32_t a, std::uint32_t b,
                    std::uint32_t c, std::uint32_t d) {
  std::uint32_t q = f.q();
  std::vector<std::uint16_t> img(q + 1);
  auto point = [&](std::uint32_t x, std::uint32_t y) -> std::uint16_t {
    if (y == 0) return 0;
    return static_cast<std::uint16_t>(1 + f.mul(x, f.inv(y)));
  };
  img[0] = point(a, b);
  for (std::uint32_t x = 0; x < q; ++x)
    img[1 + x] = point(f.add(f.mul(x, a), c), f.add(f.mul(x, b), d));
  return Permutation(img);
}

std::vector<Permutation> sl2_generators(const PrimePowerField& f) {
  std::vector<Permutation> gens;
  gens.push_back(moebius(f, 1, 1, 0, 1));                      // upper transvection
  if (f.degree() > 1) gens.push_back(moebius(f, 1, f.generator(), 0, 1));
  gens.push_back(moebius(f, 0, 1, f.neg(1), 0));               // Weyl element
  return gens;
}

FiniteGroup construct_psl2(std::uint32_t q, Config config) {
  if (q > 81) throw UnsupportedParameter("q > 81");
  PrimePowerField f(q);
  return FiniteGroup(q + 1, sl2_generators(f), "psl2:" + std::to_string(q), config);
}

FiniteGroup construct_pgl2(std::uint32_t q, Config config) {
  if (q > 81) throw UnsupportedParameter("q > 81");
  PrimePowerField f(q);
  auto gens = sl2_generators(f);
  gens.push_back(moebius(f, f.generator(), 0, 0, 1));  // non-square determinant
  return FiniteGroup(q + 1, gens, "pgl2:" + std::to_string(q), config);
}

FiniteGroup construct_alt(std::uint32_t m, Config config) {
  std::string name = "a:" + std::to_string(m);
  if (m <= 2) return FiniteGroup(std::max<std::uint32_t>(m, 1), {}, name, config);
  std::vector<Permutation> gens;
  gens.push_back(Permutation::from_cycles(m, {{0, 1, 2}}));
  if (m > 3) {
    std::vector<std::uint16_t> cyc;
    if (m % 2 == 1) {
      for (std::uint16_t i = 0; i < m; ++i) cyc.push_back(i);
    } else {
      for (std::uint16_t i = 1; i < m; ++i) cyc.push_back(i);
    }
    gens.push_back(Permutation::from_cycles(m, {cyc}));
  }
  return FiniteGroup(m, gens, name, config);
}

FiniteGroup construct_sym(std::uint32_t m, Config config) {
  std::string name = "s:" + std::to_string(m);
  if (m <= 1) return FiniteGroup(std::max<std::uint32_t>(m, 1), {}, name, config);
  std::vector<Permutation> gens;
  gens.push_back(Permutation::from_cycles(m, {{0, 1}}));
  if (m > 2) {
    std::vector<std::uint16_t> cyc;
    for (std::uint16_t i = 0; i < m; ++i) cyc.push_back(i);
    gens.push_back(Permutation::from_cycles(m, {cyc}));
  }
  return FiniteGroup(m, gens, name, config);
}

}  // namespace

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  std::size_t d1 = g.domain_size(), d2 = h.domain_size();
  std::vector<Permutation> gens;
  for (const auto& a : g.generators()) {
    std::vector<std::uint16_t> img(d1 + d2);
    for (std::size_t i = 0; i < d1; ++i) img[i] = a[i];
    for (std::size_t i = 0; i < d2; ++i) img[d1 + i] = static_cast<std::uint16_t>(d1 + i);
    gens.push_back(Permutation(std::move(img)));
  }
  for (const auto& b : h.generators()) {
    std::vector<std::uint16_t> img(d1 + d2);
    for (std::size_t i = 0; i < d1; ++i) img[i] = static_cast<std::uint16_t>(i);
    for (std::size_t i = 0; i < d2; ++i) img[d1 + i] = static_cast<std::uint16_t>(d1 + b[i]);
    gens.push_back(Permutation(std::move(img)));
  }
  return FiniteGroup(d1 + d2, gens, "prod(" + g.name() + "," + h.name() + ")", g.config());
}

FiniteGroup FiniteGroup::construct(const GroupSpec& spec, Config config) {
  FiniteGroup out;
  switch (spec.family) {
    case GroupSpec::Family::Dihedral: out = construct_dihedral(spec.param, config); break;
    case GroupSpec::Family::PSL2: out = construct_psl2(spec.param, config); break;
    case GroupSpec::Family::PGL2: out = construct_pgl2(spec.param, config); break;
    case GroupSpec::Family::Alt: out = construct_alt(spec.param, config); break;
    case GroupSpec::Family::Sym: out = construct_sym(spec.param, config); break;
    case GroupSpec::Family::Product: {
      FiniteGroup l = construct(*spec.left, config);
      FiniteGroup r = construct(*spec.right, config);
      out = direct_product(l, r);
      break;
    }
  }
  out.d_->spec = spec;
  return out;
}

FiniteGroup FiniteGroup::construct(const std::string& text, Config config) {
  return construct(GroupSpec::parse(text), config);
}

// ---------------------------------------------------------------------------
// Sylow frames and fusion

SylowDihedralFrame sylow2_dihedral(const FiniteGroup& g) {
  std::uint64_t ord = g.order();
  std::uint32_t p2 = two_part(ord);
  std::uint32_t n = 0;
  for (std::uint32_t v = p2; v > 1; v /= 2) ++n;
  if (p2 < 8)
    throw NotDihedralSylow("Sylow 2-subgroup has order " + std::to_string(p2));

  std::uint64_t s_order = p2 / 2;
  const auto& elems = g.elements();
  for (const auto& s : elems) {
    if (s.order() != s_order) continue;
    Permutation s_inv = s.inverse();
    for (const auto& t : elems) {
      if (t.order() != 2) continue;
      if (!(t * s * t == s_inv)) continue;
      // t outside <s>; with s of order >= 4 an inverting involution
      // cannot be a power of s.
      SylowDihedralFrame frame;
      frame.s = s;
      frame.t = t;
      frame.n = n;
      frame.z = s;
      for (std::uint64_t i = 1; i < s_order / 2; ++i) frame.z = frame.z * s;
      return frame;
    }
  }
  throw NotDihedralSylow("no inverting involution found (cyclic or quaternion Sylow)");
}

namespace {

std::vector<Permutation> frame_involutions(const SylowDihedralFrame& f) {
  std::vector<Permutation> inv;
  inv.push_back(f.z);
  Permutation cur = f.t;
  std::uint64_t m = 1ull << (f.n - 1);
  for (std::uint64_t i = 0; i < m; ++i) {
    inv.push_back(cur);
    cur = f.s * cur;
  }
  return inv;
}

FusionCase case_from_count(std::uint32_t count) {
  switch (count) {
    case 3: return FusionCase{FusionCaseLabel::CASE1_NILPOTENT, 3, 1};
    case 2: return FusionCase{FusionCaseLabel::CASE2_PGL, 2, 2};
    case 1: return FusionCase{FusionCaseLabel::CASE3_PSL, 1, 3};
    default:
      throw InconsistentCount("involution class count " + std::to_string(count));
  }
}

}  // namespace

FusionCase involution_fusion(const FiniteGroup& g, const SylowDihedralFrame& frame) {
  std::vector<std::uint32_t> class_ids;
  for (const auto& x : frame_involutions(frame))
    class_ids.push_back(g.class_of(g.index_of(x)));
  std::sort(class_ids.begin(), class_ids.end());
  class_ids.erase(std::unique(class_ids.begin(), class_ids.end()), class_ids.end());
  return case_from_count(static_cast<std::uint32_t>(class_ids.size()));
}

FusionCase involution_fusion(const FiniteGroup& g) {
  std::uint32_t p2 = two_part(g.order());
  if (p2 >= 8) return involution_fusion(g, sylow2_dihedral(g));
  if (p2 != 4) throw NotDihedralSylow("Sylow 2-subgroup of order " + std::to_string(p2));
  // Degenerate Klein-four Sylow: reject the cyclic C4 case, then count
  // fusion among the three involutions.
  FiniteGroup p = g.sylow2();
  for (const auto& x : p.elements())
    if (x.order() == 4) throw NotDihedralSylow("cyclic Sylow 2-subgroup");
  std::vector<std::uint32_t> class_ids;
  for (const auto& x : p.elements())
    if (x.order() == 2) class_ids.push_back(g.class_of(g.index_of(x)));
  std::sort(class_ids.begin(), class_ids.end());
  class_ids.erase(std::unique(class_ids.begin(), class_ids.end()), class_ids.end());
  return case_from_count(static_cast<std::uint32_t>(class_ids.size()));
}

FiniteGroup diagonal(const FiniteGroup& product, const SylowDihedralFrame& left,
                     const SylowDihedralFrame& right) {
  if (left.s.order() != right.s.order() || left.t.order() != right.t.order())
    throw FrameMismatch("frame orders differ");
  std::size_t d1 = left.s.degree(), d2 = right.s.degree();
  if (d1 + d2 != product.domain_size()) throw ShapeMismatch("diagonal domain mismatch");
  auto pair_up = [&](const Permutation& a, const Permutation& b) {
    std::vector<std::uint16_t> img(d1 + d2);
    for (std::size_t i = 0; i < d1; ++i) img[i] = a[i];
    for (std::size_t i = 0; i < d2; ++i) img[d1 + i] = static_cast<std::uint16_t>(d1 + b[i]);
    return Permutation(std::move(img));
  };
  return product.subgroup({pair_up(left.s, right.s), pair_up(left.t, right.t)}, "diag");
}

FiniteGroup diagonal_fusion_aligned(const FiniteGroup& product, const FiniteGroup& g,
                                    const SylowDihedralFrame& left, const FiniteGroup& h,
                                    const SylowDihedralFrame& right) {
  auto fused_to_z = [](const FiniteGroup& grp, const SylowDihedralFrame& f,
                       const Permutation& refl) {
    return grp.class_of(grp.index_of(refl)) == grp.class_of(grp.index_of(f.z));
  };
  bool left_t_fused = fused_to_z(g, left, left.t);
  bool right_t_fused = fused_to_z(h, right, right.t);
  SylowDihedralFrame aligned = right;
  if (left_t_fused != right_t_fused) {
    bool right_st_fused = fused_to_z(h, right, right.s * right.t);
    if (right_st_fused == right_t_fused)
      throw FrameMismatch("reflection fusion does not distinguish the classes");
    aligned.t = right.s * right.t;
  }
  return diagonal(product, left, aligned);
}

WitnessReport frobenius_sylow_witness(std::uint32_t r, std::uint32_t m, Config config) {
  WitnessReport rep;
  rep.r = r;
  rep.m = m;
  if (m % 2 == 0) throw UnsupportedParameter("exponent m must be odd");
  {
    std::uint32_t p = 0, k = 0;
    if (!PrimePowerField::is_odd_prime_power(r, &p, &k) || k != 1)
      throw UnsupportedParameter("r must be an odd prime");
  }
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= r;
    if (q > 400) throw UnsupportedParameter("r^m beyond the shipped field table");
  }
  rep.q = q;
  if (m == 1) {
    rep.trivial = true;
    rep.sylow_order_matches = true;
    rep.frobenius_centralises = true;
    rep.holds = true;
    return rep;
  }
  std::uint64_t big_order = q * (q - 1) * (q + 1) / 2;
  if (two_part(big_order) < 8)
    throw DefectTooSmall("|PSL2(" + std::to_string(q) + ")|_2 = " +
                         std::to_string(two_part(big_order)));

  PrimePowerField f(static_cast<std::uint32_t>(q));
  // Subfield copy of PSL2(r) on the projective line over GF(r^m): the
  // generator entries 0, 1, -1 lie in the prime field.
  std::vector<Permutation> gens;
  gens.push_back(moebius(f, 1, 1, 0, 1));
  gens.push_back(moebius(f, 0, 1, f.neg(1), 0));
  FiniteGroup h(q + 1, gens, "psl2:" + std::to_string(r) + "@" + std::to_string(q), config);
  SylowDihedralFrame frame = sylow2_dihedral(h);
  rep.sylow_order_matches = (1ull << frame.n) == two_part(big_order);

  std::vector<std::uint16_t> frob(q + 1);
  frob[0] = 0;
  for (std::uint32_t x = 0; x < q; ++x)
    frob[1 + x] = static_cast<std::uint16_t>(1 + f.frobenius(x));
  Permutation F(std::move(frob));
  rep.frobenius_centralises =
      frame.s.conjugated_by(F) == frame.s && frame.t.conjugated_by(F) == frame.t;
  rep.holds = rep.sylow_order_matches && rep.frobenius_centralises;
  return rep;
}

bool is_dihedral_shape(const FiniteGroup& g) {
  std::uint64_t ord = g.order();
  if (ord % 2 != 0) return false;
  std::uint64_t m = ord / 2;
  for (const auto& x : g.elements()) {
    if (x.order() != m) continue;
    Permutation x_inv = x.inverse();
    for (const auto& y : g.elements()) {
      if (y.order() != 2) continue;
      if (y * x * y == x_inv) {
        // <x,y> has order 2m = |G| when y is outside <x>.
        FiniteGroup h = g.subgroup({x, y}, "");
        if (h.order() == ord) return true;
      }
    }
  }
  // Degenerate small cases: D4 = Klein four.
  if (ord == 4) {
    bool all_inv = true;
    for (const auto& x : g.elements())
      if (x.order() > 2) all_inv = false;
    return all_inv;
  }
  return false;
}

}  // namespace dbl
