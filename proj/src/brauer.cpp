#include "dbl/brauer.hpp"

#include <algorithm>
#include <map>

#include "dbl/errors.hpp"

namespace dbl {

std::string to_string(BrauerVerdict v) {
  switch (v) {
    case BrauerVerdict::Zero: return "zero";
    case BrauerVerdict::Indecomposable: return "indecomposable";
    case BrauerVerdict::Decomposable: return "decomposable";
  }
  return "?";
}

FFMatrix fixed_points(const GModule& m, const FiniteGroup& q) {
  FFMatrix basis = FFMatrix::identity(m.dim(), m.field());
  for (const auto& gen : q.generators()) {
    FFMatrix a = m.action_of(gen) + FFMatrix::identity(m.dim(), m.field());
    // {v in span(basis) : v * a = 0}
    FFMatrix eval = basis * a;
    FFMatrix keep = left_nullspace(eval);
    basis = row_basis(keep * basis);
  }
  return basis;
}

FFMatrix relative_trace(const GModule& m, const FiniteGroup& r, const FiniteGroup& q) {
  if (!q.has_subgroup(r) || r.order() >= q.order())
    throw NotASubgroup("relative trace needs R < Q");
  if ((q.order() & (q.order() - 1)) != 0) throw NotPSubgroup("Q must be a 2-group");
  // Coset representatives of R\Q.
  std::vector<std::uint32_t> reps;
  std::vector<bool> seen(q.order(), false);
  for (std::uint32_t i = 0; i < q.order(); ++i) {
    if (seen[i]) continue;
    reps.push_back(i);
    for (const auto& rr : r.elements()) seen[q.index_of(rr * q.element(i))] = true;
  }
  FFMatrix t(m.dim(), m.dim(), m.field());
  for (auto i : reps) t = t + m.action_of(q.element(i));
  FFMatrix fixed_r = fixed_points(m, r);
  return row_basis(fixed_r * t);
}

std::vector<FiniteGroup> all_subgroups(const FiniteGroup& p) {
  std::uint64_t n = p.order();
  if (n > 64) throw CapExceeded("subgroup enumeration limited to small 2-groups");
  // Closure sets, keyed by sorted element-index lists.
  std::map<std::vector<std::uint32_t>, std::vector<Permutation>> groups;
  auto closure_of = [&](std::vector<Permutation> gens) {
    FiniteGroup h = p.subgroup(gens);
    std::vector<std::uint32_t> key;
    for (const auto& e : h.elements()) key.push_back(p.index_of(e));
    std::sort(key.begin(), key.end());
    return std::make_pair(key, gens);
  };
  groups.insert(closure_of({}));
  for (;;) {
    std::size_t before = groups.size();
    std::vector<std::pair<std::vector<std::uint32_t>, std::vector<Permutation>>> fresh;
    for (const auto& [key, gens] : groups) {
      for (const auto& x : p.elements()) {
        if (x.is_identity()) continue;
        if (std::binary_search(key.begin(), key.end(), p.index_of(x))) continue;
        auto trial = gens;
        trial.push_back(x);
        fresh.push_back(closure_of(trial));
      }
    }
    for (auto& f : fresh) groups.insert(f);
    if (groups.size() == before) break;
  }
  std::vector<FiniteGroup> out;
  for (const auto& [key, gens] : groups)
    out.push_back(p.subgroup(gens, "Q" + std::to_string(key.size())));
  std::sort(out.begin(), out.end(), [](const FiniteGroup& a, const FiniteGroup& b) {
    return a.order() < b.order();
  });
  return out;
}

BrauerQuotient brauer_quotient(const GModule& m, const FiniteGroup& q) {
  if ((q.order() & (q.order() - 1)) != 0) throw NotPSubgroup("|Q| is not a power of 2");
  BrauerQuotient out;
  out.fixed = fixed_points(m, q);
  // Only the maximal subgroups contribute; traces are transitive.
  FFMatrix sum(0, m.dim(), m.field());
  for (const auto& r : all_subgroups(q)) {
    if (r.order() * 2 != q.order()) continue;
    FFMatrix tr = relative_trace(m, r, q);
    sum = sum.rows() ? subspace_sum(sum, tr) : tr;
  }
  if (q.order() == 1) sum = FFMatrix(0, m.dim(), m.field());
  out.traces = sum.rows() ? sum : FFMatrix(0, m.dim(), m.field());
  out.dim = out.fixed.rows() - out.traces.rows();
  return out;
}

GModule BrauerQuotient::module_over(const GModule& m, const FiniteGroup& acting) const {
  // Restrict to the fixed points, then factor out the traces.
  GModule onfixed = [&] {
    SubspaceBasis span(fixed);
    std::vector<FFMatrix> acts;
    for (const auto& gen : acting.generators()) {
      FFMatrix a = m.action_of(gen);
      FFMatrix r(fixed.rows(), fixed.rows(), m.field());
      for (std::uint32_t i = 0; i < fixed.rows(); ++i) {
        auto c = span.coordinates(fixed.row(i) * a);
        for (std::uint32_t j = 0; j < fixed.rows(); ++j) r.set(i, j, c[j]);
      }
      acts.push_back(std::move(r));
    }
    return GModule(acting, m.field(), std::move(acts), m.name() + "^Q");
  }();
  if (traces.rows() == 0) return onfixed;
  // Trace subspace in fixed coordinates.
  SubspaceBasis span(fixed);
  FFMatrix tr_in(traces.rows(), fixed.rows(), m.field());
  for (std::uint32_t i = 0; i < traces.rows(); ++i) {
    auto c = span.coordinates(traces.row(i));
    for (std::uint32_t j = 0; j < fixed.rows(); ++j) tr_in.set(i, j, c[j]);
  }
  return onfixed.quotient(row_basis(tr_in), m.name() + "(Q)");
}

std::vector<FiniteGroup> subgroup_class_reps(const FiniteGroup& g, const FiniteGroup& p) {
  std::vector<FiniteGroup> subs = all_subgroups(p);
  // Fingerprint: multiset of G-classes of the subgroup's elements.
  auto fingerprint = [&](const FiniteGroup& s) {
    std::vector<std::uint32_t> fp;
    for (const auto& e : s.elements()) fp.push_back(g.class_of(g.index_of(e)));
    std::sort(fp.begin(), fp.end());
    return fp;
  };
  std::vector<FiniteGroup> reps;
  std::vector<std::vector<std::uint32_t>> rep_fps;
  std::vector<std::vector<std::uint32_t>> rep_keys;
  auto key_of = [&](const FiniteGroup& s) {
    std::vector<std::uint32_t> key;
    for (const auto& e : s.elements()) key.push_back(g.index_of(e));
    std::sort(key.begin(), key.end());
    return key;
  };
  for (const auto& s : subs) {
    auto fp = fingerprint(s);
    auto skey = key_of(s);
    bool dup = false;
    for (std::size_t i = 0; i < reps.size() && !dup; ++i) {
      if (rep_fps[i] != fp) continue;
      // Transporter search: map a distinguished element, then sweep the
      // centraliser cosets.  Bounded and exact for our group sizes.
      const FiniteGroup& t = reps[i];
      if (s.order() != t.order()) continue;
      if (skey == rep_keys[i]) { dup = true; break; }
      // Choose x in s of the rarest class.
      std::uint32_t x_idx = g.index_of(s.elements()[1 % s.order()]);
      for (const auto& e : s.elements())
        if (!e.is_identity()) { x_idx = g.index_of(e); break; }
      std::uint32_t cls = g.class_of(x_idx);
      Permutation wx = g.class_witness(x_idx);  // rep^wx = x
      for (const auto& y : t.elements()) {
        if (y.is_identity()) continue;
        std::uint32_t y_idx = g.index_of(y);
        if (g.class_of(y_idx) != cls) continue;
        Permutation wy = g.class_witness(y_idx);  // rep^wy = y
        // x^(wx^-1 wy) = y; sweep c in C_G(y) testing s^(g0 c) = t.
        Permutation g0 = wx.inverse() * wy;
        FiniteGroup cy = g.centralizer(y);
        for (const auto& c : cy.elements()) {
          Permutation conj = g0 * c;
          bool maps = true;
          for (const auto& e : s.generators())
            if (!t.contains(e.conjugated_by(conj))) { maps = false; break; }
          if (maps) { dup = true; break; }
        }
        if (dup) break;
      }
    }
    if (!dup) {
      reps.push_back(s);
      rep_fps.push_back(fp);
      rep_keys.push_back(skey);
    }
  }
  return reps;
}

BrauerAudit brauer_audit(const GModule& m, const SylowDihedralFrame& frame, Rng& rng,
                         bool q1_certified) {
  const FiniteGroup& g = m.group();
  FiniteGroup p = g.subgroup(frame.subgroup_generators(), "P");
  BrauerAudit audit;
  for (const auto& q : subgroup_class_reps(g, p)) {
    BrauerAuditEntry entry;
    entry.q_order = static_cast<std::uint32_t>(q.order());
    std::string gens;
    for (const auto& e : q.generators()) {
      if (!gens.empty()) gens += ", ";
      gens += e.to_cycle_string();
    }
    entry.q_name = gens.empty() ? "1" : gens;
    if (q.order() == 1) {
      entry.dim = m.dim();
      if (q1_certified)
        entry.verdict = BrauerVerdict::Indecomposable;
      else
        entry.verdict = is_absolutely_indecomposable(m, rng)
                            ? BrauerVerdict::Indecomposable
                            : BrauerVerdict::Decomposable;
      audit.entries.push_back(entry);
      continue;
    }
    BrauerQuotient bq = brauer_quotient(m, q);
    entry.dim = bq.dim;
    if (bq.dim == 0) {
      entry.verdict = BrauerVerdict::Zero;
      audit.entries.push_back(entry);
      continue;
    }
    // Restrict to Q C_G(Q).
    FiniteGroup c = g.centralizer_of_subgroup(q);
    std::vector<Permutation> qc_gens = q.generators();
    for (const auto& e : c.generators()) qc_gens.push_back(e);
    FiniteGroup qc = g.subgroup(qc_gens, "QC");
    GModule v = bq.module_over(m, qc);
    entry.verdict = is_absolutely_indecomposable(v, rng) ? BrauerVerdict::Indecomposable
                                                         : BrauerVerdict::Decomposable;
    audit.entries.push_back(entry);
  }
  std::sort(audit.entries.begin(), audit.entries.end(),
            [](const BrauerAuditEntry& a, const BrauerAuditEntry& b) {
              if (a.q_order != b.q_order) return a.q_order < b.q_order;
              return a.q_name < b.q_name;
            });
  return audit;
}

bool BrauerAudit::all_indecomposable_or_zero() const {
  for (const auto& e : entries)
    if (e.verdict == BrauerVerdict::Decomposable) return false;
  return true;
}

}  // namespace dbl
