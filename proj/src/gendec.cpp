#include "dbl/gendec.hpp"

#include <algorithm>
#include <sstream>

#include "dbl/errors.hpp"

namespace dbl {

GenDecCase gendec_case_from_string(const std::string& s) {
  if (s.size() == 1) {
    switch (s[0]) {
      case 'a': return GenDecCase::A;
      case 'b': return GenDecCase::B;
      case 'c': return GenDecCase::C;
      case 'd': return GenDecCase::D;
      case 'e': return GenDecCase::E;
      case 'f': return GenDecCase::F;
    }
  }
  throw ParseError("unknown case '" + s + "'");
}

std::string to_string(GenDecCase c) {
  switch (c) {
    case GenDecCase::A: return "a";
    case GenDecCase::B: return "b";
    case GenDecCase::C: return "c";
    case GenDecCase::D: return "d";
    case GenDecCase::E: return "e";
    case GenDecCase::F: return "f";
  }
  return "?";
}

namespace {

bool odd_prime_power(std::uint32_t q) {
  if (q < 3 || q % 2 == 0) return false;
  std::uint32_t p = q;
  for (std::uint32_t d = 3; d * d <= q; d += 2)
    if (q % d == 0) { p = d; break; }
  while (q % p == 0) q /= p;
  return q == 1;
}

Cyclotomic real_part_power(std::uint32_t order, std::uint64_t e) {
  // zeta^e + zeta^-e
  return Cyclotomic::root_power(order, e % order) +
         Cyclotomic::root_power(order, (order - e % order) % order);
}

std::uint32_t v2_of(std::int64_t v) {
  std::uint32_t h = 0;
  while (v % 2 == 0) { v /= 2; ++h; }
  return h;
}

}  // namespace

GenDecMatrix gendec_build(GenDecCase kase, std::uint32_t n, std::uint32_t q) {
  if (n < 3) throw CaseParameterMismatch("defect exponent n must be at least 3");
  GenDecMatrix m;
  m.kase = kase;
  m.n = n;
  m.q = q;
  m.root_order = 1u << (n - 1);
  std::uint32_t N = m.root_order;
  std::uint32_t jmax = (1u << (n - 2)) - 1;  // height-one rows

  auto I = [&](std::int64_t v) { return Cyclotomic::integer(N, v); };
  auto sgn = [&](std::uint32_t e) { return (e % 2) ? -1 : 1; };  // (-1)^e

  switch (kase) {
    case GenDecCase::A:
      if (q != 0) throw CaseParameterMismatch("case a carries no q");
      break;
    case GenDecCase::B:
      if (n != 3) throw CaseParameterMismatch("case b requires n = 3");
      if (q != 0) throw CaseParameterMismatch("case b carries no q");
      break;
    case GenDecCase::C:
      if (!odd_prime_power(q) || two_part(q - 1) != (1u << n))
        throw CaseParameterMismatch("case c needs (q-1)_2 = 2^n");
      break;
    case GenDecCase::D:
      if (!odd_prime_power(q) || two_part(q + 1) != (1u << n))
        throw CaseParameterMismatch("case d needs (q+1)_2 = 2^n");
      break;
    case GenDecCase::E:
      if (!odd_prime_power(q) || 2 * two_part(q - 1) != (1u << n))
        throw CaseParameterMismatch("case e needs 2(q-1)_2 = 2^n");
      break;
    case GenDecCase::F:
      if (!odd_prime_power(q) || 2 * two_part(q + 1) != (1u << n))
        throw CaseParameterMismatch("case f needs 2(q+1)_2 = 2^n");
      break;
  }

  // Rows: the four height-zero characters in the printed order, then the
  // height-one family chi^(j).
  std::int64_t qq = q;
  std::vector<std::int64_t> hz;
  std::int64_t h1_degree = 0;
  switch (kase) {
    case GenDecCase::A: hz = {1, 1, 1, 1}; h1_degree = 2; break;
    case GenDecCase::B: hz = {1, 15, 21, 35}; h1_degree = 14; break;
    case GenDecCase::C: hz = {1, (qq + 1) / 2, (qq + 1) / 2, qq}; h1_degree = qq + 1; break;
    case GenDecCase::D: hz = {1, (qq - 1) / 2, (qq - 1) / 2, qq}; h1_degree = qq - 1; break;
    case GenDecCase::E: hz = {1, qq, qq, 1}; h1_degree = qq + 1; break;
    case GenDecCase::F: hz = {1, qq, qq, 1}; h1_degree = qq - 1; break;
  }
  m.row_labels = {"1_G", "chi_1", "chi_2", "chi_3"};
  m.row_degrees = hz;
  m.row_heights = {0, 0, 0, 0};
  for (std::uint32_t j = 1; j <= jmax; ++j) {
    m.row_labels.push_back("chi^(" + std::to_string(j) + ")");
    m.row_degrees.push_back(h1_degree);
    m.row_heights.push_back(v2_of(h1_degree));
  }

  auto add_column = [&](const std::string& label, bool ordinary, bool given,
                        std::uint32_t power, std::vector<Cyclotomic> entries) {
    GenDecColumn col;
    col.label = label;
    col.is_ordinary = ordinary;
    col.paper_given = given;
    col.section_power = power;
    col.entries = std::move(entries);
    m.columns.push_back(std::move(col));
  };
  auto col_entries = [&](std::vector<std::int64_t> hz_vals,
                         std::function<Cyclotomic(std::uint32_t)> h1) {
    std::vector<Cyclotomic> e;
    for (auto v : hz_vals) e.push_back(I(v));
    for (std::uint32_t j = 1; j <= jmax; ++j) e.push_back(h1(j));
    return e;
  };

  switch (kase) {
    case GenDecCase::A: {
      add_column("phi1", true, false, 0,
                 col_entries({1, 1, 1, 1}, [&](std::uint32_t) { return I(2); }));
      add_column("z", false, false, 0,
                 col_entries({1, 1, 1, 1}, [&](std::uint32_t j) { return I(2 * sgn(j)); }));
      for (std::uint32_t a = 1; a <= jmax; ++a)
        add_column("s^" + std::to_string(a), false, false, a,
                   col_entries({1, 1, sgn(a), sgn(a)},
                               [&](std::uint32_t j) { return real_part_power(N, j * a); }));
      add_column("t", false, false, 0,
                 col_entries({1, -1, 1, -1}, [&](std::uint32_t) { return I(0); }));
      add_column("st", false, false, 0,
                 col_entries({1, -1, -1, 1}, [&](std::uint32_t) { return I(0); }));
      break;
    }
    case GenDecCase::B: {
      add_column("phi1", true, true, 0, col_entries({1, 1, 1, 1}, [&](std::uint32_t) { return I(0); }));
      add_column("phi2", true, true, 0, col_entries({0, 1, 0, 1}, [&](std::uint32_t) { return I(1); }));
      add_column("phi3", true, true, 0, col_entries({0, 0, 1, 1}, [&](std::uint32_t) { return I(0); }));
      add_column("z", false, false, 0,
                 col_entries({1, -1, 1, -1}, [&](std::uint32_t) { return I(2); }));
      add_column("s^1", false, false, 1,
                 col_entries({1, -1, -1, 1}, [&](std::uint32_t) { return I(0); }));
      break;
    }
    case GenDecCase::C: {
      add_column("phi1", true, true, 0, col_entries({1, 1, 1, 1}, [&](std::uint32_t) { return I(2); }));
      add_column("phi2", true, true, 0, col_entries({0, 1, 0, 1}, [&](std::uint32_t) { return I(1); }));
      add_column("phi3", true, true, 0, col_entries({0, 0, 1, 1}, [&](std::uint32_t) { return I(1); }));
      add_column("z", false, false, 0,
                 col_entries({1, 1, 1, 1}, [&](std::uint32_t j) { return I(2 * sgn(j)); }));
      for (std::uint32_t a = 1; a <= jmax; ++a)
        add_column("s^" + std::to_string(a), false, false, a,
                   col_entries({1, sgn(a), sgn(a), 1},
                               [&](std::uint32_t j) { return real_part_power(N, j * a); }));
      break;
    }
    case GenDecCase::D: {
      add_column("phi1", true, true, 0, col_entries({1, 0, 0, 1}, [&](std::uint32_t) { return I(0); }));
      add_column("phi2", true, true, 0, col_entries({0, 1, 0, 1}, [&](std::uint32_t) { return I(1); }));
      add_column("phi3", true, true, 0, col_entries({0, 0, 1, 1}, [&](std::uint32_t) { return I(1); }));
      add_column("z", false, false, 0,
                 col_entries({1, -1, -1, -1}, [&](std::uint32_t j) { return I(2 * sgn(j + 1)); }));
      for (std::uint32_t a = 1; a <= jmax; ++a)
        add_column("s^" + std::to_string(a), false, false, a,
                   col_entries({1, sgn(a + 1), sgn(a + 1), -1}, [&](std::uint32_t j) {
                     return -real_part_power(N, j * a);
                   }));
      break;
    }
    case GenDecCase::E: {
      add_column("phi1", true, true, 0, col_entries({1, 1, 1, 1}, [&](std::uint32_t) { return I(2); }));
      add_column("phi2", true, true, 0, col_entries({0, 1, 1, 0}, [&](std::uint32_t) { return I(1); }));
      add_column("t", false, false, 0,
                 col_entries({1, -1, 1, -1}, [&](std::uint32_t) { return I(0); }));
      add_column("z", false, false, 0,
                 col_entries({1, 1, 1, 1}, [&](std::uint32_t j) { return I(2 * sgn(j)); }));
      for (std::uint32_t a = 1; a <= jmax; ++a)
        add_column("s^" + std::to_string(a), false, false, a,
                   col_entries({1, 1, sgn(a), sgn(a)},
                               [&](std::uint32_t j) { return real_part_power(N, j * a); }));
      break;
    }
    case GenDecCase::F: {
      add_column("phi1", true, true, 0, col_entries({1, 1, 1, 1}, [&](std::uint32_t) { return I(0); }));
      add_column("phi2", true, true, 0, col_entries({0, 1, 1, 0}, [&](std::uint32_t) { return I(1); }));
      add_column("t", false, false, 0,
                 col_entries({1, 1, -1, -1}, [&](std::uint32_t) { return I(0); }));
      add_column("z", false, false, 0,
                 col_entries({1, -1, -1, 1}, [&](std::uint32_t j) { return I(-2 * sgn(j)); }));
      for (std::uint32_t a = 1; a <= jmax; ++a)
        add_column("s^" + std::to_string(a), false, false, a,
                   col_entries({1, -1, sgn(a + 1), sgn(a)}, [&](std::uint32_t j) {
                     return -real_part_power(N, j * a);
                   }));
      break;
    }
  }
  return m;
}

std::string GenDecMatrix::to_text() const {
  std::ostringstream os;
  os << to_string(kase) << ' ' << n << ' ' << q << ' ' << root_order << '\n';
  os << "#";
  for (const auto& c : columns) os << ' ' << c.label << (c.paper_given ? "(paper)" : "");
  os << '\n';
  for (std::uint32_t r = 0; r < rows(); ++r) {
    os << row_labels[r] << ": ";
    for (std::uint32_t c = 0; c < columns.size(); ++c) {
      if (c) os << ", ";
      os << columns[c].entries[r].to_string();
    }
    os << '\n';
  }
  return os.str();
}

bool GenDecMatrix::cross_section_orthogonal() const {
  // Columns from distinct sections (ordinary block counts as the
  // 1-section) must be orthogonal under conjugation.
  auto section_id = [&](const GenDecColumn& c) -> std::string {
    if (c.is_ordinary) return "1";
    return c.label;
  };
  for (std::uint32_t a = 0; a < columns.size(); ++a)
    for (std::uint32_t b = 0; b < columns.size(); ++b) {
      if (section_id(columns[a]) == section_id(columns[b])) continue;
      Cyclotomic acc = Cyclotomic::integer(root_order, 0);
      for (std::uint32_t r = 0; r < rows(); ++r)
        acc = acc + columns[a].entries[r] * columns[b].entries[r].conj();
      if (!acc.is_zero()) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// Verification

namespace {

struct SectionColumns {
  // class index per non-ordinary paper column, aligned with matrix.columns
  std::vector<std::uint32_t> class_of_column;
  bool valid = false;
};

// Assign a conjugacy class of G to every section column of the printed
// matrix, for a given Galois twist c and reflection labelling.
SectionColumns assign_classes(const GenDecMatrix& paper, const CharacterTable& table,
                              const FiniteGroup& g, const SylowDihedralFrame& frame,
                              std::uint32_t twist, bool swap_reflections) {
  SectionColumns out;
  out.class_of_column.assign(paper.columns.size(), UINT32_MAX);
  std::uint32_t N = paper.root_order;

  auto class_of_perm = [&](const Permutation& x) {
    return g.class_of(g.index_of(x));
  };
  std::uint32_t zc = class_of_perm(frame.z);
  std::uint32_t tc = class_of_perm(frame.t);
  std::uint32_t stc = class_of_perm(frame.s * frame.t);
  if (swap_reflections) std::swap(tc, stc);

  for (std::uint32_t ci = 0; ci < paper.columns.size(); ++ci) {
    const GenDecColumn& col = paper.columns[ci];
    if (col.is_ordinary) continue;
    if (col.label == "z") {
      out.class_of_column[ci] = zc;
    } else if (col.label == "t") {
      // Only the reflection class not fused to z heads a column in the
      // two-class cases; in case (a) both columns appear.
      out.class_of_column[ci] = tc;
    } else if (col.label == "st") {
      out.class_of_column[ci] = stc;
    } else {
      // s^a with the twist s -> s^twist.
      std::uint64_t e = static_cast<std::uint64_t>(col.section_power) * twist % N;
      Permutation x = Permutation::identity(frame.s.degree());
      for (std::uint64_t i = 0; i < e; ++i) x = x * frame.s;
      out.class_of_column[ci] = class_of_perm(x);
    }
  }
  // The assigned classes must be pairwise distinct non-identity classes
  // (they represent distinct 2-sections).
  std::vector<std::uint32_t> used;
  for (std::uint32_t ci = 0; ci < paper.columns.size(); ++ci) {
    if (paper.columns[ci].is_ordinary) continue;
    std::uint32_t cls = out.class_of_column[ci];
    if (table.classes[cls].element_order == 1) return out;
    if (std::find(used.begin(), used.end(), cls) != used.end()) return out;
    used.push_back(cls);
  }
  out.valid = true;
  return out;
}

bool values_match(const Cyclotomic& computed, const Cyclotomic& paper_entry) {
  return computed == paper_entry;
}

// Backtracking assignment of paper rows to block rows.
bool match_rows(const GenDecMatrix& paper, const CharacterTable& table,
                const BlockData& block, const SectionColumns& cols,
                std::vector<std::uint32_t>& row_map) {
  std::uint32_t nrows = paper.rows();
  row_map.assign(nrows, UINT32_MAX);
  std::vector<bool> used(block.rows.size(), false);

  std::function<bool(std::uint32_t)> rec = [&](std::uint32_t r) -> bool {
    if (r == nrows) return true;
    for (std::uint32_t b = 0; b < block.rows.size(); ++b) {
      if (used[b]) continue;
      std::uint32_t row = block.rows[b];
      if (table.degree(row) != paper.row_degrees[r]) continue;
      if (block.heights[b] != paper.row_heights[r]) continue;
      bool ok = true;
      for (std::uint32_t ci = 0; ci < paper.columns.size() && ok; ++ci) {
        if (paper.columns[ci].is_ordinary) continue;
        const Cyclotomic& value = table.chars[row][cols.class_of_column[ci]];
        if (!values_match(value, paper.columns[ci].entries[r])) ok = false;
      }
      if (!ok) continue;
      used[b] = true;
      row_map[r] = row;
      if (rec(r + 1)) return true;
      used[b] = false;
      row_map[r] = UINT32_MAX;
    }
    return false;
  };
  return rec(0);
}

}  // namespace

GenDecVerification gendec_verify(const FiniteGroup& g, GenDecCase kase, std::uint32_t n,
                                 std::uint32_t q) {
  GenDecVerification v;
  if (two_part(g.order()) != (1ull << n))
    throw CaseParameterMismatch("group 2-part does not equal 2^n");
  SylowDihedralFrame frame = sylow2_dihedral(g);
  FusionCase fusion = involution_fusion(g, frame);
  FusionCaseLabel expected;
  switch (kase) {
    case GenDecCase::A: expected = FusionCaseLabel::CASE1_NILPOTENT; break;
    case GenDecCase::B:
    case GenDecCase::C:
    case GenDecCase::D: expected = FusionCaseLabel::CASE3_PSL; break;
    default: expected = FusionCaseLabel::CASE2_PGL; break;
  }
  if (fusion.label != expected) throw WrongFusionCase(to_string(fusion.label));

  GenDecMatrix paper = gendec_build(kase, n, q);
  CharacterTable table = dixon_table(g);
  BlockData block = principal_block(table);

  v.k_b0 = static_cast<std::uint32_t>(block.rows.size());
  for (auto h : block.heights)
    if (h == 0) ++v.height_zero_count;
  if (v.k_b0 != (1u << (n - 2)) + 3) {
    v.failure = "k(B0) = " + std::to_string(v.k_b0);
    return v;
  }
  if (v.height_zero_count != 4) {
    v.failure = "height zero count = " + std::to_string(v.height_zero_count);
    return v;
  }

  // Count the non-trivial 2-sections meeting the frame.
  {
    std::vector<std::uint32_t> classes;
    auto push = [&](const Permutation& x) {
      std::uint32_t c = g.class_of(g.index_of(x));
      if (table.classes[c].element_order > 1 &&
          std::find(classes.begin(), classes.end(), c) == classes.end())
        classes.push_back(c);
    };
    Permutation cur = frame.s;
    for (std::uint32_t a = 1; a < (1u << (n - 1)); ++a) {
      push(cur);
      cur = cur * frame.s;
    }
    push(frame.t);
    push(frame.s * frame.t);
    v.sections = static_cast<std::uint32_t>(classes.size());
  }

  std::uint32_t N = paper.root_order;
  for (bool swap : {false, true}) {
    if (swap && kase != GenDecCase::A && kase != GenDecCase::E && kase != GenDecCase::F)
      continue;
    for (std::uint32_t c = 1; c < N; c += 2) {
      if (c > N - c) continue;  // s^c and s^-c head the same classes
      SectionColumns cols = assign_classes(paper, table, g, frame, c, swap);
      if (!cols.valid) continue;
      std::vector<std::uint32_t> row_map;
      if (!match_rows(paper, table, block, cols, row_map)) continue;
      v.pass = true;
      v.galois_twist = c;
      v.reflections_swapped = swap;
      v.row_map = row_map;
      v.matrix = paper;
      v.orthogonality = v.matrix.cross_section_orthogonal();
      if (!v.orthogonality) {
        v.pass = false;
        v.failure = "cross-section orthogonality failed";
        return v;
      }
      DeltaSigns signs = delta_signs(v);
      v.signs = signs;
      return v;
    }
  }
  v.failure = "NoMatchingRelabelling";
  return v;
}

DeltaSigns delta_signs(const GenDecVerification& v) {
  if (!v.pass) throw WrongFusionCase("delta signs need a successful verification");
  const GenDecMatrix& m = v.matrix;
  std::uint32_t N = m.root_order;
  std::uint32_t amax = (1u << (m.n - 2));  // z sits at a = 2^{n-2}

  // Values of a height-zero row along the cyclic section, a = 1..2^{n-2}.
  auto s_values = [&](std::uint32_t row) {
    std::vector<Cyclotomic> vals(amax + 1, Cyclotomic::integer(N, 0));
    for (const auto& col : m.columns) {
      if (col.is_ordinary) continue;
      if (col.section_power >= 1) vals[col.section_power] = col.entries[row];
      if (col.label == "z") vals[amax] = col.entries[row];
    }
    return vals;
  };

  std::vector<std::uint32_t> hz_rows{1, 2, 3};
  std::vector<std::uint32_t> constant_rows, alternating_rows;
  std::vector<int> constant_value(4, 0), alternating_delta(4, 0);
  for (auto r : hz_rows) {
    auto vals = s_values(r);
    bool constant = true, alternating = true;
    for (std::uint32_t a = 1; a <= amax; ++a) {
      if (!(vals[a] == vals[1])) constant = false;
      // alternating with delta = value at a=1: vals[a] = delta*(-1)^(a+1)
      if (!vals[a].is_integer()) { alternating = false; constant = false; break; }
    }
    if (constant && vals[1].is_integer() &&
        (vals[1].integer_value() == 1 || vals[1].integer_value() == -1)) {
      std::int64_t d = vals[1].integer_value();
      // genuinely constant, not also alternating in a degenerate way:
      constant_rows.push_back(r);
      constant_value[r] = static_cast<int>(d);
    }
    if (vals[1].is_integer()) {
      std::int64_t d = vals[1].integer_value();
      bool alt = (d == 1 || d == -1);
      for (std::uint32_t a = 1; a <= amax && alt; ++a) {
        std::int64_t expect = (a % 2 == 1) ? d : -d;
        if (!vals[a].is_integer() || vals[a].integer_value() != expect) alt = false;
      }
      if (alt) {
        alternating_rows.push_back(r);
        alternating_delta[r] = static_cast<int>(d);
      }
    }
    (void)alternating;
  }
  // A row constant in a could in principle also satisfy the alternating
  // pattern only if 1 = -1, so the two lists are disjoint.
  if (constant_rows.size() != 1 || alternating_rows.size() != 2)
    throw InconsistentCount("sign patterns: " + std::to_string(constant_rows.size()) +
                            " constant, " + std::to_string(alternating_rows.size()) +
                            " alternating");
  DeltaSigns out;
  out.delta1 = constant_value[constant_rows[0]];
  std::uint32_t r2 = alternating_rows[0], r3 = alternating_rows[1];
  if (m.row_degrees[r3] > m.row_degrees[r2]) std::swap(r2, r3);
  out.delta2 = alternating_delta[r2];
  out.delta3 = alternating_delta[r3];
  return out;
}

}  // namespace dbl
