#include "dbl/corpus.hpp"

#include <algorithm>
#include <sstream>

#include "dbl/errors.hpp"
#include "dbl/gendec.hpp"
#include "dbl/meataxe.hpp"
#include "dbl/transport.hpp"

namespace dbl {

std::vector<CorpusEntry> default_corpus() {
  return {
      {"d8", "d:8", "CASE1_NILPOTENT", "a", 3, false},
      {"d16", "d:16", "CASE1_NILPOTENT", "a", 4, false},
      {"d32", "d:32", "CASE1_NILPOTENT", "a", 5, false},
      {"a7", "a:7", "CASE3_PSL", "b", 3, false},
      {"psl2_7", "psl2:7", "CASE3_PSL", "d", 3, false},
      {"psl2_9", "psl2:9", "CASE3_PSL", "c", 3, false},
      {"psl2_13", "psl2:13", "CASE3_PSL", "-", 2, false},
      {"psl2_17", "psl2:17", "CASE3_PSL", "c", 4, false},
      {"pgl2_3", "pgl2:3", "CASE2_PGL", "f", 3, false},
      {"pgl2_5", "pgl2:5", "CASE2_PGL", "e", 3, false},
      {"pgl2_7", "pgl2:7", "CASE2_PGL", "f", 4, false},
      {"pgl2_9", "pgl2:9", "CASE2_PGL", "e", 4, false},
      {"prod_pgl3_pgl3", "prod(pgl2:3,pgl2:3)", "CASE2_PGL", "-", 3, false},
      {"prod_pgl3_pgl5", "prod(pgl2:3,pgl2:5)", "CASE2_PGL", "-", 3, false},
      {"prod_psl7_psl9", "prod(psl2:7,psl2:9)", "CASE3_PSL", "-", 3, true},
  };
}

std::vector<CorpusEntry> parse_corpus_text(const std::string& text) {
  std::vector<CorpusEntry> out;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    CorpusEntry e;
    if (!(ls >> e.id >> e.spec >> e.expected_case >> e.gendec_case >> e.n))
      throw ParseError("corpus line '" + line + "'");
    std::string tail;
    if (ls >> tail) e.extended = (tail == "extended");
    out.push_back(std::move(e));
  }
  return out;
}

namespace {

struct ProductSetup {
  FiniteGroup left, right, product, diag;
  SylowDihedralFrame frame_left, frame_right;
  FusionCase fusion_left, fusion_right;
};

ProductSetup make_product_setup(const GroupSpec& spec, const Config& config) {
  if (!spec.is_product()) throw ParseError("expected a product spec");
  ProductSetup s{FiniteGroup::construct(*spec.left, config),
                 FiniteGroup::construct(*spec.right, config),
                 {}, {}, {}, {}, {}, {}};
  s.product = direct_product(s.left, s.right);
  s.frame_left = sylow2_dihedral(s.left);
  s.frame_right = sylow2_dihedral(s.right);
  s.fusion_left = involution_fusion(s.left, s.frame_left);
  s.fusion_right = involution_fusion(s.right, s.frame_right);
  if (s.fusion_left.label == s.fusion_right.label)
    s.diag = diagonal_fusion_aligned(s.product, s.left, s.frame_left, s.right, s.frame_right);
  else
    s.diag = diagonal(s.product, s.frame_left, s.frame_right);
  return s;
}

// The principal-block simples of a psl2/pgl2 group, realised from the
// Borel permutation module.
std::vector<GModule> borel_block_simples(const FiniteGroup& g, SimpleLibrary& lib) {
  GModule pm = perm_module(g, borel_subgroup(g), lib.field());
  meataxe_chop(pm, lib);
  std::vector<GModule> out;
  for (const auto& e : lib.simples()) out.push_back(e.module);
  return out;
}

std::string case_name(FusionCaseLabel l) { return to_string(l); }

}  // namespace

void check_fusion(Report& report, const CorpusEntry& entry, const Config& config) {
  FiniteGroup g = FiniteGroup::construct(entry.spec, config);
  if (GroupSpec::parse(entry.spec).is_product()) {
    report.skip(entry.id + "/fusion", "fusion classification applies to single groups");
    return;
  }
  FusionCase fc = involution_fusion(g);
  bool ok = case_name(fc.label) == entry.expected_case;
  report.add(entry.id + "/fusion", ok,
             case_name(fc.label) + " (" + std::to_string(fc.involution_class_count) +
                 " involution classes, predicted l = " + std::to_string(fc.predicted_l) + ")");
}

void check_blocks(Report& report, const CorpusEntry& entry, const Config& config) {
  GroupSpec spec = GroupSpec::parse(entry.spec);
  if (spec.is_product()) {
    report.skip(entry.id + "/blocks", "block combinatorics applies to single groups");
    return;
  }
  FiniteGroup g = FiniteGroup::construct(spec, config);
  CharacterTable table = dixon_table(g);
  BlockData block = principal_block(table);
  std::uint32_t expect_k = (1u << (entry.n - 2)) + 3;
  std::uint32_t h0 = 0;
  for (auto h : block.heights)
    if (h == 0) ++h0;
  bool ok = block.rows.size() == expect_k && h0 == 4;
  std::ostringstream details;
  details << "k(B0) = " << block.rows.size() << " (expected " << expect_k
          << "), height-zero = " << h0;
  report.add(entry.id + "/blocks", ok, details.str());

  Rng rng(config.seed);
  std::uint32_t l = principal_block_l(g, rng);
  FusionCase fc = involution_fusion(g);
  report.add(entry.id + "/blocks-l", l == fc.predicted_l,
             "l(B0) = " + std::to_string(l) + ", fusion predicts " +
                 std::to_string(fc.predicted_l));
}

void check_scott_structure(Report& report, const std::string& spec_text,
                           const Config& config) {
  GroupSpec spec = GroupSpec::parse(spec_text);
  FiniteGroup g = FiniteGroup::construct(spec, config);
  Rng rng(config.seed);
  if (spec.family == GroupSpec::Family::PSL2) {
    std::uint32_t q = spec.param;
    SimpleLibrary lib(g, FieldSpec::gf(1), Rng(config.seed));
    GModule sc = scott_module(g, borel_subgroup(g), FieldSpec::gf(1), rng);
    GModule sc_lib = sc.field() == lib.field() ? sc : sc.extended(lib.field());
    LoewySeries ls = loewy_series(sc, lib);
    // after a possible field upgrade inside loewy_series, redo over lib field
    ls = loewy_series(sc.field() == lib.field() ? sc : sc.extended(lib.field()), lib);
    bool ok = ls.layers.size() == 3;
    std::uint32_t half = (q - 1) / 2;
    if (ok) {
      ok = ls.layers[0].size() == 1 && ls.layers[0].count("1") == 1 &&
           ls.layers[0].at("1") == 1;
      ok = ok && ls.layers[2] == ls.layers[0];
      std::uint32_t mid_count = 0;
      bool mid_ok = true;
      for (const auto& [label, mult] : ls.layers[1]) {
        if (label == "1" || lib.by_label(label).module.dim() != half) mid_ok = false;
        mid_count += mult;
        // the middle layer is closed under duality
        if (ls.layers[1].count(lib.dual_label(label)) == 0) mid_ok = false;
      }
      ok = ok && mid_ok && mid_count == 2 && ls.layers[1].size() == 2;
    }
    // self-duality: socle series equals the loewy series
    LoewySeries socle = socle_series(sc.field() == lib.field() ? sc : sc.extended(lib.field()), lib);
    bool socle_ok = socle.layers.size() == 3 && socle.layers[0] == ls.layers[2] &&
                    socle.layers[1] == ls.layers[1] && socle.layers[2] == ls.layers[0];
    report.add(spec_text + "/scott-loewy", ok && socle_ok,
               "layers " + ls.to_string() + ", dim S = " + std::to_string(half));
    (void)sc_lib;
  } else if (spec.family == GroupSpec::Family::PGL2) {
    std::uint32_t q = spec.param;
    SimpleLibrary lib(g, FieldSpec::gf(1), Rng(config.seed));
    GModule sc = scott_module(g, borel_subgroup(g), FieldSpec::gf(1), rng);
    LoewySeries ls = loewy_series(sc, lib);
    ls = loewy_series(sc.field() == lib.field() ? sc : sc.extended(lib.field()), lib);
    bool ok = ls.layers.size() == 4 && sc.dim() == 2 * (q + 1);
    std::string t_label;
    if (ok) {
      for (const auto& [label, mult] : ls.layers[1])
        if (label != "1") t_label = label;
      ok = !t_label.empty() && lib.by_label(t_label).module.dim() == q - 1;
      std::map<std::string, std::uint32_t> expect_outer{{"1", 1}};
      std::map<std::string, std::uint32_t> expect_mid{{"1", 1}, {t_label, 1}};
      ok = ok && ls.layers[0] == expect_outer && ls.layers[3] == expect_outer &&
           ls.layers[1] == expect_mid && ls.layers[2] == expect_mid;
    }
    LoewySeries socle = socle_series(sc.field() == lib.field() ? sc : sc.extended(lib.field()), lib);
    bool socle_ok = socle.layers.size() == 4;
    for (std::uint32_t i = 0; socle_ok && i < 4; ++i)
      socle_ok = socle.layers[i] == ls.layers[3 - i];
    report.add(spec_text + "/scott-loewy", ok && socle_ok,
               "layers " + ls.to_string() + ", dim T = " + std::to_string(q - 1));
  } else {
    // Scott at the Sylow subgroup is the trivial module.
    FiniteGroup p = g.sylow2();
    GModule sc = scott_module(g, p, FieldSpec::gf(1), rng);
    report.add(spec_text + "/scott-sylow", sc.dim() == 1,
               "dim Sc(G, P) = " + std::to_string(sc.dim()));
  }
}

void check_gendec(Report& report, const CorpusEntry& entry, const Config& config) {
  if (entry.gendec_case == "-") {
    report.skip(entry.id + "/gendec", "no printed matrix for this entry");
    return;
  }
  GroupSpec spec = GroupSpec::parse(entry.spec);
  FiniteGroup g = FiniteGroup::construct(spec, config);
  GenDecCase kase = gendec_case_from_string(entry.gendec_case);
  std::uint32_t q = 0;
  if (kase == GenDecCase::C || kase == GenDecCase::D || kase == GenDecCase::E ||
      kase == GenDecCase::F)
    q = spec.param;
  GenDecVerification v = gendec_verify(g, kase, entry.n, q);
  std::ostringstream details;
  details << "case " << to_string(kase) << ", k(B0) = " << v.k_b0
          << ", sections = " << v.sections << ", twist = " << v.galois_twist;
  if (!v.pass) details << ", " << v.failure;
  bool ok = v.pass && v.orthogonality;
  if (ok && v.signs) {
    details << ", deltas = (" << v.signs->delta1 << "," << v.signs->delta2 << ","
            << v.signs->delta3 << ")";
    int e1 = 0, e2 = 0, e3 = 0;
    switch (kase) {
      case GenDecCase::C: e1 = 1; e2 = -1; e3 = -1; break;
      case GenDecCase::D: e1 = -1; e2 = 1; e3 = 1; break;
      case GenDecCase::E: e1 = 1; e2 = -1; e3 = -1; break;
      case GenDecCase::F: e1 = -1; e2 = 1; e3 = -1; break;
      default: break;
    }
    if (e1 != 0)
      ok = v.signs->delta1 == e1 && v.signs->delta2 == e2 && v.signs->delta3 == e3;
  }
  report.add(entry.id + "/gendec", ok, details.str());
}

void check_brauer(Report& report, const std::string& spec_text, const Config& config,
                  bool extended_enabled) {
  GroupSpec spec = GroupSpec::parse(spec_text);
  Rng rng(config.seed);
  if (spec.is_product()) {
    ProductSetup s = make_product_setup(spec, config);
    if (s.fusion_left.label != s.fusion_right.label) {
      report.skip(spec_text + "/brauer",
                  "FusionMismatch: " + to_string(s.fusion_left.label) + " vs " +
                      to_string(s.fusion_right.label));
      return;
    }
    std::uint64_t index = s.product.order() / s.diag.order();
    if (!extended_enabled && (index > 2000 || s.product.order() > 300000)) {
      report.skip(spec_text + "/brauer", "extended gate (dimension " +
                                             std::to_string(index) + ")");
      return;
    }
    GModule sc = scott_module(s.product, s.diag, FieldSpec::gf(1), rng);
    auto frame = sylow2_dihedral(s.diag);
    BrauerAudit audit = brauer_audit(sc, frame, rng, true);
    std::ostringstream details;
    details << "dim Sc = " << sc.dim() << ", entries:";
    for (const auto& e : audit.entries)
      details << " |Q|=" << e.q_order << ":" << to_string(e.verdict);
    report.add(spec_text + "/brauer", audit.all_indecomposable_or_zero(), details.str());
    return;
  }
  FiniteGroup g = FiniteGroup::construct(spec, config);
  if (two_part(g.order()) < 8) {
    report.skip(spec_text + "/brauer", "dihedral Sylow of order at least 8 required");
    return;
  }
  auto frame = sylow2_dihedral(g);
  FiniteGroup p = g.subgroup(frame.subgroup_generators(), "P");
  GModule sc = scott_module(g, p, FieldSpec::gf(1), rng);
  BrauerAudit audit = brauer_audit(sc, frame, rng, true);
  std::ostringstream details;
  details << "dim Sc = " << sc.dim() << ", entries:";
  for (const auto& e : audit.entries)
    details << " |Q|=" << e.q_order << ":" << to_string(e.verdict);
  report.add(spec_text + "/brauer", audit.all_indecomposable_or_zero(), details.str());
}

void check_transport(Report& report, const std::string& prod_spec, const Config& config,
                     bool extended_enabled) {
  GroupSpec spec = GroupSpec::parse(prod_spec);
  if (!spec.is_product()) {
    report.skip(prod_spec + "/transport", "transport applies to product specs");
    return;
  }
  ProductSetup s = make_product_setup(spec, config);
  if (s.fusion_left.label != s.fusion_right.label) {
    report.skip(prod_spec + "/transport",
                "FusionMismatch: " + to_string(s.fusion_left.label) + " vs " +
                    to_string(s.fusion_right.label));
    return;
  }
  std::uint64_t index = s.product.order() / s.diag.order();
  if (!extended_enabled && (index > 2000 || s.product.order() > 300000)) {
    report.skip(prod_spec + "/transport",
                "extended gate (dimension " + std::to_string(index) + ")");
    return;
  }
  Rng rng(config.seed);
  GModule m = scott_module(s.product, s.diag, FieldSpec::gf(1), rng);
  SimpleLibrary lib(s.left, FieldSpec::gf(1), Rng(config.seed));
  std::vector<GModule> simples = borel_block_simples(s.left, lib);
  GModule mbim = m.field() == lib.field() ? m : m.extended(lib.field());

  bool all_simple = true, all_indec = true, any_nonsimple = false;
  std::ostringstream details;
  for (const auto& simple : simples) {
    TransportResult tr = transport_simple(mbim, simple, s.left, s.right, rng);
    details << " [" << simple.dim() << " -> " << tr.core.dim()
            << (tr.core_simple ? " simple" : " non-simple") << "]";
    if (!tr.core_indecomposable) all_indec = false;
    if (!tr.core_simple) { all_simple = false; any_nonsimple = true; }
  }
  std::string verdict = all_simple ? "morita" : "stable-only";
  details << " verdict = " << verdict;
  // Failure only on a contract violation: a non-indecomposable image.
  report.add(prod_spec + "/transport", all_indec, "simples:" + details.str());
  (void)any_nonsimple;
}

void run_corpus(Report& report, const std::vector<CorpusEntry>& entries,
                const std::string& filter, bool extended_enabled, const Config& config) {
  std::vector<CorpusEntry> sorted = entries;
  std::sort(sorted.begin(), sorted.end(),
            [](const CorpusEntry& a, const CorpusEntry& b) { return a.id < b.id; });
  auto matches = [&](const std::string& tag) {
    return filter.empty() || tag.find(filter) != std::string::npos;
  };
  for (const auto& entry : sorted) {
    if (entry.extended && !extended_enabled) {
      if (matches(entry.id)) report.skip(entry.id, "extended gate");
      continue;
    }
    GroupSpec spec = GroupSpec::parse(entry.spec);
    bool product = spec.is_product();
    if (!product) {
      if (matches(entry.id + "/fusion")) check_fusion(report, entry, config);
      if (matches(entry.id + "/blocks")) check_blocks(report, entry, config);
      if (matches(entry.id + "/scott")) check_scott_structure(report, entry.spec, config);
      if (matches(entry.id + "/gendec")) check_gendec(report, entry, config);
      if (matches(entry.id + "/brauer") && two_part(FiniteGroup::construct(spec, config).order()) >= 8)
        check_brauer(report, entry.spec, config, extended_enabled);
    } else {
      if (matches(entry.id + "/brauer")) check_brauer(report, entry.spec, config, extended_enabled);
      if (matches(entry.id + "/transport"))
        check_transport(report, entry.spec, config, extended_enabled);
    }
  }
}

}  // namespace dbl
