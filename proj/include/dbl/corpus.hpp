#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dbl/config.hpp"
#include "dbl/report.hpp"

namespace dbl {

struct CorpusEntry {
  std::string id;
  std::string spec;
  std::string expected_case;  // CASE1_NILPOTENT / CASE2_PGL / CASE3_PSL / "-"
  std::string gendec_case;    // "a".."f" or "-"
  std::uint32_t n = 0;        // defect exponent (2 for the Klein-four entry)
  bool extended = false;
};

std::vector<CorpusEntry> default_corpus();
// Line format: id spec expected_case gendec_case n [extended]
std::vector<CorpusEntry> parse_corpus_text(const std::string& text);

// Individual verifications shared by the corpus runner and the CLI.
void check_fusion(Report& report, const CorpusEntry& entry, const Config& config);
void check_blocks(Report& report, const CorpusEntry& entry, const Config& config);
void check_scott_structure(Report& report, const std::string& spec, const Config& config);
void check_gendec(Report& report, const CorpusEntry& entry, const Config& config);
void check_brauer(Report& report, const std::string& spec, const Config& config,
                  bool extended_enabled);
void check_transport(Report& report, const std::string& prod_spec, const Config& config,
                     bool extended_enabled);

void run_corpus(Report& report, const std::vector<CorpusEntry>& entries,
                const std::string& filter, bool extended_enabled, const Config& config);

}  // namespace dbl
