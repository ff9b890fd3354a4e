#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dbl/chartable.hpp"

namespace dbl {

enum class GenDecCase { A, B, C, D, E, F };
GenDecCase gendec_case_from_string(const std::string& s);
std::string to_string(GenDecCase c);

struct GenDecColumn {
  std::string label;        // "phi1".. for the ordinary block; "z", "s^a", "t", "st"
  bool paper_given = false; // ordinary columns of cases b..f are quoted data
  std::uint32_t section_power = 0;  // a for s^a columns, 0 otherwise
  bool is_ordinary = false;
  std::vector<Cyclotomic> entries;
};

struct GenDecMatrix {
  GenDecCase kase = GenDecCase::A;
  std::uint32_t n = 3;
  std::uint32_t q = 0;       // 0 when the case carries no q
  std::uint32_t root_order = 4;  // N = 2^(n-1)
  std::vector<std::string> row_labels;
  std::vector<std::int64_t> row_degrees;
  std::vector<std::uint32_t> row_heights;
  std::vector<GenDecColumn> columns;

  std::uint32_t rows() const { return static_cast<std::uint32_t>(row_labels.size()); }
  std::string to_text() const;
  bool cross_section_orthogonal() const;
};

// The printed matrix of the given case; throws CaseParameterMismatch on
// inconsistent parameters (b needs n = 3, c..f constrain the 2-part of
// q -+ 1).
GenDecMatrix gendec_build(GenDecCase kase, std::uint32_t n, std::uint32_t q = 0);

struct DeltaSigns {
  int delta1 = 0, delta2 = 0, delta3 = 0;
};

struct GenDecVerification {
  bool pass = false;
  std::string failure;                // empty when pass
  std::uint32_t k_b0 = 0;
  std::uint32_t height_zero_count = 0;
  std::uint32_t sections = 0;         // non-trivial 2-sections found
  std::uint32_t galois_twist = 1;     // the matched c with s -> s^c
  bool reflections_swapped = false;
  std::vector<std::uint32_t> row_map; // paper row -> block row (indices into table rows)
  GenDecMatrix matrix;                // paper ordinary columns + computed section columns
  std::optional<DeltaSigns> signs;
  bool orthogonality = false;         // cross-section orthogonality of the verified matrix
};

// Match the character-table values of G at the non-trivial 2-sections
// against the printed matrix, searching over degree/height-respecting
// row bijections, the odd Galois twists of the cyclic section, and the
// two reflection labellings.
GenDecVerification gendec_verify(const FiniteGroup& g, GenDecCase kase, std::uint32_t n,
                                 std::uint32_t q = 0);

// Sign recovery from a successful verification.
DeltaSigns delta_signs(const GenDecVerification& v);

}  // namespace dbl
