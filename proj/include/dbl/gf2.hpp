#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dbl/errors.hpp"

namespace dbl {

// GF(2^e) for e in {1,2,4} with fixed moduli x, x^2+x+1, x^4+x+1 and the
// compatible embeddings GF(2) < GF(4) < GF(16).
struct FieldSpec {
  std::uint8_t e = 1;

  static FieldSpec gf(std::uint8_t e);
  std::uint32_t size() const { return 1u << e; }
  bool operator==(const FieldSpec& o) const { return e == o.e; }
  bool operator!=(const FieldSpec& o) const { return e != o.e; }

  std::uint8_t add(std::uint8_t a, std::uint8_t b) const { return a ^ b; }
  std::uint8_t mul(std::uint8_t a, std::uint8_t b) const;
  std::uint8_t inv(std::uint8_t a) const;
  // Image of a GF(2^from) element in this field; from must divide e.
  std::uint8_t embed_from(std::uint8_t value, std::uint8_t from) const;
};

// Dense matrix over GF(2^e).  e = 1 uses 64-column word packing with
// word-parallel row operations; e in {2,4} use a byte per entry with
// table multiplication.
class FFMatrix {
 public:
  FFMatrix() = default;
  FFMatrix(std::uint32_t rows, std::uint32_t cols, FieldSpec field);

  static FFMatrix identity(std::uint32_t n, FieldSpec field);

  std::uint32_t rows() const { return rows_; }
  std::uint32_t cols() const { return cols_; }
  FieldSpec field() const { return field_; }

  std::uint8_t get(std::uint32_t i, std::uint32_t j) const;
  void set(std::uint32_t i, std::uint32_t j, std::uint8_t v);

  FFMatrix operator+(const FFMatrix& o) const;
  FFMatrix operator*(const FFMatrix& o) const;
  bool operator==(const FFMatrix& o) const;
  bool operator!=(const FFMatrix& o) const { return !(*this == o); }

  FFMatrix transposed() const;
  FFMatrix kron(const FFMatrix& o) const;
  bool is_zero() const;

  // Row slicing and stacking (shapes must agree).
  FFMatrix row(std::uint32_t i) const;
  void set_row(std::uint32_t i, const FFMatrix& v);
  static FFMatrix vstack(const FFMatrix& top, const FFMatrix& bottom);

  void add_row_into(std::uint32_t src, std::uint32_t dst, std::uint8_t factor);
  void scale_row(std::uint32_t i, std::uint8_t factor);
  void swap_rows(std::uint32_t i, std::uint32_t j);

  // v * this for a single row vector v (1 x rows).
  FFMatrix apply_left(const FFMatrix& v) const;

  FFMatrix embedded(FieldSpec target) const;

  // Inverse of a square invertible matrix; throws on singular input.
  FFMatrix inverse() const;

  std::string to_text() const;
  static FFMatrix from_text(const std::string& text);

  std::uint64_t content_hash() const;

 private:
  std::uint32_t rows_ = 0, cols_ = 0;
  FieldSpec field_;
  std::uint32_t wpr_ = 0;            // words per row (e = 1)
  std::vector<std::uint64_t> w_;     // e = 1 storage
  std::vector<std::uint8_t> b_;      // e > 1 storage

  friend struct RrefOps;
};

struct RrefResult {
  FFMatrix r;
  std::vector<std::uint32_t> pivots;
  std::uint32_t rank = 0;
};

// Reduced row echelon form (pivot columns ascending, eliminated above
// and below, leading entries 1): equal row spaces give equal outputs.
RrefResult rref(const FFMatrix& a);
std::uint32_t rank(const FFMatrix& a);

// rref with the zero rows trimmed: a canonical basis of the row space.
FFMatrix row_basis(const FFMatrix& a);

// Rows form an echelonised basis of {x : a * x^T = 0}.
FFMatrix nullspace(const FFMatrix& a);
// Rows form an echelonised basis of {x : x * a = 0}.
FFMatrix left_nullspace(const FFMatrix& a);

// One solution x (as a 1 x cols row) of a * x^T = b^T, if any.
std::optional<FFMatrix> solve(const FFMatrix& a, const FFMatrix& b_row);

// Echelonised basis handling: rows of `basis` are kept in rref form.
class SubspaceBasis {
 public:
  SubspaceBasis(std::uint32_t ambient_dim, FieldSpec field);
  explicit SubspaceBasis(const FFMatrix& rows);

  // Reduce v against the basis; returns the residue (zero if contained).
  FFMatrix reduce(FFMatrix v) const;
  bool insert(FFMatrix v);  // true if the dimension grew
  bool contains(const FFMatrix& v) const;
  std::uint32_t dim() const { return static_cast<std::uint32_t>(rows_.size()); }
  std::uint32_t ambient() const { return ambient_; }
  FieldSpec field() const { return field_; }
  FFMatrix matrix() const;  // rows sorted by pivot: canonical

  // Coordinates of v in terms of the stored rows; throws if not contained.
  std::vector<std::uint8_t> coordinates(const FFMatrix& v) const;

 private:
  std::uint32_t ambient_;
  FieldSpec field_;
  std::vector<FFMatrix> rows_;
  std::vector<std::uint32_t> pivots_;
};

// Smallest subspace containing the given row vectors and stable under
// right multiplication by every action matrix.
FFMatrix spin(const FFMatrix& vectors, const std::vector<FFMatrix>& actions);

FFMatrix subspace_sum(const FFMatrix& u, const FFMatrix& w);
FFMatrix subspace_intersection(const FFMatrix& u, const FFMatrix& w);

}  // namespace dbl
