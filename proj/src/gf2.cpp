#include "dbl/gf2.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace dbl {

// ---------------------------------------------------------------------------
// Field tables

namespace {

struct SmallFieldTables {
  std::array<std::array<std::uint8_t, 16>, 16> mul{};
  std::array<std::uint8_t, 16> inv{};

  explicit SmallFieldTables(std::uint8_t e) {
    std::uint32_t size = 1u << e;
    std::uint32_t modulus = (e == 2) ? 0b111u : 0b10011u;  // x^2+x+1, x^4+x+1
    for (std::uint32_t a = 0; a < size; ++a) {
      for (std::uint32_t b = 0; b < size; ++b) {
        std::uint32_t prod = 0, x = a;
        for (std::uint32_t bb = b; bb; bb >>= 1, x <<= 1)
          if (bb & 1) prod ^= x;
        for (int bit = 2 * e - 2; bit >= static_cast<int>(e); --bit)
          if (prod & (1u << bit)) prod ^= modulus << (bit - e);
        mul[a][b] = static_cast<std::uint8_t>(prod);
      }
    }
    for (std::uint32_t a = 1; a < size; ++a)
      for (std::uint32_t b = 1; b < size; ++b)
        if (mul[a][b] == 1) inv[a] = static_cast<std::uint8_t>(b);
  }
};

const SmallFieldTables& tables4() { static SmallFieldTables t(2); return t; }
const SmallFieldTables& tables16() { static SmallFieldTables t(4); return t; }

}  // namespace

FieldSpec FieldSpec::gf(std::uint8_t e) {
  if (e != 1 && e != 2 && e != 4) throw FieldMismatch("unsupported extension degree");
  FieldSpec f;
  f.e = e;
  return f;
}

std::uint8_t FieldSpec::mul(std::uint8_t a, std::uint8_t b) const {
  if (e == 1) return a & b & 1;
  if (e == 2) return tables4().mul[a][b];
  return tables16().mul[a][b];
}

std::uint8_t FieldSpec::inv(std::uint8_t a) const {
  if (a == 0) throw InternalError("inverse of zero field element");
  if (e == 1) return 1;
  if (e == 2) return tables4().inv[a];
  return tables16().inv[a];
}

std::uint8_t FieldSpec::embed_from(std::uint8_t value, std::uint8_t from) const {
  if (from == e) return value;
  if (from == 1) return value ? 1 : 0;
  if (from == 2 && e == 4) {
    // GF(4) = {0, 1, w, w+1}; w maps to the order-3 element g^5 = 6 in
    // GF(16) with generator g = x (code 2), and w+1 = w^2 -> 6^2 = 7.
    static const std::uint8_t img[4] = {0, 1, 6, 7};
    return img[value];
  }
  throw FieldMismatch("no embedding GF(2^" + std::to_string(from) + ") -> GF(2^" +
                      std::to_string(e) + ")");
}

// ---------------------------------------------------------------------------
// FFMatrix

FFMatrix::FFMatrix(std::uint32_t rows, std::uint32_t cols, FieldSpec field)
    : rows_(rows), cols_(cols), field_(field) {
  if (field_.e == 1) {
    wpr_ = (cols + 63) / 64;
    w_.assign(static_cast<std::size_t>(rows) * wpr_, 0);
  } else {
    b_.assign(static_cast<std::size_t>(rows) * cols, 0);
  }
}

FFMatrix FFMatrix::identity(std::uint32_t n, FieldSpec field) {
  FFMatrix m(n, n, field);
  for (std::uint32_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

std::uint8_t FFMatrix::get(std::uint32_t i, std::uint32_t j) const {
  if (field_.e == 1)
    return (w_[static_cast<std::size_t>(i) * wpr_ + (j >> 6)] >> (j & 63)) & 1;
  return b_[static_cast<std::size_t>(i) * cols_ + j];
}

void FFMatrix::set(std::uint32_t i, std::uint32_t j, std::uint8_t v) {
  if (field_.e == 1) {
    std::uint64_t& word = w_[static_cast<std::size_t>(i) * wpr_ + (j >> 6)];
    if (v & 1)
      word |= 1ull << (j & 63);
    else
      word &= ~(1ull << (j & 63));
  } else {
    b_[static_cast<std::size_t>(i) * cols_ + j] = v;
  }
}

FFMatrix FFMatrix::operator+(const FFMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("matrix add");
  if (field_ != o.field_) throw FieldMismatch("matrix add");
  FFMatrix out = *this;
  if (field_.e == 1) {
    for (std::size_t i = 0; i < w_.size(); ++i) out.w_[i] ^= o.w_[i];
  } else {
    for (std::size_t i = 0; i < b_.size(); ++i) out.b_[i] ^= o.b_[i];
  }
  return out;
}

FFMatrix FFMatrix::operator*(const FFMatrix& o) const {
  if (cols_ != o.rows_) throw ShapeMismatch("matrix multiply");
  if (field_ != o.field_) throw FieldMismatch("matrix multiply");
  FFMatrix out(rows_, o.cols_, field_);
  if (field_.e == 1) {
    for (std::uint32_t i = 0; i < rows_; ++i) {
      std::uint64_t* dst = &out.w_[static_cast<std::size_t>(i) * out.wpr_];
      const std::uint64_t* src = &w_[static_cast<std::size_t>(i) * wpr_];
      for (std::uint32_t wi = 0; wi < wpr_; ++wi) {
        std::uint64_t bits = src[wi];
        while (bits) {
          std::uint32_t k = (wi << 6) + static_cast<std::uint32_t>(__builtin_ctzll(bits));
          bits &= bits - 1;
          const std::uint64_t* brow = &o.w_[static_cast<std::size_t>(k) * o.wpr_];
          for (std::uint32_t bw = 0; bw < o.wpr_; ++bw) dst[bw] ^= brow[bw];
        }
      }
    }
  } else {
    for (std::uint32_t i = 0; i < rows_; ++i) {
      for (std::uint32_t k = 0; k < cols_; ++k) {
        std::uint8_t a = get(i, k);
        if (!a) continue;
        const std::uint8_t* brow = &o.b_[static_cast<std::size_t>(k) * o.cols_];
        std::uint8_t* dst = &out.b_[static_cast<std::size_t>(i) * o.cols_];
        for (std::uint32_t j = 0; j < o.cols_; ++j)
          dst[j] ^= field_.mul(a, brow[j]);
      }
    }
  }
  return out;
}

bool FFMatrix::operator==(const FFMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ && w_ == o.w_ &&
         b_ == o.b_;
}

FFMatrix FFMatrix::transposed() const {
  FFMatrix out(cols_, rows_, field_);
  for (std::uint32_t i = 0; i < rows_; ++i)
    for (std::uint32_t j = 0; j < cols_; ++j) {
      std::uint8_t v = get(i, j);
      if (v) out.set(j, i, v);
    }
  return out;
}

FFMatrix FFMatrix::kron(const FFMatrix& o) const {
  if (field_ != o.field_) throw FieldMismatch("kron");
  FFMatrix out(rows_ * o.rows_, cols_ * o.cols_, field_);
  for (std::uint32_t i = 0; i < rows_; ++i)
    for (std::uint32_t j = 0; j < cols_; ++j) {
      std::uint8_t a = get(i, j);
      if (!a) continue;
      for (std::uint32_t k = 0; k < o.rows_; ++k)
        for (std::uint32_t l = 0; l < o.cols_; ++l) {
          std::uint8_t v = field_.mul(a, o.get(k, l));
          if (v) out.set(i * o.rows_ + k, j * o.cols_ + l, v);
        }
    }
  return out;
}

bool FFMatrix::is_zero() const {
  for (auto v : w_)
    if (v) return false;
  for (auto v : b_)
    if (v) return false;
  return true;
}

FFMatrix FFMatrix::row(std::uint32_t i) const {
  FFMatrix out(1, cols_, field_);
  if (field_.e == 1)
    std::copy(w_.begin() + static_cast<std::size_t>(i) * wpr_,
              w_.begin() + static_cast<std::size_t>(i + 1) * wpr_, out.w_.begin());
  else
    std::copy(b_.begin() + static_cast<std::size_t>(i) * cols_,
              b_.begin() + static_cast<std::size_t>(i + 1) * cols_, out.b_.begin());
  return out;
}

void FFMatrix::set_row(std::uint32_t i, const FFMatrix& v) {
  if (v.cols_ != cols_ || v.rows_ != 1 || v.field_ != field_) throw ShapeMismatch("set_row");
  if (field_.e == 1)
    std::copy(v.w_.begin(), v.w_.end(), w_.begin() + static_cast<std::size_t>(i) * wpr_);
  else
    std::copy(v.b_.begin(), v.b_.end(), b_.begin() + static_cast<std::size_t>(i) * cols_);
}

FFMatrix FFMatrix::vstack(const FFMatrix& top, const FFMatrix& bottom) {
  if (top.cols_ != bottom.cols_ || top.field_ != bottom.field_)
    throw ShapeMismatch("vstack");
  FFMatrix out(top.rows_ + bottom.rows_, top.cols_, top.field_);
  for (std::uint32_t i = 0; i < top.rows_; ++i) out.set_row(i, top.row(i));
  for (std::uint32_t i = 0; i < bottom.rows_; ++i)
    out.set_row(top.rows_ + i, bottom.row(i));
  return out;
}

void FFMatrix::add_row_into(std::uint32_t src, std::uint32_t dst, std::uint8_t factor) {
  if (!factor) return;
  if (field_.e == 1) {
    std::uint64_t* d = &w_[static_cast<std::size_t>(dst) * wpr_];
    const std::uint64_t* s = &w_[static_cast<std::size_t>(src) * wpr_];
    for (std::uint32_t i = 0; i < wpr_; ++i) d[i] ^= s[i];
  } else {
    std::uint8_t* d = &b_[static_cast<std::size_t>(dst) * cols_];
    const std::uint8_t* s = &b_[static_cast<std::size_t>(src) * cols_];
    for (std::uint32_t i = 0; i < cols_; ++i) d[i] ^= field_.mul(factor, s[i]);
  }
}

void FFMatrix::scale_row(std::uint32_t i, std::uint8_t factor) {
  if (field_.e == 1) return;  // only factor 1 occurs
  std::uint8_t* r = &b_[static_cast<std::size_t>(i) * cols_];
  for (std::uint32_t j = 0; j < cols_; ++j) r[j] = field_.mul(factor, r[j]);
}

void FFMatrix::swap_rows(std::uint32_t i, std::uint32_t j) {
  if (i == j) return;
  if (field_.e == 1)
    std::swap_ranges(w_.begin() + static_cast<std::size_t>(i) * wpr_,
                     w_.begin() + static_cast<std::size_t>(i + 1) * wpr_,
                     w_.begin() + static_cast<std::size_t>(j) * wpr_);
  else
    std::swap_ranges(b_.begin() + static_cast<std::size_t>(i) * cols_,
                     b_.begin() + static_cast<std::size_t>(i + 1) * cols_,
                     b_.begin() + static_cast<std::size_t>(j) * cols_);
}

FFMatrix FFMatrix::apply_left(const FFMatrix& v) const { return v * (*this); }

FFMatrix FFMatrix::embedded(FieldSpec target) const {
  if (target == field_) return *this;
  FFMatrix out(rows_, cols_, target);
  for (std::uint32_t i = 0; i < rows_; ++i)
    for (std::uint32_t j = 0; j < cols_; ++j) {
      std::uint8_t v = get(i, j);
      if (v) out.set(i, j, target.embed_from(v, field_.e));
    }
  return out;
}

FFMatrix FFMatrix::inverse() const {
  if (rows_ != cols_) throw ShapeMismatch("inverse of non-square matrix");
  FFMatrix aug(rows_, 2 * cols_, field_);
  for (std::uint32_t i = 0; i < rows_; ++i) {
    for (std::uint32_t j = 0; j < cols_; ++j) {
      std::uint8_t v = get(i, j);
      if (v) aug.set(i, j, v);
    }
    aug.set(i, cols_ + i, 1);
  }
  RrefResult rr = rref(aug);
  if (rr.rank < rows_) throw InternalError("matrix not invertible");
  FFMatrix out(rows_, cols_, field_);
  for (std::uint32_t i = 0; i < rows_; ++i)
    for (std::uint32_t j = 0; j < cols_; ++j) out.set(i, j, rr.r.get(i, cols_ + j));
  return out;
}

std::string FFMatrix::to_text() const {
  std::ostringstream os;
  os << rows_ << ' ' << cols_ << ' ' << int(field_.e) << '\n';
  static const char* digits = "0123456789abcdef";
  for (std::uint32_t i = 0; i < rows_; ++i) {
    if (field_.e == 1) {
      for (std::uint32_t j0 = 0; j0 < cols_; j0 += 4) {
        std::uint8_t d = 0;
        for (std::uint32_t k = 0; k < 4 && j0 + k < cols_; ++k)
          if (get(i, j0 + k)) d |= 1u << (3 - k);
        os << digits[d];
      }
    } else {
      for (std::uint32_t j = 0; j < cols_; ++j) os << digits[get(i, j)];
    }
    os << '\n';
  }
  return os.str();
}

FFMatrix FFMatrix::from_text(const std::string& text) {
  std::istringstream is(text);
  std::uint32_t rows, cols;
  int e;
  if (!(is >> rows >> cols >> e)) throw ParseError("matrix header");
  FFMatrix out(rows, cols, FieldSpec::gf(static_cast<std::uint8_t>(e)));
  auto hexval = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    return -1;
  };
  for (std::uint32_t i = 0; i < rows; ++i) {
    std::string line;
    if (!(is >> line)) throw ParseError("matrix row missing");
    if (e == 1) {
      if (line.size() != (cols + 3) / 4) throw ParseError("matrix row width");
      for (std::uint32_t j = 0; j < cols; ++j) {
        int d = hexval(line[j / 4]);
        if (d < 0) throw ParseError("matrix digit");
        if (d & (1 << (3 - (j % 4)))) out.set(i, j, 1);
      }
    } else {
      if (line.size() != cols) throw ParseError("matrix row width");
      for (std::uint32_t j = 0; j < cols; ++j) {
        int d = hexval(line[j]);
        if (d < 0 || d >= (1 << e)) throw ParseError("matrix digit");
        out.set(i, j, static_cast<std::uint8_t>(d));
      }
    }
  }
  return out;
}

std::uint64_t FFMatrix::content_hash() const {
  std::uint64_t h = 0x9E3779B97F4A7C15ull ^ rows_ ^ (std::uint64_t(cols_) << 20) ^
                    (std::uint64_t(field_.e) << 40);
  for (auto v : w_) h = (h ^ v) * 0x100000001B3ull;
  for (auto v : b_) h = (h ^ v) * 0x100000001B3ull;
  return h;
}

// ---------------------------------------------------------------------------
// Elimination

RrefResult rref(const FFMatrix& a) {
  RrefResult out;
  out.r = a;
  FFMatrix& m = out.r;
  std::uint32_t pivot_row = 0;
  for (std::uint32_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
    std::uint32_t sel = UINT32_MAX;
    for (std::uint32_t i = pivot_row; i < a.rows(); ++i)
      if (m.get(i, col)) { sel = i; break; }
    if (sel == UINT32_MAX) continue;
    m.swap_rows(pivot_row, sel);
    std::uint8_t lead = m.get(pivot_row, col);
    if (lead != 1) m.scale_row(pivot_row, a.field().inv(lead));
    for (std::uint32_t i = 0; i < a.rows(); ++i) {
      if (i == pivot_row) continue;
      std::uint8_t v = m.get(i, col);
      if (v) m.add_row_into(pivot_row, i, v);
    }
    out.pivots.push_back(col);
    ++pivot_row;
  }
  out.rank = pivot_row;
  return out;
}

std::uint32_t rank(const FFMatrix& a) { return rref(a).rank; }

FFMatrix row_basis(const FFMatrix& a) {
  RrefResult rr = rref(a);
  FFMatrix out(rr.rank, a.cols(), a.field());
  for (std::uint32_t i = 0; i < rr.rank; ++i) out.set_row(i, rr.r.row(i));
  return out;
}

FFMatrix nullspace(const FFMatrix& a) {
  RrefResult rr = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : rr.pivots) is_pivot[p] = true;
  std::uint32_t nfree = a.cols() - rr.rank;
  FFMatrix out(nfree, a.cols(), a.field());
  std::uint32_t row = 0;
  for (std::uint32_t col = 0; col < a.cols(); ++col) {
    if (is_pivot[col]) continue;
    out.set(row, col, 1);
    for (std::uint32_t pi = 0; pi < rr.pivots.size(); ++pi) {
      std::uint8_t v = rr.r.get(pi, col);
      if (v) out.set(row, rr.pivots[pi], v);  // -v = v in characteristic 2
    }
    ++row;
  }
  return rref(out).r;
}

FFMatrix left_nullspace(const FFMatrix& a) { return nullspace(a.transposed()); }

std::optional<FFMatrix> solve(const FFMatrix& a, const FFMatrix& b_row) {
  if (b_row.rows() != 1 || b_row.cols() != a.rows()) throw ShapeMismatch("solve");
  FFMatrix aug(a.rows(), a.cols() + 1, a.field());
  for (std::uint32_t i = 0; i < a.rows(); ++i) {
    for (std::uint32_t j = 0; j < a.cols(); ++j) {
      std::uint8_t v = a.get(i, j);
      if (v) aug.set(i, j, v);
    }
    aug.set(i, a.cols(), b_row.get(0, i));
  }
  RrefResult rr = rref(aug);
  for (auto p : rr.pivots)
    if (p == a.cols()) return std::nullopt;
  FFMatrix x(1, a.cols(), a.field());
  for (std::uint32_t pi = 0; pi < rr.pivots.size(); ++pi)
    x.set(0, rr.pivots[pi], rr.r.get(pi, a.cols()));
  return x;
}

// ---------------------------------------------------------------------------
// SubspaceBasis

SubspaceBasis::SubspaceBasis(std::uint32_t ambient_dim, FieldSpec field)
    : ambient_(ambient_dim), field_(field) {}

SubspaceBasis::SubspaceBasis(const FFMatrix& rows)
    : ambient_(rows.cols()), field_(rows.field()) {
  for (std::uint32_t i = 0; i < rows.rows(); ++i) insert(rows.row(i));
}

FFMatrix SubspaceBasis::reduce(FFMatrix v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    std::uint8_t c = v.get(0, pivots_[i]);
    if (c) {
      if (field_.e == 1 && c == 1) {
        v = v + rows_[i];
      } else {
        for (std::uint32_t j = 0; j < ambient_; ++j) {
          std::uint8_t r = rows_[i].get(0, j);
          if (r) v.set(0, j, field_.add(v.get(0, j), field_.mul(c, r)));
        }
      }
    }
  }
  return v;
}

bool SubspaceBasis::insert(FFMatrix v) {
  v = reduce(std::move(v));
  std::uint32_t pivot = UINT32_MAX;
  for (std::uint32_t j = 0; j < ambient_; ++j)
    if (v.get(0, j)) { pivot = j; break; }
  if (pivot == UINT32_MAX) return false;
  std::uint8_t lead = v.get(0, pivot);
  if (lead != 1) v.scale_row(0, field_.inv(lead));
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    std::uint8_t c = rows_[i].get(0, pivot);
    if (c) {
      if (field_.e == 1) {
        rows_[i] = rows_[i] + v;
      } else {
        for (std::uint32_t j = 0; j < ambient_; ++j) {
          std::uint8_t r = v.get(0, j);
          if (r) rows_[i].set(0, j, field_.add(rows_[i].get(0, j), field_.mul(c, r)));
        }
      }
    }
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(pivot);
  return true;
}

bool SubspaceBasis::contains(const FFMatrix& v) const { return reduce(v).is_zero(); }

FFMatrix SubspaceBasis::matrix() const {
  std::vector<std::uint32_t> order(rows_.size());
  for (std::uint32_t i = 0; i < rows_.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::uint32_t a, std::uint32_t b) { return pivots_[a] < pivots_[b]; });
  FFMatrix out(static_cast<std::uint32_t>(rows_.size()), ambient_, field_);
  for (std::uint32_t i = 0; i < rows_.size(); ++i) out.set_row(i, rows_[order[i]]);
  return out;
}

std::vector<std::uint8_t> SubspaceBasis::coordinates(const FFMatrix& v) const {
  std::vector<std::uint8_t> coords(rows_.size(), 0);
  FFMatrix r = v;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    std::uint8_t c = r.get(0, pivots_[i]);
    if (c) {
      coords[i] = c;
      if (field_.e == 1) {
        r = r + rows_[i];
      } else {
        for (std::uint32_t j = 0; j < ambient_; ++j) {
          std::uint8_t x = rows_[i].get(0, j);
          if (x) r.set(0, j, field_.add(r.get(0, j), field_.mul(c, x)));
        }
      }
    }
  }
  if (!r.is_zero()) throw InternalError("coordinates of vector outside subspace");
  return coords;
}

FFMatrix spin(const FFMatrix& vectors, const std::vector<FFMatrix>& actions) {
  for (const auto& a : actions) {
    if (a.rows() != a.cols() || a.rows() != vectors.cols())
      throw ShapeMismatch("spin action shape");
    if (a.field() != vectors.field()) throw FieldMismatch("spin action field");
  }
  SubspaceBasis basis(vectors.cols(), vectors.field());
  std::vector<FFMatrix> work;
  for (std::uint32_t i = 0; i < vectors.rows(); ++i) {
    FFMatrix v = vectors.row(i);
    if (basis.insert(v)) work.push_back(std::move(v));
  }
  while (!work.empty()) {
    FFMatrix v = std::move(work.back());
    work.pop_back();
    for (const auto& a : actions) {
      FFMatrix image = v * a;
      if (basis.insert(image)) work.push_back(std::move(image));
    }
  }
  return basis.matrix();
}

FFMatrix subspace_sum(const FFMatrix& u, const FFMatrix& w) {
  SubspaceBasis basis(u.cols(), u.field());
  for (std::uint32_t i = 0; i < u.rows(); ++i) basis.insert(u.row(i));
  for (std::uint32_t i = 0; i < w.rows(); ++i) basis.insert(w.row(i));
  return basis.matrix();
}

FFMatrix subspace_intersection(const FFMatrix& u, const FFMatrix& w) {
  if (u.cols() != w.cols() || u.field() != w.field())
    throw FieldMismatch("subspace intersection");
  if (u.rows() == 0 || w.rows() == 0) return FFMatrix(0, u.cols(), u.field());
  FFMatrix stacked = FFMatrix::vstack(u, w);
  FFMatrix combos = left_nullspace(stacked);  // (a | b) with a*u = b*w
  SubspaceBasis basis(u.cols(), u.field());
  for (std::uint32_t i = 0; i < combos.rows(); ++i) {
    FFMatrix v(1, u.cols(), u.field());
    for (std::uint32_t k = 0; k < u.rows(); ++k) {
      std::uint8_t c = combos.get(i, k);
      if (!c) continue;
      for (std::uint32_t j = 0; j < u.cols(); ++j) {
        std::uint8_t x = u.get(k, j);
        if (x) v.set(0, j, u.field().add(v.get(0, j), u.field().mul(c, x)));
      }
    }
    basis.insert(std::move(v));
  }
  return basis.matrix();
}

}  // namespace dbl
