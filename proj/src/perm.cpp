#include "dbl/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace dbl {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation::Permutation(std::vector<std::uint16_t> images) : images_(std::move(images)) {
  check_valid();
}

void Permutation::check_valid() const {
  std::vector<bool> seen(images_.size(), false);
  for (auto v : images_) {
    if (v >= images_.size() || seen[v]) throw ParseError("image list is not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) { return Permutation(degree); }

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<std::uint16_t>>& cycles) {
  Permutation p(degree);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      std::uint16_t from = cyc[i];
      std::uint16_t to = cyc[(i + 1) % cyc.size()];
      if (from >= degree || to >= degree) throw ParseError("cycle point out of range");
      p.images_[from] = to;
    }
  }
  p.check_valid();
  return p;
}

Permutation Permutation::parse(std::size_t degree, const std::string& text) {
  std::vector<std::vector<std::uint16_t>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace((unsigned char)text[i])) ++i; };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation");
    ++i;
    std::vector<std::uint16_t> cyc;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit((unsigned char)text[i])) throw ParseError("expected point index");
      std::uint32_t v = 0;
      while (i < text.size() && std::isdigit((unsigned char)text[i])) v = v * 10 + (text[i++] - '0');
      if (v >= degree) throw ParseError("point out of range");
      cyc.push_back(static_cast<std::uint16_t>(v));
      skip_ws();
      if (i < text.size() && (text[i] == ',' || text[i] == ' ')) { ++i; skip_ws(); }
    }
    if (i >= text.size()) throw ParseError("unterminated cycle");
    ++i;  // ')'
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
    skip_ws();
  }
  return from_cycles(degree, cycles);
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree()) throw ShapeMismatch("permutation degrees differ");
  std::vector<std::uint16_t> out(degree());
  for (std::size_t i = 0; i < degree(); ++i) out[i] = rhs.images_[images_[i]];
  Permutation p;
  p.images_ = std::move(out);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint16_t> out(degree());
  for (std::size_t i = 0; i < degree(); ++i) out[images_[i]] = static_cast<std::uint16_t>(i);
  Permutation p;
  p.images_ = std::move(out);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::uint64_t Permutation::order() const {
  std::vector<bool> seen(degree(), false);
  std::uint64_t ord = 1;
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    std::size_t j = i;
    while (!seen[j]) { seen[j] = true; j = images_[j]; ++len; }
    ord = std::lcm(ord, len);
  }
  return ord;
}

Permutation Permutation::conjugated_by(const Permutation& g) const {
  return g.inverse() * (*this) * g;
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream os;
  std::vector<bool> seen(degree(), false);
  bool any = false;
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i) { seen[i] = true; continue; }
    any = true;
    os << '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      if (!first) os << ',';
      os << j;
      seen[j] = true;
      j = images_[j];
      first = false;
    }
    os << ')';
  }
  if (!any) return "()";
  return os.str();
}

std::uint64_t Permutation::hash() const {
  std::uint64_t h = 0x811C9DC5ull ^ (degree() * 0x9E3779B97F4A7C15ull);
  for (auto v : images_) {
    h ^= v + 0x9E3779B9ull + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace dbl
