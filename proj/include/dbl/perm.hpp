#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dbl/errors.hpp"

namespace dbl {

// Permutation of {0,...,d-1}, stored by images.  Composition is
// left-to-right: (a*b)[i] = b[a[i]], matching the right-action
// convention used by the module layer.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);
  explicit Permutation(std::vector<std::uint16_t> images);

  static Permutation identity(std::size_t degree);
  // Product of the given disjoint-support cycles on a fixed degree.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<std::uint16_t>>& cycles);
  static Permutation parse(std::size_t degree, const std::string& text);

  std::size_t degree() const { return images_.size(); }
  std::uint16_t operator[](std::size_t i) const { return images_[i]; }
  const std::vector<std::uint16_t>& images() const { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  bool is_identity() const;
  std::uint64_t order() const;

  // Conjugate this^g = g^-1 * this * g.
  Permutation conjugated_by(const Permutation& g) const;

  bool operator==(const Permutation& o) const { return images_ == o.images_; }
  bool operator<(const Permutation& o) const { return images_ < o.images_; }

  std::string to_cycle_string() const;
  std::uint64_t hash() const;

 private:
  std::vector<std::uint16_t> images_;
  void check_valid() const;
};

}  // namespace dbl
