#pragma once

#include <compare>
#include <vector>

namespace mackey {

// Permutation of the points 0..degree-1, stored as its image table.
// Composition is function composition: (a * b)(x) = a(b(x)).
// Comparison is lexicographic on the image table, so the identity is the
// least permutation of its degree.
class Permutation {
public:
  // Validates that images is a bijection on {0..degree-1}; degree >= 1.
  explicit Permutation(std::vector<unsigned> images);

  static Permutation identity(unsigned degree);

  unsigned degree() const { return static_cast<unsigned>(images_.size()); }
  unsigned operator()(unsigned point) const { return images_[point]; }
  const std::vector<unsigned>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;

  // g^-1 * (*this) * g
  Permutation conjugated_by(const Permutation& g) const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);

  bool operator==(const Permutation&) const = default;
  std::strong_ordering operator<=>(const Permutation&) const = default;

private:
  struct Unchecked {};
  Permutation(std::vector<unsigned> images, Unchecked) : images_(std::move(images)) {}

  std::vector<unsigned> images_;
};

// Order of the permutation: lcm of its cycle lengths.
// Throws on (astronomically rare) overflow of unsigned long long.
unsigned long long element_order(const Permutation& g);

// Cycles of length >= 2, each starting at its least point, sorted by that
// least point.  The decomposition behind the text form of a permutation.
std::vector<std::vector<unsigned>> cycle_decomposition(const Permutation& g);

} // namespace mackey
