#include "mackey/permutation.hpp"

#include <numeric>

#include "mackey/errors.hpp"

namespace mackey {

Permutation::Permutation(std::vector<unsigned> images) : images_(std::move(images)) {
  if (images_.empty()) throw error("permutation: degree must be at least 1");
  std::vector<bool> seen(images_.size(), false);
  for (unsigned img : images_) {
    if (img >= images_.size()) throw error("permutation: image point out of range");
    if (seen[img]) throw error("permutation: image table is not a bijection");
    seen[img] = true;
  }
}

Permutation Permutation::identity(unsigned degree) {
  if (degree == 0) throw error("permutation: degree must be at least 1");
  std::vector<unsigned> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  return Permutation(std::move(images), Unchecked{});
}

bool Permutation::is_identity() const {
  for (unsigned p = 0; p < images_.size(); ++p)
    if (images_[p] != p) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<unsigned> inv(images_.size());
  for (unsigned p = 0; p < images_.size(); ++p) inv[images_[p]] = p;
  return Permutation(std::move(inv), Unchecked{});
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw error("permutation: degree mismatch in product");
  std::vector<unsigned> images(a.degree());
  for (unsigned p = 0; p < a.degree(); ++p) images[p] = a.images_[b.images_[p]];
  return Permutation(std::move(images), Permutation::Unchecked{});
}

Permutation Permutation::conjugated_by(const Permutation& g) const {
  return g.inverse() * (*this) * g;
}

unsigned long long element_order(const Permutation& g) {
  unsigned long long order = 1;
  std::vector<bool> seen(g.degree(), false);
  for (unsigned p = 0; p < g.degree(); ++p) {
    if (seen[p]) continue;
    unsigned long long len = 0;
    for (unsigned q = p; !seen[q]; q = g(q)) {
      seen[q] = true;
      ++len;
    }
    unsigned long long d = std::gcd(order, len);
    if (order / d > (~0ull) / len) throw error("element_order: overflow");
    order = order / d * len;
  }
  return order;
}

std::vector<std::vector<unsigned>> cycle_decomposition(const Permutation& g) {
  std::vector<std::vector<unsigned>> cycles;
  std::vector<bool> seen(g.degree(), false);
  for (unsigned p = 0; p < g.degree(); ++p) {
    if (seen[p] || g(p) == p) continue;
    std::vector<unsigned> cycle;
    for (unsigned q = p; !seen[q]; q = g(q)) {
      seen[q] = true;
      cycle.push_back(q);
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

} // namespace mackey
