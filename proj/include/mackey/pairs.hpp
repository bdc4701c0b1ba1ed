#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "mackey/group.hpp"

namespace mackey {

// A pair (R, s): R a p-subgroup of the ambient group G, s an element of
// N_G(R)/R of order coprime to p.  The quotient is realized once per pair
// and every derived object is cached: the canonical lift of s, the
// centralizer of s in the quotient, the stabilizer
// N_G(R, s) = { g in N_G(R) : s^g = s in the quotient }, the preimage <sR>
// of <s> in G, and whether that preimage is cyclic.
class MackeyPair {
public:
  const FiniteGroup& group() const;
  unsigned long long prime() const;

  const Subgroup& r() const;
  std::size_t r_order() const;

  const QuotientGroup& quotient() const;  // N_G(R) / R
  const Permutation& s_bar() const;       // element of quotient().image()
  std::size_t s_bar_index() const;
  unsigned long long s_order() const;

  // Least element of the coset of lifts of s in N_G(R).
  const Permutation& s_lift() const;
  std::size_t s_lift_index() const;

  const Subgroup& centralizer_bar() const;  // C_{N_G(R)/R}(s), inside the image
  const Subgroup& stabilizer() const;       // N_G(R, s), inside G
  std::size_t stabilizer_order() const;
  const Subgroup& preimage_sr() const;      // <sR>, inside G
  bool cyclic() const;                      // <sR> cyclic?

private:
  struct Impl;
  explicit MackeyPair(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;

  friend MackeyPair make_mackey_pair(const FiniteGroup&, unsigned long long, Subgroup,
                                     const Permutation&);
  friend MackeyPair make_mackey_pair_with_quotient(const FiniteGroup&, unsigned long long,
                                                   Subgroup, QuotientGroup, std::size_t);
};

// Builds the pair from an ambient group, a p-subgroup and an element of the
// quotient image of order coprime to p.  No canonicalization: r and s_bar
// are taken as given.
MackeyPair make_mackey_pair(const FiniteGroup& group, unsigned long long p, Subgroup r,
                            const Permutation& s_bar);

// Same, reusing an already constructed quotient.  The quotient must be
// exactly N_G(r)/r; kernel and normalization are verified, the numerator
// being the full normalizer is the caller's responsibility.
MackeyPair make_mackey_pair_with_quotient(const FiniteGroup& group, unsigned long long p,
                                          Subgroup r, QuotientGroup quotient,
                                          std::size_t s_bar_index);

// One pair per conjugacy class of pairs, deterministically ordered by
// (p-subgroup class, class of s in the quotient).  For each p-subgroup
// class representative R the candidates are the p-regular classes of
// N_G(R)/R; the residual action of N_G(R) on those classes is folded
// (it acts through inner automorphisms, so this is a formality).
std::vector<MackeyPair> enumerate_pairs(const FiniteGroup& group, unsigned long long p);

// The cached stabilizer / preimage, exposed as operations as well.
Subgroup pair_stabilizer(const MackeyPair& pair);
Subgroup pair_preimage_sr(const MackeyPair& pair);

// True when some g in the ambient group carries one pair to the other.
// Both pairs must live in the same ambient group with the same prime.
bool pairs_are_conjugate(const MackeyPair& a, const MackeyPair& b);

// The class of (R, s^-1), expressed by its canonical representative.
MackeyPair inverse_pair(const MackeyPair& pair);

// Canonical representative of the pair's conjugacy class: R is replaced by
// its least conjugate, s by the canonical representative of its class in
// the corresponding quotient.  enumerate_pairs emits exactly these labels.
MackeyPair canonicalize_pair(const MackeyPair& pair);

// Identical canonical labels (same subgroup members, same quotient element).
bool same_pair_label(const MackeyPair& a, const MackeyPair& b);

} // namespace mackey
