#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mackey/permutation.hpp"

namespace mackey {

// Groups are fully enumerated: generation stops with an error once the
// closure exceeds this many elements (overridable per call).
inline constexpr std::size_t kDefaultElementBudget = 5000;

struct ConjugacyClass {
  std::size_t representative = 0;    // least member, also members.front()
  std::vector<std::size_t> members;  // sorted element indices
};

// Immutable fully enumerated permutation group.  Cheap to copy (shared
// internal state); element indices refer to the canonical enumeration,
// which sorts elements lexicographically by image table.  Index 0 is
// always the identity.
class FiniteGroup {
public:
  unsigned degree() const;
  std::size_t order() const;
  const std::string& name() const;

  const std::vector<Permutation>& elements() const;
  const std::vector<Permutation>& generators() const;
  const Permutation& element(std::size_t index) const;

  std::optional<std::size_t> find(const Permutation& g) const;
  bool contains(const Permutation& g) const { return find(g).has_value(); }
  // Like find, but a missing element is an error.
  std::size_t index_of(const Permutation& g) const;

  std::size_t product(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t a) const;
  // index of element(a)^element(g) = g^-1 a g
  std::size_t conjugate(std::size_t a, std::size_t g) const;
  unsigned long long element_order_at(std::size_t a) const;

  // Classes sorted by (order of representative, representative index);
  // computed once on first use and cached.
  const std::vector<ConjugacyClass>& conjugacy_classes() const;

  // Identity of the underlying enumeration, not isomorphism.
  bool same_group(const FiniteGroup& other) const { return impl_ == other.impl_; }

  // Wraps an already closed, sorted element list without re-generating.
  // Trusted constructor for quotient images; validates only cheap facts.
  static FiniteGroup from_closed_elements(unsigned degree,
                                          std::vector<Permutation> elements,
                                          std::vector<Permutation> generators,
                                          std::string name);

private:
  struct Impl;
  explicit FiniteGroup(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;

  friend FiniteGroup generate_group(unsigned, std::vector<Permutation>, std::size_t,
                                    std::string);
};

// Closure of the generators under multiplication.  Every generator must
// have the given degree; throws once the closure exceeds element_budget.
FiniteGroup generate_group(unsigned degree, std::vector<Permutation> generators,
                           std::size_t element_budget = kDefaultElementBudget,
                           std::string name = "");

// Subgroup of a fixed parent group, stored as sorted element indices plus a
// generating set that witnesses it.  Subgroups of the same parent compare
// by their member lists, which gives the canonical order used everywhere.
class Subgroup {
public:
  static Subgroup trivial(const FiniteGroup& parent);
  static Subgroup full(const FiniteGroup& parent);
  static Subgroup from_generator_indices(const FiniteGroup& parent,
                                         std::vector<std::size_t> generator_indices);
  static Subgroup from_generators(const FiniteGroup& parent,
                                  const std::vector<Permutation>& generators);

  const FiniteGroup& parent() const { return parent_; }
  std::size_t order() const { return members_.size(); }
  const std::vector<std::size_t>& member_indices() const { return members_; }
  const std::vector<std::size_t>& generator_indices() const { return generators_; }
  bool contains_index(std::size_t element_index) const;
  const Permutation& member(std::size_t position) const;

  Subgroup conjugated_by(std::size_t g) const;
  bool is_subset_of(const Subgroup& other) const;

  // Same parent enumeration and same members.
  bool operator==(const Subgroup& other) const;

private:
  Subgroup(FiniteGroup parent, std::vector<std::size_t> members,
           std::vector<std::size_t> generators);

  FiniteGroup parent_;
  std::vector<std::size_t> members_;
  std::vector<std::size_t> generators_;

  friend Subgroup subgroup_from_member_indices(const FiniteGroup&, std::vector<std::size_t>);
};

// Builds a Subgroup from a full member list (must be closed; verified).
// Generators are chosen greedily from the members, smallest first.
Subgroup subgroup_from_member_indices(const FiniteGroup& parent,
                                      std::vector<std::size_t> members);

Subgroup centralizer(const FiniteGroup& group, const Permutation& g);
Subgroup centralizer_of_subgroup(const FiniteGroup& group, const Subgroup& h);
Subgroup normalizer(const FiniteGroup& group, const Subgroup& h);

// Subgroup generated by all commutators [h, k], h in H, k in K.
// H and K must share a parent.
Subgroup commutator_subgroup(const Subgroup& h, const Subgroup& k);

bool is_cyclic(const Subgroup& h);
bool is_cyclic(const FiniteGroup& group);

// Conjugacy classes whose representatives have order coprime to p.
// p must be prime.  If p does not divide |G| this is every class.
std::vector<ConjugacyClass> p_regular_classes(const FiniteGroup& group,
                                              unsigned long long p);

// Quotient H/N realized as the action of H on the left cosets of N.
// The kernel of that action is exactly N (N is required to be normal in H),
// so the image is a faithful permutation group on the cosets.  Cosets are
// numbered by their least element, ascending; coset 0 is N itself.
class QuotientGroup {
public:
  const Subgroup& numerator() const;
  const Subgroup& kernel() const;
  const FiniteGroup& image() const;
  // Least element of each coset, one per coset, ascending; indices into the
  // parent of the numerator.
  const std::vector<std::size_t>& coset_representatives() const;

  // numerator element index (in the parent enumeration) -> image element index
  std::size_t project_index(std::size_t parent_element_index) const;
  Permutation project(const Permutation& h) const;

  // image element index -> canonical (least) preimage, as parent element index
  std::size_t section_index(std::size_t image_element_index) const;
  Permutation section(const Permutation& image_element) const;

private:
  struct Impl;
  explicit QuotientGroup(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;

  friend QuotientGroup quotient_group(const Subgroup&, const Subgroup&);
};

// Requires N <= H (same parent) and N normal in H.
QuotientGroup quotient_group(const Subgroup& h, const Subgroup& n);

// The subgroup as a standalone group on the same points.  Its canonical
// element order agrees with the member order of h (both lexicographic), so
// position in h and element index in the result coincide.
FiniteGroup as_finite_group(const Subgroup& h, std::string name = "");

} // namespace mackey
