#pragma once

#include <cstddef>
#include <vector>

#include "mackey/group.hpp"

namespace mackey {

inline constexpr std::size_t kDefaultSubgroupBudget = 200000;

// One conjugacy class of p-subgroups: canonical representative (least member
// list among all conjugates), its normalizer, and the class size.
struct PSubgroupClass {
  Subgroup representative;
  Subgroup normalizer;
  std::size_t class_size = 0;
};

// Least conjugate of q under the whole group, by member-list order.
// If witness is non-null it receives one g with q^g equal to the result.
Subgroup canonical_conjugate(const FiniteGroup& group, const Subgroup& q,
                             std::size_t* witness = nullptr);

// All p-subgroups up to conjugacy, trivial subgroup included, sorted by
// (order, representative).  Built layer by layer: a class of order p^(k+1)
// is always reachable from a class representative P of order p^k as
// <P, x> with x in N_G(P), x a p-element outside P and x^p in P.
std::vector<PSubgroupClass> p_subgroups_up_to_conjugacy(const FiniteGroup& group,
                                                        unsigned long long p);

// Every subgroup of r (exhaustive, no conjugacy folding), sorted by member
// list.  Intended for small prime-power groups and brute-force checks;
// throws once more than subgroup_budget subgroups accumulate.
std::vector<Subgroup> all_subgroups(const Subgroup& r,
                                    std::size_t subgroup_budget = kDefaultSubgroupBudget);

} // namespace mackey
