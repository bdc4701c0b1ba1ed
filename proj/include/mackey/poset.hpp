#pragma once

#include <cstddef>
#include <vector>

#include "mackey/group.hpp"

namespace mackey {

// The subgroups X with Q <= X <= R that are invariant under conjugation by
// a fixed element t, ordered by inclusion.  Q and R must themselves be
// t-invariant so the poset has a bottom and a top.  Möbius values of the
// poset are tabulated at construction.
class IntervalPoset {
public:
  // t must normalize both q and r; q <= r required.
  IntervalPoset(Subgroup q, Subgroup r, const Permutation& t);

  const std::vector<Subgroup>& members() const { return members_; }
  const Subgroup& bottom() const { return members_[bottom_]; }
  const Subgroup& top() const { return members_[top_]; }

  // Möbius value mu(x, y) within this poset; x and y must be members with
  // x <= y.
  long long moebius(const Subgroup& x, const Subgroup& y) const;

private:
  std::size_t position_of(const Subgroup& x) const;

  std::vector<Subgroup> members_;          // sorted by member list
  std::vector<std::vector<bool>> leq_;     // inclusion, leq_[i][j] <=> i <= j
  std::vector<std::vector<long long>> mu_;
  std::size_t bottom_ = 0;
  std::size_t top_ = 0;
};

// Convenience spellings matching the two ways the poset is consumed.
IntervalPoset invariant_interval(const Subgroup& q, const Subgroup& r,
                                 const Permutation& t);
long long moebius(const IntervalPoset& poset, const Subgroup& x, const Subgroup& y);

} // namespace mackey
