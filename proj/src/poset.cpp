#include "mackey/poset.hpp"

#include <algorithm>

#include "mackey/errors.hpp"
#include "mackey/psubgroup.hpp"

namespace mackey {

IntervalPoset::IntervalPoset(Subgroup q, Subgroup r, const Permutation& t) {
  if (!q.parent().same_group(r.parent()))
    throw error("interval: subgroups belong to different groups");
  if (!q.is_subset_of(r)) throw error("interval: bottom is not contained in top");
  const FiniteGroup& parent = q.parent();
  std::size_t t_index = parent.index_of(t);
  auto invariant = [&](const Subgroup& x) { return x.conjugated_by(t_index) == x; };
  if (!invariant(r)) throw error("interval: t does not normalize the top");
  if (!invariant(q)) throw error("interval: t does not normalize the bottom");

  for (Subgroup& x : all_subgroups(r)) {
    if (!q.is_subset_of(x)) continue;
    if (!invariant(x)) continue;
    members_.push_back(std::move(x));
  }
  // all_subgroups returns them sorted by member list already.

  std::size_t n = members_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (members_[i] == q) bottom_ = i;
    if (members_[i] == r) top_ = i;
  }

  leq_.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      leq_[i][j] = members_[i].is_subset_of(members_[j]);

  // mu(x, x) = 1 and sum of mu(x, z) over x <= z <= y vanishes for x < y.
  // Filling y in order of increasing size is a linear extension.
  std::vector<std::size_t> by_size(n);
  for (std::size_t i = 0; i < n; ++i) by_size[i] = i;
  std::sort(by_size.begin(), by_size.end(), [this](std::size_t a, std::size_t b) {
    return members_[a].order() < members_[b].order();
  });
  mu_.assign(n, std::vector<long long>(n, 0));
  for (std::size_t x = 0; x < n; ++x) {
    mu_[x][x] = 1;
    for (std::size_t y : by_size) {
      if (y == x || !leq_[x][y]) continue;
      long long partial = 0;
      for (std::size_t z = 0; z < n; ++z)
        if (z != y && leq_[x][z] && leq_[z][y]) partial += mu_[x][z];
      mu_[x][y] = -partial;
    }
  }
}

std::size_t IntervalPoset::position_of(const Subgroup& x) const {
  for (std::size_t i = 0; i < members_.size(); ++i)
    if (members_[i] == x) return i;
  throw error("interval: subgroup is not a member of the poset");
}

long long IntervalPoset::moebius(const Subgroup& x, const Subgroup& y) const {
  std::size_t i = position_of(x);
  std::size_t j = position_of(y);
  if (!leq_[i][j]) throw error("interval: moebius arguments are not ordered");
  return mu_[i][j];
}

IntervalPoset invariant_interval(const Subgroup& q, const Subgroup& r,
                                 const Permutation& t) {
  return IntervalPoset(q, r, t);
}

long long moebius(const IntervalPoset& poset, const Subgroup& x, const Subgroup& y) {
  return poset.moebius(x, y);
}

} // namespace mackey
