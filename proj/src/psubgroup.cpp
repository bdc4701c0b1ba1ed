#include "mackey/psubgroup.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "mackey/errors.hpp"
#include "mackey/numtheory.hpp"

namespace mackey {

namespace {

bool is_p_power(unsigned long long n, unsigned long long p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

} // namespace

Subgroup canonical_conjugate(const FiniteGroup& group, const Subgroup& q,
                             std::size_t* witness) {
  if (!q.parent().same_group(group))
    throw error("canonical_conjugate: subgroup belongs to a different group");
  Subgroup normal = normalizer(group, q);
  // The conjugates of q correspond to the right cosets of its normalizer;
  // one representative per coset visits each conjugate exactly once.
  std::vector<bool> covered(group.order(), false);
  Subgroup best = q;
  std::size_t best_witness = 0;
  bool have_best = false;
  for (std::size_t g = 0; g < group.order(); ++g) {
    if (covered[g]) continue;
    for (std::size_t n : normal.member_indices()) covered[group.product(n, g)] = true;
    Subgroup candidate = q.conjugated_by(g);
    if (!have_best || candidate.member_indices() < best.member_indices()) {
      best = std::move(candidate);
      best_witness = g;
      have_best = true;
    }
  }
  if (witness) *witness = best_witness;
  return best;
}

std::vector<PSubgroupClass> p_subgroups_up_to_conjugacy(const FiniteGroup& group,
                                                        unsigned long long p) {
  if (!is_prime(p)) throw error("p_subgroups_up_to_conjugacy: p must be prime");

  std::vector<PSubgroupClass> classes;
  auto add_class = [&](Subgroup rep) {
    PSubgroupClass cls{rep, normalizer(group, rep), 0};
    cls.class_size = group.order() / cls.normalizer.order();
    classes.push_back(std::move(cls));
  };
  add_class(Subgroup::trivial(group));

  std::size_t layer_begin = 0;
  while (layer_begin < classes.size()) {
    std::size_t layer_end = classes.size();
    // Keys of all classes found for the next layer, to fold conjugates.
    std::set<std::vector<std::size_t>> next_layer;
    for (std::size_t c = layer_begin; c < layer_end; ++c) {
      // Copies: add_class grows the vector, invalidating references.
      const Subgroup rep = classes[c].representative;
      const Subgroup norm = classes[c].normalizer;
      for (std::size_t x : norm.member_indices()) {
        if (rep.contains_index(x)) continue;
        if (!is_p_power(group.element_order_at(x), p)) continue;
        // x^p must fall back into the current representative.
        std::size_t xp = x;
        for (unsigned long long i = 1; i < p; ++i) xp = group.product(xp, x);
        if (!rep.contains_index(xp)) continue;
        std::vector<std::size_t> generators = rep.generator_indices();
        generators.push_back(x);
        Subgroup extended = Subgroup::from_generator_indices(group, std::move(generators));
        Subgroup canonical = canonical_conjugate(group, extended);
        if (next_layer.insert(canonical.member_indices()).second) add_class(canonical);
      }
    }
    layer_begin = layer_end;
  }

  std::sort(classes.begin(), classes.end(), [](const PSubgroupClass& a, const PSubgroupClass& b) {
    if (a.representative.order() != b.representative.order())
      return a.representative.order() < b.representative.order();
    return a.representative.member_indices() < b.representative.member_indices();
  });
  return classes;
}

std::vector<Subgroup> all_subgroups(const Subgroup& r, std::size_t subgroup_budget) {
  const FiniteGroup& parent = r.parent();
  std::map<std::vector<std::size_t>, Subgroup> found;
  Subgroup trivial = Subgroup::trivial(parent);
  found.emplace(trivial.member_indices(), trivial);
  // Breadth-first closure under "adjoin one element": every subgroup arises
  // from the trivial one through a chain of single-generator extensions.
  std::vector<Subgroup> frontier{trivial};
  while (!frontier.empty()) {
    std::vector<Subgroup> next;
    for (const Subgroup& h : frontier) {
      for (std::size_t x : r.member_indices()) {
        if (h.contains_index(x)) continue;
        std::vector<std::size_t> generators = h.generator_indices();
        generators.push_back(x);
        Subgroup extended = Subgroup::from_generator_indices(parent, std::move(generators));
        if (found.emplace(extended.member_indices(), extended).second) {
          if (found.size() > subgroup_budget)
            throw error("all_subgroups: subgroup budget exceeded");
          next.push_back(std::move(extended));
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<Subgroup> result;
  result.reserve(found.size());
  for (auto& entry : found) result.push_back(std::move(entry.second));
  return result;
}

} // namespace mackey
