#include "mackey/group.hpp"

#include <algorithm>
#include <mutex>
#include <queue>
#include <set>

#include "mackey/errors.hpp"
#include "mackey/numtheory.hpp"

namespace mackey {

namespace {

constexpr std::size_t kNoCoset = static_cast<std::size_t>(-1);

} // namespace

struct FiniteGroup::Impl {
  unsigned degree = 1;
  std::vector<Permutation> elements;
  std::vector<Permutation> generators;
  std::vector<std::size_t> generator_indices;
  std::string name;
  std::vector<std::size_t> inverse_table;
  std::vector<unsigned long long> order_table;
  mutable std::once_flag classes_once;
  mutable std::vector<ConjugacyClass> classes;

  std::size_t find_index(const Permutation& g) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), g);
    if (it == elements.end() || !(*it == g)) return kNoCoset;
    return static_cast<std::size_t>(it - elements.begin());
  }

  void fill_tables() {
    inverse_table.resize(elements.size());
    order_table.resize(elements.size());
    generator_indices.reserve(generators.size());
    for (std::size_t i = 0; i < elements.size(); ++i) {
      inverse_table[i] = find_index(elements[i].inverse());
      order_table[i] = element_order(elements[i]);
    }
    for (const Permutation& g : generators) {
      std::size_t idx = find_index(g);
      if (idx == kNoCoset) throw error("group: generator missing from element list");
      generator_indices.push_back(idx);
    }
  }
};

unsigned FiniteGroup::degree() const { return impl_->degree; }
std::size_t FiniteGroup::order() const { return impl_->elements.size(); }
const std::string& FiniteGroup::name() const { return impl_->name; }
const std::vector<Permutation>& FiniteGroup::elements() const { return impl_->elements; }
const std::vector<Permutation>& FiniteGroup::generators() const { return impl_->generators; }

const Permutation& FiniteGroup::element(std::size_t index) const {
  if (index >= impl_->elements.size()) throw error("group: element index out of range");
  return impl_->elements[index];
}

std::optional<std::size_t> FiniteGroup::find(const Permutation& g) const {
  if (g.degree() != impl_->degree) return std::nullopt;
  std::size_t idx = impl_->find_index(g);
  if (idx == kNoCoset) return std::nullopt;
  return idx;
}

std::size_t FiniteGroup::index_of(const Permutation& g) const {
  auto idx = find(g);
  if (!idx) throw error("group: permutation is not an element of the group");
  return *idx;
}

std::size_t FiniteGroup::product(std::size_t a, std::size_t b) const {
  std::size_t idx = impl_->find_index(element(a) * element(b));
  if (idx == kNoCoset) throw consistency_error("group: product fell outside the element list");
  return idx;
}

std::size_t FiniteGroup::inverse(std::size_t a) const {
  if (a >= impl_->elements.size()) throw error("group: element index out of range");
  return impl_->inverse_table[a];
}

std::size_t FiniteGroup::conjugate(std::size_t a, std::size_t g) const {
  return product(product(inverse(g), a), g);
}

unsigned long long FiniteGroup::element_order_at(std::size_t a) const {
  if (a >= impl_->elements.size()) throw error("group: element index out of range");
  return impl_->order_table[a];
}

const std::vector<ConjugacyClass>& FiniteGroup::conjugacy_classes() const {
  const Impl& impl = *impl_;
  std::call_once(impl.classes_once, [&impl] {
    std::vector<ConjugacyClass> classes;
    std::vector<bool> assigned(impl.elements.size(), false);
    for (std::size_t start = 0; start < impl.elements.size(); ++start) {
      if (assigned[start]) continue;
      // Orbit of `start` under conjugation; the generators already reach the
      // whole class because conjugation by a word acts step by step.
      ConjugacyClass cls;
      cls.representative = start;
      std::vector<std::size_t> frontier{start};
      assigned[start] = true;
      while (!frontier.empty()) {
        std::size_t x = frontier.back();
        frontier.pop_back();
        cls.members.push_back(x);
        for (std::size_t g : impl.generator_indices) {
          Permutation moved = impl.elements[x].conjugated_by(impl.elements[g]);
          std::size_t idx = impl.find_index(moved);
          if (idx == kNoCoset) throw consistency_error("group: conjugate fell outside the group");
          if (!assigned[idx]) {
            assigned[idx] = true;
            frontier.push_back(idx);
          }
        }
      }
      std::sort(cls.members.begin(), cls.members.end());
      classes.push_back(std::move(cls));
    }
    std::stable_sort(classes.begin(), classes.end(),
                     [&impl](const ConjugacyClass& a, const ConjugacyClass& b) {
                       auto ka = impl.order_table[a.representative];
                       auto kb = impl.order_table[b.representative];
                       if (ka != kb) return ka < kb;
                       return a.representative < b.representative;
                     });
    impl.classes = std::move(classes);
  });
  return impl.classes;
}

FiniteGroup FiniteGroup::from_closed_elements(unsigned degree,
                                              std::vector<Permutation> elements,
                                              std::vector<Permutation> generators,
                                              std::string name) {
  if (elements.empty()) throw error("group: element list must not be empty");
  for (const Permutation& g : elements)
    if (g.degree() != degree) throw error("group: element degree mismatch");
  if (!std::is_sorted(elements.begin(), elements.end()))
    throw error("group: element list must be sorted");
  if (std::adjacent_find(elements.begin(), elements.end()) != elements.end())
    throw error("group: element list must not contain duplicates");
  if (!elements.front().is_identity())
    throw error("group: element list must contain the identity");
  auto impl = std::make_shared<Impl>();
  impl->degree = degree;
  impl->elements = std::move(elements);
  impl->generators = std::move(generators);
  impl->name = std::move(name);
  impl->fill_tables();
  return FiniteGroup(std::move(impl));
}

FiniteGroup generate_group(unsigned degree, std::vector<Permutation> generators,
                           std::size_t element_budget, std::string name) {
  if (degree == 0) throw error("generate_group: degree must be at least 1");
  for (const Permutation& g : generators)
    if (g.degree() != degree) throw error("generate_group: generator degree mismatch");

  std::set<Permutation> closure;
  std::queue<Permutation> frontier;
  closure.insert(Permutation::identity(degree));
  frontier.push(Permutation::identity(degree));
  while (!frontier.empty()) {
    Permutation current = std::move(frontier.front());
    frontier.pop();
    for (const Permutation& g : generators) {
      Permutation next = current * g;
      if (closure.insert(next).second) {
        if (closure.size() > element_budget)
          throw error("generate_group: element budget exceeded");
        frontier.push(std::move(next));
      }
    }
  }

  std::vector<Permutation> elements(closure.begin(), closure.end());
  return FiniteGroup::from_closed_elements(degree, std::move(elements),
                                           std::move(generators), std::move(name));
}

namespace {

// Closure of the given generators inside an enumerated group, as sorted
// element indices.
std::vector<std::size_t> index_closure(const FiniteGroup& parent,
                                       const std::vector<std::size_t>& generator_indices) {
  std::vector<bool> known(parent.order(), false);
  known[0] = true;
  std::vector<std::size_t> frontier{0};
  while (!frontier.empty()) {
    std::size_t current = frontier.back();
    frontier.pop_back();
    for (std::size_t g : generator_indices) {
      std::size_t next = parent.product(current, g);
      if (!known[next]) {
        known[next] = true;
        frontier.push_back(next);
      }
    }
  }
  std::vector<std::size_t> members;
  for (std::size_t i = 0; i < known.size(); ++i)
    if (known[i]) members.push_back(i);
  return members;
}

// Smallest-first generating set for a member list that is already closed.
std::vector<std::size_t> greedy_generators(const FiniteGroup& parent,
                                           const std::vector<std::size_t>& members) {
  std::vector<std::size_t> generators;
  std::vector<std::size_t> closed{0};
  for (std::size_t m : members) {
    if (std::binary_search(closed.begin(), closed.end(), m)) continue;
    generators.push_back(m);
    closed = index_closure(parent, generators);
  }
  return generators;
}

} // namespace

Subgroup::Subgroup(FiniteGroup parent, std::vector<std::size_t> members,
                   std::vector<std::size_t> generators)
    : parent_(std::move(parent)), members_(std::move(members)),
      generators_(std::move(generators)) {}

Subgroup Subgroup::trivial(const FiniteGroup& parent) {
  return Subgroup(parent, {0}, {});
}

Subgroup Subgroup::full(const FiniteGroup& parent) {
  std::vector<std::size_t> members(parent.order());
  for (std::size_t i = 0; i < members.size(); ++i) members[i] = i;
  std::vector<std::size_t> generators;
  for (const Permutation& g : parent.generators())
    generators.push_back(parent.index_of(g));
  return Subgroup(parent, std::move(members), std::move(generators));
}

Subgroup Subgroup::from_generator_indices(const FiniteGroup& parent,
                                          std::vector<std::size_t> generator_indices) {
  for (std::size_t g : generator_indices)
    if (g >= parent.order()) throw error("subgroup: generator index out of range");
  std::vector<std::size_t> members = index_closure(parent, generator_indices);
  return Subgroup(parent, std::move(members), std::move(generator_indices));
}

Subgroup Subgroup::from_generators(const FiniteGroup& parent,
                                   const std::vector<Permutation>& generators) {
  std::vector<std::size_t> indices;
  indices.reserve(generators.size());
  for (const Permutation& g : generators) indices.push_back(parent.index_of(g));
  return from_generator_indices(parent, std::move(indices));
}

bool Subgroup::contains_index(std::size_t element_index) const {
  return std::binary_search(members_.begin(), members_.end(), element_index);
}

const Permutation& Subgroup::member(std::size_t position) const {
  if (position >= members_.size()) throw error("subgroup: member position out of range");
  return parent_.element(members_[position]);
}

Subgroup Subgroup::conjugated_by(std::size_t g) const {
  std::vector<std::size_t> members;
  members.reserve(members_.size());
  for (std::size_t m : members_) members.push_back(parent_.conjugate(m, g));
  std::sort(members.begin(), members.end());
  std::vector<std::size_t> generators;
  generators.reserve(generators_.size());
  for (std::size_t m : generators_) generators.push_back(parent_.conjugate(m, g));
  return Subgroup(parent_, std::move(members), std::move(generators));
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  if (!parent_.same_group(other.parent_)) return false;
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

bool Subgroup::operator==(const Subgroup& other) const {
  return parent_.same_group(other.parent_) && members_ == other.members_;
}

Subgroup subgroup_from_member_indices(const FiniteGroup& parent,
                                      std::vector<std::size_t> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty() || members.front() != 0)
    throw error("subgroup: member list must contain the identity");
  if (members.back() >= parent.order())
    throw error("subgroup: member index out of range");
  if (parent.order() % members.size() != 0)
    throw error("subgroup: member count violates Lagrange");
  std::vector<std::size_t> generators = greedy_generators(parent, members);
  if (index_closure(parent, generators) != members)
    throw error("subgroup: member list is not closed under multiplication");
  return Subgroup(parent, std::move(members), std::move(generators));
}

Subgroup centralizer(const FiniteGroup& group, const Permutation& g) {
  std::size_t target = group.index_of(g);
  std::vector<std::size_t> members;
  for (std::size_t x = 0; x < group.order(); ++x)
    if (group.product(x, target) == group.product(target, x)) members.push_back(x);
  return subgroup_from_member_indices(group, std::move(members));
}

Subgroup centralizer_of_subgroup(const FiniteGroup& group, const Subgroup& h) {
  if (!h.parent().same_group(group))
    throw error("centralizer_of_subgroup: subgroup belongs to a different group");
  std::vector<std::size_t> members;
  for (std::size_t x = 0; x < group.order(); ++x) {
    bool commutes = true;
    for (std::size_t g : h.generator_indices()) {
      if (group.product(x, g) != group.product(g, x)) {
        commutes = false;
        break;
      }
    }
    if (commutes) members.push_back(x);
  }
  return subgroup_from_member_indices(group, std::move(members));
}

Subgroup normalizer(const FiniteGroup& group, const Subgroup& h) {
  if (!h.parent().same_group(group))
    throw error("normalizer: subgroup belongs to a different group");
  std::vector<std::size_t> members;
  for (std::size_t x = 0; x < group.order(); ++x) {
    bool normalizes = true;
    for (std::size_t g : h.generator_indices()) {
      if (!h.contains_index(group.conjugate(g, x))) {
        normalizes = false;
        break;
      }
    }
    if (normalizes) members.push_back(x);
  }
  return subgroup_from_member_indices(group, std::move(members));
}

Subgroup commutator_subgroup(const Subgroup& h, const Subgroup& k) {
  if (!h.parent().same_group(k.parent()))
    throw error("commutator_subgroup: subgroups belong to different groups");
  const FiniteGroup& group = h.parent();
  // Generated by every commutator [a, b]; pairs of generators alone would
  // miss the normal closure.
  std::vector<std::size_t> commutators;
  for (std::size_t a : h.member_indices()) {
    for (std::size_t b : k.member_indices()) {
      std::size_t ab = group.product(a, b);
      std::size_t ba = group.product(b, a);
      commutators.push_back(group.product(group.inverse(ba), ab));
    }
  }
  std::sort(commutators.begin(), commutators.end());
  commutators.erase(std::unique(commutators.begin(), commutators.end()), commutators.end());
  return Subgroup::from_generator_indices(group, std::move(commutators));
}

bool is_cyclic(const Subgroup& h) {
  for (std::size_t m : h.member_indices())
    if (h.parent().element_order_at(m) == h.order()) return true;
  return false;
}

bool is_cyclic(const FiniteGroup& group) {
  for (std::size_t i = 0; i < group.order(); ++i)
    if (group.element_order_at(i) == group.order()) return true;
  return false;
}

std::vector<ConjugacyClass> p_regular_classes(const FiniteGroup& group,
                                              unsigned long long p) {
  if (!is_prime(p)) throw error("p_regular_classes: p must be prime");
  std::vector<ConjugacyClass> regular;
  for (const ConjugacyClass& cls : group.conjugacy_classes())
    if (group.element_order_at(cls.representative) % p != 0) regular.push_back(cls);
  return regular;
}

struct QuotientGroup::Impl {
  Subgroup numerator;
  Subgroup kernel;
  FiniteGroup image;
  std::vector<std::size_t> coset_reps;
  std::vector<std::size_t> proj_by_position;   // numerator position -> image index
  std::vector<std::size_t> section_by_image;   // image index -> parent element index

  Impl(Subgroup h, Subgroup n, FiniteGroup img)
      : numerator(std::move(h)), kernel(std::move(n)), image(std::move(img)) {}
};

const Subgroup& QuotientGroup::numerator() const { return impl_->numerator; }
const Subgroup& QuotientGroup::kernel() const { return impl_->kernel; }
const FiniteGroup& QuotientGroup::image() const { return impl_->image; }
const std::vector<std::size_t>& QuotientGroup::coset_representatives() const {
  return impl_->coset_reps;
}

std::size_t QuotientGroup::project_index(std::size_t parent_element_index) const {
  const auto& members = impl_->numerator.member_indices();
  auto it = std::lower_bound(members.begin(), members.end(), parent_element_index);
  if (it == members.end() || *it != parent_element_index)
    throw error("quotient: element lies outside the numerator");
  return impl_->proj_by_position[static_cast<std::size_t>(it - members.begin())];
}

Permutation QuotientGroup::project(const Permutation& h) const {
  return impl_->image.element(project_index(impl_->numerator.parent().index_of(h)));
}

std::size_t QuotientGroup::section_index(std::size_t image_element_index) const {
  if (image_element_index >= impl_->section_by_image.size())
    throw error("quotient: image element index out of range");
  return impl_->section_by_image[image_element_index];
}

Permutation QuotientGroup::section(const Permutation& image_element) const {
  return impl_->numerator.parent().element(
      section_index(impl_->image.index_of(image_element)));
}

QuotientGroup quotient_group(const Subgroup& h, const Subgroup& n) {
  if (!h.parent().same_group(n.parent()))
    throw error("quotient_group: subgroups belong to different groups");
  if (!n.is_subset_of(h)) throw error("quotient_group: kernel is not contained in numerator");
  const FiniteGroup& parent = h.parent();
  for (std::size_t g : h.generator_indices())
    for (std::size_t m : n.member_indices())
      if (!n.contains_index(parent.conjugate(m, g)))
        throw error("quotient_group: kernel is not normal in numerator");

  // Left cosets, numbered by least element ascending; coset 0 is N itself.
  std::vector<std::size_t> coset_of(parent.order(), kNoCoset);
  std::vector<std::size_t> reps;
  for (std::size_t m : h.member_indices()) {
    if (coset_of[m] != kNoCoset) continue;
    std::size_t c = reps.size();
    reps.push_back(m);
    for (std::size_t x : n.member_indices()) coset_of[parent.product(m, x)] = c;
  }
  std::size_t coset_count = reps.size();
  if (coset_count * n.order() != h.order())
    throw consistency_error("quotient_group: coset partition has the wrong size");

  // Action of each numerator element on the cosets.
  std::vector<Permutation> action;
  action.reserve(h.order());
  for (std::size_t m : h.member_indices()) {
    std::vector<unsigned> images(coset_count);
    for (std::size_t j = 0; j < coset_count; ++j)
      images[j] = static_cast<unsigned>(coset_of[parent.product(m, reps[j])]);
    action.push_back(Permutation(std::move(images)));
  }

  std::vector<Permutation> image_elements = action;
  std::sort(image_elements.begin(), image_elements.end());
  image_elements.erase(std::unique(image_elements.begin(), image_elements.end()),
                       image_elements.end());
  if (image_elements.size() != coset_count)
    throw consistency_error("quotient_group: image is not faithful on the cosets");

  std::vector<Permutation> image_generators;
  {
    const auto& members = h.member_indices();
    for (std::size_t g : h.generator_indices()) {
      auto it = std::lower_bound(members.begin(), members.end(), g);
      image_generators.push_back(action[static_cast<std::size_t>(it - members.begin())]);
    }
  }

  FiniteGroup image = FiniteGroup::from_closed_elements(
      static_cast<unsigned>(coset_count), image_elements, std::move(image_generators), "");

  auto impl = std::make_shared<QuotientGroup::Impl>(h, n, image);
  impl->coset_reps = std::move(reps);
  impl->proj_by_position.reserve(action.size());
  for (const Permutation& pi : action) impl->proj_by_position.push_back(image.index_of(pi));
  impl->section_by_image.resize(coset_count);
  for (std::size_t k = 0; k < coset_count; ++k)
    impl->section_by_image[k] = impl->coset_reps[image.element(k)(0)];
  return QuotientGroup(std::move(impl));
}

FiniteGroup as_finite_group(const Subgroup& h, std::string name) {
  const FiniteGroup& parent = h.parent();
  std::vector<Permutation> elements;
  elements.reserve(h.order());
  for (std::size_t m : h.member_indices()) elements.push_back(parent.element(m));
  std::vector<Permutation> generators;
  generators.reserve(h.generator_indices().size());
  for (std::size_t g : h.generator_indices()) generators.push_back(parent.element(g));
  return FiniteGroup::from_closed_elements(parent.degree(), std::move(elements),
                                           std::move(generators), std::move(name));
}

} // namespace mackey
