#include "mackey/pairs.hpp"

#include <algorithm>
#include <numeric>

#include "mackey/errors.hpp"
#include "mackey/numtheory.hpp"
#include "mackey/psubgroup.hpp"

namespace mackey {

struct MackeyPair::Impl {
  FiniteGroup group;
  unsigned long long prime = 2;
  Subgroup r;
  QuotientGroup quotient;
  std::size_t s_bar_index = 0;
  std::size_t s_lift_index = 0;
  Subgroup centralizer_bar;
  Subgroup stabilizer;
  Subgroup preimage_sr;
  bool cyclic = false;

  Impl(FiniteGroup g, Subgroup r_in, QuotientGroup q, Subgroup c, Subgroup st, Subgroup pre)
      : group(std::move(g)), r(std::move(r_in)), quotient(std::move(q)),
        centralizer_bar(std::move(c)), stabilizer(std::move(st)),
        preimage_sr(std::move(pre)) {}
};

const FiniteGroup& MackeyPair::group() const { return impl_->group; }
unsigned long long MackeyPair::prime() const { return impl_->prime; }
const Subgroup& MackeyPair::r() const { return impl_->r; }
std::size_t MackeyPair::r_order() const { return impl_->r.order(); }
const QuotientGroup& MackeyPair::quotient() const { return impl_->quotient; }
const Permutation& MackeyPair::s_bar() const {
  return impl_->quotient.image().element(impl_->s_bar_index);
}
std::size_t MackeyPair::s_bar_index() const { return impl_->s_bar_index; }
unsigned long long MackeyPair::s_order() const {
  return impl_->quotient.image().element_order_at(impl_->s_bar_index);
}
const Permutation& MackeyPair::s_lift() const {
  return impl_->group.element(impl_->s_lift_index);
}
std::size_t MackeyPair::s_lift_index() const { return impl_->s_lift_index; }
const Subgroup& MackeyPair::centralizer_bar() const { return impl_->centralizer_bar; }
const Subgroup& MackeyPair::stabilizer() const { return impl_->stabilizer; }
std::size_t MackeyPair::stabilizer_order() const { return impl_->stabilizer.order(); }
const Subgroup& MackeyPair::preimage_sr() const { return impl_->preimage_sr; }
bool MackeyPair::cyclic() const { return impl_->cyclic; }

MackeyPair make_mackey_pair_with_quotient(const FiniteGroup& group, unsigned long long p,
                                          Subgroup r, QuotientGroup quotient,
                                          std::size_t s_bar_index) {
  if (!is_prime(p)) throw error("mackey_pair: p must be prime");
  if (!r.parent().same_group(group))
    throw error("mackey_pair: subgroup belongs to a different group");
  {
    std::size_t n = r.order();
    while (n % p == 0) n /= p;
    if (n != 1) throw error("mackey_pair: subgroup order is not a power of p");
  }
  if (!(quotient.kernel() == r))
    throw error("mackey_pair: quotient kernel differs from the given subgroup");
  for (std::size_t g : quotient.numerator().generator_indices())
    if (!(r.conjugated_by(g) == r))
      throw error("mackey_pair: quotient numerator does not normalize the subgroup");
  const FiniteGroup& image = quotient.image();
  if (s_bar_index >= image.order()) throw error("mackey_pair: quotient element out of range");
  if (image.element_order_at(s_bar_index) % p == 0)
    throw error("mackey_pair: quotient element order is divisible by p");

  const Subgroup& n_r = quotient.numerator();
  Subgroup centralizer_bar = centralizer(image, image.element(s_bar_index));

  // N_G(R, s): the part of N_G(R) fixing s under conjugation in the quotient.
  std::vector<std::size_t> stabilizer_members;
  for (std::size_t g : n_r.member_indices()) {
    std::size_t gi = quotient.project_index(g);
    if (image.product(gi, s_bar_index) == image.product(s_bar_index, gi))
      stabilizer_members.push_back(g);
  }
  Subgroup stabilizer = subgroup_from_member_indices(group, std::move(stabilizer_members));
  if (stabilizer.order() != r.order() * centralizer_bar.order())
    throw consistency_error(
        "mackey_pair: stabilizer order breaks the exact sequence 1 -> R -> N_G(R,s) -> C(s) -> 1");

  std::size_t s_lift_index = quotient.section_index(s_bar_index);
  std::vector<std::size_t> preimage_generators = r.generator_indices();
  preimage_generators.push_back(s_lift_index);
  Subgroup preimage = Subgroup::from_generator_indices(group, std::move(preimage_generators));

  auto impl = std::make_shared<MackeyPair::Impl>(group, std::move(r), std::move(quotient),
                                                 std::move(centralizer_bar),
                                                 std::move(stabilizer), std::move(preimage));
  impl->prime = p;
  impl->s_bar_index = s_bar_index;
  impl->s_lift_index = s_lift_index;
  impl->cyclic = is_cyclic(impl->preimage_sr);
  return MackeyPair(std::move(impl));
}

MackeyPair make_mackey_pair(const FiniteGroup& group, unsigned long long p, Subgroup r,
                            const Permutation& s_bar) {
  Subgroup norm = normalizer(group, r);
  QuotientGroup quotient = quotient_group(norm, r);
  std::size_t s_index = quotient.image().index_of(s_bar);
  return make_mackey_pair_with_quotient(group, p, std::move(r), std::move(quotient), s_index);
}

std::vector<MackeyPair> enumerate_pairs(const FiniteGroup& group, unsigned long long p) {
  std::vector<MackeyPair> pairs;
  for (const PSubgroupClass& cls : p_subgroups_up_to_conjugacy(group, p)) {
    QuotientGroup quotient = quotient_group(cls.normalizer, cls.representative);
    const FiniteGroup& image = quotient.image();
    std::vector<ConjugacyClass> regular = p_regular_classes(image, p);

    // Fold the residual N_G(R)-action on those classes.  It factors through
    // inner automorphisms of the quotient, so classes are already whole
    // orbits; the fold is kept as a guard.
    std::vector<std::size_t> class_of(image.order(), 0);
    for (std::size_t c = 0; c < regular.size(); ++c)
      for (std::size_t m : regular[c].members) class_of[m] = c + 1;  // 0 = not p-regular
    std::vector<std::size_t> orbit(regular.size());
    std::iota(orbit.begin(), orbit.end(), 0u);
    auto root = [&](std::size_t c) {
      while (orbit[c] != c) c = orbit[c] = orbit[orbit[c]];
      return c;
    };
    for (std::size_t c = 0; c < regular.size(); ++c) {
      for (const Permutation& g : image.generators()) {
        std::size_t moved = image.index_of(
            image.element(regular[c].representative).conjugated_by(g));
        std::size_t target = class_of[moved];
        if (target == 0)
          throw consistency_error("enumerate_pairs: conjugate left the p-regular classes");
        std::size_t a = root(c);
        std::size_t b = root(target - 1);
        if (a != b) orbit[std::max(a, b)] = std::min(a, b);
      }
    }
    for (std::size_t c = 0; c < regular.size(); ++c) {
      if (root(c) != c) continue;
      pairs.push_back(make_mackey_pair_with_quotient(group, p, cls.representative, quotient,
                                                     regular[c].representative));
    }
  }
  return pairs;
}

Subgroup pair_stabilizer(const MackeyPair& pair) { return pair.stabilizer(); }
Subgroup pair_preimage_sr(const MackeyPair& pair) { return pair.preimage_sr(); }

bool pairs_are_conjugate(const MackeyPair& a, const MackeyPair& b) {
  if (!a.group().same_group(b.group()) || a.prime() != b.prime())
    throw error("pairs_are_conjugate: pairs live in different ambient settings");
  if (a.r_order() != b.r_order() || a.s_order() != b.s_order()) return false;
  const FiniteGroup& group = a.group();
  const std::vector<std::size_t>& target = b.r().member_indices();
  for (std::size_t g = 0; g < group.order(); ++g) {
    std::vector<std::size_t> moved;
    moved.reserve(target.size());
    for (std::size_t m : a.r().member_indices()) moved.push_back(group.conjugate(m, g));
    std::sort(moved.begin(), moved.end());
    if (moved != target) continue;
    std::size_t lifted = group.conjugate(a.s_lift_index(), g);
    if (b.quotient().project_index(lifted) == b.s_bar_index()) return true;
  }
  return false;
}

MackeyPair inverse_pair(const MackeyPair& pair) {
  const FiniteGroup& image = pair.quotient().image();
  std::size_t inverse_index = image.inverse(pair.s_bar_index());
  for (const ConjugacyClass& cls : p_regular_classes(image, pair.prime())) {
    if (std::binary_search(cls.members.begin(), cls.members.end(), inverse_index))
      return make_mackey_pair_with_quotient(pair.group(), pair.prime(), pair.r(),
                                            pair.quotient(), cls.representative);
  }
  throw consistency_error("inverse_pair: inverse left the p-regular classes");
}

MackeyPair canonicalize_pair(const MackeyPair& pair) {
  const FiniteGroup& group = pair.group();
  std::size_t witness = 0;
  Subgroup canonical_r = canonical_conjugate(group, pair.r(), &witness);
  QuotientGroup quotient =
      canonical_r == pair.r()
          ? pair.quotient()
          : quotient_group(normalizer(group, canonical_r), canonical_r);
  std::size_t moved_lift = group.conjugate(pair.s_lift_index(), witness);
  std::size_t moved_index = quotient.project_index(moved_lift);
  for (const ConjugacyClass& cls : p_regular_classes(quotient.image(), pair.prime())) {
    if (std::binary_search(cls.members.begin(), cls.members.end(), moved_index))
      return make_mackey_pair_with_quotient(group, pair.prime(), std::move(canonical_r),
                                            std::move(quotient), cls.representative);
  }
  throw consistency_error("canonicalize_pair: conjugate left the p-regular classes");
}

bool same_pair_label(const MackeyPair& a, const MackeyPair& b) {
  if (!a.group().same_group(b.group()) || a.prime() != b.prime()) return false;
  return a.r().member_indices() == b.r().member_indices() && a.s_bar() == b.s_bar();
}

} // namespace mackey
