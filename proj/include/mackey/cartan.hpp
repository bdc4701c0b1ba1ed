#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mackey/group.hpp"
#include "mackey/pairs.hpp"
#include "mackey/psubgroup.hpp"
#include "mackey/rational.hpp"

namespace mackey {

// Everything the determinant and rank formulas consume, computed once:
// the p-subgroup classes and the conjugacy classes of pairs (R, s).
struct AnalysisContext {
  FiniteGroup group;
  unsigned long long prime = 2;
  std::vector<PSubgroupClass> p_classes;
  std::vector<MackeyPair> pairs;
};

AnalysisContext make_context(const FiniteGroup& group, unsigned long long p);

// Multiplicity pairing of the trivial module against the primitive
// idempotent labelled by (R, s): phi(|R|) / |N_G(R, s)| when <sR> is
// cyclic, zero otherwise.
Rational ordinary_pairing(const MackeyPair& pair);

// The same value by an independent route: a Möbius-weighted sum of fixed
// point counts over the s-invariant subgroups Q <= R,
//   sum_Q |C_Q(s)| * mu((Q, R)^s)  /  (|C_R(s)| * |C_{N_G(R)/R}(s)|).
Rational ordinary_pairing_moebius(const MackeyPair& pair);

// Decomposition of the pair's idempotent in the Brauer quotient at the
// p-subgroup q: one pair over N_G(q)/q per double coset x of
// N_G(q) \ G / N_G(R, s) with q normal in the x-conjugate of <sR>.
// The results carry canonical labels and are pairwise distinct.
std::vector<MackeyPair> brauer_quotient_pairs(const MackeyPair& pair, const Subgroup& q);

// Pairing summed over all Brauer quotients, in closed form:
//   (1 / |C_{N_G(R)/R}(s)|) * sum of 1/order(x) over the abelian
//   quotient R / [<sR>, R].
Rational brauer_pairing(const MackeyPair& pair);

// The same value by decomposing over every p-subgroup class and applying
// the ordinary pairing to each Brauer constituent.
Rational brauer_pairing_decomposed(const MackeyPair& pair);
Rational brauer_pairing_decomposed(const MackeyPair& pair,
                                   const std::vector<PSubgroupClass>& p_classes);

// One pair's contribution to the Mackey Cartan determinant:
//   |C|_p * |C| * brauer_pairing, with C the centralizer of s in N_G(R)/R.
Rational pair_determinant_factor(const MackeyPair& pair);

// Determinant of the Cartan matrix of the Mackey algebra (the summand
// attached to p): the product of the pair factors.
Rational mackey_cartan_determinant(const AnalysisContext& context);

// Same product with every pairing evaluated through its Brauer
// decomposition instead of the closed form.
Rational mackey_cartan_determinant_decomposed(const AnalysisContext& context);

// Determinant of the Cartan matrix of the group algebra:
//   product over p-regular classes of the p-part of the centralizer order.
Integer group_algebra_cartan_determinant(const FiniteGroup& group, unsigned long long p);

// Rank of the Cartan matrix of the cohomological Mackey algebra.  Three
// counts must coincide: pairs with cyclic <sR>; orbit sums over cyclic
// p-subgroup classes; sums of cyclic p-subgroup class counts over the
// centralizers of p-regular classes.  Disagreement is an internal error.
std::size_t cohomological_cartan_rank(const AnalysisContext& context);

// Size of that Cartan matrix: the number of pair classes.
std::size_t cohomological_cartan_size(const AnalysisContext& context);

// Normal p-complement test.  Two criteria are evaluated and must agree:
// N_G(R)/C_G(R) a p-group for every p-subgroup class, and the p-regular
// elements forming a subgroup (closed, of full p'-order).
bool is_p_nilpotent(const FiniteGroup& group, unsigned long long p);

bool sylow_is_cyclic(const AnalysisContext& context);

// Nonsingularity of the cohomological Cartan matrix.  rank == size must
// agree with (p-nilpotent and cyclic Sylow p-subgroup).
bool cohomological_cartan_nonsingular(const AnalysisContext& context);

// Determinant of the cohomological Cartan matrix in the nonsingular case
// (error otherwise).  Two product forms are evaluated and must agree:
//   (i)  prod_R (phi(|R|)/|R|)^(number of p-regular classes of N_G(R)/R)
//               * det of the group algebra Cartan matrix of N_G(R)/R,
//   (ii) prod_R prod_x (phi(|R|)/|R|) * |C_{N_G(R)/R}(x)|_p
//        over p-regular class representatives x.
Rational cohomological_cartan_determinant(const AnalysisContext& context);

struct PairRow {
  std::size_t r_order = 1;
  unsigned long long s_order = 1;
  std::size_t centralizer_order = 1;
  unsigned long long centralizer_p_part = 1;
  Rational factor;
  bool cyclic = true;
};

struct VerificationRecord {
  std::string check;
  std::string subject;
  bool pass = false;
};

struct CartanReport {
  std::string group_name;
  std::size_t order = 1;
  unsigned degree = 1;
  unsigned long long prime = 2;
  std::vector<PairRow> rows;
  Rational det_mackey;
  std::size_t comackey_rank = 0;
  std::size_t comackey_size = 0;
  bool nonsingular = false;
  std::optional<Rational> det_comackey;  // present exactly when nonsingular
  bool p_nilpotent = false;
  bool sylow_cyclic = false;
  std::optional<std::vector<VerificationRecord>> verification;
};

// Full analysis.  With verify set, every closed-form value is recomputed
// through an independent route and the outcomes are recorded.  Pairing and
// determinant comparisons land in the records as pass/fail; the structural
// cross-checks (rank counts, nilpotency and nonsingularity criteria) guard
// internal invariants and throw consistency_error on mismatch instead.
CartanReport analyze(const FiniteGroup& group, unsigned long long p, bool verify = false);

} // namespace mackey
