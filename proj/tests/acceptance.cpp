// Acceptance gate: one pass/fail line per criterion, exit code = number of
// failed criteria.  Every numeric target is either a hand-derived constant
// or recomputed here through an independent route; library internals are
// never trusted as their own oracle.

#include <chrono>
#include <exception>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mackey/cartan.hpp"
#include "mackey/catalog.hpp"
#include "mackey/cli.hpp"
#include "mackey/group.hpp"
#include "mackey/numtheory.hpp"
#include "mackey/rational.hpp"

using namespace mackey;

namespace {

int failures = 0;

// Runs one criterion, enforcing a wall-clock limit (0 = none).  The body
// appends failure details to the stream it receives and returns true only
// when every check inside passed.
void criterion(int number, const std::string& title, double limit_seconds,
               const std::function<bool(std::ostream&)>& body) {
  std::ostringstream details;
  bool pass = false;
  double elapsed = 0.0;
  try {
    auto start = std::chrono::steady_clock::now();
    pass = body(details);
    elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit_seconds > 0 && elapsed > limit_seconds) {
      pass = false;
      details << "  exceeded the " << limit_seconds << " s budget\n";
    }
  } catch (const std::exception& e) {
    pass = false;
    details << "  threw: " << e.what() << "\n";
  }
  if (!pass) ++failures;
  std::ostringstream line;
  line << (pass ? "PASS" : "FAIL") << "  " << number << ". " << title;
  std::cout << line.str() << "  [" << elapsed << " s]\n" << details.str();
}

std::vector<std::pair<std::string, unsigned long long>> catalog_cases() {
  std::vector<std::pair<std::string, unsigned long long>> cases;
  for (const std::string& spec : builtin_verification_specs())
    for (unsigned long long p : {2ull, 3ull}) cases.emplace_back(spec, p);
  return cases;
}

Rational det_of(const std::string& spec, unsigned long long p) {
  return mackey_cartan_determinant(make_context(build_group(spec), p));
}

// p-regular elements form a subgroup of order |G|_{p'}: recomputed from the
// multiplication table, independent of the library's own criteria.
bool regular_elements_close(const FiniteGroup& g, unsigned long long p) {
  std::vector<std::size_t> regular;
  for (std::size_t i = 0; i < g.order(); ++i)
    if (g.element_order_at(i) % p != 0) regular.push_back(i);
  std::size_t coprime_part = g.order();
  while (coprime_part % p == 0) coprime_part /= p;
  if (regular.size() != coprime_part) return false;
  std::set<std::size_t> members(regular.begin(), regular.end());
  for (std::size_t a : regular)
    for (std::size_t b : regular)
      if (!members.count(g.product(a, b))) return false;
  return true;
}

} // namespace

int main() {
  criterion(1, "determinants of cyclic groups of prime power order match the closed form",
            5.0, [](std::ostream& details) {
    bool ok = true;
    for (unsigned long long p : {2ull, 3ull}) {
      Integer order = 1;
      for (unsigned n = 1; n <= 3; ++n) {
        order *= p;
        // p^(n(n-1)/2) * prod_{i=1..n} (p + i(p-1))
        Integer expected = 1;
        for (unsigned i = 0; i < n * (n - 1) / 2; ++i) expected *= p;
        for (unsigned long long i = 1; i <= n; ++i) expected *= Integer(p + i * (p - 1));
        std::string spec = "C" + order.str();
        Rational det = det_of(spec, p);
        if (det != Rational(expected)) {
          details << "  " << spec << " at p = " << p << ": got " << det << ", expected "
                  << expected << "\n";
          ok = false;
        }
      }
    }
    // The same values as plain constants, guarding the formula transcription.
    ok = ok && det_of("C2", 2) == 3 && det_of("C4", 2) == 24 && det_of("C8", 2) == 480 &&
         det_of("C3", 3) == 5 && det_of("C9", 3) == 105 && det_of("C27", 3) == 8505;
    return ok;
  });

  criterion(2, "determinants of elementary abelian groups of rank 2 match the closed form",
            5.0, [](std::ostream& details) {
    bool ok = true;
    for (unsigned long long p : {2ull, 3ull}) {
      // p * (2p-1)^(p+1) * (p^2 + p - 1)
      Integer expected = p;
      for (unsigned long long i = 0; i <= p; ++i) expected *= Integer(2 * p - 1);
      expected *= Integer(p * p + p - 1);
      std::string spec = "EA(" + std::to_string(p) + ",2)";
      Rational det = det_of(spec, p);
      if (det != Rational(expected)) {
        details << "  " << spec << ": got " << det << ", expected " << expected << "\n";
        ok = false;
      }
    }
    ok = ok && det_of("EA(2,2)", 2) == 270 && det_of("EA(3,2)", 3) == 20625;
    return ok;
  });

  criterion(3, "hand-derived determinants for the symmetric group of degree 3", 0, [](std::ostream& details) {
    Rational at2 = det_of("S3", 2);
    Rational at3 = det_of("S3", 3);
    if (at2 != 3) details << "  p = 2: got " << at2 << ", expected 3\n";
    if (at3 != 5) details << "  p = 3: got " << at3 << ", expected 5\n";
    return at2 == 3 && at3 == 5;
  });

  criterion(4, "closed forms agree with their independent oracles across the catalog",
            60.0, [](std::ostream& details) {
    bool ok = true;
    for (const auto& [spec, p] : catalog_cases()) {
      AnalysisContext ctx = make_context(build_group(spec), p);
      for (std::size_t i = 0; i < ctx.pairs.size(); ++i) {
        const MackeyPair& pair = ctx.pairs[i];
        if (ordinary_pairing(pair) != ordinary_pairing_moebius(pair)) {
          details << "  " << spec << " p = " << p << " pair " << i
                  << ": multiplicity pairing disagrees with the Moebius sum\n";
          ok = false;
        }
        if (brauer_pairing(pair) != brauer_pairing_decomposed(pair, ctx.p_classes)) {
          details << "  " << spec << " p = " << p << " pair " << i
                  << ": summed pairing disagrees with its decomposition\n";
          ok = false;
        }
      }
      if (mackey_cartan_determinant(ctx) != mackey_cartan_determinant_decomposed(ctx)) {
        details << "  " << spec << " p = " << p << ": the two determinant paths disagree\n";
        ok = false;
      }
    }
    return ok;
  });

  criterion(5, "the three rank counts coincide, with the expected spot values", 0,
            [](std::ostream& details) {
    bool ok = true;
    for (const auto& [spec, p] : catalog_cases()) {
      // Throws if the internal triple count disagrees.
      AnalysisContext ctx = make_context(build_group(spec), p);
      std::size_t rank = cohomological_cartan_rank(ctx);
      std::size_t cyclic = 0;
      for (const MackeyPair& pair : ctx.pairs)
        if (pair.cyclic()) ++cyclic;
      if (rank != cyclic) {
        details << "  " << spec << " p = " << p << ": rank " << rank << " but " << cyclic
                << " cyclic pairs\n";
        ok = false;
      }
    }
    auto spot = [&](const std::string& spec, unsigned long long p, std::size_t rank,
                    std::size_t size) {
      AnalysisContext ctx = make_context(build_group(spec), p);
      if (cohomological_cartan_rank(ctx) == rank && cohomological_cartan_size(ctx) == size)
        return true;
      details << "  " << spec << " p = " << p << ": got rank "
              << cohomological_cartan_rank(ctx) << " size " << cohomological_cartan_size(ctx)
              << ", expected " << rank << "/" << size << "\n";
      return false;
    };
    ok = spot("S3", 3, 3, 4) && ok;
    ok = spot("S3", 2, 3, 3) && ok;
    ok = spot("C2", 2, 2, 2) && ok;
    return ok;
  });

  criterion(6, "nonsingularity is equivalent to p-nilpotency with a cyclic Sylow subgroup",
            0, [](std::ostream& details) {
    bool ok = true;
    for (const auto& [spec, p] : catalog_cases()) {
      AnalysisContext ctx = make_context(build_group(spec), p);
      bool full_rank = cohomological_cartan_rank(ctx) == cohomological_cartan_size(ctx);
      bool structural = is_p_nilpotent(ctx.group, p) && sylow_is_cyclic(ctx);
      if (full_rank != structural) {
        details << "  " << spec << " p = " << p << ": rank criterion says "
                << (full_rank ? "nonsingular" : "singular")
                << ", group structure says the opposite\n";
        ok = false;
      }
    }
    auto spot = [&](const std::string& spec, unsigned long long p, bool expected) {
      bool got = cohomological_cartan_nonsingular(make_context(build_group(spec), p));
      if (got != expected)
        details << "  " << spec << " p = " << p << ": expected "
                << (expected ? "nonsingular" : "singular") << "\n";
      return got == expected;
    };
    ok = spot("S3", 2, true) && ok;
    ok = spot("S3", 3, false) && ok;
    ok = spot("A4", 2, false) && ok;
    ok = spot("Q8", 2, false) && ok;
    ok = spot("C12", 2, true) && ok;
    return ok;
  });

  criterion(7, "cohomological determinants match hand-computed matrices, both product forms agreeing",
            0, [](std::ostream& details) {
    bool ok = true;
    auto spot = [&](const std::string& spec, unsigned long long p, const Rational& expected) {
      Rational got = cohomological_cartan_determinant(make_context(build_group(spec), p));
      if (got != expected) {
        details << "  " << spec << " p = " << p << ": got " << got << ", expected "
                << expected << "\n";
        return false;
      }
      return true;
    };
    // det [[2,1],[1,1]] = 1, det [[3,1],[1,1]] = 2, and the diagonally
    // extended matrix for the symmetric group of degree 3 at p = 2.
    ok = spot("C2", 2, 1) && ok;
    ok = spot("C3", 3, 2) && ok;
    ok = spot("S3", 2, 1) && ok;
    // Both product forms are evaluated and compared inside; a disagreement
    // throws and fails the criterion.
    for (const auto& [spec, p] : catalog_cases()) {
      AnalysisContext ctx = make_context(build_group(spec), p);
      if (cohomological_cartan_nonsingular(ctx)) cohomological_cartan_determinant(ctx);
    }
    return ok;
  });

  criterion(8, "nonsingular determinants factor exactly as a power of p times a power of p-1",
            0, [](std::ostream& details) {
    bool ok = true;
    for (const auto& [spec, p] : catalog_cases()) {
      AnalysisContext ctx = make_context(build_group(spec), p);
      if (!cohomological_cartan_nonsingular(ctx)) continue;
      Rational det = cohomological_cartan_determinant(ctx);
      if (denominator(det) != 1 || numerator(det) < 1) {
        details << "  " << spec << " p = " << p << ": determinant " << det
                << " is not a positive integer\n";
        ok = false;
        continue;
      }
      Integer n = numerator(det);
      while (n % p == 0) n /= p;
      if (p > 2)
        while (n % (p - 1) == 0) n /= (p - 1);
      if (n != 1) {
        details << "  " << spec << " p = " << p << ": determinant " << det
                << " has a stray factor " << n << "\n";
        ok = false;
      }
    }
    return ok;
  });

  criterion(9, "both p-nilpotency criteria agree across the catalog", 0,
            [](std::ostream& details) {
    bool ok = true;
    for (const auto& [spec, p] : catalog_cases()) {
      FiniteGroup g = build_group(spec);
      // is_p_nilpotent evaluates the normalizer criterion against the
      // p-regular closure criterion and throws on disagreement; the closure
      // criterion is recomputed here from the multiplication table.
      bool library = is_p_nilpotent(g, p);
      bool recount = regular_elements_close(g, p);
      if (library != recount) {
        details << "  " << spec << " p = " << p << ": library says "
                << (library ? "yes" : "no") << ", direct recount says the opposite\n";
        ok = false;
      }
    }
    return ok;
  });

  criterion(10, "json output is byte-identical across repeated runs", 0,
            [](std::ostream& details) {
    bool ok = true;
    for (const auto& [spec, p] : catalog_cases()) {
      std::vector<std::string> args = {"analyze", "--group", spec,
                                       "--prime", std::to_string(p),
                                       "--format", "json", "--verify"};
      std::ostringstream out1, err1, out2, err2;
      int code1 = run_cli(args, out1, err1);
      int code2 = run_cli(args, out2, err2);
      if (code1 != 0 || code2 != 0 || out1.str() != out2.str() || out1.str().empty()) {
        details << "  " << spec << " p = " << p << ": runs differ or failed\n";
        ok = false;
      }
    }
    return ok;
  });

  std::cout << (10 - failures) << "/10 criteria passed\n";
  return failures;
}
