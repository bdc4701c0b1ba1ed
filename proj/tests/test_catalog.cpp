#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "mackey/catalog.hpp"
#include "mackey/errors.hpp"
#include "mackey/group.hpp"

using namespace mackey;

namespace {

Permutation random_permutation(unsigned degree, std::mt19937& rng) {
  std::vector<unsigned> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  for (unsigned i = degree; i > 1; --i) {
    std::uniform_int_distribution<unsigned> pick(0, i - 1);
    std::swap(images[i - 1], images[pick(rng)]);
  }
  return Permutation(std::move(images));
}

} // namespace

TEST_CASE("builtin specs produce the advertised groups") {
  CHECK_EQ(build_group("C1").order(), 1);
  CHECK_EQ(build_group("C12").order(), 12);
  CHECK(is_cyclic(build_group("C12")));

  FiniteGroup ea = build_group("EA(2,2)");
  CHECK_EQ(ea.order(), 4);
  CHECK_EQ(ea.degree(), 4);
  for (std::size_t i = 0; i < ea.order(); ++i) CHECK(ea.element_order_at(i) <= 2);

  FiniteGroup q8 = build_group("Q8");
  CHECK_EQ(q8.order(), 8);
  std::size_t involutions = 0;
  for (std::size_t i = 0; i < q8.order(); ++i)
    if (q8.element_order_at(i) == 2) ++involutions;
  CHECK_EQ(involutions, 1);

  FiniteGroup d4 = build_group("D4");
  CHECK_EQ(d4.order(), 8);
  CHECK_EQ(d4.conjugacy_classes().size(), 5);  // nonabelian of order 8

  CHECK_EQ(build_group("D6").order(), 12);
  CHECK_EQ(build_group("S4").order(), 24);
  CHECK_EQ(build_group("A4").order(), 12);
  CHECK_EQ(build_group("S1").order(), 1);
  CHECK_EQ(build_group("A2").order(), 1);
}

TEST_CASE("products act on disjoint points") {
  FiniteGroup g = build_group("S3xC2");
  CHECK_EQ(g.order(), 12);
  CHECK_EQ(g.degree(), 5);
  CHECK_EQ(g.name(), "S3xC2");

  FiniteGroup cube = build_group("C2xC2xC2");
  CHECK_EQ(cube.order(), 8);
  CHECK_EQ(cube.degree(), 6);
  for (std::size_t i = 0; i < cube.order(); ++i) CHECK(cube.element_order_at(i) <= 2);

  CHECK_EQ(build_group("C3xC4").order(), 12);
  CHECK(is_cyclic(build_group("C3xC4")));  // coprime orders
}

TEST_CASE("the spec string becomes the name, whitespace trimmed") {
  CHECK_EQ(build_group("S3").name(), "S3");
  CHECK_EQ(build_group(" S3 ").name(), "S3");
}

TEST_CASE("the order limit is enforced before generation") {
  CHECK_THROWS_AS(build_group("S4", 10), error);
  CHECK_THROWS_AS(build_group("C5000x C2", 6000), error);  // 10000 > 6000
  CHECK_NOTHROW(build_group("S4", 24));
}

TEST_CASE("malformed specs are rejected") {
  for (const char* bad : {"", "  ", "X5", "C", "C0", "S0", "D2", "D0", "EA(4,2)",
                          "EA(2,0)", "EA(2)", "EA(2,2", "Q16", "S3x", "xS3",
                          "S3xX1", "file:/nonexistent-path", "C2xfile:/tmp/f"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(build_group(bad), error);
  }
}

TEST_CASE("every builtin verification spec builds") {
  auto specs = builtin_verification_specs();
  CHECK_EQ(specs.size(), 20);
  for (const std::string& spec : specs) {
    FiniteGroup g = build_group(spec);
    CHECK_EQ(g.name(), spec);
    CHECK(g.order() >= 1);
    CHECK(g.order() <= 24);
  }
}

TEST_CASE("generator files parse") {
  auto [degree, gens] = parse_generators(
      "# a comment\n"
      "degree 3\n"
      "\n"
      "(1 2)\n"
      "  (1 2 3)  \n");
  CHECK_EQ(degree, 3);
  REQUIRE_EQ(gens.size(), 2);
  CHECK_EQ(gens[0], Permutation({1, 0, 2}));
  CHECK_EQ(gens[1], Permutation({1, 2, 0}));

  auto [d2, identity_only] = parse_generators("degree 4\r\n()\r\n");
  CHECK_EQ(d2, 4);
  REQUIRE_EQ(identity_only.size(), 1);
  CHECK(identity_only[0].is_identity());

  // Disjoint cycles on one line, singleton cycles allowed.
  auto [d3, one] = parse_generators("degree 5\n(1 2)(4 5)(3)\n");
  CHECK_EQ(d3, 5);
  CHECK_EQ(one.at(0), Permutation({1, 0, 2, 4, 3}));
}

TEST_CASE("generator files reject malformed input") {
  CHECK_THROWS_AS(parse_generators(""), error);
  CHECK_THROWS_AS(parse_generators("(1 2)\n"), error);           // missing header
  CHECK_THROWS_AS(parse_generators("degree\n"), error);
  CHECK_THROWS_AS(parse_generators("degree 3 junk\n"), error);
  CHECK_THROWS_AS(parse_generators("degree 0\n"), error);
  CHECK_THROWS_AS(parse_generators("degree 2\n(1 3)\n"), error); // point out of range
  CHECK_THROWS_AS(parse_generators("degree 3\n(1 2 1)\n"), error);
  CHECK_THROWS_AS(parse_generators("degree 3\n(1 2)(2 3)\n"), error);
  CHECK_THROWS_AS(parse_generators("degree 3\n(1 2\n"), error);  // unterminated
  CHECK_THROWS_AS(parse_generators("degree 3\n1 2 3\n"), error); // no parentheses
  CHECK_THROWS_AS(parse_generators("degree 3\n(1 x)\n"), error);

  // Errors carry the offending line number.
  try {
    parse_generators("degree 3\n(1 2)\n(9)\n");
    FAIL("expected an error");
  } catch (const error& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("formatting is canonical and round-trips") {
  CHECK_EQ(format_generators(4, {Permutation::identity(4)}), "degree 4\n()\n");
  CHECK_EQ(format_generators(4, {Permutation({1, 0, 3, 2})}), "degree 4\n(1 2)(3 4)\n");
  CHECK_THROWS_AS(format_generators(3, {Permutation::identity(4)}), error);

  std::mt19937 rng(20260818u);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<Permutation> gens{random_permutation(10, rng),
                                  random_permutation(10, rng)};
    std::string text = format_generators(10, gens);
    auto [degree, parsed] = parse_generators(text);
    CHECK_EQ(degree, 10);
    CHECK_EQ(parsed, gens);
    CHECK_EQ(format_generators(degree, parsed), text);
  }
}

TEST_CASE("file-backed specs load through the same parser") {
  std::string path = "test_catalog_generators.txt";
  {
    std::ofstream out(path);
    out << "degree 4\n(1 2)(3 4)\n(1 3)(2 4)\n";
  }
  FiniteGroup g = build_group("file:" + path);
  CHECK_EQ(g.order(), 4);
  CHECK_EQ(g.name(), "file:" + path);
  std::remove(path.c_str());
}

TEST_CASE("the catalog listing is stable and mentions every builtin spec") {
  std::string listing = catalog_listing();
  CHECK_EQ(listing, catalog_listing());
  for (const char* needle :
       {"C<n>", "S<n>", "A<n>", "D<n>", "EA(p,k)", "Q8", "file:", "degree N"}) {
    CAPTURE(needle);
    CHECK(listing.find(needle) != std::string::npos);
  }
  for (const std::string& spec : builtin_verification_specs())
    CHECK(listing.find(spec) != std::string::npos);
}
