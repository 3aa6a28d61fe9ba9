#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncyc/notation.hpp"
#include "ncyc/oracle.hpp"
#include "ncyc/random.hpp"

using namespace ncyc;

TEST_CASE("parse cycle notation") {
  const auto p = parse_cycles("(1 2 3)", 5);
  CHECK(p.degree() == 5);
  CHECK(p(0) == 1);
  CHECK(p(2) == 0);
  CHECK(p(3) == 3);
  CHECK(p(4) == 4);

  const auto q = parse_cycles("(1 3)(2 4)");
  CHECK(q.degree() == 4);
  CHECK(q == Permutation(std::vector<Point>{2, 3, 0, 1}));

  CHECK(parse_cycles("(1,3) (2, 4)") == q);
  CHECK(parse_cycles("  (1  3)(2 4)  ") == q);
  CHECK(parse_cycles("(2)(1 3)(4)") == parse_cycles("(1 3)", 4));
  CHECK(parse_cycles("()").degree() == 1);
  CHECK(parse_cycles("()", 6).is_identity());
  CHECK(parse_cycles("()", 6).degree() == 6);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_cycles("(1 2)(2 3)"), ParseError);
  CHECK_THROWS_AS(parse_cycles("(1 2 1)"), ParseError);
  CHECK_THROWS_AS(parse_cycles("(1 7)", 5), ParseError);
  CHECK_THROWS_AS(parse_cycles("(0 1)"), ParseError);
  CHECK_THROWS_AS(parse_cycles("(1 2"), ParseError);
  CHECK_THROWS_AS(parse_cycles("1 2)"), ParseError);
  CHECK_THROWS_AS(parse_cycles("(1 x)"), ParseError);
  CHECK_THROWS_AS(parse_cycles("(1 2)()"), ParseError);
  CHECK_THROWS_AS(parse_cycles(""), ParseError);
  CHECK_THROWS_AS(parse_cycles("(1 2)", 0), ParseError);
  CHECK_THROWS_AS(parse_cycles("(99999999999 1)"), ParseError);
  CHECK_THROWS_AS(parse_one_line("2 2 1"), ParseError);
  CHECK_THROWS_AS(parse_one_line("2 3 1", 4), ParseError);
}

TEST_CASE("one-line notation") {
  const auto p = parse_one_line("2 3 1");
  CHECK(p == parse_cycles("(1 2 3)"));
  CHECK(format_one_line(p) == "2 3 1");
  CHECK(parse_permutation("2 3 1") == p);
  CHECK(parse_permutation("(1 2 3)") == p);
}

TEST_CASE("format cycle notation") {
  CHECK(format_cycles(Permutation::identity(2)) == "()");
  CHECK(format_cycles(Permutation::identity(2), true) == "(1)(2)");
  CHECK(format_cycles(parse_cycles("(1 2 3)")) == "(1 2 3)");
  CHECK(format_cycles(parse_cycles("(3 4)(2 1)")) == "(1 2)(3 4)");
  CHECK(format_cycles(parse_cycles("(3 1 2)", 4), true) == "(1 2 3)(4)");
}

TEST_CASE("text round trip is exhaustive for n <= 6") {
  for (std::size_t n = 1; n <= 6; ++n)
    oracle::for_each_permutation(n, false, [n](const Permutation& p) {
      REQUIRE(parse_cycles(format_cycles(p, true)) == p);
      REQUIRE(parse_cycles(format_cycles(p, false), n) == p);
      REQUIRE(parse_one_line(format_one_line(p)) == p);
    });
}

TEST_CASE("text round trip on random permutations") {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const auto p = random_permutation(1 + seed % 200, seed);
    REQUIRE(parse_cycles(format_cycles(p, true)) == p);
  }
}
