#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "ncyc/factorizer.hpp"
#include "ncyc/oracle.hpp"
#include "ncyc/random.hpp"
#include "test_util.hpp"

using namespace ncyc;
using ncyc::test::cyc;

TEST_CASE("enumerate_n_cycles") {
  const auto two = oracle::enumerate_n_cycles(2);
  REQUIRE(two.size() == 1);
  CHECK(two[0] == cyc("(1 2)"));

  const auto three = oracle::enumerate_n_cycles(3);
  REQUIRE(three.size() == 2);
  CHECK(three[0] == cyc("(1 2 3)"));
  CHECK(three[1] == cyc("(1 3 2)"));

  const auto five = oracle::enumerate_n_cycles(5);
  CHECK(five.size() == 24);
  std::set<std::vector<Point>> distinct;
  for (const auto& c : five) {
    CHECK(is_full_cycle(c));
    distinct.insert({c.images().begin(), c.images().end()});
  }
  CHECK(distinct.size() == 24);

  CHECK_THROWS(oracle::enumerate_n_cycles(1));
}

TEST_CASE("pair_count small cases") {
  CHECK(oracle::pair_count(Permutation::identity(1)) == 1);
  CHECK(oracle::pair_count(Permutation::identity(2)) == 1);
  CHECK(oracle::pair_count(Permutation::identity(3)) == 2);
  CHECK(oracle::pair_count(cyc("(1 2 3)")) == 1);
  CHECK(oracle::pair_count(cyc("(1 2)", 4)) == 0);
  CHECK(oracle::pair_count(cyc("(1 2 3 4)")) == 0);
  CHECK_THROWS_AS(oracle::pair_count(Permutation::identity(8)), oracle::BudgetExceeded);
}

// Frozen from an independent brute force over all ordered pairs of n-cycles.
TEST_CASE("pair counts per cycle type") {
  struct Row {
    const char* type;
    std::uint64_t count;
    std::uint64_t class_size;
  };
  const std::vector<std::pair<std::size_t, std::vector<Row>>> expected{
      {4, {{"3.1", 3, 8}, {"2.2", 2, 3}, {"1.1.1.1", 6, 1}}},
      {5, {{"5", 8, 24}, {"3.1.1", 12, 20}, {"2.2.1", 8, 15}, {"1.1.1.1.1", 24, 1}}},
      {6,
       {{"5.1", 40, 144},
        {"4.2", 32, 90},
        {"3.3", 36, 40},
        {"3.1.1.1", 60, 40},
        {"2.2.1.1", 40, 45},
        {"1.1.1.1.1.1", 120, 1}}},
  };
  for (const auto& [n, rows] : expected) {
    const auto report = oracle::pair_count_report(n);
    CHECK(report.class_function);
    REQUIRE(report.classes.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      CHECK(oracle::cycle_type_label(report.classes[i].cycle_type) == rows[i].type);
      CHECK(report.classes[i].count_per_element == rows[i].count);
      CHECK(report.classes[i].class_size == rows[i].class_size);
    }
    const auto f = oracle::factorial(n - 1);
    CHECK(report.total == f * f);
  }
}

TEST_CASE("pair count report csv") {
  const auto csv = oracle::pair_count_report(4).to_csv();
  CHECK(csv ==
        "cycle_type,count_per_element,class_size\n"
        "3.1,3,8\n"
        "2.2,2,3\n"
        "1.1.1.1,6,1\n"
        "total,36,12\n");
}

TEST_CASE("pair_count is a class function") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const std::size_t n = 3 + seed % 4;
    const auto sigma = random_even_permutation(n, seed);
    const auto t = random_permutation(n, seed + 500);
    CHECK(oracle::pair_count(sigma) == oracle::pair_count(conjugate(sigma, t)));
  }
}

TEST_CASE("exhaustive_verify") {
  const auto one = oracle::exhaustive_verify(1);
  CHECK(one.elements == 1);
  CHECK(one.ok());
  const auto four = oracle::exhaustive_verify(4);
  CHECK(four.elements == 12);
  CHECK(four.ok());
  const auto six = oracle::exhaustive_verify(6);
  CHECK(six.elements == 360);
  CHECK(six.ok());
  CHECK_THROWS_AS(oracle::exhaustive_verify(9), oracle::BudgetExceeded);
  CHECK_THROWS_AS(oracle::exhaustive_verify(0), oracle::BudgetExceeded);
}

TEST_CASE("bertram_coverage") {
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto r = oracle::bertram_coverage(n);
    CHECK(r.ok());
    CHECK(r.even_elements == oracle::factorial(n) / 2);
  }
  const auto four = oracle::bertram_coverage(4);
  CHECK(four.total_pairs == 36);
  CHECK(four.odd_with_pairs == 0);
  CHECK_THROWS_AS(oracle::bertram_coverage(8), oracle::BudgetExceeded);
}

TEST_CASE("factorizer output is among the enumerated pairs (n <= 6)") {
  for (std::size_t n = 2; n <= 6; ++n) {
    std::set<std::vector<Point>> cycles;
    for (const auto& c : oracle::enumerate_n_cycles(n))
      cycles.insert({c.images().begin(), c.images().end()});
    oracle::for_each_permutation(n, true, [&](const Permutation& sigma) {
      const auto f = two_n_cycle_factorization(sigma);
      REQUIRE(cycles.count({f.first.images().begin(), f.first.images().end()}) == 1);
      REQUIRE(cycles.count({f.second.images().begin(), f.second.images().end()}) == 1);
      REQUIRE(compose(inverse(f.first), sigma) == f.second);
    });
  }
}
