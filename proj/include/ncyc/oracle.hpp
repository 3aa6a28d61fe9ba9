#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncyc/permutation.hpp"

// Brute-force ground truth for small degrees. Nothing here calls into the
// factorizer except exhaustive_verify, which checks it.
namespace ncyc::oracle {

inline constexpr std::size_t kMaxExhaustiveDegree = 8;
inline constexpr std::size_t kMaxPairCountDegree = 7;

class BudgetExceeded : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Calls `fn` on each of the (n-1)! full cycles of degree n >= 2, in
/// lexicographic order of their written form starting at point 0.
void for_each_n_cycle(std::size_t n, const std::function<void(const Permutation&)>& fn);
std::vector<Permutation> enumerate_n_cycles(std::size_t n);

/// Calls `fn` on every element of S_n (or only A_n when even_only).
void for_each_permutation(std::size_t n, bool even_only,
                          const std::function<void(const Permutation&)>& fn);

/// Number of ordered pairs of n-cycles (r1, r2) with compose(r1, r2) == sigma.
std::uint64_t pair_count(const Permutation& sigma);

struct CycleTypeRow {
  std::vector<std::size_t> cycle_type;  // descending
  std::uint64_t count_per_element = 0;
  std::uint64_t class_size = 0;
};

struct PairCountReport {
  std::size_t degree = 0;
  /// Keyed by one-line image tables.
  std::map<std::vector<Point>, std::uint64_t> per_element;
  std::vector<CycleTypeRow> classes;
  std::uint64_t total = 0;
  /// False if two elements of the same cycle type disagreed.
  bool class_function = true;

  /// Lines "cycle_type,count_per_element,class_size" then "total,<sum>,<|A_n|>".
  /// Cycle types print as dot-joined descending lengths, e.g. "3.1.1".
  std::string to_csv() const;
};

PairCountReport pair_count_report(std::size_t n);

struct ExhaustiveReport {
  std::size_t degree = 0;
  std::uint64_t elements = 0;
  std::uint64_t passed = 0;
  std::vector<Permutation> failures;

  bool ok() const noexcept { return passed == elements && failures.empty(); }
};

/// Factors every element of A_n, 1 <= n <= 8, and verifies each result.
ExhaustiveReport exhaustive_verify(std::size_t n);

struct CoverageReport {
  std::size_t degree = 0;
  std::uint64_t even_elements = 0;
  std::uint64_t even_covered = 0;
  std::uint64_t odd_elements = 0;
  std::uint64_t odd_with_pairs = 0;
  std::uint64_t total_pairs = 0;
  std::uint64_t expected_total = 0;  // ((n-1)!)^2

  bool ok() const noexcept {
    return even_covered == even_elements && odd_with_pairs == 0 && total_pairs == expected_total;
  }
};

/// Every element of A_n has a pair, no odd element does, and counts sum to ((n-1)!)^2.
CoverageReport bertram_coverage(std::size_t n);

std::uint64_t factorial(std::size_t n);

std::string cycle_type_label(const std::vector<std::size_t>& type);

}  // namespace ncyc::oracle
