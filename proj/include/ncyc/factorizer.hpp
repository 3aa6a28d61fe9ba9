#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncyc/permutation.hpp"

namespace ncyc {

/// Thrown when an odd permutation is handed to an A_n-only operation.
class ParityError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// sigma == compose(first, second), both factors full cycles on all points.
struct TwoCycleFactorization {
  Permutation first;
  Permutation second;

  std::size_t degree() const noexcept { return first.degree(); }
};

/// Two full cycles on the same support, in written form. Their product
/// (apply-left-first, all other points fixed) is the block's permutation.
struct BlockFactorization {
  Cycle first;
  Cycle second;

  /// Sorted support.
  std::vector<Point> support() const;
};

enum class BlockKind { odd, even_pair };

struct Block {
  BlockKind kind;
  std::size_t cycle;    // odd: the cycle; even_pair: the shorter cycle
  std::size_t partner;  // even_pair only: the longer cycle
};

/**
 * Partition of a canonical cycle decomposition into units that are each
 * factored on their own: single odd cycles (fixed points included) and pairs
 * of even cycles. Blocks are ordered by their smallest point.
 */
struct BlockPlan {
  CycleDecomposition decomposition;
  std::vector<Block> blocks;

  std::size_t degree() const noexcept { return decomposition.degree(); }
  std::size_t block_size(const Block& b) const;
};

/// Exact count of point-image writes made by a factorization run.
struct FactorizationStats {
  std::uint64_t writes = 0;
  std::size_t blocks = 0;
};

// Per-block constructions. Inputs are written cycle forms.

/// (rho^m, rho^m) with m = (l+1)/2, whose square is the odd l-cycle c.
BlockFactorization split_odd_cycle(std::span<const Point> c);

/// (rho, rho) with rho = (a_1 b_1 a_2 b_2 ...) interleaving two equal even cycles.
BlockFactorization merge_equal_even(std::span<const Point> c1, std::span<const Point> c2);

/// Pair of full cycles for a 2s-cycle c1 and a disjoint 2t-cycle c2, s < t.
BlockFactorization merge_unequal_even(std::span<const Point> c1, std::span<const Point> c2);

/// Splices two disjoint block factorizations with the transposition tau = (x y):
/// returns (f1.first f2.first tau, tau f1.second f2.second).
BlockFactorization merge_blocks(const BlockFactorization& f1, const BlockFactorization& f2,
                                Point x, Point y);

/// Throws ParityError if the decomposition belongs to an odd permutation.
BlockPlan plan_blocks(const CycleDecomposition& d);
BlockPlan plan_blocks(CycleDecomposition&& d);

/// Writes sigma in A_n as a product of two n-cycles in O(n).
TwoCycleFactorization two_n_cycle_factorization(const Permutation& sigma,
                                                FactorizationStats* stats = nullptr);

/// Same factors as two_n_cycle_factorization, but every merge rebuilds the
/// accumulated factors as full degree-n products. O(n * blocks); only used as
/// a benchmark baseline.
TwoCycleFactorization naive_two_n_cycle_factorization(const Permutation& sigma,
                                                      FactorizationStats* stats = nullptr);

/// tau with conjugate(c1, tau) == c2, for full cycles c1, c2 of equal degree.
Permutation conjugator_between_cycles(const Permutation& c1, const Permutation& c2);

struct CommutatorPair {
  Permutation a;
  Permutation b;
};

/// sigma == commutator(a, b) with a a full cycle.
CommutatorPair commutator_decomposition(const Permutation& sigma);

struct FactorizationVerdict {
  bool degree_matches = false;
  bool first_is_full_cycle = false;
  bool second_is_full_cycle = false;
  bool product_matches = false;

  bool valid() const noexcept {
    return degree_matches && first_is_full_cycle && second_is_full_cycle && product_matches;
  }
  /// "valid", or the failed conditions.
  std::string describe() const;
};

FactorizationVerdict verify_factorization(const Permutation& sigma,
                                          const TwoCycleFactorization& f);

}  // namespace ncyc
