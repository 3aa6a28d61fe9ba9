#pragma once

#include <cstddef>
#include <cstdint>

#include "ncyc/permutation.hpp"

namespace ncyc {

/// Uniform random element of A_n, deterministic in (n, seed). Shuffles, then
/// swaps the images of points 0 and 1 if the shuffle came out odd.
Permutation random_even_permutation(std::size_t n, std::uint64_t seed);

/// Uniform random element of S_n.
Permutation random_permutation(std::size_t n, std::uint64_t seed);

/// Uniform random n-cycle (Sattolo's algorithm); identity for n == 1.
Permutation random_full_cycle(std::size_t n, std::uint64_t seed);

/// Product of floor(n/2) disjoint transpositions (2i 2i+1) after a random
/// relabelling; when that count is odd the last transposition is dropped so
/// the result is even. This maximizes the number of merge steps.
Permutation all_transpositions_even(std::size_t n, std::uint64_t seed);

}  // namespace ncyc
