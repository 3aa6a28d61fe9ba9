#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncyc::bench {

enum class Algorithm { spliced, naive };
enum class InputFamily { random_even, all_transpositions };

const char* to_string(Algorithm a);
const char* to_string(InputFamily f);

struct ScalingSample {
  Algorithm algorithm = Algorithm::spliced;
  std::size_t n = 0;
  double median_seconds = 0.0;
  /// Largest instrumented write count seen over the measured inputs.
  std::uint64_t write_count = 0;
  std::size_t reps = 0;
  std::uint64_t seed = 0;
};

struct ScalingConfig {
  std::vector<std::size_t> sizes;  // ascending, each >= 16
  std::size_t reps = 5;            // >= 5
  std::size_t warmup = 2;
  std::uint64_t seed = 1;
  Algorithm algorithm = Algorithm::spliced;
  InputFamily family = InputFamily::random_even;
};

/// One sample per size: median wall time over `reps` fresh inputs (seeded
/// seed, seed+1, ...) after `warmup` discarded runs. Input generation is not timed.
std::vector<ScalingSample> run_scaling(const ScalingConfig& config);

/// Instrumented write count of a single factorization, no timing.
std::uint64_t write_count(std::size_t n, std::uint64_t seed, Algorithm algorithm,
                          InputFamily family);

/// Least-squares slope of log(median_seconds) against log(n). Needs at least
/// four samples from one algorithm.
double estimate_slope(std::span<const ScalingSample> samples);

/// Header "algorithm,n,median_seconds,write_count,reps,seed" and one row per sample.
std::string to_csv(std::span<const ScalingSample> samples);

}  // namespace ncyc::bench
