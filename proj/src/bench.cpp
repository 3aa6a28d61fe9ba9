#include "ncyc/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "ncyc/factorizer.hpp"
#include "ncyc/random.hpp"

namespace ncyc::bench {

namespace {

Permutation make_input(std::size_t n, std::uint64_t seed, InputFamily family) {
  return family == InputFamily::random_even ? random_even_permutation(n, seed)
                                            : all_transpositions_even(n, seed);
}

TwoCycleFactorization factor(const Permutation& sigma, Algorithm algorithm,
                             FactorizationStats* stats) {
  return algorithm == Algorithm::spliced ? two_n_cycle_factorization(sigma, stats)
                                         : naive_two_n_cycle_factorization(sigma, stats);
}

}  // namespace

const char* to_string(Algorithm a) { return a == Algorithm::spliced ? "spliced" : "naive"; }

const char* to_string(InputFamily f) {
  return f == InputFamily::random_even ? "random_even" : "all_transpositions";
}

std::uint64_t write_count(std::size_t n, std::uint64_t seed, Algorithm algorithm,
                          InputFamily family) {
  FactorizationStats stats;
  factor(make_input(n, seed, family), algorithm, &stats);
  return stats.writes;
}

std::vector<ScalingSample> run_scaling(const ScalingConfig& config) {
  if (config.reps < 5) throw std::invalid_argument("run_scaling: reps must be at least 5");
  for (std::size_t i = 0; i < config.sizes.size(); ++i) {
    if (config.sizes[i] < 16) throw std::invalid_argument("run_scaling: sizes must be >= 16");
    if (i > 0 && config.sizes[i] <= config.sizes[i - 1])
      throw std::invalid_argument("run_scaling: sizes must be ascending");
  }

  using clock = std::chrono::steady_clock;
  std::vector<ScalingSample> samples;
  for (std::size_t n : config.sizes) {
    for (std::size_t w = 0; w < config.warmup; ++w)
      factor(make_input(n, config.seed + config.reps + w, config.family), config.algorithm,
             nullptr);

    std::vector<double> times;
    std::uint64_t writes = 0;
    for (std::size_t r = 0; r < config.reps; ++r) {
      const auto sigma = make_input(n, config.seed + r, config.family);
      FactorizationStats stats;
      const auto start = clock::now();
      const auto f = factor(sigma, config.algorithm, &stats);
      const auto stop = clock::now();
      // Keep the result observable so the call cannot be elided.
      if (f.degree() != n) throw std::logic_error("run_scaling: degree changed");
      times.push_back(std::chrono::duration<double>(stop - start).count());
      writes = std::max(writes, stats.writes);
    }
    std::nth_element(times.begin(), times.begin() + times.size() / 2, times.end());
    samples.push_back({config.algorithm, n, times[times.size() / 2], writes, config.reps,
                       config.seed});
  }
  return samples;
}

double estimate_slope(std::span<const ScalingSample> samples) {
  if (samples.size() < 4) throw std::invalid_argument("estimate_slope: need at least 4 samples");
  for (const auto& s : samples)
    if (s.algorithm != samples.front().algorithm)
      throw std::invalid_argument("estimate_slope: samples mix algorithms");

  double mx = 0, my = 0;
  for (const auto& s : samples) {
    mx += std::log(static_cast<double>(s.n));
    my += std::log(s.median_seconds);
  }
  mx /= static_cast<double>(samples.size());
  my /= static_cast<double>(samples.size());
  double sxy = 0, sxx = 0;
  for (const auto& s : samples) {
    const double dx = std::log(static_cast<double>(s.n)) - mx;
    sxy += dx * (std::log(s.median_seconds) - my);
    sxx += dx * dx;
  }
  if (sxx == 0) throw std::invalid_argument("estimate_slope: all sizes equal");
  return sxy / sxx;
}

std::string to_csv(std::span<const ScalingSample> samples) {
  std::ostringstream out;
  out << "algorithm,n,median_seconds,write_count,reps,seed\n";
  out.precision(9);
  for (const auto& s : samples)
    out << to_string(s.algorithm) << ',' << s.n << ',' << s.median_seconds << ','
        << s.write_count << ',' << s.reps << ',' << s.seed << '\n';
  return out.str();
}

}  // namespace ncyc::bench
