#include "ncyc/random.hpp"

#include <numeric>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ncyc {

namespace {

// std::uniform_int_distribution differs between standard libraries; this
// keeps seeded output identical everywhere.
std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % bound;
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return r % bound;
}

std::vector<Point> shuffled(std::size_t n, std::mt19937_64& rng) {
  std::vector<Point> v(n);
  std::iota(v.begin(), v.end(), Point{0});
  for (std::size_t i = n; i > 1; --i) std::swap(v[i - 1], v[below(rng, i)]);
  return v;
}

void require_degree(std::size_t n) {
  if (n == 0) throw std::invalid_argument("degree must be at least 1");
}

}  // namespace

Permutation random_permutation(std::size_t n, std::uint64_t seed) {
  require_degree(n);
  std::mt19937_64 rng(seed);
  return adopt_images(shuffled(n, rng));
}

Permutation random_even_permutation(std::size_t n, std::uint64_t seed) {
  require_degree(n);
  std::mt19937_64 rng(seed);
  auto images = shuffled(n, rng);
  Permutation p = adopt_images(images);
  if (parity(p) == Parity::odd) {
    std::swap(images[0], images[1]);
    p = adopt_images(std::move(images));
  }
  return p;
}

Permutation random_full_cycle(std::size_t n, std::uint64_t seed) {
  require_degree(n);
  std::mt19937_64 rng(seed);
  std::vector<Point> images(n);
  std::iota(images.begin(), images.end(), Point{0});
  for (std::size_t i = n; i > 1; --i) std::swap(images[i - 1], images[below(rng, i - 1)]);
  return adopt_images(std::move(images));
}

Permutation all_transpositions_even(std::size_t n, std::uint64_t seed) {
  require_degree(n);
  std::mt19937_64 rng(seed);
  const auto label = shuffled(n, rng);
  std::size_t pairs = n / 2;
  if (pairs % 2 == 1) --pairs;
  std::vector<Point> images(n);
  std::iota(images.begin(), images.end(), Point{0});
  for (std::size_t i = 0; i < pairs; ++i) {
    const Point a = label[2 * i], b = label[2 * i + 1];
    images[a] = b;
    images[b] = a;
  }
  return adopt_images(std::move(images));
}

}  // namespace ncyc
