#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncyc {

/// A point of the permuted set {0, ..., n-1}. Text I/O is 1-based; everything
/// in this library is 0-based.
using Point = std::uint32_t;

class DegreeMismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class InvalidPermutation : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

enum class Parity { even, odd };

const char* to_string(Parity p);

/**
 * A permutation of {0, ..., degree-1}, stored as its image table.
 *
 * Products use the apply-left-first convention throughout the library:
 * compose(p, q)(x) == q(p(x)).
 */
class Permutation {
public:
  /// Identity on `degree` points.
  explicit Permutation(std::size_t degree = 0);

  /// Throws InvalidPermutation unless `images` is a bijection of {0..n-1}.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  Point at(Point x) const;
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;

  bool operator==(const Permutation&) const = default;

private:
  struct Unchecked {};
  Permutation(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}

  std::vector<Point> images_;

  friend Permutation adopt_images(std::vector<Point> images);
};

/// Wraps an image table the caller already knows is a bijection. No check.
Permutation adopt_images(std::vector<Point> images);

/// A single cycle written as (a_1, ..., a_s); a_1 maps to a_2 and a_s to a_1.
struct Cycle {
  std::vector<Point> points;

  std::size_t length() const noexcept { return points.size(); }
  bool operator==(const Cycle&) const = default;
};

/**
 * Disjoint cycles covering every point, fixed points included.
 *
 * Cycles are stored back to back in one array. The canonical form (what
 * cycle_decomposition() returns) rotates each cycle to start at its minimum
 * and orders cycles by that minimum.
 */
class CycleDecomposition {
public:
  CycleDecomposition() = default;

  /// Validates that the cycles are disjoint, in range and cover all points.
  CycleDecomposition(std::size_t degree, const std::vector<Cycle>& cycles);

  std::size_t degree() const noexcept { return points_.size(); }
  std::size_t size() const noexcept { return starts_.empty() ? 0 : starts_.size() - 1; }
  std::span<const Point> cycle(std::size_t i) const {
    return std::span<const Point>(points_).subspan(starts_[i], starts_[i + 1] - starts_[i]);
  }
  std::size_t cycle_length(std::size_t i) const { return starts_[i + 1] - starts_[i]; }

  std::vector<Cycle> cycles() const;

  /// Cycle lengths in descending order.
  std::vector<std::size_t> cycle_type() const;

  /// Same cycles, each rotated to its minimum, sorted by minimum.
  CycleDecomposition canonical() const;

  bool operator==(const CycleDecomposition&) const = default;

  // Flat storage as built by cycle_decomposition.
  struct Layout {
    std::vector<Point> points;
    std::vector<std::size_t> starts;
  };

private:
  std::vector<Point> points_;
  std::vector<std::size_t> starts_;

  friend CycleDecomposition cycle_decomposition(const Permutation& p);
};

Permutation compose(const Permutation& p, const Permutation& q);

template <typename... Rest>
Permutation compose(const Permutation& p, const Permutation& q, const Rest&... rest) {
  return compose(compose(p, q), rest...);
}

Permutation inverse(const Permutation& p);
Permutation power(const Permutation& p, std::uint64_t k);

/// Returns x -> t(p(t^-1(x))), i.e. p with every point relabelled through t.
Permutation conjugate(const Permutation& p, const Permutation& t);

/// compose(a, b, inverse(a), inverse(b)).
Permutation commutator(const Permutation& a, const Permutation& b);

std::size_t cycle_count(const Permutation& p);
Parity parity(const Permutation& p);
bool is_even(const Permutation& p);

/// True iff p has exactly one orbit. The identity on one point counts.
bool is_full_cycle(const Permutation& p);

CycleDecomposition cycle_decomposition(const Permutation& p);
Permutation from_cycles(const CycleDecomposition& d);

/// Builds a permutation from possibly partial cycle lists; unmentioned
/// points are fixed. Throws on overlap or out-of-range points.
Permutation from_cycles(std::size_t degree, const std::vector<Cycle>& cycles);

/// The single cycle p_0 -> p_1 -> ... -> p_{s-1} -> p_0 on `degree` points.
Permutation cycle_permutation(std::size_t degree, std::span<const Point> points);

/// Written form of a full cycle starting at `anchor`.
std::vector<Point> written_form(const Permutation& full_cycle, Point anchor = 0);

}  // namespace ncyc
