#include "ncyc/factorizer.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <unordered_set>
#include <utility>

namespace ncyc {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
constexpr std::size_t kPrefetchAhead = 32;

// Block fillers. Each writes the written forms of a block's two factors into
// `first` and `second` (both sized to the block) and returns nothing; callers
// own all validation.

// rho^m for an odd l-cycle, m = (l+1)/2: position j of the result is c[j*m mod l].
void fill_odd(std::span<const Point> c, std::span<Point> first, std::span<Point> second) {
  const std::size_t l = c.size();
  const std::size_t m = (l + 1) / 2;
  std::size_t pos = 0;
  for (std::size_t j = 0; j < l; ++j) {
    first[j] = c[pos];
    second[j] = c[pos];
    pos += m;
    if (pos >= l) pos -= l;
  }
}

void fill_equal_even(std::span<const Point> c1, std::span<const Point> c2,
                     std::span<Point> first, std::span<Point> second) {
  for (std::size_t i = 0; i < c1.size(); ++i) {
    first[2 * i] = second[2 * i] = c1[i];
    first[2 * i + 1] = second[2 * i + 1] = c2[i];
  }
}

// Canonical labels 1..n' (n' = 2s+2t) are placed so that (1 3 ... 4s-1) lands on
// c1 and (2 4 ... 2s+2t 4s+1 4s+3 ... 2s+2t-1) lands on c2; label k sits at
// first[k-1]. Then first = (1 2 ... n') and second = (1 4s+1 ... n' 2 ... 4s),
// both read through the labelling. compose(first, second) == c1 c2.
void fill_unequal_even(std::span<const Point> c1, std::span<const Point> c2,
                       std::span<Point> first, std::span<Point> second) {
  const std::size_t s = c1.size() / 2;
  const std::size_t t = c2.size() / 2;
  const std::size_t n = 2 * s + 2 * t;
  for (std::size_t i = 0; i < 2 * s; ++i) first[2 * i] = c1[i];
  for (std::size_t j = 0; j < s + t; ++j) first[2 * j + 1] = c2[j];
  for (std::size_t j = s + t; j < 2 * t; ++j) first[4 * s + 2 * (j - s - t)] = c2[j];

  std::size_t k = 0;
  second[k++] = first[0];
  for (std::size_t i = 4 * s; i < n; ++i) second[k++] = first[i];
  for (std::size_t i = 1; i < 4 * s; ++i) second[k++] = first[i];
}

void require_disjoint(std::span<const Point> a, std::span<const Point> b, const char* op) {
  std::unordered_set<Point> seen;
  seen.reserve(a.size() + b.size());
  for (Point x : a)
    if (!seen.insert(x).second)
      throw std::invalid_argument(std::string(op) + ": repeated point in cycle");
  for (Point x : b)
    if (!seen.insert(x).second)
      throw std::invalid_argument(std::string(op) + ": overlapping or repeated points");
}

BlockFactorization make_block(std::size_t size) {
  BlockFactorization f;
  f.first.points.resize(size);
  f.second.points.resize(size);
  return f;
}

std::size_t fill_block(const BlockPlan& plan, const Block& block, std::span<Point> first,
                       std::span<Point> second) {
  const auto& d = plan.decomposition;
  if (block.kind == BlockKind::odd) {
    const auto c = d.cycle(block.cycle);
    fill_odd(c, first, second);
    return c.size();
  }
  const auto small = d.cycle(block.cycle);
  const auto large = d.cycle(block.partner);
  const std::size_t len = small.size() + large.size();
  if (small.size() == large.size())
    fill_equal_even(small, large, first.first(len), second.first(len));
  else
    fill_unequal_even(small, large, first.first(len), second.first(len));
  return len;
}

bool is_canonical(const CycleDecomposition& d) {
  std::size_t prev_min = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const auto c = d.cycle(i);
    if (i > 0 && c.front() <= prev_min) return false;
    for (Point x : c.subspan(1))
      if (x < c.front()) return false;
    prev_min = c.front();
  }
  return true;
}

// Odd inputs are rejected by plan_blocks.
void require_degree(const Permutation& sigma) {
  if (sigma.degree() == 0) throw std::invalid_argument("degree must be at least 1");
}

}  // namespace

std::vector<Point> BlockFactorization::support() const {
  std::vector<Point> s = first.points;
  std::sort(s.begin(), s.end());
  return s;
}

std::size_t BlockPlan::block_size(const Block& b) const {
  const std::size_t len = decomposition.cycle_length(b.cycle);
  return b.kind == BlockKind::odd ? len : len + decomposition.cycle_length(b.partner);
}

BlockFactorization split_odd_cycle(std::span<const Point> c) {
  if (c.empty() || c.size() % 2 == 0)
    throw std::invalid_argument("split_odd_cycle: cycle length " + std::to_string(c.size()) +
                                " is not odd");
  require_disjoint(c, {}, "split_odd_cycle");
  auto f = make_block(c.size());
  fill_odd(c, f.first.points, f.second.points);
  return f;
}

BlockFactorization merge_equal_even(std::span<const Point> c1, std::span<const Point> c2) {
  if (c1.size() != c2.size())
    throw std::invalid_argument("merge_equal_even: cycle lengths differ");
  if (c1.empty() || c1.size() % 2 != 0)
    throw std::invalid_argument("merge_equal_even: cycle lengths must be even");
  require_disjoint(c1, c2, "merge_equal_even");
  auto f = make_block(2 * c1.size());
  fill_equal_even(c1, c2, f.first.points, f.second.points);
  return f;
}

BlockFactorization merge_unequal_even(std::span<const Point> c1, std::span<const Point> c2) {
  if (c1.empty() || c1.size() % 2 != 0 || c2.size() % 2 != 0)
    throw std::invalid_argument("merge_unequal_even: cycle lengths must be even");
  if (c1.size() >= c2.size())
    throw std::invalid_argument(
        "merge_unequal_even: first cycle must be strictly shorter (use merge_equal_even for equal "
        "lengths)");
  require_disjoint(c1, c2, "merge_unequal_even");
  auto f = make_block(c1.size() + c2.size());
  fill_unequal_even(c1, c2, f.first.points, f.second.points);
  return f;
}

BlockFactorization merge_blocks(const BlockFactorization& f1, const BlockFactorization& f2,
                                Point x, Point y) {
  require_disjoint(f1.first.points, f2.first.points, "merge_blocks");
  const auto& a = f1.first.points;
  const auto& b = f2.first.points;
  const auto& g = f1.second.points;
  const auto& h = f2.second.points;
  const auto locate = [](const std::vector<Point>& v, Point p) {
    const auto it = std::find(v.begin(), v.end(), p);
    if (it == v.end()) throw std::invalid_argument("merge_blocks: junction point outside support");
    return static_cast<std::size_t>(it - v.begin());
  };
  const std::size_t ia = locate(a, x), ib = locate(b, y);
  const std::size_t ig = locate(g, x), ih = locate(h, y);
  const std::size_t s = a.size(), t = b.size();

  BlockFactorization out;
  auto& first = out.first.points;
  auto& second = out.second.points;
  first.reserve(s + t);
  second.reserve(s + t);

  // f1.first rotated to end at x, with y spliced in before x's slot and
  // f2.first (rotated to end at y) following: (a.. y b.. x).
  for (std::size_t k = 1; k < s; ++k) first.push_back(a[(ia + k) % s]);
  first.push_back(y);
  for (std::size_t k = 1; k < t; ++k) first.push_back(b[(ib + k) % t]);
  first.push_back(x);

  // tau is applied first: x -> f2.second(y), y -> f1.second(x).
  second.push_back(x);
  for (std::size_t k = 1; k < t; ++k) second.push_back(h[(ih + k) % t]);
  second.push_back(y);
  for (std::size_t k = 1; k < s; ++k) second.push_back(g[(ig + k) % s]);
  return out;
}

BlockPlan plan_blocks(const CycleDecomposition& input) {
  return plan_blocks(is_canonical(input) ? CycleDecomposition(input) : input.canonical());
}

BlockPlan plan_blocks(CycleDecomposition&& input) {
  BlockPlan plan;
  plan.decomposition = is_canonical(input) ? std::move(input) : input.canonical();
  const auto& d = plan.decomposition;
  const std::size_t n = d.degree();

  // Even cycles in (length, minimum) order: canonical order is ascending
  // minimum, and a stable radix sort on length keeps it within equal lengths.
  std::vector<std::uint32_t> evens, scratch;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d.cycle_length(i) % 2 == 0) evens.push_back(static_cast<std::uint32_t>(i));
  if (evens.size() % 2 != 0)
    throw ParityError("permutation is odd (" + std::to_string(evens.size()) +
                      " even-length cycles); it has no factorization into two n-cycles");
  scratch.resize(evens.size());
  constexpr unsigned kDigitBits = 11;
  constexpr std::size_t kDigits = std::size_t{1} << kDigitBits;
  for (unsigned shift = 0; shift < 64 && (n >> shift) > 0; shift += kDigitBits) {
    std::vector<std::size_t> offset(kDigits + 1, 0);
    const auto digit = [&](std::uint32_t i) { return (d.cycle_length(i) >> shift) & (kDigits - 1); };
    for (auto i : evens) ++offset[digit(i) + 1];
    for (std::size_t k = 1; k <= kDigits; ++k) offset[k] += offset[k - 1];
    for (auto i : evens) scratch[offset[digit(i)]++] = i;
    evens.swap(scratch);
  }

  // A block is listed under its smaller cycle index, i.e. its minimum point.
  constexpr std::uint32_t kFree = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> block_at(d.size(), kFree);
  std::vector<Block> unordered;
  unordered.reserve(d.size() - evens.size() / 2);
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d.cycle_length(i) % 2 == 1) {
      block_at[i] = static_cast<std::uint32_t>(unordered.size());
      unordered.push_back({BlockKind::odd, i, kNone});
    }
  for (std::size_t k = 0; k < evens.size(); k += 2) {
    const std::size_t small = evens[k], large = evens[k + 1];
    block_at[std::min(small, large)] = static_cast<std::uint32_t>(unordered.size());
    unordered.push_back({BlockKind::even_pair, small, large});
  }

  plan.blocks.reserve(unordered.size());
  for (auto b : block_at)
    if (b != kFree) plan.blocks.push_back(unordered[b]);
  return plan;
}

// The two growing factors are kept as successor tables, which are their image
// tables. Appending a block writes its entries and then splices with
// tau = (x y): x is the last point of the running first factor's written form
// (fixed by the first block), y the last point of the block's first factor.
// Under tau the first factor needs its two predecessors of x and y redirected,
// and the second factor has the images of x and y swapped.
TwoCycleFactorization two_n_cycle_factorization(const Permutation& sigma,
                                                FactorizationStats* stats) {
  require_degree(sigma);
  const std::size_t n = sigma.degree();
  std::uint64_t writes = 0;

  const auto plan = plan_blocks(cycle_decomposition(sigma));
  writes += n;

  // Both successor tables in one array, so a point's two entries share a line.
  std::vector<std::array<Point, 2>> next(n);
  std::vector<Point> first_form(n), second_form(n);

  Point last = 0, last_pred = 0;
  bool started = false;
  for (const auto& block : plan.blocks) {
    const std::size_t len = fill_block(plan, block, first_form, second_form);
    for (std::size_t i = 0; i + 1 < len; ++i) {
      if (i + kPrefetchAhead < len) {
        __builtin_prefetch(&next[first_form[i + kPrefetchAhead]], 1);
        __builtin_prefetch(&next[second_form[i + kPrefetchAhead]], 1);
      }
      next[first_form[i]][0] = first_form[i + 1];
      next[second_form[i]][1] = second_form[i + 1];
    }
    next[first_form[len - 1]][0] = first_form[0];
    next[second_form[len - 1]][1] = second_form[0];
    writes += 4 * len;

    const Point block_last = first_form[len - 1];
    const Point block_pred = len > 1 ? first_form[len - 2] : block_last;
    if (!started) {
      last = block_last;
      last_pred = block_pred;
      started = true;
      continue;
    }
    next[last_pred][0] = block_last;
    next[block_pred][0] = last;
    std::swap(next[last][1], next[block_last][1]);
    writes += 4;
    last_pred = block_pred;
  }

  std::vector<Point> first_next(n), second_next(n);
  for (std::size_t x = 0; x < n; ++x) {
    first_next[x] = next[x][0];
    second_next[x] = next[x][1];
  }
  writes += 2 * n;

  if (stats) {
    stats->writes = writes;
    stats->blocks = plan.blocks.size();
  }
  return {adopt_images(std::move(first_next)), adopt_images(std::move(second_next))};
}

TwoCycleFactorization naive_two_n_cycle_factorization(const Permutation& sigma,
                                                      FactorizationStats* stats) {
  require_degree(sigma);
  const std::size_t n = sigma.degree();
  std::uint64_t writes = 0;

  const auto plan = plan_blocks(cycle_decomposition(sigma));
  writes += n;

  std::vector<Point> first_form(n), second_form(n);
  Permutation first = Permutation::identity(n);
  Permutation second = Permutation::identity(n);
  Point last = 0;
  bool started = false;
  for (const auto& block : plan.blocks) {
    const std::size_t len = fill_block(plan, block, first_form, second_form);
    writes += 2 * len;
    const auto bf = cycle_permutation(n, std::span<const Point>(first_form).first(len));
    const auto bs = cycle_permutation(n, std::span<const Point>(second_form).first(len));
    writes += 2 * n;
    if (!started) {
      first = bf;
      second = bs;
      last = first_form[len - 1];
      started = true;
      continue;
    }
    const Point y = first_form[len - 1];
    const auto tau = cycle_permutation(n, std::vector<Point>{last, y});
    first = compose(first, bf, tau);
    second = compose(tau, second, bs);
    writes += 5 * n;
  }

  if (stats) {
    stats->writes = writes;
    stats->blocks = plan.blocks.size();
  }
  return {std::move(first), std::move(second)};
}

Permutation conjugator_between_cycles(const Permutation& c1, const Permutation& c2) {
  if (c1.degree() != c2.degree())
    throw DegreeMismatch("conjugator_between_cycles: degrees " + std::to_string(c1.degree()) +
                         " and " + std::to_string(c2.degree()));
  if (!is_full_cycle(c1) || !is_full_cycle(c2))
    throw std::invalid_argument("conjugator_between_cycles: inputs must be full cycles");
  // Walk both cycles from point 0 and send the k-th point of c1 to the k-th of c2.
  std::vector<Point> tau(c1.degree());
  Point u = 0, v = 0;
  for (std::size_t k = 0; k < c1.degree(); ++k) {
    tau[u] = v;
    u = c1(u);
    v = c2(v);
  }
  return adopt_images(std::move(tau));
}

// sigma = rho1 rho2. With a = rho1, commutator(a, b) = a * (b a^-1 b^-1), and
// b a^-1 b^-1 == conjugate(a^-1, b^-1), so b^-1 is the conjugator taking a^-1
// to rho2.
CommutatorPair commutator_decomposition(const Permutation& sigma) {
  auto f = two_n_cycle_factorization(sigma);
  const auto tau = conjugator_between_cycles(inverse(f.first), f.second);
  return {std::move(f.first), inverse(tau)};
}

std::string FactorizationVerdict::describe() const {
  if (valid()) return "valid";
  std::string out = "invalid:";
  if (!degree_matches) out += " degree mismatch;";
  if (degree_matches && !first_is_full_cycle) out += " first factor is not an n-cycle;";
  if (degree_matches && !second_is_full_cycle) out += " second factor is not an n-cycle;";
  if (degree_matches && !product_matches) out += " product differs from the input;";
  out.pop_back();
  return out;
}

FactorizationVerdict verify_factorization(const Permutation& sigma,
                                          const TwoCycleFactorization& f) {
  FactorizationVerdict v;
  v.degree_matches = sigma.degree() == f.first.degree() && sigma.degree() == f.second.degree();
  if (!v.degree_matches) return v;
  v.first_is_full_cycle = is_full_cycle(f.first);
  v.second_is_full_cycle = is_full_cycle(f.second);
  v.product_matches = compose(f.first, f.second) == sigma;
  return v;
}

}  // namespace ncyc
