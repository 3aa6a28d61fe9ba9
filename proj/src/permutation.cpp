#include "ncyc/permutation.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace ncyc {

const char* to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point y : images_) {
    if (y >= images_.size())
      throw InvalidPermutation("image " + std::to_string(y) + " out of range for degree " +
                               std::to_string(images_.size()));
    if (seen[y]) throw InvalidPermutation("image " + std::to_string(y) + " repeated");
    seen[y] = true;
  }
}

Permutation adopt_images(std::vector<Point> images) {
  return Permutation(std::move(images), Permutation::Unchecked{});
}

Point Permutation::at(Point x) const {
  if (x >= images_.size()) throw std::out_of_range("point out of range");
  return images_[x];
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

CycleDecomposition::CycleDecomposition(std::size_t degree, const std::vector<Cycle>& cycles) {
  std::vector<bool> seen(degree, false);
  points_.reserve(degree);
  starts_.reserve(cycles.size() + 1);
  starts_.push_back(0);
  for (const auto& c : cycles) {
    if (c.points.empty()) throw InvalidPermutation("empty cycle");
    for (Point x : c.points) {
      if (x >= degree)
        throw InvalidPermutation("point " + std::to_string(x + 1) + " exceeds degree " +
                                 std::to_string(degree));
      if (seen[x]) throw InvalidPermutation("point " + std::to_string(x + 1) + " repeated");
      seen[x] = true;
      points_.push_back(x);
    }
    starts_.push_back(points_.size());
  }
  if (points_.size() != degree)
    throw InvalidPermutation("cycles do not cover all " + std::to_string(degree) + " points");
}

std::vector<Cycle> CycleDecomposition::cycles() const {
  std::vector<Cycle> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) {
    auto c = cycle(i);
    out.push_back(Cycle{{c.begin(), c.end()}});
  }
  return out;
}

std::vector<std::size_t> CycleDecomposition::cycle_type() const {
  std::vector<std::size_t> lengths;
  lengths.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) lengths.push_back(cycle_length(i));
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

CycleDecomposition CycleDecomposition::canonical() const {
  return cycle_decomposition(from_cycles(*this));
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw DegreeMismatch("compose: degrees " + std::to_string(p.degree()) + " and " +
                         std::to_string(q.degree()));
  std::vector<Point> out(p.degree());
  for (std::size_t x = 0; x < out.size(); ++x) out[x] = q(p(static_cast<Point>(x)));
  return adopt_images(std::move(out));
}

Permutation inverse(const Permutation& p) {
  std::vector<Point> out(p.degree());
  for (std::size_t x = 0; x < out.size(); ++x) out[p(static_cast<Point>(x))] = static_cast<Point>(x);
  return adopt_images(std::move(out));
}

Permutation power(const Permutation& p, std::uint64_t k) {
  // Walk each cycle once: x maps to the element k steps further along.
  std::vector<Point> out(p.degree());
  const auto d = cycle_decomposition(p);
  for (std::size_t i = 0; i < d.size(); ++i) {
    auto c = d.cycle(i);
    const std::size_t shift = k % c.size();
    for (std::size_t j = 0; j < c.size(); ++j) out[c[j]] = c[(j + shift) % c.size()];
  }
  return adopt_images(std::move(out));
}

Permutation conjugate(const Permutation& p, const Permutation& t) {
  if (p.degree() != t.degree())
    throw DegreeMismatch("conjugate: degrees " + std::to_string(p.degree()) + " and " +
                         std::to_string(t.degree()));
  // t p t^-1 sends t(x) to t(p(x)).
  std::vector<Point> out(p.degree());
  for (std::size_t x = 0; x < out.size(); ++x) {
    const auto px = static_cast<Point>(x);
    out[t(px)] = t(p(px));
  }
  return adopt_images(std::move(out));
}

Permutation commutator(const Permutation& a, const Permutation& b) {
  return compose(a, b, inverse(a), inverse(b));
}

std::size_t cycle_count(const Permutation& p) {
  std::vector<bool> seen(p.degree(), false);
  std::size_t count = 0;
  for (std::size_t start = 0; start < p.degree(); ++start) {
    if (seen[start]) continue;
    ++count;
    for (Point x = static_cast<Point>(start); !seen[x]; x = p(x)) seen[x] = true;
  }
  return count;
}

Parity parity(const Permutation& p) {
  return (p.degree() - cycle_count(p)) % 2 == 0 ? Parity::even : Parity::odd;
}

bool is_even(const Permutation& p) { return parity(p) == Parity::even; }

bool is_full_cycle(const Permutation& p) {
  if (p.degree() == 0) return false;
  std::size_t len = 1;
  for (Point x = p(0); x != 0; x = p(x)) ++len;
  return len == p.degree();
}

namespace {

CycleDecomposition::Layout sequential_decomposition(std::span<const Point> p) {
  const std::size_t n = p.size();
  CycleDecomposition::Layout out;
  out.points.reserve(n);
  out.starts.push_back(0);
  std::vector<bool> seen(n, false);
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    for (Point x = static_cast<Point>(start); !seen[x]; x = p[x]) {
      seen[x] = true;
      out.points.push_back(x);
    }
    out.starts.push_back(out.points.size());
  }
  return out;
}

// Every kStride-th point is a mark. Cycles through marks are cut into segments
// (a mark and the unmarked points after it), and kWalkers segments are chased
// in lockstep so their cache misses overlap. Segments are chased twice: once to
// measure them, once to copy them into place. Cycles without marks are found by
// the ascending scan that also fixes the output order.
constexpr std::size_t kStride = 64;
constexpr std::size_t kWalkers = 16;
constexpr std::size_t kSequentialBelow = 1u << 14;

inline bool is_mark(Point x) { return (x & (kStride - 1)) == 0; }

struct Segment {
  std::uint32_t length = 0;
  std::uint32_t next = 0;       // mark index the segment runs into
  std::uint32_t min_offset = 0;
  Point min = 0;
  std::uint32_t cycle = 0;      // index into the marked-cycle table
  std::uint32_t rel = 0;        // position of the mark within its cycle's output
};

struct MarkedCycle {
  Point min = 0;
  std::size_t length = 0;
  std::size_t base = 0;
};

template <typename Step>
void run_walkers(std::size_t jobs, Step&& step) {
  // step(k, job, true) starts walker k on a job; step(k, job, false) advances
  // it by one point and returns false once the job is finished.
  std::size_t job[kWalkers];
  bool busy[kWalkers] = {};
  std::size_t next_job = 0, live = 0;
  for (std::size_t k = 0; k < kWalkers && next_job < jobs; ++k, ++live) {
    job[k] = next_job++;
    busy[k] = true;
    step(k, job[k], true);
  }
  while (live > 0) {
    for (std::size_t k = 0; k < kWalkers; ++k) {
      if (!busy[k] || step(k, job[k], false)) continue;
      if (next_job < jobs) {
        job[k] = next_job++;
        step(k, job[k], true);
      } else {
        busy[k] = false;
        --live;
      }
    }
  }
}

CycleDecomposition::Layout strided_decomposition(std::span<const Point> p) {
  const std::size_t n = p.size();
  const std::size_t marks = (n + kStride - 1) / kStride;
  std::vector<Segment> seg(marks);
  std::vector<bool> seen(n, false);

  // Pass 1: measure each segment.
  {
    Point cur[kWalkers];
    std::uint32_t len[kWalkers];
    run_walkers(marks, [&](std::size_t k, std::size_t m, bool first) {
      auto& s = seg[m];
      if (first) {
        const Point start = static_cast<Point>(m * kStride);
        s.min = start;
        s.min_offset = 0;
        len[k] = 1;
        cur[k] = p[start];
        return true;
      }
      const Point x = cur[k];
      if (is_mark(x)) {
        s.length = len[k];
        s.next = x / kStride;
        return false;
      }
      seen[x] = true;
      if (x < s.min) {
        s.min = x;
        s.min_offset = len[k];
      }
      ++len[k];
      cur[k] = p[x];
      return true;
    });
  }

  // Link segments into cycles and give each segment its offset in the cycle,
  // counted from the cycle's minimum.
  std::vector<MarkedCycle> cycles;
  {
    std::vector<std::uint8_t> linked(marks, 0);
    for (std::size_t m = 0; m < marks; ++m) {
      if (linked[m]) continue;
      MarkedCycle c;
      std::size_t best = m;
      c.min = seg[m].min;
      std::size_t i = m;
      do {
        linked[i] = 1;
        c.length += seg[i].length;
        if (seg[i].min < c.min) {
          c.min = seg[i].min;
          best = i;
        }
        i = seg[i].next;
      } while (i != m);
      std::size_t rel = (c.length - seg[best].min_offset) % c.length;
      i = best;
      do {
        seg[i].rel = static_cast<std::uint32_t>(rel);
        seg[i].cycle = static_cast<std::uint32_t>(cycles.size());
        rel = (rel + seg[i].length) % c.length;
        i = seg[i].next;
      } while (i != best);
      cycles.push_back(c);
    }
  }
  std::vector<std::uint32_t> order(cycles.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(),
            [&](std::uint32_t a, std::uint32_t b) { return cycles[a].min < cycles[b].min; });

  // Ascending scan: place marked cycles and copy unmarked ones directly.
  CycleDecomposition::Layout out;
  out.points.resize(n);
  out.starts.push_back(0);
  std::size_t pos = 0, next_marked = 0;
  for (std::size_t x = 0; x < n; ++x) {
    if (next_marked < order.size() && cycles[order[next_marked]].min == x) {
      auto& c = cycles[order[next_marked++]];
      c.base = pos;
      pos += c.length;
      out.starts.push_back(pos);
      continue;
    }
    if (seen[x] || is_mark(static_cast<Point>(x))) continue;
    Point y = static_cast<Point>(x);
    do {
      seen[y] = true;
      out.points[pos++] = y;
      y = p[y];
    } while (y != x);
    out.starts.push_back(pos);
  }

  // Pass 2: copy each segment to its slots.
  {
    Point cur[kWalkers];
    std::size_t at[kWalkers], left[kWalkers];
    run_walkers(marks, [&](std::size_t k, std::size_t m, bool first) {
      const auto& s = seg[m];
      const auto& c = cycles[s.cycle];
      if (first) {
        cur[k] = static_cast<Point>(m * kStride);
        at[k] = s.rel;
        left[k] = s.length;
        return true;
      }
      out.points[c.base + at[k]] = cur[k];
      if (++at[k] == c.length) at[k] = 0;
      if (--left[k] == 0) return false;
      cur[k] = p[cur[k]];
      return true;
    });
  }
  return out;
}

}  // namespace

CycleDecomposition cycle_decomposition(const Permutation& p) {
  const auto images = p.images();
  CycleDecomposition d;
  auto layout = images.size() < kSequentialBelow ? sequential_decomposition(images)
                                                 : strided_decomposition(images);
  d.points_ = std::move(layout.points);
  d.starts_ = std::move(layout.starts);
  return d;
}

Permutation from_cycles(const CycleDecomposition& d) {
  std::vector<Point> out(d.degree());
  for (std::size_t i = 0; i < d.size(); ++i) {
    auto c = d.cycle(i);
    for (std::size_t j = 0; j + 1 < c.size(); ++j) out[c[j]] = c[j + 1];
    out[c.back()] = c.front();
  }
  return adopt_images(std::move(out));
}

Permutation from_cycles(std::size_t degree, const std::vector<Cycle>& cycles) {
  std::vector<Point> out(degree);
  std::iota(out.begin(), out.end(), Point{0});
  std::vector<bool> seen(degree, false);
  for (const auto& c : cycles) {
    if (c.points.empty()) throw InvalidPermutation("empty cycle");
    for (std::size_t j = 0; j < c.points.size(); ++j) {
      const Point x = c.points[j];
      if (x >= degree)
        throw InvalidPermutation("point " + std::to_string(x + 1) + " exceeds degree " +
                                 std::to_string(degree));
      if (seen[x]) throw InvalidPermutation("point " + std::to_string(x + 1) + " repeated");
      seen[x] = true;
      out[x] = c.points[(j + 1) % c.points.size()];
    }
  }
  return adopt_images(std::move(out));
}

Permutation cycle_permutation(std::size_t degree, std::span<const Point> points) {
  return from_cycles(degree, {Cycle{{points.begin(), points.end()}}});
}

std::vector<Point> written_form(const Permutation& full_cycle, Point anchor) {
  if (!is_full_cycle(full_cycle)) throw InvalidPermutation("not a full cycle");
  std::vector<Point> out;
  out.reserve(full_cycle.degree());
  Point x = anchor;
  do {
    out.push_back(x);
    x = full_cycle(x);
  } while (x != anchor);
  return out;
}

}  // namespace ncyc
