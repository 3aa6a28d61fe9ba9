#include "ncyc/oracle.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "ncyc/factorizer.hpp"

namespace ncyc::oracle {

namespace {

void require_range(std::size_t n, std::size_t lo, std::size_t hi, const char* op) {
  if (n < lo || n > hi)
    throw BudgetExceeded(std::string(op) + ": degree " + std::to_string(n) + " outside [" +
                         std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

// Inverse image tables of all n-cycles, for counting many targets at once.
std::vector<std::vector<Point>> n_cycle_inverses(std::size_t n) {
  std::vector<std::vector<Point>> out;
  for_each_n_cycle(n, [&](const Permutation& c) {
    const auto inv = inverse(c);
    out.emplace_back(inv.images().begin(), inv.images().end());
  });
  return out;
}

// r1 r2 = sigma  <=>  r2 = r1^-1 sigma, so r2(x) = sigma(r1^-1(x)).
std::uint64_t count_pairs(const Permutation& sigma,
                          const std::vector<std::vector<Point>>& cycle_inverses) {
  const std::size_t n = sigma.degree();
  std::array<Point, kMaxPairCountDegree> r2{};
  std::uint64_t count = 0;
  for (const auto& inv : cycle_inverses) {
    for (std::size_t x = 0; x < n; ++x) r2[x] = sigma(inv[x]);
    std::size_t len = 1;
    for (Point x = r2[0]; x != 0; x = r2[x]) ++len;
    if (len == n) ++count;
  }
  return count;
}

}  // namespace

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

std::string cycle_type_label(const std::vector<std::size_t>& type) {
  std::string out;
  for (std::size_t len : type) {
    if (!out.empty()) out += '.';
    out += std::to_string(len);
  }
  return out;
}

void for_each_n_cycle(std::size_t n, const std::function<void(const Permutation&)>& fn) {
  if (n < 2) throw std::invalid_argument("enumerate_n_cycles: degree must be at least 2");
  std::vector<Point> tail(n - 1);
  std::iota(tail.begin(), tail.end(), Point{1});
  std::vector<Point> form(n);
  do {
    form[0] = 0;
    std::copy(tail.begin(), tail.end(), form.begin() + 1);
    fn(cycle_permutation(n, form));
  } while (std::next_permutation(tail.begin(), tail.end()));
}

std::vector<Permutation> enumerate_n_cycles(std::size_t n) {
  std::vector<Permutation> out;
  out.reserve(factorial(n - 1));
  for_each_n_cycle(n, [&](const Permutation& c) { out.push_back(c); });
  return out;
}

void for_each_permutation(std::size_t n, bool even_only,
                          const std::function<void(const Permutation&)>& fn) {
  std::vector<Point> images(n);
  std::iota(images.begin(), images.end(), Point{0});
  do {
    Permutation p = adopt_images(images);
    if (!even_only || is_even(p)) fn(p);
  } while (std::next_permutation(images.begin(), images.end()));
}

std::uint64_t pair_count(const Permutation& sigma) {
  require_range(sigma.degree(), 1, kMaxPairCountDegree, "pair_count");
  if (sigma.degree() == 1) return 1;  // (id, id); the identity is the only 1-cycle
  return count_pairs(sigma, n_cycle_inverses(sigma.degree()));
}

PairCountReport pair_count_report(std::size_t n) {
  require_range(n, 2, kMaxPairCountDegree, "pair_count_report");
  PairCountReport report;
  report.degree = n;
  const auto inverses = n_cycle_inverses(n);
  std::map<std::vector<std::size_t>, CycleTypeRow> rows;
  for_each_permutation(n, true, [&](const Permutation& sigma) {
    const std::uint64_t count = count_pairs(sigma, inverses);
    const auto images = sigma.images();
    report.per_element.emplace(std::vector<Point>(images.begin(), images.end()), count);
    report.total += count;

    auto type = cycle_decomposition(sigma).cycle_type();
    auto [it, inserted] = rows.try_emplace(type);
    auto& row = it->second;
    if (inserted) {
      row.cycle_type = std::move(type);
      row.count_per_element = count;
    } else if (row.count_per_element != count) {
      report.class_function = false;
    }
    ++row.class_size;
  });
  // Longest cycles first, so the n-cycle class (if even) leads.
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) report.classes.push_back(it->second);
  return report;
}

std::string PairCountReport::to_csv() const {
  std::string out = "cycle_type,count_per_element,class_size\n";
  std::uint64_t elements = 0;
  for (const auto& row : classes) {
    out += cycle_type_label(row.cycle_type) + ',' + std::to_string(row.count_per_element) + ',' +
           std::to_string(row.class_size) + '\n';
    elements += row.class_size;
  }
  out += "total," + std::to_string(total) + ',' + std::to_string(elements) + '\n';
  return out;
}

ExhaustiveReport exhaustive_verify(std::size_t n) {
  require_range(n, 1, kMaxExhaustiveDegree, "exhaustive_verify");
  ExhaustiveReport report;
  report.degree = n;
  for_each_permutation(n, true, [&](const Permutation& sigma) {
    ++report.elements;
    bool ok = false;
    try {
      ok = verify_factorization(sigma, two_n_cycle_factorization(sigma)).valid();
    } catch (const std::exception&) {
      ok = false;
    }
    if (ok)
      ++report.passed;
    else
      report.failures.push_back(sigma);
  });
  return report;
}

CoverageReport bertram_coverage(std::size_t n) {
  require_range(n, 2, kMaxPairCountDegree, "bertram_coverage");
  CoverageReport report;
  report.degree = n;
  report.expected_total = factorial(n - 1) * factorial(n - 1);
  const auto inverses = n_cycle_inverses(n);
  for_each_permutation(n, false, [&](const Permutation& sigma) {
    const std::uint64_t count = count_pairs(sigma, inverses);
    report.total_pairs += count;
    if (is_even(sigma)) {
      ++report.even_elements;
      if (count > 0) ++report.even_covered;
    } else {
      ++report.odd_elements;
      if (count > 0) ++report.odd_with_pairs;
    }
  });
  return report;
}

}  // namespace ncyc::oracle
