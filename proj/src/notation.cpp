#include "ncyc/notation.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace ncyc {

namespace {

constexpr std::uint64_t kMaxPoint = 1u << 31;

class Lexer {
public:
  explicit Lexer(std::string_view text) : text_(text) {}

  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  void advance() { ++pos_; }

  bool skip_space() {
    const auto start = pos_;
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    return pos_ != start;
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Point read_point() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a positive integer");
    std::uint64_t value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + static_cast<unsigned>(peek() - '0');
      if (value > kMaxPoint) fail("point too large");
      ++pos_;
    }
    if (value == 0) fail("points are 1-based");
    return static_cast<Point>(value - 1);
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in \"" +
                     std::string(text_) + "\"");
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::size_t resolve_degree(std::size_t mentioned, std::optional<std::size_t> hint) {
  if (!hint) return std::max<std::size_t>(mentioned, 1);
  if (*hint == 0) throw ParseError("degree must be at least 1");
  if (mentioned > *hint)
    throw ParseError("point " + std::to_string(mentioned) + " exceeds degree " +
                     std::to_string(*hint));
  return *hint;
}

}  // namespace

Permutation parse_cycles(std::string_view text, std::optional<std::size_t> degree_hint) {
  Lexer lex(text);
  std::vector<Cycle> cycles;
  std::size_t max_point = 0;
  bool empty_form = false;

  lex.skip_space();
  if (lex.done()) lex.fail("empty input");
  while (!lex.done()) {
    lex.expect('(');
    lex.skip_space();
    if (lex.peek() == ')') {
      // "()" is only valid as the whole expression.
      if (!cycles.empty() || empty_form) lex.fail("empty cycle");
      lex.advance();
      empty_form = true;
      lex.skip_space();
      continue;
    }
    if (empty_form) lex.fail("\"()\" must stand alone");
    Cycle c;
    for (;;) {
      const Point x = lex.read_point();
      c.points.push_back(x);
      max_point = std::max<std::size_t>(max_point, std::size_t{x} + 1);
      const bool spaced = lex.skip_space();
      if (lex.peek() == ')') {
        lex.advance();
        break;
      }
      if (lex.peek() == ',') {
        lex.advance();
        lex.skip_space();
      } else if (!spaced) {
        lex.fail("expected separator or ')'");
      }
    }
    cycles.push_back(std::move(c));
    lex.skip_space();
  }

  const std::size_t degree = resolve_degree(max_point, degree_hint);
  try {
    return from_cycles(degree, cycles);
  } catch (const InvalidPermutation& e) {
    throw ParseError(std::string(e.what()) + " in \"" + std::string(text) + "\"");
  }
}

Permutation parse_one_line(std::string_view text, std::optional<std::size_t> degree_hint) {
  Lexer lex(text);
  std::vector<Point> images;
  lex.skip_space();
  while (!lex.done()) {
    images.push_back(lex.read_point());
    if (!lex.skip_space() && !lex.done()) lex.fail("expected whitespace");
  }
  if (images.empty()) lex.fail("empty input");
  if (degree_hint && *degree_hint != images.size())
    throw ParseError("one-line notation has " + std::to_string(images.size()) +
                     " images but degree is " + std::to_string(*degree_hint));
  try {
    return Permutation(std::move(images));
  } catch (const InvalidPermutation& e) {
    throw ParseError(std::string(e.what()) + " in \"" + std::string(text) + "\"");
  }
}

Permutation parse_permutation(std::string_view text, std::optional<std::size_t> degree_hint) {
  if (text.find('(') != std::string_view::npos) return parse_cycles(text, degree_hint);
  return parse_one_line(text, degree_hint);
}

std::string format_cycles(const Permutation& p, bool show_fixed) {
  const auto d = cycle_decomposition(p);
  std::string out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    auto c = d.cycle(i);
    if (c.size() == 1 && !show_fixed) continue;
    out += '(';
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (j) out += ' ';
      out += std::to_string(c[j] + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::string format_one_line(const Permutation& p) {
  std::string out;
  for (Point y : p.images()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(y + 1);
  }
  return out;
}

}  // namespace ncyc
