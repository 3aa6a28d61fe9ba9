#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ncyc/permutation.hpp"

namespace ncyc {

class ParseError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Text forms are 1-based.
//
//   expression := "()" | cycle+
//   cycle      := "(" int (sep int)* ")"
//   sep        := spaces, or a comma (optionally padded by spaces)
//
// Whitespace is allowed around cycles. Points not mentioned are fixed. The
// degree is `degree_hint` when given, otherwise the largest point mentioned
// (and 1 for a bare "()").
Permutation parse_cycles(std::string_view text, std::optional<std::size_t> degree_hint = {});

/// Whitespace-separated 1-based images, e.g. "2 3 1".
Permutation parse_one_line(std::string_view text, std::optional<std::size_t> degree_hint = {});

/// Cycle notation if the text contains '(', one-line notation otherwise.
Permutation parse_permutation(std::string_view text, std::optional<std::size_t> degree_hint = {});

/// Canonical cycle notation. The identity prints as "()" unless show_fixed.
std::string format_cycles(const Permutation& p, bool show_fixed = false);

std::string format_one_line(const Permutation& p);

}  // namespace ncyc
