#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ncyc::cli {

enum class Subcommand { decompose, commutator, verify, selftest, bench, random };
enum class Format { cycles, oneline, json };

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kInvalid = 1;
inline constexpr int kUsage = 2;
inline constexpr int kParity = 3;

struct CliRequest {
  Subcommand subcommand = Subcommand::decompose;
  std::optional<std::size_t> degree;
  /// Permutation texts; read from stdin when empty.
  std::vector<std::string> inputs;
  Format format = Format::cycles;
  std::uint64_t seed = 0;
  bool show_fixed = false;
  std::size_t max_n = 8;
  std::vector<std::size_t> sizes;
  std::string out_path;
  std::size_t reps = 5;
  std::string family = "random";
  std::size_t naive_max_n = 16384;
};

/// Executes a parsed request. Returns the exit status.
int run(const CliRequest& request, std::istream& in, std::ostream& out, std::ostream& err);

/// Parses argv (argv[0] is the program name) and runs it.
int main_entry(int argc, const char* const* argv, std::istream& in, std::ostream& out,
               std::ostream& err);

}  // namespace ncyc::cli
