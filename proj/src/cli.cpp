#include "ncyc/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "ncyc/bench.hpp"
#include "ncyc/factorizer.hpp"
#include "ncyc/notation.hpp"
#include "ncyc/oracle.hpp"
#include "ncyc/random.hpp"

namespace ncyc::cli {

namespace {

constexpr const char* kConvention = "apply-left-first";

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += ' ';
    out += p;
  }
  return out;
}

std::vector<std::string> read_lines(std::istream& in) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    auto t = trim(line);
    if (!t.empty()) lines.push_back(std::move(t));
  }
  return lines;
}

std::string single_input(const CliRequest& req, std::istream& in) {
  std::string text = req.inputs.empty() ? join(read_lines(in)) : join(req.inputs);
  if (text.empty()) throw UsageError("no permutation given");
  return text;
}

std::string render(const Permutation& p, const CliRequest& req) {
  return req.format == Format::oneline ? format_one_line(p) : format_cycles(p, req.show_fixed);
}

void print_pair(const Permutation& sigma, const Permutation& x, const Permutation& y, bool valid,
                const CliRequest& req, std::ostream& out) {
  if (req.format == Format::json) {
    nlohmann::json j;
    j["n"] = sigma.degree();
    j["input"] = format_cycles(sigma, req.show_fixed);
    j["factors"] = {format_cycles(x, req.show_fixed), format_cycles(y, req.show_fixed)};
    j["valid"] = valid;
    j["convention"] = kConvention;
    out << j.dump() << '\n';
    return;
  }
  out << render(x, req) << '\n' << render(y, req) << '\n';
}

int do_decompose(const CliRequest& req, std::istream& in, std::ostream& out) {
  const auto sigma = parse_permutation(single_input(req, in), req.degree);
  const auto f = two_n_cycle_factorization(sigma);
  const bool valid = verify_factorization(sigma, f).valid();
  print_pair(sigma, f.first, f.second, valid, req, out);
  return valid ? kOk : kInvalid;
}

int do_commutator(const CliRequest& req, std::istream& in, std::ostream& out) {
  const auto sigma = parse_permutation(single_input(req, in), req.degree);
  const auto [a, b] = commutator_decomposition(sigma);
  const bool valid = commutator(a, b) == sigma && is_full_cycle(a);
  print_pair(sigma, a, b, valid, req, out);
  return valid ? kOk : kInvalid;
}

int do_verify(const CliRequest& req, std::istream& in, std::ostream& out) {
  const auto texts = req.inputs.empty() ? read_lines(in) : req.inputs;
  if (texts.size() != 3)
    throw UsageError("verify needs exactly three permutations (sigma, first, second), got " +
                     std::to_string(texts.size()));
  std::optional<std::size_t> degree = req.degree;
  if (!degree) {
    std::size_t widest = 0;
    for (const auto& t : texts) widest = std::max(widest, parse_permutation(t).degree());
    degree = widest;
  }
  const auto sigma = parse_permutation(texts[0], degree);
  const TwoCycleFactorization f{parse_permutation(texts[1], degree),
                                parse_permutation(texts[2], degree)};
  const auto verdict = verify_factorization(sigma, f);
  if (req.format == Format::json) {
    nlohmann::json j;
    j["n"] = sigma.degree();
    j["input"] = format_cycles(sigma, req.show_fixed);
    j["factors"] = {format_cycles(f.first, req.show_fixed), format_cycles(f.second, req.show_fixed)};
    j["valid"] = verdict.valid();
    j["convention"] = kConvention;
    j["reason"] = verdict.describe();
    out << j.dump() << '\n';
  } else {
    out << verdict.describe() << '\n';
  }
  return verdict.valid() ? kOk : kInvalid;
}

int do_selftest(const CliRequest& req, std::ostream& out) {
  if (req.max_n < 1) throw UsageError("--max-n must be at least 1");
  const std::size_t exhaustive_max = std::min(req.max_n, oracle::kMaxExhaustiveDegree);
  const std::size_t coverage_max = std::min(req.max_n, oracle::kMaxPairCountDegree);
  bool all_ok = true;
  nlohmann::json j = nlohmann::json::array();
  for (std::size_t n = 1; n <= exhaustive_max; ++n) {
    const auto r = oracle::exhaustive_verify(n);
    all_ok = all_ok && r.ok();
    if (req.format == Format::json)
      j.push_back({{"check", "exhaustive"}, {"n", n}, {"elements", r.elements},
                   {"passed", r.passed}, {"ok", r.ok()}});
    else
      out << "exhaustive n=" << n << ": " << r.passed << '/' << r.elements << " passed"
          << (r.ok() ? "" : "  FAIL") << '\n';
  }
  for (std::size_t n = 2; n <= coverage_max; ++n) {
    const auto r = oracle::bertram_coverage(n);
    all_ok = all_ok && r.ok();
    if (req.format == Format::json)
      j.push_back({{"check", "coverage"}, {"n", n}, {"even_elements", r.even_elements},
                   {"even_covered", r.even_covered}, {"odd_with_pairs", r.odd_with_pairs},
                   {"total_pairs", r.total_pairs}, {"expected_total", r.expected_total},
                   {"ok", r.ok()}});
    else
      out << "coverage n=" << n << ": " << r.even_covered << '/' << r.even_elements
          << " even covered, " << r.odd_with_pairs << '/' << r.odd_elements
          << " odd with pairs, pairs " << r.total_pairs << '/' << r.expected_total
          << (r.ok() ? "" : "  FAIL") << '\n';
  }
  if (req.format == Format::json) out << j.dump() << '\n';
  return all_ok ? kOk : kInvalid;
}

int do_bench(const CliRequest& req, std::ostream& out, std::ostream& err) {
  bench::ScalingConfig config;
  config.sizes = req.sizes;
  if (config.sizes.empty())
    for (std::size_t n = 1u << 12; n <= (1u << 18); n *= 2) config.sizes.push_back(n);
  std::sort(config.sizes.begin(), config.sizes.end());
  config.sizes.erase(std::unique(config.sizes.begin(), config.sizes.end()), config.sizes.end());
  config.reps = req.reps;
  config.seed = req.seed;
  if (req.family == "random")
    config.family = bench::InputFamily::random_even;
  else if (req.family == "transpositions")
    config.family = bench::InputFamily::all_transpositions;
  else
    throw UsageError("--family must be random or transpositions");

  std::vector<bench::ScalingSample> samples;
  try {
    samples = bench::run_scaling(config);
    if (samples.size() >= 4)
      err << "spliced log-log slope: " << bench::estimate_slope(samples) << '\n';
    auto naive = config;
    naive.algorithm = bench::Algorithm::naive;
    naive.sizes.clear();
    for (std::size_t n : config.sizes)
      if (n <= req.naive_max_n) naive.sizes.push_back(n);
    if (!naive.sizes.empty()) {
      auto naive_samples = bench::run_scaling(naive);
      if (naive_samples.size() >= 4)
        err << "naive log-log slope: " << bench::estimate_slope(naive_samples) << '\n';
      samples.insert(samples.end(), naive_samples.begin(), naive_samples.end());
    }
  } catch (const ParityError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  const auto csv = bench::to_csv(samples);
  if (req.out_path.empty()) {
    out << csv;
  } else {
    std::ofstream file(req.out_path);
    if (!file) throw UsageError("cannot write " + req.out_path);
    file << csv;
  }
  return kOk;
}

int do_random(const CliRequest& req, std::ostream& out) {
  if (!req.degree || *req.degree == 0) throw UsageError("random needs --n >= 1");
  const auto p = random_even_permutation(*req.degree, req.seed);
  if (req.format == Format::json) {
    nlohmann::json j;
    j["n"] = p.degree();
    j["permutation"] = format_cycles(p, req.show_fixed);
    j["seed"] = req.seed;
    out << j.dump() << '\n';
  } else {
    out << render(p, req) << '\n';
  }
  return kOk;
}

}  // namespace

int run(const CliRequest& request, std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    if (request.degree && *request.degree == 0) throw UsageError("--n must be at least 1");
    switch (request.subcommand) {
      case Subcommand::decompose: return do_decompose(request, in, out);
      case Subcommand::commutator: return do_commutator(request, in, out);
      case Subcommand::verify: return do_verify(request, in, out);
      case Subcommand::selftest: return do_selftest(request, out);
      case Subcommand::bench: return do_bench(request, out, err);
      case Subcommand::random: return do_random(request, out);
    }
  } catch (const ParityError& e) {
    err << "error: " << e.what() << '\n';
    return kParity;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

int main_entry(int argc, const char* const* argv, std::istream& in, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Factor even permutations into two n-cycles, or into a commutator.", "ncyc"};
  app.require_subcommand(1);

  CliRequest req;
  std::string format = "cycles";

  const std::map<std::string, Format> formats{
      {"cycles", Format::cycles}, {"oneline", Format::oneline}, {"json", Format::json}};

  auto add_common = [&](CLI::App* sub, bool takes_input) {
    sub->add_option("--n", req.degree, "Degree (number of points)");
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"cycles", "oneline", "json"}));
    sub->add_flag("--show-fixed", req.show_fixed, "Print fixed points as 1-cycles");
    if (takes_input)
      sub->add_option("perm", req.inputs,
                      "Permutation in cycle notation \"(1 2 3)\" or one-line \"2 3 1\"; "
                      "read from stdin when omitted");
  };

  auto* decompose = app.add_subcommand("decompose", "Write an even permutation as two n-cycles");
  add_common(decompose, true);
  auto* comm = app.add_subcommand("commutator", "Write an even permutation as a commutator");
  add_common(comm, true);
  auto* verify = app.add_subcommand("verify", "Check sigma = first * second with n-cycle factors");
  add_common(verify, true);
  auto* selftest = app.add_subcommand("selftest", "Run the exhaustive small-degree oracles");
  add_common(selftest, false);
  selftest->add_option("--max-n", req.max_n, "Largest degree to check (at most 8)");
  auto* bench = app.add_subcommand("bench", "Measure scaling; writes CSV");
  bench->add_option("--sizes", req.sizes, "Comma-separated degrees")->delimiter(',');
  bench->add_option("--out", req.out_path, "CSV output path (stdout if omitted)");
  bench->add_option("--seed", req.seed, "Input seed");
  bench->add_option("--reps", req.reps, "Measured repetitions per size (>= 5)");
  bench->add_option("--family", req.family, "Input family: random or transpositions");
  bench->add_option("--naive-max-n", req.naive_max_n, "Largest size for the naive baseline");
  auto* random = app.add_subcommand("random", "Print a uniform random even permutation");
  add_common(random, false);
  random->add_option("--seed", req.seed, "Seed");

  std::vector<std::string> args;
  for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kUsage;
  }

  req.format = formats.at(format);
  const std::pair<CLI::App*, Subcommand> subs[] = {
      {decompose, Subcommand::decompose}, {comm, Subcommand::commutator},
      {verify, Subcommand::verify},       {selftest, Subcommand::selftest},
      {bench, Subcommand::bench},         {random, Subcommand::random}};
  for (const auto& [sub, kind] : subs)
    if (sub->parsed()) req.subcommand = kind;
  return run(req, in, out, err);
}

}  // namespace ncyc::cli
