#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "ncyc/cli.hpp"
#include "ncyc/notation.hpp"
#include "ncyc/random.hpp"

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args, const std::string& stdin_text = "") {
  args.insert(args.begin(), "ncyc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int status =
      ncyc::cli::main_entry(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return {status, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) v.push_back(line);
  return v;
}

}  // namespace

TEST_CASE("decompose prints two n-cycles") {
  const auto r = invoke({"decompose", "--n", "3", "(1 2 3)"});
  CHECK(r.status == 0);
  CHECK(r.out == "(1 3 2)\n(1 3 2)\n");

  const auto oneline = invoke({"decompose", "--format", "oneline", "2 1 4 3"});
  CHECK(oneline.status == 0);
  CHECK(oneline.out == "3 4 2 1\n3 4 2 1\n");

  const auto from_stdin = invoke({"decompose"}, "(1 2)(3 4)\n");
  CHECK(from_stdin.status == 0);
  CHECK(from_stdin.out == "(1 3 2 4)\n(1 3 2 4)\n");
}

TEST_CASE("exit statuses") {
  const auto odd = invoke({"decompose", "--n", "3", "(1 2)"});
  CHECK(odd.status == ncyc::cli::kParity);
  CHECK(odd.err.find("odd") != std::string::npos);

  CHECK(invoke({"commutator", "(1 2)"}).status == ncyc::cli::kParity);
  CHECK(invoke({"decompose", "(1 2"}).status == ncyc::cli::kUsage);
  CHECK(invoke({"decompose", "--n", "2", "(1 2 3)"}).status == ncyc::cli::kUsage);
  CHECK(invoke({"decompose", "--n", "0", "()"}).status == ncyc::cli::kUsage);
  CHECK(invoke({"decompose"}, "").status == ncyc::cli::kUsage);
  CHECK(invoke({"frobnicate"}).status == ncyc::cli::kUsage);
  CHECK(invoke({}).status == ncyc::cli::kUsage);
  CHECK(invoke({"random"}).status == ncyc::cli::kUsage);
  CHECK(invoke({"verify", "(1 2 3)"}).status == ncyc::cli::kUsage);
}

TEST_CASE("json mode") {
  const auto r = invoke({"decompose", "--format", "json", "--n", "5", "(1 2 3)"});
  REQUIRE(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["n"] == 5);
  CHECK(j["input"] == "(1 2 3)");
  REQUIRE(j["factors"].size() == 2);
  CHECK(j["valid"] == true);
  CHECK(j["convention"] == "apply-left-first");

  const auto c = invoke({"commutator", "--format", "json", "(1 2 3)(4 5 6)"});
  REQUIRE(c.status == 0);
  CHECK(nlohmann::json::parse(c.out)["valid"] == true);
}

TEST_CASE("verify") {
  const auto ok = invoke({"verify", "(1 2 3)", "(1 3 2)", "(1 3 2)"});
  CHECK(ok.status == 0);
  CHECK(ok.out == "valid\n");

  const auto bad = invoke({"verify", "--n", "3", "()", "(1 2 3)", "(1 2 3)"});
  CHECK(bad.status == ncyc::cli::kInvalid);
  CHECK(bad.out == "invalid: product differs from the input\n");

  const auto piped = invoke({"verify", "--format", "json"}, "()\n(1 2 3 4)\n(1 4 3 2)\n");
  CHECK(piped.status == 0);
  CHECK(nlohmann::json::parse(piped.out)["valid"] == true);
}

TEST_CASE("decompose output re-verifies through text") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t n = 1 + (seed * 37) % 200;
    const auto sigma = ncyc::random_even_permutation(n, seed);
    const auto text = ncyc::format_cycles(sigma);
    const auto nstr = std::to_string(n);
    const auto r = invoke({"decompose", "--n", nstr, text});
    REQUIRE(r.status == 0);
    const auto f = lines(r.out);
    REQUIRE(f.size() == 2);
    const auto v = invoke({"verify", "--n", nstr, text, f[0], f[1]});
    REQUIRE(v.out == "valid\n");
  }
}

TEST_CASE("commutator prints a full cycle a and b") {
  const auto r = invoke({"commutator", "--n", "6", "(1 2 3)"});
  REQUIRE(r.status == 0);
  const auto f = lines(r.out);
  REQUIRE(f.size() == 2);
  const auto a = ncyc::parse_cycles(f[0], 6), b = ncyc::parse_cycles(f[1], 6);
  CHECK(ncyc::is_full_cycle(a));
  CHECK(ncyc::commutator(a, b) == ncyc::parse_cycles("(1 2 3)", 6));
}

TEST_CASE("selftest") {
  const auto r = invoke({"selftest", "--max-n", "6"});
  CHECK(r.status == 0);
  CHECK(r.out.find("exhaustive n=6: 360/360 passed") != std::string::npos);
  CHECK(r.out.find("coverage n=4: 12/12 even covered, 0/12 odd with pairs, pairs 36/36") !=
        std::string::npos);

  const auto j = invoke({"selftest", "--max-n", "3", "--format", "json"});
  CHECK(j.status == 0);
  CHECK(nlohmann::json::parse(j.out).size() == 5);
}

TEST_CASE("random") {
  const auto a = invoke({"random", "--n", "12", "--seed", "4"});
  const auto b = invoke({"random", "--n", "12", "--seed", "4"});
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(ncyc::is_even(ncyc::parse_cycles(lines(a.out)[0], 12)));
  const auto ol = invoke({"random", "--n", "5", "--format", "oneline"});
  CHECK(ncyc::parse_one_line(lines(ol.out)[0]).degree() == 5);
}

TEST_CASE("bench writes csv") {
  const std::string path = "ncyc_bench_test.csv";
  const auto r = invoke({"bench", "--sizes", "64,128,256,512", "--out", path, "--naive-max-n", "128"});
  CHECK(r.status == 0);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  const auto rows = lines(ss.str());
  REQUIRE(rows.size() == 7);
  CHECK(rows[0] == "algorithm,n,median_seconds,write_count,reps,seed");
  CHECK(rows[1].rfind("spliced,64,", 0) == 0);
  CHECK(rows[5].rfind("naive,64,", 0) == 0);
  std::remove(path.c_str());

  CHECK(invoke({"bench", "--sizes", "8"}).status == ncyc::cli::kUsage);
  CHECK(invoke({"bench", "--family", "other"}).status == ncyc::cli::kUsage);
}
