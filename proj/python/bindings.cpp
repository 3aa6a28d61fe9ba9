#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ncyc/bench.hpp"
#include "ncyc/factorizer.hpp"
#include "ncyc/notation.hpp"
#include "ncyc/oracle.hpp"
#include "ncyc/random.hpp"

namespace py = pybind11;

namespace {

std::vector<std::vector<ncyc::Point>> cycles_of(const ncyc::Permutation& p) {
  std::vector<std::vector<ncyc::Point>> out;
  for (auto& c : ncyc::cycle_decomposition(p).cycles()) out.push_back(std::move(c.points));
  return out;
}

}  // namespace

PYBIND11_MODULE(_ncyc, m) {
  m.doc() = "Factor even permutations into two n-cycles (points are 0-based; text is 1-based)";

  py::register_exception<ncyc::ParityError>(m, "ParityError", PyExc_ValueError);
  py::register_exception<ncyc::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ncyc::InvalidPermutation>(m, "InvalidPermutation", PyExc_ValueError);
  py::register_exception<ncyc::DegreeMismatch>(m, "DegreeMismatch", PyExc_ValueError);

  py::class_<ncyc::Permutation>(m, "Permutation")
      .def(py::init<std::vector<ncyc::Point>>(), py::arg("images"))
      .def_static("identity", &ncyc::Permutation::identity, py::arg("degree"))
      .def_property_readonly("degree", &ncyc::Permutation::degree)
      .def_property_readonly("images",
                             [](const ncyc::Permutation& p) {
                               auto s = p.images();
                               return std::vector<ncyc::Point>(s.begin(), s.end());
                             })
      .def("__call__", &ncyc::Permutation::at)
      .def("__len__", &ncyc::Permutation::degree)
      .def("__mul__", [](const ncyc::Permutation& a, const ncyc::Permutation& b) {
        return ncyc::compose(a, b);
      })
      .def(py::self == py::self)
      .def("__hash__",
           [](const ncyc::Permutation& p) {
             auto s = p.images();
             return py::hash(py::tuple(py::cast(std::vector<ncyc::Point>(s.begin(), s.end()))));
           })
      .def("__str__", [](const ncyc::Permutation& p) { return ncyc::format_cycles(p); })
      .def("__repr__", [](const ncyc::Permutation& p) {
        return "Permutation(degree=" + std::to_string(p.degree()) + ", \"" +
               ncyc::format_cycles(p) + "\")";
      });

  m.def(
      "compose",
      [](const ncyc::Permutation& p, const ncyc::Permutation& q) { return ncyc::compose(p, q); },
      "compose(p, q)(x) == q(p(x))");
  m.def("inverse", &ncyc::inverse);
  m.def("power", &ncyc::power, py::arg("p"), py::arg("k"));
  m.def("conjugate", &ncyc::conjugate, py::arg("p"), py::arg("t"));
  m.def("commutator", &ncyc::commutator, py::arg("a"), py::arg("b"));
  m.def("parity", [](const ncyc::Permutation& p) { return ncyc::to_string(ncyc::parity(p)); });
  m.def("is_full_cycle", &ncyc::is_full_cycle);
  m.def("cycle_decomposition", &cycles_of, "Canonical cycles (0-based), fixed points included");

  m.def("parse_cycles", &ncyc::parse_cycles, py::arg("text"), py::arg("degree") = py::none());
  m.def("parse_permutation", &ncyc::parse_permutation, py::arg("text"),
        py::arg("degree") = py::none());
  m.def("format_cycles", &ncyc::format_cycles, py::arg("p"), py::arg("show_fixed") = false);
  m.def("random_even_permutation", &ncyc::random_even_permutation, py::arg("n"),
        py::arg("seed"));

  m.def(
      "two_n_cycle_factorization",
      [](const ncyc::Permutation& sigma) {
        auto f = ncyc::two_n_cycle_factorization(sigma);
        return py::make_tuple(f.first, f.second);
      },
      py::arg("sigma"));
  m.def(
      "commutator_decomposition",
      [](const ncyc::Permutation& sigma) {
        auto c = ncyc::commutator_decomposition(sigma);
        return py::make_tuple(c.a, c.b);
      },
      py::arg("sigma"));
  m.def("conjugator_between_cycles", &ncyc::conjugator_between_cycles);
  m.def(
      "verify_factorization",
      [](const ncyc::Permutation& sigma, const ncyc::Permutation& first,
         const ncyc::Permutation& second) {
        auto v = ncyc::verify_factorization(sigma, {first, second});
        return py::make_tuple(v.valid(), v.describe());
      },
      py::arg("sigma"), py::arg("first"), py::arg("second"));

  m.def("pair_count", &ncyc::oracle::pair_count);
  m.def("exhaustive_verify", [](std::size_t n) {
    auto r = ncyc::oracle::exhaustive_verify(n);
    py::dict d;
    d["n"] = r.degree;
    d["elements"] = r.elements;
    d["passed"] = r.passed;
    d["ok"] = r.ok();
    return d;
  });
  m.def("bertram_coverage", [](std::size_t n) {
    auto r = ncyc::oracle::bertram_coverage(n);
    py::dict d;
    d["n"] = r.degree;
    d["even_elements"] = r.even_elements;
    d["even_covered"] = r.even_covered;
    d["odd_with_pairs"] = r.odd_with_pairs;
    d["total_pairs"] = r.total_pairs;
    d["expected_total"] = r.expected_total;
    d["ok"] = r.ok();
    return d;
  });
  m.def(
      "write_count",
      [](std::size_t n, std::uint64_t seed, bool naive, bool transpositions) {
        return ncyc::bench::write_count(
            n, seed, naive ? ncyc::bench::Algorithm::naive : ncyc::bench::Algorithm::spliced,
            transpositions ? ncyc::bench::InputFamily::all_transpositions
                           : ncyc::bench::InputFamily::random_even);
      },
      py::arg("n"), py::arg("seed") = 0, py::arg("naive") = false,
      py::arg("transpositions") = false);
}
