#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ordgen/algebra_expr.hpp"
#include "ordgen/arith_spec.hpp"
#include "ordgen/counting.hpp"
#include "ordgen/errors.hpp"
#include "ordgen/finalg.hpp"
#include "ordgen/report.hpp"
#include "ordgen/solver.hpp"

namespace py = pybind11;
using namespace ordgen;

namespace {

py::object to_py(const mpz_class& v) { return py::module_::import("builtins").attr("int")(v.get_str()); }

mpz_class from_py(const py::int_& v) { return mpz_class(py::str(v).cast<std::string>()); }

py::object to_py(const Json& doc) { return py::module_::import("json").attr("loads")(doc.dump()); }

OrderSpec spec_from(const py::object& spec) {
  if (py::isinstance<py::str>(spec)) return parse_spec(spec.cast<std::string>());
  return parse_spec(py::module_::import("json").attr("dumps")(spec).cast<std::string>());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Generator counts for finite algebras and orders";

  static py::handle error = py::exception<Error>(m, "OrdgenError", PyExc_ValueError).release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error)(e.what());
      exc.attr("kind") = std::string(to_string(e.kind()));
      PyErr_SetObject(error.ptr(), exc.ptr());
    }
  });

  m.def("gen_count", [](int k, int n, const py::int_& q) { return to_py(gen_count_exact(k, n, from_py(q))); },
        py::arg("k"), py::arg("n"), py::arg("q"));
  m.def("gen_count_lower",
        [](int k, int n, const py::int_& q) { return to_py(gen_count_lower(k, n, from_py(q)).lower); },
        py::arg("k"), py::arg("n"), py::arg("q"));
  m.def("gen_count_twisted",
        [](int k, int n, const py::int_& q, int r) { return to_py(gen_count_twisted(k, n, from_py(q), r)); },
        py::arg("k"), py::arg("n"), py::arg("q"), py::arg("r"));
  m.def("gen_count_power",
        [](int k, int n, const py::int_& q, int s, const py::int_& copies) {
          return to_py(gen_count_power(k, n, from_py(q), s, from_py(copies)));
        },
        py::arg("k"), py::arg("n"), py::arg("q"), py::arg("s"), py::arg("copies"));
  m.def("copy_capacity",
        [](int k, int n, const py::int_& q, int s) { return to_py(copy_capacity(k, n, from_py(q), s)); },
        py::arg("k"), py::arg("n"), py::arg("q"), py::arg("s") = 1);

  m.def("oracle_count",
        [](const std::string& alg, int k, std::uint64_t budget, unsigned workers) {
          OracleOptions opt;
          opt.budget = budget;
          opt.workers = workers;
          const auto a = parse_algebra(alg);
          py::gil_scoped_release release;
          auto v = brute_gen_count(a, k, opt);
          py::gil_scoped_acquire acquire;
          return to_py(v);
        },
        py::arg("alg"), py::arg("k"), py::arg("budget") = kDefaultOracleBudget, py::arg("workers") = 1);
  m.def("sample",
        [](const std::string& alg, int k, std::uint64_t samples, std::uint64_t seed, unsigned workers) {
          const auto a = parse_algebra(alg);
          const auto e = sample_gen_fraction(a, k, samples, seed, workers);
          return to_py(estimate_json(a, k, seed, e));
        },
        py::arg("alg"), py::arg("k"), py::arg("samples"), py::arg("seed"), py::arg("workers") = 1);

  m.def("analyze",
        [](const py::object& spec) {
          const auto s = spec_from(spec);
          return to_py(verdict_json(s, smallest_h(s)));
        },
        py::arg("spec"));
  m.def("density",
        [](const py::object& spec, int k, std::uint64_t bound) {
          const auto s = spec_from(spec);
          return to_py(density_json(s, density(s, k, bound)));
        },
        py::arg("spec"), py::arg("k"), py::arg("bound"));
  m.def("quaternion",
        [](const std::vector<std::uint64_t>& ramified, std::int64_t m_max) {
          return to_py(quaternion_json(quaternion_example(ramified, m_max)));
        },
        py::arg("ramified"), py::arg("m_max"));
}
