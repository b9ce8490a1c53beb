#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "incline/errors.hpp"
#include "incline/json_io.hpp"
#include "incline/matrix.hpp"
#include "incline/walk.hpp"

namespace py = pybind11;
using namespace incline;

namespace {

// Python ints, bools, strings and fractions.Fraction all map through str().
Element element_of(const Incline& L, const py::handle& value) {
  if (py::isinstance<py::bool_>(value)) return L.parse(value.cast<bool>() ? "1" : "0");
  return L.parse(py::str(value).cast<std::string>());
}

py::object big_int(const BigInt& v) { return py::module_::import("builtins").attr("int")(v.str()); }

Walk walk_of(const std::vector<std::uint32_t>& terms, std::optional<std::size_t> n) {
  std::size_t size = 2;
  if (n) {
    size = *n;
  } else {
    for (auto t : terms) size = std::max<std::size_t>(size, t);
  }
  return Walk(size, terms);
}

PrimeLabeling labeling_of(std::size_t n, const std::optional<std::vector<std::uint64_t>>& primes) {
  return primes ? PrimeLabeling(n, *primes) : PrimeLabeling::default_for(n);
}

ReductionMode mode_of(const std::string& name) {
  auto mode = parse_reduction_mode(name);
  if (!mode) throw ArgumentError("unknown mode \"" + name + "\"");
  return *mode;
}

std::vector<std::vector<std::string>> rows_of(const Matrix& a) {
  std::vector<std::vector<std::string>> rows(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) rows[i].push_back(a.incline().format(a(i, j)));
  }
  return rows;
}

}  // namespace

PYBIND11_MODULE(_incline, m) {
  m.doc() = "Commutative incline matrices and walk-reduction verification";

  py::register_exception<ArgumentError>(m, "ArgumentError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<StructuralError>(m, "StructuralError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  auto invalid = py::register_exception<InvalidInclineError>(m, "InvalidInclineError", PyExc_ValueError);
  py::register_exception<NoncommutativeInclineError>(m, "NoncommutativeInclineError", invalid.ptr());

  py::class_<Incline, std::shared_ptr<Incline>>(m, "Incline")
      .def(py::init([](const std::string& spec_json) {
             return std::make_shared<Incline>(incline_spec_from_json(Json::parse(spec_json)));
           }),
           py::arg("spec_json"))
      .def_static(
          "builtin",
          [](const std::string& name) {
            auto spec = builtin_incline_spec(name);
            if (!spec) throw ArgumentError("unknown builtin incline \"" + name + "\"");
            return std::make_shared<Incline>(*spec);
          },
          py::arg("name"))
      .def("describe", [](const Incline& L) { return describe(L.spec()); })
      .def("spec_json", [](const Incline& L) { return to_json(L.spec()).dump(); })
      .def("add", [](const Incline& L, py::handle a, py::handle b) {
        return L.format(L.add(element_of(L, a), element_of(L, b)));
      })
      .def("mul", [](const Incline& L, py::handle a, py::handle b) {
        return L.format(L.mul(element_of(L, a), element_of(L, b)));
      })
      .def("leq", [](const Incline& L, py::handle a, py::handle b) { return L.leq(element_of(L, a), element_of(L, b)); });

  m.def(
      "validate_incline_json",
      [](const std::string& spec_json, std::uint64_t samples, std::uint64_t seed) {
        return to_json(validate_incline(incline_spec_from_json(Json::parse(spec_json)), {samples, seed})).dump();
      },
      py::arg("spec_json"), py::arg("samples") = kDefaultValidationSamples, py::arg("seed") = kDefaultValidationSeed);

  py::class_<Matrix>(m, "Matrix")
      .def(py::init([](std::shared_ptr<Incline> L, const std::vector<std::vector<py::object>>& rows) {
             std::vector<std::vector<Element>> entries;
             for (const auto& row : rows) {
               entries.emplace_back();
               for (const auto& cell : row) entries.back().push_back(element_of(*L, cell));
             }
             return Matrix::from_rows(std::move(L), entries);
           }),
           py::arg("incline"), py::arg("rows"))
      .def_static("from_json", [](const std::string& doc) { return matrix_from_json(Json::parse(doc)); })
      .def("to_json", [](const Matrix& a) { return to_json(a).dump(); })
      .def_property_readonly("n", &Matrix::size)
      .def("rows", &rows_of)
      .def("__matmul__", &mat_mul)
      .def("__eq__", [](const Matrix& a, const Matrix& b) { return a == b; })
      .def("pow", &mat_pow, py::arg("l"))
      .def("leq", &mat_leq, py::arg("other"))
      .def("check_power_inequality", &check_power_inequality, py::arg("k"), py::arg("d"))
      .def(
          "order_index_period_json",
          [](const Matrix& a, std::optional<std::uint64_t> horizon) { return to_json(order_index_period(a, horizon)).dump(); },
          py::arg("horizon") = py::none());

  m.def(
      "edge_counts",
      [](const std::vector<std::uint32_t>& terms, std::optional<std::size_t> n) {
        const auto counts = edge_counts(walk_of(terms, n));
        std::vector<std::vector<std::uint32_t>> out(counts.vertex_count());
        for (std::uint32_t p = 1; p <= counts.vertex_count(); ++p) {
          for (std::uint32_t q = 1; q <= counts.vertex_count(); ++q) out[p - 1].push_back(counts.count(p, q));
        }
        return out;
      },
      py::arg("walk"), py::arg("n") = py::none());

  m.def(
      "is_reduction",
      [](const std::vector<std::uint32_t>& u, const std::vector<std::uint32_t>& v, std::optional<std::size_t> n) {
        std::vector<std::uint32_t> both = u;
        both.insert(both.end(), v.begin(), v.end());
        const std::size_t size = walk_of(both, n).vertex_count();
        return is_reduction(Walk(size, u), Walk(size, v));
      },
      py::arg("u"), py::arg("v"), py::arg("n") = py::none());

  m.def(
      "walk_code",
      [](const std::vector<std::uint32_t>& terms, std::size_t n, std::optional<std::vector<std::uint64_t>> primes) {
        return big_int(walk_code(Walk(n, terms), labeling_of(n, primes)));
      },
      py::arg("walk"), py::arg("n") = 3, py::arg("primes") = py::none());

  m.def(
      "find_reduction",
      [](const std::vector<std::uint32_t>& terms, std::size_t h, std::size_t n, const std::string& mode,
         std::optional<std::vector<std::uint64_t>> primes) -> std::optional<std::vector<std::uint32_t>> {
        const Walk v(n, terms);
        std::optional<Walk> u = mode_of(mode) == ReductionMode::multiset
                                    ? find_reduction(v, h)
                                    : find_reduction_by_code(v, h, labeling_of(n, primes));
        if (!u) return std::nullopt;
        return u->terms();
      },
      py::arg("walk"), py::arg("h"), py::arg("n") = 3, py::arg("mode") = "multiset", py::arg("primes") = py::none());

  m.def(
      "verify_all_json",
      [](std::size_t n, std::size_t long_length, std::size_t short_length, const std::string& mode,
         std::optional<std::vector<std::uint64_t>> primes) {
        VerificationReport report;
        {
          py::gil_scoped_release release;
          report = verify_all(n, long_length, short_length, labeling_of(n, primes), mode_of(mode));
        }
        return to_json(report, true).dump();
      },
      py::arg("n"), py::arg("long_length"), py::arg("short_length"), py::arg("mode") = "multiset",
      py::arg("primes") = py::none());

  m.def("lcm_upto", [](std::uint64_t n) { return big_int(lcm_upto(n)); }, py::arg("n"));
}
