#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cubocubic/cremona.hpp"
#include "cubocubic/error.hpp"
#include "cubocubic/geometry.hpp"
#include "cubocubic/pipeline.hpp"
#include "cubocubic/tensor_io.hpp"

namespace py = pybind11;
using namespace cubocubic;

namespace {

Field field_from(const py::object& choice) {
  if (choice.is_none()) return Field::rational();
  if (py::isinstance<py::str>(choice)) {
    const auto s = choice.cast<std::string>();
    if (s == "rational" || s == "QQ") return Field::rational();
    throw Error(ErrorKind::InvalidArgument, "field must be \"rational\" or a prime, got \"" + s + "\"");
  }
  return Field::prime(choice.cast<std::uint64_t>());
}

Parallelism threads_or_env(std::optional<unsigned> threads) {
  return threads ? Parallelism{std::max(1U, *threads)} : Parallelism::from_env();
}

ScanTarget target_from(const std::string& s) {
  if (s == "curve") return ScanTarget::Curve;
  if (s == "s1") return ScanTarget::S1;
  if (s == "s2") return ScanTarget::S2;
  throw Error(ErrorKind::InvalidArgument, "target must be curve, s1 or s2");
}

std::vector<std::string> render(const CremonaMap& m) {
  std::vector<std::string> out;
  for (const auto& c : m.components()) out.push_back(c.to_string());
  return out;
}

}  // namespace

PYBIND11_MODULE(_cubocubic, m) {
  m.doc() = "Cubo-cubic Cremona transformations and determinantal quartic surfaces";

  // Instances carry the error kind name in `kind`.
  static PyObject* error_type = PyErr_NewException("cubocubic._cubocubic.CubocubicError", PyExc_RuntimeError, nullptr);
  m.attr("CubocubicError") = py::handle(error_type);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error_type)(e.what());
      exc.attr("kind") = std::string(to_string(e.kind()));
      PyErr_SetObject(error_type, exc.ptr());
    }
  });

  py::class_<CoefficientTensor>(m, "Tensor")
      .def(py::init([](const std::vector<long long>& values, const py::object& field) {
             return CoefficientTensor::from_integers(field_from(field), values);
           }),
           py::arg("values"), py::arg("field") = py::none(),
           "64 integers in a[i][j][k] order (i-major, k fastest).")
      .def_static("load", [](const std::string& path) { return load_tensor(path).tensor; })
      .def_static("parse", [](const std::string& text) { return parse_tensor(text).tensor; })
      .def("dumps", [](const CoefficientTensor& t) { return serialize_tensor(t); })
      .def("save", [](const CoefficientTensor& t, const std::string& path) { save_tensor(path, t); })
      .def("at", [](const CoefficientTensor& t, std::size_t i, std::size_t j, std::size_t k) {
             if (i > 3 || j > 3 || k > 3) throw Error(ErrorKind::IndexOutOfRange, "tensor index");
             return t.at(i, j, k).to_string();
           })
      .def("reduce_mod", &CoefficientTensor::reduce_mod, py::arg("p"))
      .def("swapped_roles", &CoefficientTensor::swapped_roles)
      .def_property_readonly("field", [](const CoefficientTensor& t) { return t.field().to_string(); })
      .def_property_readonly("seed", [](const CoefficientTensor& t) { return t.seed; })
      .def("__eq__", [](const CoefficientTensor& a, const CoefficientTensor& b) { return a == b; });

  m.def(
      "generate",
      [](std::uint64_t seed, const py::object& field, long long lo, long long hi, int retries) {
        RunConfig cfg;
        cfg.seed = seed;
        cfg.field = field_from(field);
        cfg.coeff_lo = lo;
        cfg.coeff_hi = hi;
        cfg.retries = retries;
        GenerateResult r = generate(cfg);
        return py::make_tuple(std::move(r.tensor), r.attempt);
      },
      py::arg("seed") = 1, py::arg("field") = py::none(), py::arg("coeff_lo") = -5, py::arg("coeff_hi") = 5,
      py::arg("retries") = 5, "Returns (tensor, attempt) for the first draw that passes the genericity gates.");

  m.def(
      "verify_json",
      [](const CoefficientTensor& t, std::vector<std::uint64_t> primes, int max_degree,
         std::optional<unsigned> threads) {
        RunConfig cfg;
        cfg.primes = std::move(primes);
        cfg.max_degree = max_degree;
        cfg.parallelism = threads_or_env(threads);
        VerificationReport report;
        {
          py::gil_scoped_release release;
          report = verify(t, cfg);
        }
        return report.to_json().dump(2);
      },
      py::arg("tensor"), py::arg("primes") = std::vector<std::uint64_t>{7, 11, 13}, py::arg("max_degree") = 8,
      py::arg("threads") = py::none());

  m.def(
      "scan_json",
      [](const CoefficientTensor& t, std::uint64_t prime, const std::string& target, std::optional<unsigned> threads) {
        return scan(t, prime, target_from(target), threads_or_env(threads)).to_json().dump(2);
      },
      py::arg("tensor"), py::arg("prime"), py::arg("target") = "curve", py::arg("threads") = py::none());

  m.def(
      "hilbert",
      [](const CoefficientTensor& t, int max_degree) {
        const DeterminantalData d = assemble(t);
        const GradedIdealView ideal({d.phi.components().begin(), d.phi.components().end()});
        std::vector<std::size_t> out;
        for (int deg = 1; deg <= max_degree; ++deg) out.push_back(hilbert_dim(ideal, deg));
        return out;
      },
      py::arg("tensor"), py::arg("max_degree") = 8);

  m.def("hilbert_burch_dim", &hilbert_burch_dim, py::arg("d"));

  m.def("curve_degree_genus", [](const CoefficientTensor& t) {
    const DeterminantalData d = assemble(t);
    const DegreeGenus dg = curve_degree_genus(GradedIdealView({d.phi.components().begin(), d.phi.components().end()}));
    return py::make_tuple(dg.degree, dg.genus);
  });

  m.def("intersection_matrix", &intersection_matrix);

  m.def("determinants", [](const CoefficientTensor& t) {
    const DeterminantalData d = assemble(t);
    return py::make_tuple(d.det_M.to_string(), d.det_N.to_string());
  }, "Returns (det M(x), det N(y)) as strings.");

  m.def("cubo_cubic_maps", [](const CoefficientTensor& t) {
    const DeterminantalData d = assemble(t);
    return py::make_tuple(render(d.phi), render(d.psi));
  }, "Returns the components of phi and of its inverse psi as strings.");

  m.def("inverse_degrees", [](const CoefficientTensor& t) {
    const auto r = check_inverse_composition(build_data(t));
    if (!r.record.passed()) throw Error(ErrorKind::NotBirational, r.record.message);
    return py::make_tuple(r.lambda->degree(), r.mu->degree());
  }, "Degrees of lambda and mu in psi(phi(x)) = lambda x and phi(psi(y)) = mu y.");
}
