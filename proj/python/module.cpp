#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "swd/affine_b.hpp"
#include "swd/cli.hpp"
#include "swd/duality.hpp"
#include "swd/segments.hpp"
#include "swd/serialize.hpp"

namespace py = pybind11;
using namespace swd;

namespace {

// Structured results cross the boundary as JSON text; the Python package
// decodes them.
std::string dump(const Json& j) { return j.dump(); }

Segment seg(std::int64_t a, std::int64_t b) { return Segment(a, b); }

}  // namespace

PYBIND11_MODULE(_swd, m) {
  m.doc() = "Native core of the swd package.";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  py::class_<QPower>(m, "QPower")
      .def(py::init([](int sign, std::int64_t exp2) {
             if (sign != 1 && sign != -1) throw DomainError("sign must be +1 or -1");
             return QPower(sign, HalfInt::from_twice(exp2));
           }),
           py::arg("sign") = 1, py::arg("exp2") = 0)
      .def_static("parse", &QPower::parse)
      .def_property_readonly("sign", &QPower::sign)
      .def_property_readonly("exp2", &QPower::exp2)
      .def("inverse", &QPower::inverse)
      .def("__mul__", [](QPower x, QPower y) { return x * y; })
      .def("__truediv__", [](QPower x, QPower y) { return x / y; })
      .def("__neg__", [](QPower x) { return -x; })
      .def("__eq__", [](QPower x, QPower y) { return x == y; })
      .def("__hash__", [](QPower x) { return py::hash(py::make_tuple(x.sign(), x.exp2())); })
      .def("__str__", &QPower::to_string)
      .def("__repr__", [](QPower x) { return "QPower('" + x.to_string() + "')"; });

  m.def("denom_roots", [](int n, int k, int l) { return denom_roots(BnData(n), k, l).roots(); },
        py::arg("n"), py::arg("k"), py::arg("l"));
  m.def("in_s0", [](int n, int i, QPower x) { return in_S0(BnData(n), i, x); }, py::arg("n"),
        py::arg("i"), py::arg("x"));

  m.def("quiver_dij", [](int n, std::int64_t i, std::int64_t j) { return DualityDatum(n).quiver_dij(i, j); },
        py::arg("n"), py::arg("i"), py::arg("j"));
  m.def("cartan", [](int n, std::int64_t i, std::int64_t j) { return DualityDatum(n).cartan_AJ(i, j); },
        py::arg("n"), py::arg("i"), py::arg("j"));

  m.def("f_image_json",
        [](int n, std::int64_t a, std::int64_t b) { return dump(to_json(f_image(DualityDatum(n), seg(a, b)))); },
        py::arg("n"), py::arg("a"), py::arg("b"));
  m.def("phi1_json", [](int n, int i, std::int64_t p) { return dump(to_json(phi1_fund(DualityDatum(n), i, p))); },
        py::arg("n"), py::arg("i"), py::arg("p"));
  m.def("phi2_json",
        [](int n, int i, int sign, std::int64_t p) {
          return dump(to_json(phi2_fund(DualityDatum(n), i, sign, p)));
        },
        py::arg("n"), py::arg("i"), py::arg("sign"), py::arg("p"));
  m.def("class_text", [](const std::string& json) { return to_string(simple_class_from_json(Json::parse(json))); },
        py::arg("json"));

  m.def("lambda_", [](std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    return lambda(seg(a, b), seg(c, d));
  });
  m.def("de", [](std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) { return de(seg(a, b), seg(c, d)); });
  m.def("zero_order_s", [](std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    return zero_order_s(seg(a, b), seg(c, d));
  });
  m.def("k_relation_json", [](std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    return dump(to_json(k_relation(seg(a, b), seg(c, d))));
  });

  m.def("solve_cocycle_json",
        [](const std::string& family, int N, bool series, int order) {
          const Json j = Json::parse(family);
          return dump(cocycle_output_json(cocycle_input_from_json(j, N, series, order)));
        },
        py::arg("family"), py::arg("N"), py::arg("series") = false, py::arg("order") = 8);

  m.def("run_cli",
        [](const std::vector<std::string>& args) {
          std::ostringstream out, err;
          const int code = cli::main_entry(args, out, err);
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}
