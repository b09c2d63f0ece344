#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "conjtop/coverings.hpp"
#include "conjtop/errors.hpp"
#include "conjtop/frontend.hpp"
#include "conjtop/homology.hpp"
#include "conjtop/invariants.hpp"
#include "conjtop/involutions.hpp"
#include "conjtop/lattices.hpp"
#include "conjtop/model.hpp"

namespace py = pybind11;
using namespace conjtop;

namespace {

using Rows = std::vector<std::vector<int>>;

std::vector<int> bits_of(const BitVector& v) { return v.bits(); }

py::dict report_dict(const Report& r) {
  py::dict d;
  d["command"] = r.command;
  d["object"] = r.object;
  d["status"] = r.status;
  py::dict values;
  for (const auto& [key, label, value] : r.entries()) values[py::str(key)] = value;
  d["values"] = values;
  d["human"] = r.human();
  d["machine"] = r.machine();
  return d;
}

Report run_py(const std::string& command, const std::string& object, const ModelFile* model,
              std::optional<std::string> h, std::optional<long long> chi, std::optional<std::string> type,
              bool h1_trivial, std::optional<std::string> cut, std::vector<std::string> curves) {
  RunArgs args;
  args.h = std::move(h);
  args.chi = chi;
  args.type = std::move(type);
  args.h1_trivial = h1_trivial;
  args.cut = std::move(cut);
  args.curves = std::move(curves);
  return run(command, object, args, model ? *model : model_library());
}

std::vector<std::string> names_of(const ModelFile& m) {
  std::vector<std::string> out;
  for (const auto& [n, x] : m.complexes) out.push_back("complex " + n);
  for (const auto& [n, x] : m.maps) out.push_back("map " + n);
  for (const auto& [n, x] : m.chains) out.push_back("chain " + n);
  for (const auto& [n, x] : m.lattices) out.push_back("lattice " + n);
  for (const auto& [n, x] : m.loops) out.push_back("loops " + n);
  return out;
}

}  // namespace

PYBIND11_MODULE(_conjtop, m) {
  m.doc() = "Real structures on simplicial models: homology, involution forms, covers and quadratic invariants";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<ModelIntegrityError>(m, "ModelIntegrityError", PyExc_RuntimeError);

  py::class_<ModelFile>(m, "Model")
      .def("names", &names_of, "Sorted 'kind name' strings of every object")
      .def("to_text", [](const ModelFile& f) { return print_model_string(f); })
      .def("__eq__", [](const ModelFile& a, const ModelFile& b) { return a == b; })
      .def_property_readonly("empty", &ModelFile::empty);

  m.def("library", &model_library, py::return_value_policy::reference, "The bundled model library");
  m.def("parse_model", &parse_model_string, py::arg("text"));
  m.def("load_model", &load_model, py::arg("path"));
  m.def("commands", &command_names);

  m.def(
      "run",
      [](const std::string& command, const std::string& object, const ModelFile* model, std::optional<std::string> h,
         std::optional<long long> chi, std::optional<std::string> type, bool h1_trivial,
         std::optional<std::string> cut, std::vector<std::string> curves) {
        return report_dict(run_py(command, object, model, std::move(h), chi, std::move(type), h1_trivial,
                                  std::move(cut), std::move(curves)));
      },
      py::arg("command"), py::arg("object") = "", py::arg("model") = nullptr, py::arg("h") = py::none(),
      py::arg("chi") = py::none(), py::arg("type") = py::none(), py::arg("h1_trivial") = false,
      py::arg("cut") = py::none(), py::arg("curves") = std::vector<std::string>{},
      "Run a command and return its report as a dict (status 0 pass, 1 integrity violation, 2 input error)");

  m.def(
      "betti_numbers",
      [](int vertex_count, const std::vector<Simplex>& simplices) {
        return betti_numbers(SimplicialComplex::from_simplices(vertex_count, simplices));
      },
      py::arg("vertex_count"), py::arg("simplices"));
  m.def(
      "euler_characteristic",
      [](int vertex_count, const std::vector<Simplex>& simplices) {
        return SimplicialComplex::from_simplices(vertex_count, simplices).euler_characteristic();
      },
      py::arg("vertex_count"), py::arg("simplices"));

  m.def(
      "characteristic_class",
      [](const Rows& gram) { return bits_of(characteristic_class(BilinearFormGF2{Gf2Matrix::from_rows(gram)})); },
      py::arg("gram"));
  m.def(
      "is_even", [](const Rows& gram) { return is_even(BilinearFormGF2{Gf2Matrix::from_rows(gram)}); },
      py::arg("gram"));

  m.def(
      "arf",
      [](const Rows& gram, const std::vector<int>& values) {
        return arf(QForm2(Gf2Matrix::from_rows(gram), BitVector::from_bits(values)));
      },
      py::arg("gram"), py::arg("values"));
  m.def(
      "brown",
      [](const Rows& gram, const std::vector<int>& values) { return brown(QForm4(Gf2Matrix::from_rows(gram), values)); },
      py::arg("gram"), py::arg("values"));
  m.def(
      "gauss_sum",
      [](const Rows& gram, const std::vector<int>& values) {
        return gauss_sum(QForm4(Gf2Matrix::from_rows(gram), values));
      },
      py::arg("gram"), py::arg("values"));
  m.def(
      "spin_value",
      [](int k, const std::vector<int>& lambda) { return spin_value_from_loops({k, lambda, 0}); }, py::arg("k"),
      py::arg("lam"));
  m.def(
      "pin_value",
      [](int k, const std::vector<int>& lambda, long long rc) { return pin_value_from_loops({k, lambda, rc}); },
      py::arg("k"), py::arg("lam"), py::arg("rc"));

  m.def(
      "kharlamov_check",
      [](long long chi, const std::string& type, bool h1_trivial) {
        const auto r = kharlamov_check(chi, parse_surface_type(type), h1_trivial);
        py::dict d;
        d["applicable"] = r.applicable;
        d["holds"] = r.holds;
        d["s_ca"] = r.s_ca;
        d["s_quot"] = r.s_quot;
        d["trace"] = r.trace;
        return d;
      },
      py::arg("chi"), py::arg("type"), py::arg("h1_trivial"));
}
