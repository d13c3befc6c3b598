#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qmeur/bounds.hpp"
#include "qmeur/cli.hpp"
#include "qmeur/entropy.hpp"
#include "qmeur/error.hpp"
#include "qmeur/io.hpp"
#include "qmeur/scenario.hpp"

namespace py = pybind11;
using namespace qmeur;

namespace {

using CArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

ComplexMatrix to_matrix(const CArray& a) {
  if (a.ndim() != 2) throw Error(ErrorKind::DimensionMismatch, "expected a 2-d array");
  const auto rows = static_cast<std::size_t>(a.shape(0));
  const auto cols = static_cast<std::size_t>(a.shape(1));
  return ComplexMatrix(rows, cols, std::vector<Complex>(a.data(), a.data() + rows * cols));
}

CArray to_array(const ComplexMatrix& m) {
  CArray out({m.rows(), m.cols()});
  std::copy(m.entries().begin(), m.entries().end(), out.mutable_data());
  return out;
}

MeasurementSet to_set(const std::vector<MeasurementBasis>& bases) { return MeasurementSet(bases); }

ReportOptions options(const std::string& wu_variant, const std::string& b_order) {
  return {wu_variant == "original" ? WuVariant::Original : WuVariant::Corrected,
          b_order == "minimized" ? BOrder::Minimized : BOrder::Given};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Entropic uncertainty bounds for measurements distributed over quantum memories";
  m.attr("__version__") = kVersion;

  py::register_exception<Error>(m, "QmeurError", PyExc_ValueError);

  py::class_<DensityMatrix>(m, "DensityMatrix")
      .def(py::init([](std::vector<std::size_t> dims, const CArray& matrix) {
             return DensityMatrix(Register(std::move(dims)), to_matrix(matrix));
           }),
           py::arg("dims"), py::arg("matrix"))
      .def_property_readonly("dims", [](const DensityMatrix& r) { return r.reg().dims(); })
      .def_property_readonly("matrix", [](const DensityMatrix& r) { return to_array(r.matrix()); })
      .def("to_json", &state_to_json)
      .def_static("from_json", [](const std::string& text) { return parse_state_json(text); });

  m.def("bell_state", &bell_state);
  m.def("family_mixed_two_qubit", &family_mixed_two_qubit, py::arg("p"), py::arg("alpha"));
  m.def("generalized_w", &generalized_w, py::arg("alpha"), py::arg("beta"));
  m.def("maximally_mixed", [](std::vector<std::size_t> dims) { return maximally_mixed(Register(std::move(dims))); });
  m.def(
      "random_state",
      [](std::uint64_t seed, std::vector<std::size_t> dims) {
        Rng rng(seed);
        return random_state(rng, Register(std::move(dims)));
      },
      py::arg("seed"), py::arg("dims"));
  m.def(
      "random_probabilities",
      [](std::uint64_t seed, std::size_t k) {
        Rng rng(seed);
        return random_probabilities(rng, k);
      },
      py::arg("seed"), py::arg("k"));
  m.def("partial_trace", &partial_trace, py::arg("rho"), py::arg("keep"));

  py::class_<MeasurementBasis>(m, "MeasurementBasis")
      .def(py::init([](std::string label, const CArray& vectors) {
             return MeasurementBasis(std::move(label), to_matrix(vectors));
           }),
           py::arg("label"), py::arg("vectors"), "vectors: d x d array whose columns are the basis vectors")
      .def_property_readonly("label", &MeasurementBasis::label)
      .def_property_readonly("vectors", [](const MeasurementBasis& b) { return to_array(b.vectors()); });

  m.def("builtin_basis", &builtin_basis, py::arg("name"));
  m.def("overlap_c", &overlap_c);
  m.def(
      "channel_constant_b",
      [](const std::vector<MeasurementBasis>& bases, bool minimized) {
        return channel_constant_b(to_set(bases), minimized ? BOrder::Minimized : BOrder::Given);
      },
      py::arg("bases"), py::arg("minimized") = false);
  m.def("post_measurement_state", &post_measurement_state, py::arg("rho"), py::arg("basis"), py::arg("measured") = 0);
  m.def("outcome_distribution", &outcome_distribution, py::arg("rho"), py::arg("basis"), py::arg("measured") = 0);

  m.def("shannon", &shannon);
  m.def("von_neumann", &von_neumann);
  m.def("conditional", &conditional, py::arg("rho"), py::arg("target"), py::arg("memory"));
  m.def("mutual_information", &mutual_information);
  m.def("holevo", &holevo, py::arg("rho"), py::arg("basis"), py::arg("memory"));
  m.def("measured_conditional", &measured_conditional, py::arg("rho"), py::arg("basis"), py::arg("memory"));

  py::class_<BoundReport>(m, "BoundReport")
      .def_readonly("lhs", &BoundReport::lhs)
      .def_readonly("shannon_sum", &BoundReport::shannon_sum)
      .def_readonly("bounds", &BoundReport::bounds)
      .def_readonly("shannon_bounds", &BoundReport::shannon_bounds)
      .def_readonly("deltas", &BoundReport::deltas)
      .def("violations", &BoundReport::violations);

  m.def(
      "bound_report",
      [](const DensityMatrix& rho, const std::vector<MeasurementBasis>& bases, const std::string& partition,
         const std::string& wu_variant, const std::string& b_order) {
        return build_report(rho, to_set(bases), Partition::parse(partition), options(wu_variant, b_order));
      },
      py::arg("rho"), py::arg("bases"), py::arg("partition"), py::arg("wu_variant") = "corrected",
      py::arg("b_order") = "given");

  m.def(
      "bound_thm3",
      [](const DensityMatrix& rho, const std::vector<MeasurementBasis>& bases, const std::string& partition,
         const std::string& provider) {
        return bound_thm3(rho, to_set(bases), Partition::parse(partition), ShannonBoundProvider::from_name(provider));
      },
      py::arg("rho"), py::arg("bases"), py::arg("partition"), py::arg("provider"));

  m.def(
      "run_scenario",
      [](const std::string& name, std::optional<std::string> axis, double from, double to, std::size_t steps,
         std::map<std::string, double> fixed, std::size_t samples, std::uint64_t seed, bool sort) {
        SweepSpec spec;
        spec.scenario = name;
        spec.fixed = std::move(fixed);
        if (axis) spec.axis = SweepAxis{*axis, from, to, steps};
        spec.samples = samples;
        spec.seed = seed;
        SweepResult r = run_sweep(spec);
        if (sort) sort_by_wu(r);
        return to_csv(r);
      },
      py::arg("name"), py::arg("axis") = py::none(), py::arg("start") = 0.0, py::arg("stop") = 0.0,
      py::arg("steps") = kDefaultGridSteps, py::arg("fixed") = std::map<std::string, double>{},
      py::arg("samples") = kDefaultEnsembleSamples, py::arg("seed") = 42, py::arg("sort_by_wu") = false,
      "Run a case-study sweep and return its CSV text");
}
