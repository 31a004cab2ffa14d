#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "halfwell/analysis.hpp"
#include "halfwell/eigensolver.hpp"
#include "halfwell/error.hpp"
#include "halfwell/momentum.hpp"
#include "halfwell/wavefun.hpp"

namespace py = pybind11;
using namespace halfwell;

namespace {

PotentialSpec make_spec(const std::string& model, double v0, double a, double lambda) {
  PotentialSpec s;
  s.kind = parse_model_name(model);
  s.v0 = v0;
  s.a = a;
  s.lambda = lambda;
  validate(s);
  return s;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Bound states and momentum distributions of one-dimensional wells";

  py::register_exception<Error>(m, "HalfwellError", PyExc_RuntimeError);

  py::enum_<WellKind>(m, "WellKind")
      .value("HalfParabolic", WellKind::HalfParabolic)
      .value("HalfTriangular", WellKind::HalfTriangular)
      .value("HalfEckart", WellKind::HalfEckart)
      .value("HalfExponential", WellKind::HalfExponential)
      .value("FiniteSquareWell", WellKind::FiniteSquareWell)
      .value("DeltaWell", WellKind::DeltaWell)
      .value("FullEckart", WellKind::FullEckart);

  py::class_<PotentialSpec>(m, "PotentialSpec")
      .def_readonly("kind", &PotentialSpec::kind)
      .def_readonly("v0", &PotentialSpec::v0)
      .def_readonly("a", &PotentialSpec::a)
      .def_readonly("lambda_", &PotentialSpec::lambda)
      .def_property_readonly("model", [](const PotentialSpec& s) { return std::string(model_name(s.kind)); });

  m.def("spec", &make_spec, py::arg("model"), py::arg("v0") = 15.0, py::arg("a") = 2.0,
        py::arg("lambda_") = 2.0, "Validated well description");
  m.def("models", [] {
    std::vector<std::string> names;
    for (WellKind k : all_kinds()) names.emplace_back(model_name(k));
    return names;
  });
  m.def("potential", &potential_value, py::arg("spec"), py::arg("x"));

  py::class_<BoundState>(m, "BoundState")
      .def_readonly("n", &BoundState::n)
      .def_readonly("energy", &BoundState::energy)
      .def_readonly("k", &BoundState::k)
      .def_readonly("residual", &BoundState::residual)
      .def("__repr__", [](const BoundState& s) {
        return "BoundState(n=" + std::to_string(s.n) + ", energy=" + std::to_string(s.energy) + ")";
      });

  m.def(
      "solve",
      [](const PotentialSpec& spec, double dx) {
        SolveOptions so;
        so.dx = dx;
        return solve_all(spec, so);
      },
      py::arg("spec"), py::arg("dx") = 0.0, "All bound states, ordered by energy");

  py::class_<WaveFunction>(m, "WaveFunction")
      .def_readonly("state", &WaveFunction::state)
      .def_readonly("dx", &WaveFunction::dx)
      .def_readonly("psi0", &WaveFunction::psi0)
      .def_readonly("samples", &WaveFunction::samples)
      .def_property_readonly("x_max", &WaveFunction::x_max)
      .def("__call__", [](const WaveFunction& wf, double x) { return evaluate(wf, x); });

  m.def("assemble", &assemble, py::arg("spec"), py::arg("state"), py::arg("dx") = 0.0);
  m.def("norm_residual", &norm_residual);
  m.def("node_count", &node_count);

  py::class_<MomentumDistribution>(m, "MomentumDistribution")
      .def_readonly("dp", &MomentumDistribution::dp)
      .def_readonly("p_max", &MomentumDistribution::p_max)
      .def_readonly("p", &MomentumDistribution::p)
      .def_readonly("phi", &MomentumDistribution::phi)
      .def_readonly("intensity", &MomentumDistribution::intensity);

  m.def(
      "transform",
      [](const WaveFunction& wf, double p_max, double dp) {
        TransformOptions opts;
        opts.p_max = p_max;
        opts.dp = dp;
        return transform(wf, opts);
      },
      py::arg("wf"), py::arg("p_max") = 200.0, py::arg("dp") = 0.0);
  m.def("parseval_residual", &parseval_residual);

  py::enum_<Verdict>(m, "Verdict")
      .value("Convergent", Verdict::Convergent)
      .value("Divergent", Verdict::Divergent)
      .value("Indeterminate", Verdict::Indeterminate);

  py::class_<DivergenceReport>(m, "DivergenceReport")
      .def_readonly("order", &DivergenceReport::order)
      .def_readonly("cutoffs", &DivergenceReport::cutoffs)
      .def_readonly("partials", &DivergenceReport::partials)
      .def_readonly("growth_ratio", &DivergenceReport::growth_ratio)
      .def_readonly("verdict", &DivergenceReport::verdict)
      .def_readonly("limit_estimate", &DivergenceReport::limit_estimate)
      .def_readonly("linear_rate", &DivergenceReport::linear_rate);

  py::class_<TailFit>(m, "TailFit")
      .def_readonly("slope", &TailFit::slope)
      .def_readonly("intercept", &TailFit::intercept)
      .def_readonly("r2", &TailFit::r2)
      .def_readonly("points", &TailFit::points)
      .def_readonly("plateau_c6", &TailFit::plateau_c6);

  py::class_<EhrenfestReport>(m, "EhrenfestReport")
      .def_readonly("interior", &EhrenfestReport::interior)
      .def_readonly("boundary", &EhrenfestReport::boundary)
      .def_readonly("residual", &EhrenfestReport::residual)
      .def_readonly("relative", &EhrenfestReport::relative)
      .def_readonly("exact_by_symmetry", &EhrenfestReport::exact_by_symmetry)
      .def_readonly("endpoint_gap", &EhrenfestReport::endpoint_gap);

  py::class_<CrossRepresentation>(m, "CrossRepresentation")
      .def_readonly("p2_position", &CrossRepresentation::p2_position)
      .def_readonly("p2_momentum", &CrossRepresentation::p2_momentum)
      .def_readonly("p2_relative", &CrossRepresentation::p2_relative)
      .def_readonly("p4_position", &CrossRepresentation::p4_position)
      .def_readonly("p4_momentum_corrected", &CrossRepresentation::p4_momentum_corrected)
      .def_readonly("p4_relative", &CrossRepresentation::p4_relative);

  m.def("partial_moment", &partial_moment, py::arg("md"), py::arg("order"), py::arg("cutoff"));
  m.def("divergence_verdict", &divergence_verdict, py::arg("md"), py::arg("order"),
        py::arg("cutoffs") = kDefaultCutoffs);
  m.def("tail_exponent", &tail_exponent, py::arg("md"), py::arg("p_lo") = kDefaultTailLo,
        py::arg("p_hi") = kDefaultTailHi);
  m.def("ehrenfest", [](const WaveFunction& wf) { return ehrenfest(wf, wf.spec); });
  m.def("cross_representation", &cross_representation);
}
