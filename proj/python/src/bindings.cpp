#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rewire/code.hpp"
#include "rewire/codes.hpp"
#include "rewire/metrics.hpp"
#include "rewire/pauli.hpp"
#include "rewire/planner.hpp"
#include "rewire/tableau.hpp"

namespace py = pybind11;
using namespace rewire;

namespace {

std::vector<std::string> matrix_rows(const Gf2Matrix& m) {
  std::vector<std::string> rows;
  rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::string r;
    for (std::size_t j = 0; j < m.cols(); ++j)
      r.push_back(m.get(i, j) ? '1' : '0');
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Stabilizer-code rewiring core";

  py::class_<Pauli>(m, "Pauli")
      .def(py::init([](const std::string& text, std::optional<std::size_t> n) {
             return Pauli::parse(text, n);
           }),
           py::arg("text"), py::arg("n") = py::none())
      .def_static("identity", &Pauli::identity, py::arg("n"))
      .def_static("single", &Pauli::single, py::arg("n"), py::arg("q"),
                  py::arg("kind"))
      .def_property_readonly("n", &Pauli::num_qubits)
      .def("letter", &Pauli::letter, py::arg("q"))
      .def("weight", &Pauli::weight)
      .def("sign", &Pauli::sign)
      .def("is_hermitian", &Pauli::is_hermitian)
      .def("is_identity", &Pauli::is_identity)
      .def("commutes_with", &Pauli::commutes_with, py::arg("other"))
      .def("times", &Pauli::times, py::arg("other"))
      .def("negated", &Pauli::negated)
      .def("str_sparse", &Pauli::str_sparse)
      .def("__mul__", &Pauli::times)
      .def("__eq__", [](const Pauli& a, const Pauli& b) { return a == b; })
      .def("__hash__", &Pauli::hash)
      .def("__str__", &Pauli::str)
      .def("__repr__",
           [](const Pauli& p) { return "Pauli(\"" + p.str() + "\")"; });

  py::class_<StabilizerCode>(m, "StabilizerCode")
      .def_static(
          "make",
          [](std::size_t n, std::vector<Pauli> gens, std::string label) {
            return StabilizerCode::make(n, std::move(gens), std::move(label));
          },
          py::arg("n"), py::arg("generators"), py::arg("label") = "")
      .def_readonly("n", &StabilizerCode::n)
      .def_readonly("k", &StabilizerCode::k)
      .def_readonly("label", &StabilizerCode::label)
      .def_readonly("generators", &StabilizerCode::generators)
      .def_readwrite("logicals", &StabilizerCode::logicals)
      .def("__repr__", [](const StabilizerCode& c) {
        return "StabilizerCode(n=" + std::to_string(c.n) +
               ", k=" + std::to_string(c.k) + ", label=\"" + c.label + "\")";
      });

  py::class_<ValidationReport>(m, "ValidationReport")
      .def_readonly("ok", &ValidationReport::ok)
      .def_readonly("problems", &ValidationReport::problems);

  m.def("validate", &validate, py::arg("code"));
  m.def("compute_logicals", &compute_logicals, py::arg("code"));
  m.def("permute_qubits", &permute_qubits, py::arg("code"), py::arg("perm"));
  m.def("pad_with_ancillas", &pad_with_ancillas, py::arg("code"),
        py::arg("count"));
  m.def("serialize_code", &serialize_code, py::arg("code"));
  m.def("parse_code",
        [](const std::string& text) { return parse_code(text); },
        py::arg("text"));
  m.def("load_code", &load_code, py::arg("path"));
  m.def("save_code", &save_code, py::arg("code"), py::arg("path"));
  m.def("span_fingerprint", &span_fingerprint, py::arg("generators"),
        py::arg("n"));

  m.def("build_steane", &build_steane);
  m.def("build_padded_steane", &build_padded_steane);
  m.def("build_reed_muller", &build_reed_muller);
  m.def("fixtures", []() {
    py::dict d;
    for (const auto& nc : fixture_codes()) d[nc.name.c_str()] = nc.code;
    return d;
  });

  py::class_<BlockDecomposition>(m, "BlockDecomposition")
      .def_property_readonly("a", &BlockDecomposition::a)
      .def_property_readonly("b", &BlockDecomposition::b)
      .def_property_readonly("c", &BlockDecomposition::c)
      .def_readonly("n", &BlockDecomposition::n);

  m.def("decompose_blocks", &decompose_blocks, py::arg("source"),
        py::arg("target"));
  m.def("connectivity_matrix",
        [](const std::vector<Pauli>& src, const std::vector<Pauli>& tgt) {
          return matrix_rows(connectivity_matrix(src, tgt));
        },
        py::arg("source_generators"), py::arg("target_generators"));

  py::class_<MeasurementStep>(m, "MeasurementStep")
      .def_readonly("measure", &MeasurementStep::measure)
      .def_readonly("correction", &MeasurementStep::correction);

  py::class_<RewirePlan>(m, "RewirePlan")
      .def_readonly("from_label", &RewirePlan::from_label)
      .def_readonly("to_label", &RewirePlan::to_label)
      .def_readonly("steps", &RewirePlan::steps)
      .def_readonly("intermediate_codes", &RewirePlan::intermediate_codes)
      .def_readonly("n", &RewirePlan::n);

  m.def("plan_rewire", &plan_rewire, py::arg("source"), py::arg("target"));
  m.def("serialize_plan", &serialize_plan, py::arg("plan"));
  m.def("parse_plan",
        [](const std::string& text) { return parse_plan(text); },
        py::arg("text"));
  m.def("load_plan", &load_plan, py::arg("path"));
  m.def("save_plan", &save_plan, py::arg("plan"), py::arg("path"));

  py::class_<DistanceReport>(m, "DistanceReport")
      .def_readonly("code_label", &DistanceReport::code_label)
      .def_readonly("distance", &DistanceReport::distance)
      .def_readonly("witness", &DistanceReport::witness)
      .def_readonly("searched_weight", &DistanceReport::searched_weight)
      .def("__str__", &DistanceReport::str)
      .def("__repr__", &DistanceReport::str);

  m.def("code_distance", &code_distance, py::arg("code"),
        py::arg("max_weight"), py::arg("jobs") = 1);
  m.def("path_distance_profile", &path_distance_profile, py::arg("plan"),
        py::arg("max_weight"), py::arg("jobs") = 1);

  py::class_<SubsystemCode>(m, "SubsystemCode")
      .def_readonly("n", &SubsystemCode::n)
      .def_readonly("stabilizer_generators", &SubsystemCode::stabilizer_generators)
      .def_readonly("gauge_generators", &SubsystemCode::gauge_generators)
      .def_readonly("k_logical", &SubsystemCode::k_logical)
      .def_readonly("r_gauge", &SubsystemCode::r_gauge)
      .def_readonly("label", &SubsystemCode::label);

  m.def("joint_subsystem_code", &joint_subsystem_code, py::arg("decomposition"));
  m.def("enumerate_subsystem_codes", &enumerate_subsystem_codes,
        py::arg("decomposition"));
  m.def("subsystem_distance", &subsystem_distance, py::arg("subsystem"),
        py::arg("max_weight"), py::arg("jobs") = 1);
  m.def("is_gauge_fixing", &is_gauge_fixing, py::arg("code"),
        py::arg("subsystem"));

  py::class_<StabilizerState>(m, "StabilizerState")
      .def_static("zero_state", &StabilizerState::zero_state, py::arg("n"),
                  py::arg("seed") = 0)
      .def_readonly("n", &StabilizerState::n)
      .def("apply_h", &StabilizerState::apply_h, py::arg("q"))
      .def("apply_s", &StabilizerState::apply_s, py::arg("q"))
      .def("apply_cx", &StabilizerState::apply_cx, py::arg("control"),
           py::arg("target"));

  m.def("prepare_codespace", &prepare_codespace, py::arg("code"),
        py::arg("fixings") = std::vector<Pauli>{}, py::arg("seed") = 0);
  m.def("stabilizer_eigenvalue", &stabilizer_eigenvalue, py::arg("state"),
        py::arg("p"));
  m.def("measure", &measure, py::arg("state"), py::arg("p"));
  m.def("measure_postselect", &measure_postselect, py::arg("state"),
        py::arg("p"), py::arg("desired"));
  m.def("apply_pauli", &apply_pauli, py::arg("state"), py::arg("p"));
  m.def("canonical_tableau", &canonical_tableau, py::arg("state"));

  py::class_<MeasurementRecord>(m, "MeasurementRecord")
      .def_readonly("step", &MeasurementRecord::step)
      .def_readonly("op", &MeasurementRecord::op)
      .def_readonly("outcome", &MeasurementRecord::outcome)
      .def_readonly("corrected", &MeasurementRecord::corrected);

  py::class_<ExecutionResult>(m, "ExecutionResult")
      .def_readonly("records", &ExecutionResult::records)
      .def_readonly("transported", &ExecutionResult::transported);

  m.def("execute_plan", &execute_plan, py::arg("state"), py::arg("plan"),
        py::arg("track") = std::vector<Pauli>{});
  m.def("serialize_transcript", &serialize_transcript, py::arg("records"),
        py::arg("seed"));

  py::class_<LogicalAction>(m, "LogicalAction")
      .def("is_identity", &LogicalAction::is_identity)
      .def_readonly("signs", &LogicalAction::signs)
      .def_property_readonly("symplectic", [](const LogicalAction& a) {
        return matrix_rows(a.symplectic);
      });

  m.def("extract_logical_action", &extract_logical_action, py::arg("before"),
        py::arg("after"), py::arg("transported"));

  py::class_<CatResult>(m, "CatResult")
      .def_readonly("outcome", &CatResult::outcome)
      .def_readonly("ancilla_outcomes", &CatResult::ancilla_outcomes);

  m.def(
      "cat_state_measure",
      [](StabilizerState& state, const Pauli& p,
         std::optional<std::uint64_t> reseed,
         std::optional<std::pair<std::size_t, char>> inject) {
        CatOptions opts;
        opts.reseed = reseed;
        opts.inject = inject;
        return cat_state_measure(state, p, opts);
      },
      py::arg("state"), py::arg("p"), py::arg("reseed") = py::none(),
      py::arg("inject") = py::none());

  py::class_<UnitaryReport>(m, "UnitaryReport")
      .def_readonly("ok", &UnitaryReport::ok)
      .def_readonly("problems", &UnitaryReport::problems);

  m.def("verify_unitary_properties", &verify_unitary_properties, py::arg("g"),
        py::arg("g_new"));

  py::class_<ConstraintSet>(m, "ConstraintSet")
      .def(py::init([](std::vector<Pauli> allowed, std::size_t depth_bound) {
             return ConstraintSet{std::move(allowed), depth_bound};
           }),
           py::arg("allowed"), py::arg("depth_bound") = 8)
      .def_readonly("allowed", &ConstraintSet::allowed)
      .def_readonly("depth_bound", &ConstraintSet::depth_bound);

  py::class_<ConstrainedSearchResult> csr(m, "ConstrainedSearchResult");
  py::enum_<ConstrainedSearchResult::Verdict>(csr, "Verdict")
      .value("Found", ConstrainedSearchResult::Found)
      .value("NecessaryConditionFailed",
             ConstrainedSearchResult::NecessaryConditionFailed)
      .value("NotFoundWithinBound",
             ConstrainedSearchResult::NotFoundWithinBound);
  csr.def_readonly("verdict", &ConstrainedSearchResult::verdict)
      .def_readonly("plan", &ConstrainedSearchResult::plan);

  m.def("constrained_path_search", &constrained_path_search, py::arg("source"),
        py::arg("target"), py::arg("constraints"));
}
