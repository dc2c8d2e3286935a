// Copyright 2026 The onticlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "onticlab/bell_model.hpp"
#include "onticlab/errors.hpp"
#include "onticlab/experiment.hpp"
#include "onticlab/hilbert.hpp"
#include "onticlab/phase_space.hpp"
#include "onticlab/property_suite.hpp"
#include "onticlab/qubit_model.hpp"
#include "onticlab/random.hpp"
#include "onticlab/report.hpp"

namespace py = pybind11;
using namespace onticlab;

namespace {

bell::MeasurementContext context_from_matrix(const ComplexMatrix& columns) {
  return bell::MeasurementContext::from_unitary(UnitaryOp(columns));
}

py::dict born_report_to_dict(const BornTestReport& r) {
  py::dict d;
  d["model"] = r.model;
  d["estimate"] = r.estimate;
  d["exact"] = r.exact;
  d["n"] = r.n;
  d["z_score"] = r.z_score;
  d["seed"] = r.seed;
  d["passed"] = r.passed();
  return d;
}

py::dict overlap_report_to_dict(const SupportOverlapReport& r) {
  py::dict d;
  d["model"] = r.model;
  d["n_samples"] = r.n_samples;
  d["overlap_count"] = r.overlap_count;
  d["max_foreign_density"] = r.max_foreign_density;
  d["seed"] = r.seed;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Ontological models of quantum mechanics: samplers, dynamics and property checks";

  py::register_exception<DimensionMismatch>(m, "DimensionMismatch", PyExc_ValueError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

  py::class_<RandomStream>(m, "RandomStream")
      .def(py::init<std::uint64_t>(), py::arg("seed"))
      .def_property_readonly("seed", &RandomStream::seed)
      .def("uniform", &RandomStream::uniform)
      .def("normal", &RandomStream::normal);
  m.def("derive_seed", &derive_seed, py::arg("master"), py::arg("key"), py::arg("index"));

  py::class_<QuantumState>(m, "QuantumState")
      .def(py::init([](const ComplexVector& v) { return QuantumState::normalized(v); }),
           py::arg("amplitudes"), "Normalizes the given nonzero amplitude vector.")
      .def_static("basis", &QuantumState::basis, py::arg("dimension"), py::arg("index"))
      .def_property_readonly("dimension", &QuantumState::dimension)
      .def_property_readonly("amplitudes", &QuantumState::amplitudes)
      .def("__repr__", [](const QuantumState& s) {
        return "<QuantumState N=" + std::to_string(s.dimension()) + ">";
      });

  m.def("born_probability", py::overload_cast<const QuantumState&, const QuantumState&>(
                                &born_probability),
        py::arg("phi"), py::arg("psi"));
  m.def("same_ray", &same_ray, py::arg("a"), py::arg("b"), py::arg("tolerance") = 1e-10);
  m.def("bloch_vector", [](const QuantumState& psi) { return bloch_vector(psi).w; });
  m.def("state_from_bloch", &state_from_bloch, py::arg("w"));
  m.def("orthogonal_state", &orthogonal_state, py::arg("psi"));
  m.def("random_state", &random_state, py::arg("dimension"), py::arg("rng"));
  m.def("random_orthogonal_state", &random_orthogonal_state, py::arg("psi"), py::arg("rng"));
  m.def("random_unitary",
        [](int n, RandomStream& rng) { return random_unitary(n, rng).matrix(); },
        py::arg("dimension"), py::arg("rng"));
  m.def("unitary_from_hamiltonian",
        [](const ComplexMatrix& h, double t) {
          return unitary_from_hamiltonian(HermitianOp(h), t).matrix();
        },
        py::arg("hamiltonian"), py::arg("t"));
  m.def("evolve_state",
        [](const QuantumState& psi, const ComplexMatrix& u) {
          return evolve_state(psi, UnitaryOp(u));
        },
        py::arg("psi"), py::arg("unitary"));
  m.def("pauli", [](int k) { return pauli(k).matrix(); }, py::arg("k"));

  auto q = m.def_submodule("qubit", "Two-dimensional model on the Bloch sphere");
  py::enum_<qubit::QubitVariant>(q, "QubitVariant")
      .value("dispersion_free", qubit::QubitVariant::dispersion_free)
      .value("linear_response", qubit::QubitVariant::linear_response);
  q.def("density",
        [](const Eigen::Vector3d& v, const QuantumState& psi) {
          return qubit::density(qubit::OnticDirection::normalized(v), psi);
        },
        py::arg("v"), py::arg("psi"));
  q.def("sample",
        [](const QuantumState& psi, RandomStream& rng) { return qubit::sample(psi, rng).vector(); },
        py::arg("psi"), py::arg("rng"));
  q.def("rotate",
        [](const Eigen::Vector3d& v, const Eigen::Vector3d& h, double t) {
          return qubit::rotate(qubit::OnticDirection::normalized(v), qubit::PauliDrive(h), t)
              .vector();
        },
        py::arg("v"), py::arg("h"), py::arg("t"));
  q.def("measure_event",
        [](const QuantumState& phi, const Eigen::Vector3d& v, qubit::QubitVariant variant) {
          return qubit::measure_event(phi, qubit::OnticDirection::normalized(v), variant);
        },
        py::arg("phi"), py::arg("v"), py::arg("variant") = qubit::QubitVariant::dispersion_free);
  q.def("born_check_exact", &qubit::born_check_exact, py::arg("phi"), py::arg("psi"),
        py::arg("variant") = qubit::QubitVariant::dispersion_free);
  q.def("check_born_rule",
        [](const QuantumState& psi, const QuantumState& phi, std::int64_t n, std::uint64_t seed,
           qubit::QubitVariant variant) {
          RandomStream rng(seed);
          return born_report_to_dict(check_born_rule(qubit::QubitModel(variant), psi, phi, n, rng));
        },
        py::arg("psi"), py::arg("phi"), py::arg("n"), py::arg("seed"),
        py::arg("variant") = qubit::QubitVariant::dispersion_free);
  q.def("check_disjointness",
        [](const QuantumState& psi, const QuantumState& perp, std::int64_t n, std::uint64_t seed,
           bool husimi) {
          RandomStream rng(seed);
          return overlap_report_to_dict(
              husimi ? check_property3(HusimiQubitPseudoModel(), psi, perp, n, rng)
                     : check_property3(qubit::QubitModel(), psi, perp, n, rng));
        },
        py::arg("psi"), py::arg("psi_perp"), py::arg("n"), py::arg("seed"),
        py::arg("husimi") = false);

  auto b = m.def_submodule("bell", "N-dimensional contextual model; basis labels are 1-based");
  b.def("cumulative_weights",
        [](const QuantumState& chi, const ComplexMatrix& basis) {
          return bell::cumulative_weights(chi, context_from_matrix(basis));
        },
        py::arg("chi"), py::arg("basis"));
  b.def("measure",
        [](const QuantumState& chi, double lambda, const ComplexMatrix& basis) {
          return bell::measure(bell::BellOnticState(chi, lambda), context_from_matrix(basis));
        },
        py::arg("chi"), py::arg("lam"), py::arg("basis"));
  b.def("compare_orderings",
        [](const QuantumState& chi, const ComplexMatrix& basis, const std::vector<int>& ordering,
           double lambda) {
          const auto c = bell::compare_orderings(chi, context_from_matrix(basis), ordering, lambda);
          return py::make_tuple(c.outcome_original, c.outcome_permuted);
        },
        py::arg("chi"), py::arg("basis"), py::arg("ordering"), py::arg("lam"));
  b.def("contextuality_witness",
        [](const QuantumState& chi, const ComplexMatrix& basis, const std::vector<int>& ordering,
           int grid) -> std::optional<py::tuple> {
          const auto w =
              bell::contextuality_witness(chi, context_from_matrix(basis), ordering, grid);
          if (!w) return std::nullopt;
          return py::make_tuple(w->lambda, w->outcome_original, w->outcome_permuted);
        },
        py::arg("chi"), py::arg("basis"), py::arg("ordering"), py::arg("grid_points") = 1000);

  auto ps = m.def_submodule("phase_space", "Gaussian Wigner model in one mode");
  py::class_<phase_space::GaussianStateParams>(ps, "GaussianStateParams")
      .def(py::init<double, double, double, double>(), py::arg("q0"), py::arg("p0"), py::arg("a"),
           py::arg("b"))
      .def_property_readonly("q0", &phase_space::GaussianStateParams::q0)
      .def_property_readonly("p0", &phase_space::GaussianStateParams::p0)
      .def_property_readonly("a", &phase_space::GaussianStateParams::a)
      .def_property_readonly("b", &phase_space::GaussianStateParams::b);
  py::class_<phase_space::QuadraticHamiltonian>(ps, "QuadraticHamiltonian")
      .def(py::init<const Eigen::Matrix2d&, const Eigen::Vector2d&>(), py::arg("quadratic"),
           py::arg("linear"))
      .def_static("harmonic", &phase_space::QuadraticHamiltonian::harmonic, py::arg("omega") = 1.0)
      .def_static("free_particle", &phase_space::QuadraticHamiltonian::free_particle,
                  py::arg("mass") = 1.0);
  py::class_<phase_space::SymplecticFlow>(ps, "SymplecticFlow")
      .def_static("generated_by", &phase_space::SymplecticFlow::generated_by, py::arg("h"),
                  py::arg("t"))
      .def_property_readonly("linear", &phase_space::SymplecticFlow::linear)
      .def_property_readonly("shift", &phase_space::SymplecticFlow::shift)
      .def("apply",
           [](const phase_space::SymplecticFlow& f, double qv, double pv) {
             const auto out = f.apply({qv, pv});
             return py::make_tuple(out.q, out.p);
           },
           py::arg("q"), py::arg("p"))
      .def("then", &phase_space::SymplecticFlow::then, py::arg("next"));
  ps.def("wigner_density",
         [](double qv, double pv, const phase_space::GaussianStateParams& g) {
           return phase_space::wigner_density({qv, pv}, g);
         },
         py::arg("q"), py::arg("p"), py::arg("g"));
  ps.def("marginal_q_density", &phase_space::marginal_q_density, py::arg("q"), py::arg("g"));
  ps.def("numeric_marginal_q_density", &phase_space::numeric_marginal_q_density, py::arg("q"),
         py::arg("g"), py::arg("nodes") = 96);
  ps.def("sample",
         [](const phase_space::GaussianStateParams& g, RandomStream& rng) {
           const auto pt = phase_space::sample(g, rng);
           return py::make_tuple(pt.q, pt.p);
         },
         py::arg("g"), py::arg("rng"));
  ps.def("evolve",
         py::overload_cast<const phase_space::GaussianStateParams&,
                           const phase_space::SymplecticFlow&>(&phase_space::evolve),
         py::arg("g"), py::arg("flow"));
  ps.def("quadrature_law",
         [](const phase_space::GaussianStateParams& g, double theta) {
           const auto law = phase_space::quadrature_law(g, theta);
           return py::make_tuple(law.mean, law.variance);
         },
         py::arg("g"), py::arg("theta"));

  m.def("min_ontic_dimension", &min_ontic_dimension, py::arg("dimension"));
  m.def("dimension_audit",
        [](int bell_dimension) {
          py::list rows;
          const auto add = [&](const DimensionAudit& a) {
            py::dict d;
            d["model"] = a.model;
            d["N"] = a.hilbert_dimension;
            d["ontic_dim"] = a.ontic_dimension;
            d["bound"] = a.bound;
            d["satisfies"] = a.satisfies;
            d["restricted_manifold"] = a.restricted_manifold;
            rows.append(d);
          };
          add(audit_dimension(qubit::QubitModel(qubit::QubitVariant::dispersion_free)));
          add(audit_dimension(qubit::QubitModel(qubit::QubitVariant::linear_response)));
          add(audit_dimension(bell::DispersionFreeModel(bell_dimension)));
          add(audit_dimension(bell::TrivialModel(bell_dimension)));
          add(audit_dimension(phase_space::WignerGaussianModel()));
          return rows;
        },
        py::arg("N") = 3);

  m.def("run_experiment",
        [](const std::string& experiment, std::optional<std::string> model,
           std::optional<int> n, std::int64_t samples, std::uint64_t seed,
           const std::string& format, int threads) {
          ExperimentConfig config;
          config.experiment = parse_experiment(experiment);
          if (model) config.model = parse_model(*model);
          config.dimension = n;
          config.samples = samples;
          config.seed = seed;
          config.format = parse_format(format);
          config.threads = threads;
          ReportDocument doc;
          {
            py::gil_scoped_release release;
            doc = run_experiment(config);
          }
          py::dict out;
          out["report"] = render_report(doc, config.format);
          out["all_passed"] = doc.all_passed();
          out["rows"] = doc.rows.size();
          out["witnesses"] = doc.witnesses.size();
          return out;
        },
        py::arg("experiment"), py::arg("model") = py::none(), py::arg("N") = py::none(),
        py::arg("samples") = 100000, py::arg("seed") = 1, py::arg("format") = "csv",
        py::arg("threads") = 0,
        "Runs an experiment battery and returns the rendered report.");
}
