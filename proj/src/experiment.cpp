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

#include "onticlab/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <thread>
#include <utility>
#include <vector>

#include "onticlab/bell_model.hpp"
#include "onticlab/phase_space.hpp"
#include "onticlab/property_suite.hpp"
#include "onticlab/qubit_model.hpp"
#include "onticlab/statistics.hpp"

namespace onticlab {
namespace {

constexpr int kDefaultBellDimension = 3;
constexpr std::int64_t kMinStatisticalSamples = 1000;

constexpr int kBornPairs = 20;
constexpr int kExactPairs = 50;
constexpr double kExactTolerance = 1e-3;
constexpr int kSupportPairs = 50;
constexpr std::int64_t kSupportSamples = 10000;
constexpr int kFlowCases = 20;
constexpr int kCompositionCases = 20;
constexpr std::int64_t kCompositionSamples = 100;
constexpr double kCompositionTolerance = 1e-9;
constexpr int kExclusivityCases = 20;
constexpr std::int64_t kExclusivitySamples = 1000;
constexpr double kExclusivityTolerance = 1e-12;
constexpr int kRotationCases = 100;
constexpr double kRotationTolerance = 1e-8;
constexpr int kIntervalTriples = 20;
constexpr double kIntervalTolerance = 1e-12;
constexpr int kContextualityStates = 100;
constexpr int kWitnessGrid = 1000;
constexpr double kWitnessRate = 0.99;
constexpr int kKsParameterSets = 5;
constexpr double kKsAlpha = 0.01;
constexpr int kMarginalParameterSets = 10;
constexpr int kMarginalGridPoints = 100;
constexpr double kMarginalTolerance = 1e-8;
constexpr int kClosureCases = 5;
constexpr double kClosureTolerance = 0.05;
constexpr int kVolumeCases = 20;
constexpr double kFlowTolerance = 1e-10;

struct Partial {
  std::vector<ReportRow> rows;
  std::vector<WitnessRecord> witnesses;
  std::vector<DimensionAudit> audits;
};

// Work items run on a thread pool; outputs are concatenated in insertion order.
class Battery {
 public:
  void add(std::function<Partial()> task) { tasks_.push_back(std::move(task)); }

  void run_into(ReportDocument& doc, int threads) const {
    std::vector<Partial> results(tasks_.size());
    std::vector<std::exception_ptr> errors(tasks_.size());
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
      for (std::size_t i = next++; i < tasks_.size(); i = next++) {
        try {
          results[i] = tasks_[i]();
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    };
    unsigned count = threads > 0 ? static_cast<unsigned>(threads)
                                 : std::max(1u, std::thread::hardware_concurrency());
    count = std::min<unsigned>(count, static_cast<unsigned>(std::max<std::size_t>(1, tasks_.size())));
    {
      std::vector<std::jthread> pool;
      for (unsigned t = 1; t < count; ++t) pool.emplace_back(worker);
      worker();
    }
    for (const auto& error : errors) {
      if (error) std::rethrow_exception(error);
    }
    for (auto& part : results) {
      std::move(part.rows.begin(), part.rows.end(), std::back_inserter(doc.rows));
      std::move(part.witnesses.begin(), part.witnesses.end(), std::back_inserter(doc.witnesses));
      std::move(part.audits.begin(), part.audits.end(), std::back_inserter(doc.audits));
    }
  }

 private:
  std::vector<std::function<Partial()>> tasks_;
};

Partial single_row(ReportRow row) {
  Partial p;
  p.rows.push_back(std::move(row));
  return p;
}

ReportRow summary_row(std::string check, std::string model, std::optional<int> dimension,
                      std::optional<std::int64_t> n, double estimate, std::uint64_t seed,
                      bool pass) {
  ReportRow row;
  row.check = std::move(check);
  row.model = std::move(model);
  row.dimension = dimension;
  row.n = n;
  row.estimate = estimate;
  row.seed = seed;
  row.pass = pass;
  return row;
}

// ---- per-model random inputs -------------------------------------------------

QuantumState random_preparation(const qubit::QubitModel&, RandomStream& rng) {
  return random_state(2, rng);
}
QuantumState random_preparation(const bell::DispersionFreeModel& m, RandomStream& rng) {
  return random_state(*m.hilbert_dimension(), rng);
}
QuantumState random_preparation(const bell::TrivialModel& m, RandomStream& rng) {
  return random_state(*m.hilbert_dimension(), rng);
}
phase_space::GaussianStateParams random_preparation(const phase_space::WignerGaussianModel&,
                                                    RandomStream& rng) {
  return phase_space::random_gaussian_params(rng);
}

UnitaryOp random_evolution(const qubit::QubitModel&, RandomStream& rng) {
  return random_unitary(2, rng);
}
UnitaryOp random_evolution(const bell::DispersionFreeModel& m, RandomStream& rng) {
  return random_unitary(*m.hilbert_dimension(), rng);
}
UnitaryOp random_evolution(const bell::TrivialModel& m, RandomStream& rng) {
  return random_unitary(*m.hilbert_dimension(), rng);
}
phase_space::SymplecticFlow random_evolution(const phase_space::WignerGaussianModel&,
                                             RandomStream& rng) {
  const auto h = phase_space::random_quadratic_hamiltonian(rng);
  return phase_space::SymplecticFlow::generated_by(h, 2.0 * rng.uniform());
}

// A complete set of mutually exclusive events.
std::vector<QuantumState> random_complete_events(const qubit::QubitModel&, RandomStream& rng) {
  QuantumState phi = random_state(2, rng);
  QuantumState perp = orthogonal_state(phi);
  return {std::move(phi), std::move(perp)};
}
std::vector<bell::ContextEvent> random_complete_events(const bell::DispersionFreeModel& m,
                                                       RandomStream& rng) {
  const auto ctx = bell::MeasurementContext::from_unitary(random_unitary(*m.hilbert_dimension(), rng));
  std::vector<bell::ContextEvent> events;
  for (int k = 1; k <= ctx.dimension(); ++k) events.push_back({ctx, k});
  return events;
}
std::vector<QuantumState> random_complete_events(const bell::TrivialModel& m, RandomStream& rng) {
  return bell::MeasurementContext::from_unitary(random_unitary(*m.hilbert_dimension(), rng)).basis();
}
// Quadrature at a random angle split at a threshold within +-1.5 standard
// deviations of the mean of a reference Gaussian state.
std::vector<phase_space::QuadratureEvent> random_complete_events(
    const phase_space::WignerGaussianModel&, RandomStream& rng,
    const phase_space::GaussianStateParams& reference) {
  const double theta = std::numbers::pi * rng.uniform();
  const auto law = phase_space::quadrature_law(reference, theta);
  const double cut = law.mean + std::sqrt(law.variance) * (3.0 * rng.uniform() - 1.5);
  constexpr double inf = std::numeric_limits<double>::infinity();
  return {{theta, -inf, cut}, {theta, cut, inf}};
}

template <typename M, typename Prep>
auto complete_events_for(const M& model, RandomStream& rng, const Prep& prep) {
  if constexpr (std::is_same_v<M, phase_space::WignerGaussianModel>) {
    return random_complete_events(model, rng, prep);
  } else {
    return random_complete_events(model, rng);
  }
}

// ---- generic sections ---------------------------------------------------------

template <OntologicalModel M>
void add_born_section(Battery& battery, const M& model, std::int64_t samples,
                      std::uint64_t master) {
  const std::string key = "born-test/" + model.name();
  for (int i = 0; i < kBornPairs; ++i) {
    battery.add([=] {
      RandomStream rng = derive_stream(master, key, i);
      const auto prep = random_preparation(model, rng);
      const auto events = complete_events_for(model, rng, prep);
      const auto pick = std::min<std::size_t>(events.size() - 1,
                                              static_cast<std::size_t>(rng.uniform() * events.size()));
      const BornTestReport report = check_born_rule(model, prep, events[pick], samples, rng);
      return single_row(born_row("born-test", report, model.hilbert_dimension(), report.passed()));
    });
  }
}

template <OntologicalModel M>
void add_structure_section(Battery& battery, const M& model, std::uint64_t master) {
  const std::string name = model.name();
  const auto dim = model.hilbert_dimension();

  for (int i = 0; i < kFlowCases; ++i) {
    battery.add([=] {
      RandomStream rng = derive_stream(master, "property1-flow/" + name, i);
      const auto prep = random_preparation(model, rng);
      const auto u = random_evolution(model, rng);
      const auto report = check_property1_flow(model, prep, u, kSupportSamples, rng);
      return single_row(overlap_row("property1-flow", report, dim, report.overlap_count == 0));
    });
  }

  battery.add([=] {
    const std::uint64_t seed = derive_seed(master, "composition/" + name, 0);
    double worst = 0.0;
    for (int i = 0; i < kCompositionCases; ++i) {
      RandomStream rng = derive_stream(master, "composition/" + name, i);
      const auto prep = random_preparation(model, rng);
      const auto first = random_evolution(model, rng);
      const auto second = random_evolution(model, rng);
      worst = std::max(worst, check_composition(model, prep, first, second,
                                                kCompositionSamples, rng));
    }
    return single_row(summary_row("composition", name, dim,
                                  kCompositionCases * kCompositionSamples, worst, seed,
                                  worst < kCompositionTolerance));
  });

  battery.add([=] {
    const std::uint64_t seed = derive_seed(master, "exclusivity/" + name, 0);
    double worst = 0.0;
    for (int i = 0; i < kExclusivityCases; ++i) {
      RandomStream rng = derive_stream(master, "exclusivity/" + name, i);
      const auto prep = random_preparation(model, rng);
      const auto events = complete_events_for(model, rng, prep);
      using Event = typename M::Event;
      worst = std::max(worst, check_exclusivity(model, prep, std::span<const Event>(events),
                                                kExclusivitySamples, rng));
    }
    return single_row(summary_row("exclusivity", name, dim,
                                  kExclusivityCases * kExclusivitySamples, worst, seed,
                                  worst < kExclusivityTolerance));
  });

  if constexpr (HilbertOntologicalModel<M>) {
    for (int i = 0; i < kSupportPairs; ++i) {
      battery.add([=] {
        RandomStream rng = derive_stream(master, "property3/" + name, i);
        const QuantumState psi = random_preparation(model, rng);
        const QuantumState perp = random_orthogonal_state(psi, rng);
        const auto report = check_property3(model, psi, perp, kSupportSamples, rng);
        return single_row(overlap_row("property3", report, dim, report.overlap_count == 0));
      });
    }
  }
}

template <OntologicalModel M>
void add_audit(Battery& battery, const M& model) {
  battery.add([=] {
    Partial p;
    const DimensionAudit audit = audit_dimension(model);
    ReportRow row;
    row.check = "dimension-audit";
    row.model = audit.model;
    row.dimension = audit.hilbert_dimension;
    row.estimate = audit.ontic_dimension;
    if (audit.bound) row.exact = *audit.bound;
    row.pass = audit.satisfies;
    p.rows.push_back(std::move(row));
    p.audits.push_back(audit);
    return p;
  });
}

// ---- model-specific sections ----------------------------------------------------

void add_qubit_exact_section(Battery& battery, qubit::QubitVariant variant,
                             std::uint64_t master) {
  const qubit::QubitModel model(variant);
  const std::string key = "born-exact/" + model.name();
  for (int i = 0; i < kExactPairs; ++i) {
    battery.add([=] {
      RandomStream rng = derive_stream(master, key, i);
      const QuantumState psi = random_state(2, rng);
      const QuantumState phi = random_state(2, rng);
      ReportRow row;
      row.check = "born-exact";
      row.model = model.name();
      row.dimension = 2;
      row.estimate = qubit::born_check_exact(phi, psi, variant);
      row.exact = born_probability(phi, psi);
      row.seed = rng.seed();
      row.pass = std::abs(*row.estimate - *row.exact) < kExactTolerance;
      return single_row(std::move(row));
    });
  }
}

void add_rotation_section(Battery& battery, std::uint64_t master) {
  battery.add([=] {
    const std::uint64_t seed = derive_seed(master, "rotation-consistency", 0);
    RandomStream rng(seed);
    double worst = 0.0;
    for (int i = 0; i < kRotationCases; ++i) {
      const QuantumState psi = random_state(2, rng);
      const qubit::PauliDrive drive(Eigen::Vector3d(rng.normal(), rng.normal(), rng.normal()));
      const double t = 3.0 * rng.uniform();
      const QuantumState evolved =
          evolve_state(psi, unitary_from_hamiltonian(drive.hamiltonian(), t));
      const auto rotated = qubit::rotate(qubit::OnticDirection::normalized(bloch_vector(psi).w),
                                         drive, t);
      worst = std::max(worst, (bloch_vector(evolved).w - rotated.vector()).norm());
    }
    return single_row(summary_row("rotation-consistency", "qubit-df", 2, kRotationCases, worst,
                                  seed, worst < kRotationTolerance));
  });
}

void add_husimi_section(Battery& battery, std::uint64_t master) {
  const HusimiQubitPseudoModel model;
  for (int i = 0; i < kSupportPairs; ++i) {
    battery.add([=] {
      RandomStream rng = derive_stream(master, "property3-control", i);
      const QuantumState psi = random_state(2, rng);
      const QuantumState perp = orthogonal_state(psi);
      Partial p;
      const auto sampled = check_property3(model, psi, perp, kSupportSamples, rng);
      p.rows.push_back(overlap_row("property3-control", sampled, 2, sampled.overlap_count > 0));
      auto grid = q_function_counterexample(psi, perp);
      grid.seed = rng.seed();
      p.rows.push_back(overlap_row("q-function-grid", grid, 2, grid.overlap_count > 0));
      return p;
    });
  }
}

void add_bell_interval_section(Battery& battery, std::uint64_t master) {
  for (const int n : {2, 3, 4}) {
    battery.add([=] {
      const std::string key = "bell-interval/N" + std::to_string(n);
      const std::uint64_t seed = derive_seed(master, key, 0);
      double worst = 0.0;
      for (int i = 0; i < kIntervalTriples; ++i) {
        RandomStream rng = derive_stream(master, key, i);
        const QuantumState psi = random_state(n, rng);
        const auto ctx = bell::MeasurementContext::from_unitary(random_unitary(n, rng));
        const int k = 1 + std::min(n - 1, static_cast<int>(rng.uniform() * n));
        const auto cumulative = bell::cumulative_weights(psi, ctx);
        const double length = cumulative[k - 1] - (k > 1 ? cumulative[k - 2] : 0.0);
        worst = std::max(worst, std::abs(length - born_probability(ctx.vector(k), psi)));
      }
      return single_row(summary_row("bell-interval", "bell-df", n, kIntervalTriples, worst, seed,
                                    worst < kIntervalTolerance));
    });
  }
}

std::vector<int> cyclic_ordering(int n) {
  std::vector<int> ordering(n);
  for (int i = 0; i < n; ++i) ordering[i] = (i + 1) % n + 1;
  return ordering;
}

void add_contextuality_section(Battery& battery, int n, std::uint64_t master) {
  const std::vector<int> ordering = cyclic_ordering(n);
  const auto ctx = bell::MeasurementContext::standard(n);

  battery.add([=] {
    // Uniform superposition at lambda = 1/2; for N = 3 the two orderings fire
    // |2> and |3>.
    const QuantumState chi = QuantumState::normalized(ComplexVector::Ones(n));
    const auto cmp = bell::compare_orderings(chi, ctx, ordering, 0.5);
    Partial p;
    p.witnesses.push_back({0, ordering, cmp.lambda, cmp.outcome_original, cmp.outcome_permuted});
    ReportRow row;
    row.check = "contextuality-hand-check";
    row.model = "bell-df";
    row.dimension = n;
    row.estimate = cmp.lambda;
    row.pass = n == 3 ? (cmp.outcome_original == 2 && cmp.outcome_permuted == 3) : cmp.differs();
    p.rows.push_back(std::move(row));
    return p;
  });

  battery.add([=] {
    const std::uint64_t seed = derive_seed(master, "contextuality", 0);
    const double min_weight = 0.15 / n;
    Partial p;
    int found = 0;
    for (int i = 0; i < kContextualityStates; ++i) {
      RandomStream rng = derive_stream(master, "contextuality", i);
      QuantumState chi = random_state(n, rng);
      while (chi.amplitudes().cwiseAbs2().minCoeff() <= min_weight) {
        chi = random_state(n, rng);
      }
      const auto witness = bell::contextuality_witness(chi, ctx, ordering, kWitnessGrid);
      if (witness) {
        ++found;
        p.witnesses.push_back({i + 1, ordering, witness->lambda, witness->outcome_original,
                               witness->outcome_permuted});
      }
    }
    const double rate = static_cast<double>(found) / kContextualityStates;
    ReportRow row = summary_row("contextuality-rate", "bell-df", n, kContextualityStates, rate,
                                seed, rate >= kWitnessRate);
    row.exact = kWitnessRate;
    p.rows.push_back(std::move(row));
    return p;
  });
}

void add_wigner_section(Battery& battery, std::int64_t samples, std::uint64_t master) {
  using namespace phase_space;
  const std::string model = "wigner-gaussian";
  const std::vector<double> angles{0.0, std::numbers::pi / 4.0, std::numbers::pi / 2.0};

  for (int s = 0; s < kKsParameterSets; ++s) {
    for (std::size_t j = 0; j < angles.size(); ++j) {
      const double theta = angles[j];
      battery.add([=] {
        RandomStream param_rng = derive_stream(master, "ks-quadrature/params", s);
        const GaussianStateParams g = random_gaussian_params(param_rng);
        RandomStream rng = derive_stream(master, "ks-quadrature", s * angles.size() + j);
        std::vector<double> values(samples);
        for (auto& x : values) x = quadrature(sample(g, rng), theta);
        const NormalLaw law = quadrature_law(g, theta);
        const KsResult ks = ks_test(values, [&](double x) {
          return normal_cdf(x, law.mean, law.variance);
        });
        ReportRow row;
        row.check = "ks-quadrature";
        row.model = model;
        row.n = samples;
        row.estimate = ks.statistic;
        row.exact = ks_critical_value(samples, kKsAlpha);
        row.seed = rng.seed();
        row.pass = ks.p_value > kKsAlpha;
        return single_row(std::move(row));
      });
    }
  }

  for (int s = 0; s < kMarginalParameterSets; ++s) {
    battery.add([=] {
      RandomStream rng = derive_stream(master, "wigner-marginal", s);
      const GaussianStateParams g = random_gaussian_params(rng);
      const double sd = std::sqrt(g.a() / 2.0);
      double worst = 0.0;
      for (int i = 0; i < kMarginalGridPoints; ++i) {
        const double q = g.q0() + sd * (-4.0 + 8.0 * i / (kMarginalGridPoints - 1));
        worst = std::max(worst, std::abs(numeric_marginal_q_density(q, g) -
                                         marginal_q_density(q, g)));
      }
      return single_row(summary_row("wigner-marginal", model, std::nullopt, kMarginalGridPoints,
                                    worst, rng.seed(), worst < kMarginalTolerance));
    });
  }

  for (int s = 0; s < kClosureCases; ++s) {
    battery.add([=] {
      RandomStream rng = derive_stream(master, "gaussian-closure", s);
      const GaussianStateParams g = random_gaussian_params(rng);
      const SymplecticFlow flow =
          SymplecticFlow::generated_by(random_quadratic_hamiltonian(rng), 2.0 * rng.uniform());
      const GaussianMoments exact = push_forward(moments(g), flow);
      Eigen::Vector2d mean = Eigen::Vector2d::Zero();
      Eigen::Matrix2d second = Eigen::Matrix2d::Zero();
      std::vector<Eigen::Vector2d> points(samples);
      for (auto& z : points) {
        z = flow.apply(sample(g, rng)).vector();
        mean += z;
      }
      mean /= static_cast<double>(samples);
      for (const auto& z : points) second += (z - mean) * (z - mean).transpose();
      const Eigen::Matrix2d cov = second / static_cast<double>(samples - 1);
      double worst = 0.0;
      for (int i = 0; i < 2; ++i) {
        const double sd_i = std::sqrt(exact.covariance(i, i));
        worst = std::max(worst, std::abs(mean(i) - exact.mean(i)) / sd_i);
        for (int k = 0; k < 2; ++k) {
          const double scale = std::sqrt(exact.covariance(i, i) * exact.covariance(k, k));
          worst = std::max(worst, std::abs(cov(i, k) - exact.covariance(i, k)) / scale);
        }
      }
      return single_row(summary_row("gaussian-closure", model, std::nullopt, samples, worst,
                                    rng.seed(), worst < kClosureTolerance));
    });
  }

  battery.add([=] {
    RandomStream rng = derive_stream(master, "symplectic-volume", 0);
    double worst = 0.0;
    for (int i = 0; i < kVolumeCases; ++i) {
      const auto h = random_quadratic_hamiltonian(rng);
      const double t = 4.0 * rng.uniform() - 2.0;
      worst = std::max(worst,
                       std::abs(SymplecticFlow::generated_by(h, t).linear().determinant() - 1.0));
    }
    return single_row(summary_row("symplectic-volume", model, std::nullopt, kVolumeCases, worst,
                                  rng.seed(), worst < kFlowTolerance));
  });

  battery.add([=] {
    RandomStream rng = derive_stream(master, "closed-form-flows", 0);
    double worst_harmonic = 0.0;
    double worst_free = 0.0;
    for (int i = 0; i < kVolumeCases; ++i) {
      const PhasePoint pt{rng.normal(), rng.normal()};
      const PhasePoint rotated = evolve(pt, QuadraticHamiltonian::harmonic(), std::numbers::pi / 2.0);
      worst_harmonic = std::max(worst_harmonic, std::hypot(rotated.q - pt.p, rotated.p + pt.q));
      const double t = 4.0 * rng.uniform() - 2.0;
      const PhasePoint moved = evolve(pt, QuadraticHamiltonian::free_particle(), t);
      worst_free = std::max(worst_free, std::hypot(moved.q - (pt.q + pt.p * t), moved.p - pt.p));
    }
    Partial p;
    p.rows.push_back(summary_row("harmonic-flow", model, std::nullopt, kVolumeCases,
                                 worst_harmonic, rng.seed(), worst_harmonic < kFlowTolerance));
    p.rows.push_back(summary_row("free-flow", model, std::nullopt, kVolumeCases, worst_free,
                                 rng.seed(), worst_free < kFlowTolerance));
    return p;
  });
}

// ---- model selection -----------------------------------------------------------

bool selected(const ExperimentConfig& config, ModelKind kind) {
  return !config.model || *config.model == kind;
}

int bell_dimension(const ExperimentConfig& config) {
  return config.dimension.value_or(kDefaultBellDimension);
}

template <typename F>
void for_each_selected_model(const ExperimentConfig& config, F&& f) {
  const int n = bell_dimension(config);
  if (selected(config, ModelKind::qubit_df)) f(qubit::QubitModel(qubit::QubitVariant::dispersion_free));
  if (selected(config, ModelKind::qubit_b0)) f(qubit::QubitModel(qubit::QubitVariant::linear_response));
  if (selected(config, ModelKind::bell_df)) f(bell::DispersionFreeModel(n));
  if (selected(config, ModelKind::bell_ndf)) f(bell::TrivialModel(n));
  if (selected(config, ModelKind::wigner_gaussian)) f(phase_space::WignerGaussianModel());
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

template <typename T>
T parse_number(std::string_view key, const std::string& text) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ConfigError("invalid value for " + std::string(key) + ": '" + text + "'");
  }
  return value;
}

}  // namespace

std::string_view to_string(Experiment e) noexcept {
  switch (e) {
    case Experiment::born_test: return "born-test";
    case Experiment::contextuality_demo: return "contextuality-demo";
    case Experiment::property_suite: return "property-suite";
    case Experiment::wigner_demo: return "wigner-demo";
    case Experiment::dimension_audit: return "dimension-audit";
  }
  return "unknown";
}

std::string_view to_string(ModelKind m) noexcept {
  switch (m) {
    case ModelKind::qubit_df: return "qubit-df";
    case ModelKind::qubit_b0: return "qubit-b0";
    case ModelKind::bell_df: return "bell-df";
    case ModelKind::bell_ndf: return "bell-ndf";
    case ModelKind::wigner_gaussian: return "wigner-gaussian";
  }
  return "unknown";
}

std::string_view to_string(ReportFormat f) noexcept {
  return f == ReportFormat::csv ? "csv" : "json";
}

Experiment parse_experiment(std::string_view text) {
  for (const auto e : {Experiment::born_test, Experiment::contextuality_demo,
                       Experiment::property_suite, Experiment::wigner_demo,
                       Experiment::dimension_audit}) {
    if (to_string(e) == text) return e;
  }
  throw ConfigError("unknown experiment '" + std::string(text) + "'");
}

ModelKind parse_model(std::string_view text) {
  for (const auto m : {ModelKind::qubit_df, ModelKind::qubit_b0, ModelKind::bell_df,
                       ModelKind::bell_ndf, ModelKind::wigner_gaussian}) {
    if (to_string(m) == text) return m;
  }
  throw ConfigError("unknown model '" + std::string(text) + "'");
}

ReportFormat parse_format(std::string_view text) {
  if (text == "csv") return ReportFormat::csv;
  if (text == "json") return ReportFormat::json;
  throw ConfigError("unknown format '" + std::string(text) + "'");
}

ConfigValues parse_config_text(std::string_view text) {
  ConfigValues values;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const std::string content = trim(line);
    if (content.empty() || content.front() == '#') continue;
    const auto eq = content.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(line_number) + ": expected key=value");
    }
    std::string key = trim(std::string_view(content).substr(0, eq));
    std::string value = trim(std::string_view(content).substr(eq + 1));
    if (key.empty()) {
      throw ConfigError("config line " + std::to_string(line_number) + ": empty key");
    }
    if (!values.emplace(key, std::move(value)).second) {
      throw ConfigError("config key '" + key + "' given twice");
    }
  }
  return values;
}

ConfigValues read_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot read config file " + path.string());
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str());
}

void apply_config_values(ExperimentConfig& config, const ConfigValues& values) {
  for (const auto& [key, value] : values) {
    if (key == "experiment") {
      config.experiment = parse_experiment(value);
    } else if (key == "model") {
      config.model = parse_model(value);
    } else if (key == "N") {
      config.dimension = parse_number<int>(key, value);
    } else if (key == "samples") {
      config.samples = parse_number<std::int64_t>(key, value);
    } else if (key == "seed") {
      config.seed = parse_number<std::uint64_t>(key, value);
    } else if (key == "out") {
      config.output_path = value;
    } else if (key == "format") {
      config.format = parse_format(value);
    } else if (key == "threads") {
      config.threads = parse_number<int>(key, value);
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
}

void validate(const ExperimentConfig& config) {
  const bool statistical = config.experiment == Experiment::born_test ||
                           config.experiment == Experiment::property_suite ||
                           config.experiment == Experiment::wigner_demo;
  if (statistical && config.samples < kMinStatisticalSamples) {
    throw ConfigError("samples must be >= 1000 for statistical experiments");
  }
  if (config.dimension && *config.dimension < 2) {
    throw ConfigError("N must be >= 2");
  }
  if (config.dimension && *config.dimension > 64) {
    throw ConfigError("N must be <= 64");
  }
  if (config.threads < 0) {
    throw ConfigError("threads must be >= 0");
  }
  const bool qubit = config.model == ModelKind::qubit_df || config.model == ModelKind::qubit_b0;
  if (qubit && config.dimension && *config.dimension != 2) {
    throw ConfigError("qubit models require N = 2");
  }
  if (config.model == ModelKind::wigner_gaussian && config.dimension) {
    throw ConfigError("the Wigner model has no finite Hilbert dimension; drop N");
  }
  switch (config.experiment) {
    case Experiment::contextuality_demo:
      if (config.model && *config.model != ModelKind::bell_df) {
        throw ConfigError("contextuality-demo runs on bell-df only");
      }
      if (bell_dimension(config) < 3) {
        throw ConfigError("contextuality-demo requires N >= 3");
      }
      break;
    case Experiment::wigner_demo:
      if (config.model && *config.model != ModelKind::wigner_gaussian) {
        throw ConfigError("wigner-demo runs on wigner-gaussian only");
      }
      if (config.dimension) {
        throw ConfigError("wigner-demo takes no N");
      }
      break;
    default:
      break;
  }
}

std::filesystem::path output_path_for(const ExperimentConfig& config) {
  if (!config.output_path.empty()) return config.output_path;
  return "onticlab-" + std::string(to_string(config.experiment)) + "." +
         std::string(to_string(config.format));
}

ReportDocument run_experiment(const ExperimentConfig& config) {
  validate(config);
  const std::uint64_t master = config.seed;
  Battery battery;

  switch (config.experiment) {
    case Experiment::born_test:
      for_each_selected_model(config, [&](const auto& model) {
        add_born_section(battery, model, config.samples, master);
      });
      break;

    case Experiment::property_suite:
      for_each_selected_model(config, [&](const auto& model) {
        add_born_section(battery, model, config.samples, master);
      });
      for_each_selected_model(config, [&](const auto& model) {
        add_structure_section(battery, model, master);
      });
      if (selected(config, ModelKind::qubit_df)) {
        add_qubit_exact_section(battery, qubit::QubitVariant::dispersion_free, master);
        add_rotation_section(battery, master);
        add_husimi_section(battery, master);
      }
      if (selected(config, ModelKind::qubit_b0)) {
        add_qubit_exact_section(battery, qubit::QubitVariant::linear_response, master);
      }
      if (selected(config, ModelKind::bell_df)) {
        add_bell_interval_section(battery, master);
        if (bell_dimension(config) >= 3) {
          add_contextuality_section(battery, bell_dimension(config), master);
        }
      }
      if (selected(config, ModelKind::wigner_gaussian)) {
        add_wigner_section(battery, config.samples, master);
      }
      for_each_selected_model(config, [&](const auto& model) { add_audit(battery, model); });
      break;

    case Experiment::contextuality_demo:
      add_contextuality_section(battery, bell_dimension(config), master);
      break;

    case Experiment::wigner_demo:
      add_born_section(battery, phase_space::WignerGaussianModel(), config.samples, master);
      add_wigner_section(battery, config.samples, master);
      break;

    case Experiment::dimension_audit:
      for_each_selected_model(config, [&](const auto& model) { add_audit(battery, model); });
      break;
  }

  ReportDocument doc;
  doc.experiment = std::string(to_string(config.experiment));
  doc.master_seed = master;
  battery.run_into(doc, config.threads);
  return doc;
}

std::string render_report(const ReportDocument& doc, ReportFormat format) {
  return format == ReportFormat::csv ? emit_csv(doc.rows) : emit_json(doc);
}

}  // namespace onticlab
