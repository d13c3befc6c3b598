#include "qmeur/scenario.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <sstream>
#include <thread>

#include "qmeur/error.hpp"
#include "qmeur/rng.hpp"

namespace qmeur {

namespace {

void require_steps(const SweepAxis& axis) {
  if (axis.steps == 0) throw Error(ErrorKind::OutOfRange, axis.name + "-steps: must be >= 1");
}

SweepResult grid_result(std::string scenario, const SweepAxis& axis, const std::string& fixed_name) {
  SweepResult r;
  r.scenario = std::move(scenario);
  r.parameter_names = {axis.name, fixed_name};
  return r;
}

void fill_row(SweepRow& row, const ScenarioQuantities& q, const std::vector<std::string>& bounds) {
  row.lhs = lhs_uncertainty(q);
  for (const auto& name : bounds) {
    if (name == "scb") row.bounds.push_back(bound_scb(q));
    if (name == "thm1") row.bounds.push_back(bound_thm1(q));
    if (name == "thm2") row.bounds.push_back(bound_thm2(q));
  }
  row.deltas = {delta_thm1(q), delta_thm2(q)};
}

}  // namespace

std::vector<double> SweepAxis::points() const {
  std::vector<double> out;
  out.reserve(steps);
  for (std::size_t i = 0; i < steps; ++i) {
    out.push_back(steps == 1 ? from : from + (to - from) * static_cast<double>(i) / static_cast<double>(steps - 1));
  }
  return out;
}

std::size_t SweepResult::bound_column(const std::string& name) const {
  const auto it = std::find(bound_names.begin(), bound_names.end(), name);
  if (it == bound_names.end()) throw Error(ErrorKind::OutOfRange, "no bound column '" + name + "'");
  return static_cast<std::size_t>(it - bound_names.begin());
}

SweepResult run_one_memory_case(const SweepAxis& axis, double fixed) {
  require_steps(axis);
  if (axis.name != "alpha" && axis.name != "p") {
    throw Error(ErrorKind::OutOfRange, "one-memory sweeps 'alpha' or 'p', not '" + axis.name + "'");
  }
  const bool sweep_alpha = axis.name == "alpha";
  SweepResult r = grid_result("one-memory", axis, sweep_alpha ? "p" : "alpha");
  r.bound_names = {"scb", "thm1", "thm2", "xie"};
  r.delta_names = {"thm1", "thm2", "xie"};

  const MeasurementSet ms = pauli_triple();
  const Partition partition = Partition::single_memory(3);
  for (double x : axis.points()) {
    const double p = sweep_alpha ? fixed : x;
    const double alpha = sweep_alpha ? x : fixed;
    const DensityMatrix rho = family_mixed_two_qubit(p, alpha);
    const ScenarioQuantities q = evaluate_quantities(rho, ms, partition);
    SweepRow row;
    row.parameters = {x, fixed};
    fill_row(row, q, {"scb", "thm1", "thm2"});
    row.bounds.push_back(bound_xie(rho, ms, 1));
    row.deltas.push_back(delta_xie(rho, ms, 1));
    r.rows.push_back(std::move(row));
  }
  return r;
}

SweepResult run_two_memory_case(const SweepAxis& axis, double fixed) {
  require_steps(axis);
  if (axis.name != "alpha" && axis.name != "beta") {
    throw Error(ErrorKind::OutOfRange, "w-state sweeps 'alpha' or 'beta', not '" + axis.name + "'");
  }
  const bool sweep_alpha = axis.name == "alpha";
  SweepResult r = grid_result("w-state", axis, sweep_alpha ? "beta" : "alpha");
  r.bound_names = {"scb", "thm1", "thm2"};
  r.delta_names = {"thm1", "thm2"};

  const MeasurementSet ms = pauli_triple();
  const Partition partition = Partition::parse("1:1;2,3:2");
  for (double x : axis.points()) {
    const double alpha = sweep_alpha ? x : fixed;
    const double beta = sweep_alpha ? fixed : x;
    const ScenarioQuantities q = evaluate_quantities(generalized_w(alpha, beta), ms, partition);
    SweepRow row;
    row.parameters = {x, fixed};
    fill_row(row, q, r.bound_names);
    r.rows.push_back(std::move(row));
  }
  return r;
}

SweepResult run_three_memory_ensemble(std::size_t samples, std::uint64_t seed, const ReportOptions& options,
                                      unsigned threads) {
  if (samples == 0) throw Error(ErrorKind::OutOfRange, "samples: must be >= 1");
  SweepResult r;
  r.scenario = "random-ensemble";
  r.ensemble = true;
  r.bound_names = {"scb", "thm1", "thm2", "wu"};
  r.extra_names = {"thm1_minus_wu", "thm2_minus_wu"};
  r.delta_names = {"thm1", "thm2", "wu"};
  r.rows.resize(samples);

  const MeasurementSet ms = pauli_triple();
  const Partition partition = Partition::one_per_memory(3);
  const Register reg({2, 2, 2, 2});

  auto evaluate = [&](std::size_t i) {
    SweepRow& row = r.rows[i];
    row.sample_index = i;
    row.sample_seed = derive_seed(seed, i);
    Rng rng(row.sample_seed);
    const ScenarioQuantities q = evaluate_quantities(random_state(rng, reg), ms, partition, options.b_order);
    fill_row(row, q, {"scb", "thm1", "thm2"});
    const double wu = bound_wu_multi(q, options.wu_variant);
    row.bounds.push_back(wu);
    row.deltas.push_back(delta_wu_multi(q, options.wu_variant));
    row.extras = {row.bounds[1] - wu, row.bounds[2] - wu};
  };

  unsigned workers = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, samples));
  if (workers <= 1) {
    for (std::size_t i = 0; i < samples; ++i) evaluate(i);
    return r;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < samples; i = next++) {
        try {
          evaluate(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return r;
}

SweepResult run_sweep(const SweepSpec& spec) {
  auto fixed_or = [&](const std::string& name, double fallback) {
    const auto it = spec.fixed.find(name);
    return it == spec.fixed.end() ? fallback : it->second;
  };
  if (spec.scenario == "one-memory") {
    const SweepAxis axis = spec.axis.value_or(SweepAxis{"alpha", 0.0, std::numbers::pi, kDefaultGridSteps});
    return run_one_memory_case(axis, axis.name == "alpha" ? fixed_or("p", 0.5) : fixed_or("alpha", std::numbers::pi / 2));
  }
  if (spec.scenario == "w-state") {
    const SweepAxis axis = spec.axis.value_or(SweepAxis{"alpha", 0.0, std::numbers::pi, kDefaultGridSteps});
    return run_two_memory_case(axis, axis.name == "alpha" ? fixed_or("beta", std::numbers::pi / 5)
                                                          : fixed_or("alpha", 2.0 * std::numbers::pi / 3));
  }
  if (spec.scenario == "random-ensemble") {
    return run_three_memory_ensemble(spec.samples, spec.seed, spec.options, spec.threads);
  }
  throw Error(ErrorKind::UnknownScenario,
              "'" + spec.scenario + "' (expected one-memory, w-state or random-ensemble)");
}

void sort_by_wu(SweepResult& result) {
  const std::size_t col = result.bound_column("wu");
  std::stable_sort(result.rows.begin(), result.rows.end(),
                   [col](const SweepRow& a, const SweepRow& b) { return a.bounds[col] < b.bounds[col]; });
}

std::string to_csv(const SweepResult& result) {
  std::ostringstream os;
  os.precision(12);
  std::vector<std::string> header;
  if (result.ensemble) {
    header = {"sample_index", "sample_seed"};
  } else {
    header = result.parameter_names;
  }
  header.push_back("lhs");
  header.insert(header.end(), result.bound_names.begin(), result.bound_names.end());
  header.insert(header.end(), result.extra_names.begin(), result.extra_names.end());
  for (const auto& d : result.delta_names) header.push_back("delta_raw_" + d);
  for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
  os << '\n';

  for (const SweepRow& row : result.rows) {
    if (result.ensemble) {
      os << row.sample_index << ',' << row.sample_seed;
    } else {
      for (std::size_t i = 0; i < row.parameters.size(); ++i) os << (i ? "," : "") << row.parameters[i];
    }
    os << ',' << row.lhs;
    for (double x : row.bounds) os << ',' << x;
    for (double x : row.extras) os << ',' << x;
    for (double x : row.deltas) os << ',' << x;
    os << '\n';
  }
  return os.str();
}

SweepSummary summarize(const SweepResult& result) {
  SweepSummary s;
  s.rows = result.rows.size();
  s.min_gap = INFINITY;
  s.max_gap = -INFINITY;
  for (const SweepRow& row : result.rows) {
    const double best = *std::max_element(row.bounds.begin(), row.bounds.end());
    const double gap = row.lhs - best;
    s.min_gap = std::min(s.min_gap, gap);
    s.max_gap = std::max(s.max_gap, gap);
    if (gap < -kBoundTolerance) ++s.violations;
  }
  return s;
}

}  // namespace qmeur
