#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qmeur/bounds.hpp"

namespace qmeur {

inline constexpr std::size_t kDefaultGridSteps = 200;
inline constexpr std::size_t kDefaultEnsembleSamples = 10000;

/// Inclusive linear grid: steps points from `from` to `to` (one point at
/// `from` when steps = 1).
struct SweepAxis {
  std::string name;  // "p", "alpha" or "beta"
  double from = 0.0;
  double to = 0.0;
  std::size_t steps = kDefaultGridSteps;

  std::vector<double> points() const;
};

struct SweepSpec {
  std::string scenario;                // "one-memory", "w-state" or "random-ensemble"
  std::map<std::string, double> fixed;  // non-swept state parameters
  std::optional<SweepAxis> axis;        // grid scenarios only
  std::size_t samples = kDefaultEnsembleSamples;
  std::uint64_t seed = 42;
  ReportOptions options;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct SweepRow {
  std::vector<double> parameters;  // grid scenarios, in SweepResult::parameter_names order
  std::uint64_t sample_index = 0;  // ensemble only
  std::uint64_t sample_seed = 0;   // ensemble only
  double lhs = 0.0;
  std::vector<double> bounds;  // SweepResult::bound_names order
  std::vector<double> extras;  // SweepResult::extra_names order
  std::vector<double> deltas;  // SweepResult::delta_names order
};

struct SweepResult {
  std::string scenario;
  bool ensemble = false;
  std::vector<std::string> parameter_names;
  std::vector<std::string> bound_names;
  std::vector<std::string> extra_names;
  std::vector<std::string> delta_names;
  std::vector<SweepRow> rows;

  /// Column of `bound_names`; throws OutOfRange if absent.
  std::size_t bound_column(const std::string& name) const;
};

/// Three Pauli measurements, one memory, on p|sigma><sigma| + (1-p) I/4.
/// The swept axis is "alpha" (with fixed "p") or "p" (with fixed "alpha").
/// Default ranges: alpha in [0, pi], p in [0, 1].
SweepResult run_one_memory_case(const SweepAxis& axis, double fixed);

/// Generalized W state, sigma_x -> B and sigma_y, sigma_z -> C. The swept
/// axis is "alpha" (fixed "beta") or "beta" (fixed "alpha").
/// Default ranges: alpha in [0, pi], beta in [0, 2 pi].
SweepResult run_two_memory_case(const SweepAxis& axis, double fixed);

/// Random four-qubit states, sigma_x -> B, sigma_y -> C, sigma_z -> D.
/// Sample i uses the stream derive_seed(seed, i); rows are in index order.
SweepResult run_three_memory_ensemble(std::size_t samples, std::uint64_t seed, const ReportOptions& options = {},
                                      unsigned threads = 0);

/// Dispatch on spec.scenario; throws UnknownScenario / OutOfRange.
SweepResult run_sweep(const SweepSpec& spec);

/// Stable sort of the rows by their "wu" bound.
void sort_by_wu(SweepResult& result);

/// Header plus one line per row; reals use 12 significant digits.
std::string to_csv(const SweepResult& result);

struct SweepSummary {
  std::size_t rows = 0;
  double min_gap = 0.0;  // min over rows of lhs - best bound
  double max_gap = 0.0;
  std::size_t violations = 0;  // rows with some bound above lhs + 1e-9
};

SweepSummary summarize(const SweepResult& result);

}  // namespace qmeur
