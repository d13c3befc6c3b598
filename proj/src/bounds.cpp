#include "qmeur/bounds.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "qmeur/entropy.hpp"
#include "qmeur/error.hpp"

namespace qmeur {

namespace {

void require_pair(const MeasurementSet& ms, const char* who) {
  if (ms.size() != 2) {
    throw Error(ErrorKind::WrongArity, std::string(who) + " takes exactly 2 measurements, got " + std::to_string(ms.size()));
  }
}

void require_memory(const DensityMatrix& rho, std::size_t memory) {
  if (memory == 0 || memory >= rho.reg().size()) {
    throw Error(ErrorKind::InvalidSubsystem, "memory " + std::to_string(memory) + " is not a memory of a " +
                                                 std::to_string(rho.reg().size()) + "-party register");
  }
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::size_t parse_index(const std::string& token, std::string_view spec) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size() || value == 0) {
    throw Error(ErrorKind::ParseError, "partition '" + std::string(spec) + "': expected a positive integer, got '" +
                                           token + "'");
  }
  return value;
}

double sum_log2_c(const MeasurementSet& ms) {
  double s = 0.0;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    for (std::size_t j = i + 1; j < ms.size(); ++j) s += std::log2(overlap_c(ms[i], ms[j]));
  }
  return s;
}

double pair_weight(std::size_t mt, std::size_t m) {
  return static_cast<double>(mt * (mt - 1)) / (2.0 * static_cast<double>(m - 1));
}

}  // namespace

// --- Partition ---------------------------------------------------------------

Partition::Partition(std::vector<std::size_t> assignment) : assignment_(std::move(assignment)) {
  if (assignment_.empty()) throw Error(ErrorKind::InvalidPartition, "partition assigns no measurements");
  const std::size_t n = *std::max_element(assignment_.begin(), assignment_.end());
  if (n == 0) throw Error(ErrorKind::InvalidPartition, "memory labels are 1-based");
  sets_.assign(n, {});
  for (std::size_t i = 0; i < assignment_.size(); ++i) {
    if (assignment_[i] == 0) throw Error(ErrorKind::InvalidPartition, "memory labels are 1-based");
    sets_[assignment_[i] - 1].push_back(i);
  }
  for (std::size_t t = 0; t < n; ++t) {
    if (sets_[t].empty()) {
      throw Error(ErrorKind::InvalidPartition, "memory " + std::to_string(t + 1) + " receives no measurement");
    }
  }
}

Partition Partition::parse(std::string_view spec) {
  std::vector<std::size_t> assignment;
  for (const std::string& group : split(spec, ';')) {
    const auto colon = group.find(':');
    if (colon == std::string::npos || group.find(':', colon + 1) != std::string::npos) {
      throw Error(ErrorKind::ParseError, "partition '" + std::string(spec) + "': group '" + group +
                                             "' must look like 'i,j:t'");
    }
    const std::size_t memory = parse_index(trim(group.substr(colon + 1)), spec);
    for (const std::string& token : split(std::string_view(group).substr(0, colon), ',')) {
      const std::size_t i = parse_index(token, spec);
      if (assignment.size() < i) assignment.resize(i, 0);
      if (assignment[i - 1] != 0) {
        throw Error(ErrorKind::InvalidPartition, "partition '" + std::string(spec) + "': measurement " +
                                                     std::to_string(i) + " assigned twice");
      }
      assignment[i - 1] = memory;
    }
  }
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    if (assignment[i] == 0) {
      throw Error(ErrorKind::InvalidPartition, "partition '" + std::string(spec) + "': measurement " +
                                                   std::to_string(i + 1) + " not assigned");
    }
  }
  return Partition(std::move(assignment));
}

Partition Partition::single_memory(std::size_t m) { return Partition(std::vector<std::size_t>(m, 1)); }

Partition Partition::one_per_memory(std::size_t m) {
  std::vector<std::size_t> a(m);
  for (std::size_t i = 0; i < m; ++i) a[i] = i + 1;
  return Partition(std::move(a));
}

std::string Partition::to_string() const {
  std::ostringstream os;
  for (std::size_t t = 0; t < sets_.size(); ++t) {
    if (t) os << ';';
    for (std::size_t k = 0; k < sets_[t].size(); ++k) os << (k ? "," : "") << sets_[t][k] + 1;
    os << ':' << t + 1;
  }
  return os.str();
}

// --- Providers ---------------------------------------------------------------

ShannonBoundProvider ShannonBoundProvider::from_name(const std::string& name) {
  if (name == "mu-sum") return mu_sum();
  if (name == "liu-channel") return liu_channel();
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(name.data(), name.data() + name.size(), value);
  if (!name.empty() && ec == std::errc{} && ptr == name.data() + name.size()) return constant(value);
  throw Error(ErrorKind::UnknownProvider, "Shannon bound provider '" + name + "'");
}

std::string ShannonBoundProvider::name() const {
  switch (kind_) {
    case Kind::MuSum: return "mu-sum";
    case Kind::LiuChannel: return "liu-channel";
    case Kind::Constant: return "constant";
  }
  return "unknown";
}

// --- Quantities ----------------------------------------------------------------

ScenarioQuantities evaluate_quantities(const DensityMatrix& rho, const MeasurementSet& ms, const Partition& partition,
                                       BOrder b_order) {
  if (partition.measurements() != ms.size()) {
    throw Error(ErrorKind::InvalidPartition, "partition covers " + std::to_string(partition.measurements()) +
                                                 " measurements but " + std::to_string(ms.size()) + " bases were given");
  }
  if (partition.memories() >= rho.reg().size()) {
    throw Error(ErrorKind::ValidationError,
                "partition: memory " + std::to_string(partition.memories()) + " does not exist in a " +
                    std::to_string(rho.reg().size()) + "-party register");
  }
  if (rho.reg().dim(0) != ms.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "bases have d=" + std::to_string(ms.dim()) +
                                                  " but subsystem A has d=" + std::to_string(rho.reg().dim(0)));
  }

  ScenarioQuantities q;
  q.m = ms.size();
  q.n = partition.memories();
  q.c.assign(q.m, std::vector<double>(q.m, 1.0));
  for (std::size_t i = 0; i < q.m; ++i) {
    for (std::size_t j = i + 1; j < q.m; ++j) {
      q.c[i][j] = q.c[j][i] = overlap_c(ms[i], ms[j]);
      q.sum_log2_c += std::log2(q.c[i][j]);
    }
  }
  q.b = channel_constant_b(ms, b_order);
  q.s_a = entropy_of(rho, {0});

  for (std::size_t t = 1; t <= q.n; ++t) {
    q.cardinality.push_back(partition.cardinality(t));
    const double s_b = entropy_of(rho, {t});
    const double s_ab = entropy_of(rho, {0, t});
    q.s_a_given.push_back(s_ab - s_b);
    q.i_a.push_back(q.s_a + s_b - s_ab);
  }
  for (std::size_t i = 0; i < q.m; ++i) {
    const std::size_t t = partition.memory_of(i);
    q.memory_of.push_back(t);
    q.h.push_back(measured_shannon(rho, ms[i]));
    q.holevo.push_back(holevo(rho, ms[i], {t}));
    q.cond.push_back(measured_conditional(rho, ms[i], {t}));
  }
  return q;
}

// --- Two-measurement bounds ----------------------------------------------------

double bound_deutsch(const MeasurementSet& ms) {
  require_pair(ms, "bound_deutsch");
  return 2.0 * std::log2(2.0 / (1.0 + std::sqrt(overlap_c(ms[0], ms[1]))));
}

double bound_maassen_uffink(const MeasurementSet& ms) {
  require_pair(ms, "bound_maassen_uffink");
  return -std::log2(overlap_c(ms[0], ms[1]));
}

double bound_berta(const DensityMatrix& rho, const MeasurementSet& ms, std::size_t memory) {
  require_memory(rho, memory);
  return bound_maassen_uffink(ms) + conditional(rho, {0}, {memory});
}

double delta_adabi(const DensityMatrix& rho, const MeasurementSet& ms, std::size_t memory) {
  require_pair(ms, "bound_adabi");
  require_memory(rho, memory);
  return mutual_information(rho, {0}, {memory}) - holevo(rho, ms[0], {memory}) - holevo(rho, ms[1], {memory});
}

double bound_adabi(const DensityMatrix& rho, const MeasurementSet& ms, std::size_t memory) {
  return bound_berta(rho, ms, memory) + std::max(0.0, delta_adabi(rho, ms, memory));
}

double bound_tripartite_mu(const MeasurementSet& ms) { return bound_maassen_uffink(ms); }

double delta_ming(const DensityMatrix& rho, const MeasurementSet& ms, std::size_t mem_b, std::size_t mem_c) {
  require_pair(ms, "bound_ming");
  require_memory(rho, mem_b);
  require_memory(rho, mem_c);
  return 2.0 * entropy_of(rho, {0}) + bound_maassen_uffink(ms) - mutual_information(rho, {0}, {mem_b}) -
         mutual_information(rho, {0}, {mem_c}) + holevo(rho, ms[1], {mem_b}) + holevo(rho, ms[0], {mem_c}) -
         measured_shannon(rho, ms[0]) - measured_shannon(rho, ms[1]);
}

double bound_ming(const DensityMatrix& rho, const MeasurementSet& ms, std::size_t mem_b, std::size_t mem_c) {
  return bound_maassen_uffink(ms) + std::max(0.0, delta_ming(rho, ms, mem_b, mem_c));
}

double delta_wu_tripartite(const DensityMatrix& rho, const MeasurementSet& ms, std::size_t mem_b, std::size_t mem_c) {
  require_pair(ms, "bound_wu_tripartite");
  require_memory(rho, mem_b);
  require_memory(rho, mem_c);
  return 2.0 * entropy_of(rho, {0}) + bound_maassen_uffink(ms) - holevo(rho, ms[0], {mem_b}) -
         holevo(rho, ms[1], {mem_c}) - measured_shannon(rho, ms[0]) - measured_shannon(rho, ms[1]);
}

double bound_wu_tripartite(const DensityMatrix& rho, const MeasurementSet& ms, std::size_t mem_b, std::size_t mem_c) {
  return bound_maassen_uffink(ms) + std::max(0.0, delta_wu_tripartite(rho, ms, mem_b, mem_c));
}

// --- Multi-measurement bounds ------------------------------------------------------

double lhs_uncertainty(const ScenarioQuantities& q) {
  double s = 0.0;
  for (double x : q.cond) s += x;
  return s;
}

double lhs_uncertainty(const DensityMatrix& rho, const MeasurementSet& ms, const Partition& partition) {
  return lhs_uncertainty(evaluate_quantities(rho, ms, partition));
}

double bound_scb(const ScenarioQuantities& q) {
  const double inv = 1.0 / static_cast<double>(q.m - 1);
  double memory_term = 0.0;
  for (std::size_t t = 0; t < q.n; ++t) {
    memory_term += static_cast<double>(q.cardinality[t] * (q.cardinality[t] - 1)) / 2.0 * q.s_a_given[t];
  }
  return -inv * q.sum_log2_c + inv * memory_term;
}

double bound_scb(const DensityMatrix& rho, const MeasurementSet& ms, const Partition& partition) {
  return bound_scb(evaluate_quantities(rho, ms, partition));
}

double delta_thm1(const ScenarioQuantities& q) {
  double pairs = 0.0;
  double correlations = 0.0;
  for (std::size_t t = 0; t < q.n; ++t) {
    pairs += static_cast<double>(q.cardinality[t] * (q.cardinality[t] - 1));
    correlations += pair_weight(q.cardinality[t], q.m) * q.i_a[t];
  }
  const double m = static_cast<double>(q.m);
  double holevo_sum = 0.0;
  for (double x : q.holevo) holevo_sum += x;
  return (m * (m - 1.0) - pairs) / (2.0 * (m - 1.0)) * q.s_a + correlations - holevo_sum;
}

double bound_thm1(const ScenarioQuantities& q) { return bound_scb(q) + std::max(0.0, delta_thm1(q)); }

double bound_thm1(const DensityMatrix& rho, const MeasurementSet& ms, const Partition& partition) {
  return bound_thm1(evaluate_quantities(rho, ms, partition));
}

double delta_thm2(const ScenarioQuantities& q) {
  const double m = static_cast<double>(q.m);
  double value = (q.sum_log2_c - (m - 1.0) * std::log2(q.b)) / (m - 1.0) + (m - 1.0) * q.s_a;
  for (std::size_t t = 0; t < q.n; ++t) {
    const double w = pair_weight(q.cardinality[t], q.m);
    value += -w * q.s_a + w * q.i_a[t];
  }
  for (double x : q.holevo) value -= x;
  return value;
}

double bound_thm2(const ScenarioQuantities& q) { return bound_scb(q) + std::max(0.0, delta_thm2(q)); }

double bound_thm2(const DensityMatrix& rho, const MeasurementSet& ms, const Partition& partition, BOrder b_order) {
  return bound_thm2(evaluate_quantities(rho, ms, partition, b_order));
}

double shannon_bound(const ScenarioQuantities& q, const ShannonBoundProvider& u) {
  const double m = static_cast<double>(q.m);
  switch (u.kind()) {
    case ShannonBoundProvider::Kind::MuSum:
      return -q.sum_log2_c / (m - 1.0) + m / 2.0 * q.s_a;
    case ShannonBoundProvider::Kind::LiuChannel:
      return -std::log2(q.b) + (m - 1.0) * q.s_a;
    case ShannonBoundProvider::Kind::Constant:
      return u.constant_value();
  }
  throw Error(ErrorKind::UnknownProvider, u.name());
}

double delta_thm3(const ScenarioQuantities& q, const ShannonBoundProvider& u) {
  double holevo_sum = 0.0;
  for (double x : q.holevo) holevo_sum += x;
  return shannon_bound(q, u) - bound_scb(q) - holevo_sum;
}

double bound_thm3(const ScenarioQuantities& q, const ShannonBoundProvider& u) {
  return bound_scb(q) + std::max(0.0, delta_thm3(q, u));
}

double bound_thm3(const DensityMatrix& rho, const MeasurementSet& ms, const Partition& partition,
                  const ShannonBoundProvider& u, BOrder b_order) {
  return bound_thm3(evaluate_quantities(rho, ms, partition, b_order), u);
}

double delta_xie(const DensityMatrix& rho, const MeasurementSet& ms, std::size_t memory) {
  require_memory(rho, memory);
  const double m = static_cast<double>(ms.size());
  double value = m / 2.0 * mutual_information(rho, {0}, {memory});
  for (const auto& basis : ms.bases()) value -= holevo(rho, basis, {memory});
  return value;
}

double bound_xie(const DensityMatrix& rho, const MeasurementSet& ms, std::size_t memory) {
  require_memory(rho, memory);
  const double m = static_cast<double>(ms.size());
  return -sum_log2_c(ms) / (m - 1.0) + m / 2.0 * conditional(rho, {0}, {memory}) +
         std::max(0.0, delta_xie(rho, ms, memory));
}

double delta_wu_multi(const ScenarioQuantities& q, WuVariant variant) {
  for (std::size_t t = 0; t < q.n; ++t) {
    if (q.cardinality[t] != 1) {
      throw Error(ErrorKind::InvalidPartition, "bound_wu_multi needs one measurement per memory; memory " +
                                                   std::to_string(t + 1) + " has " + std::to_string(q.cardinality[t]));
    }
  }
  const double m = static_cast<double>(q.m);
  const double log_prod = variant == WuVariant::Corrected ? q.sum_log2_c : 2.0 * q.sum_log2_c;
  double value = -log_prod / (m - 1.0) + m * q.s_a;
  for (double x : q.h) value -= x;
  for (double x : q.holevo) value -= x;
  return value;
}

double bound_wu_multi(const ScenarioQuantities& q, WuVariant variant) {
  const double delta = delta_wu_multi(q, variant);
  const double log_prod = variant == WuVariant::Corrected ? q.sum_log2_c : 2.0 * q.sum_log2_c;
  return -log_prod / static_cast<double>(q.m - 1) + std::max(0.0, delta);
}

double bound_wu_multi(const DensityMatrix& rho, const MeasurementSet& ms, const Partition& partition,
                      WuVariant variant) {
  return bound_wu_multi(evaluate_quantities(rho, ms, partition), variant);
}

// --- Report --------------------------------------------------------------------

std::vector<std::string> BoundReport::violations() const {
  std::vector<std::string> out;
  for (const auto& [name, value] : bounds) {
    if (lhs < value - kBoundTolerance) out.push_back(name);
  }
  for (const auto& [name, value] : shannon_bounds) {
    if (shannon_sum < value - kBoundTolerance) out.push_back(name);
  }
  return out;
}

double BoundReport::best_bound() const {
  double best = -INFINITY;
  for (const auto& [name, value] : bounds) best = std::max(best, value);
  return best;
}

BoundReport build_report(const DensityMatrix& rho, const MeasurementSet& ms, const Partition& partition,
                         const ReportOptions& options) {
  const ScenarioQuantities q = evaluate_quantities(rho, ms, partition, options.b_order);
  BoundReport r;
  r.lhs = lhs_uncertainty(q);
  for (double x : q.h) r.shannon_sum += x;

  const auto mu = ShannonBoundProvider::mu_sum();
  const auto liu = ShannonBoundProvider::liu_channel();
  r.bounds["scb"] = bound_scb(q);
  r.bounds["thm1"] = bound_thm1(q);
  r.bounds["thm2"] = bound_thm2(q);
  r.bounds["thm3_mu_sum"] = bound_thm3(q, mu);
  r.bounds["thm3_liu_channel"] = bound_thm3(q, liu);
  r.deltas["thm1"] = delta_thm1(q);
  r.deltas["thm2"] = delta_thm2(q);
  r.deltas["thm3_mu_sum"] = delta_thm3(q, mu);
  r.deltas["thm3_liu_channel"] = delta_thm3(q, liu);
  r.shannon_bounds["mu_sum"] = shannon_bound(q, mu);
  r.shannon_bounds["liu_channel"] = shannon_bound(q, liu);

  if (q.n == 1) {
    r.bounds["xie"] = bound_xie(rho, ms, 1);
    r.deltas["xie"] = delta_xie(rho, ms, 1);
  }
  if (q.n == q.m) {
    r.bounds["wu"] = bound_wu_multi(q, options.wu_variant);
    r.deltas["wu"] = delta_wu_multi(q, options.wu_variant);
  }
  if (q.m == 2) {
    r.shannon_bounds["deutsch"] = bound_deutsch(ms);
    r.shannon_bounds["maassen_uffink"] = bound_maassen_uffink(ms);
    if (q.n == 1) {
      r.bounds["berta"] = bound_berta(rho, ms, 1);
      r.bounds["adabi"] = bound_adabi(rho, ms, 1);
      r.deltas["adabi"] = delta_adabi(rho, ms, 1);
    } else {
      const std::size_t mem_b = q.memory_of[0];
      const std::size_t mem_c = q.memory_of[1];
      r.bounds["tripartite_mu"] = bound_tripartite_mu(ms);
      r.bounds["ming"] = bound_ming(rho, ms, mem_b, mem_c);
      r.bounds["wu_tripartite"] = bound_wu_tripartite(rho, ms, mem_b, mem_c);
      r.deltas["ming"] = delta_ming(rho, ms, mem_b, mem_c);
      r.deltas["wu_tripartite"] = delta_wu_tripartite(rho, ms, mem_b, mem_c);
    }
  }
  return r;
}

}  // namespace qmeur
