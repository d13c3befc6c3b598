#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qmeur/measure.hpp"
#include "qmeur/qstate.hpp"

namespace qmeur {

/// Assignment of m measurements to n memories. Measurement i (0-based here)
/// is announced to memory t in 1..n, which is register subsystem t. Every
/// memory receives at least one measurement.
class Partition {
 public:
  /// assignment[i] = memory label (1-based) of measurement i.
  explicit Partition(std::vector<std::size_t> assignment);

  /// Grammar: groups "i,j,...:t" separated by ';' with 1-based measurement
  /// indices, e.g. "1:1;2,3:2" sends M1 to B1 and M2, M3 to B2.
  /// Throws ParseError on bad syntax and InvalidPartition on bad content.
  static Partition parse(std::string_view spec);

  /// All m measurements to memory 1.
  static Partition single_memory(std::size_t m);
  /// Measurement i to memory i.
  static Partition one_per_memory(std::size_t m);

  std::size_t measurements() const noexcept { return assignment_.size(); }
  std::size_t memories() const noexcept { return sets_.size(); }
  std::size_t memory_of(std::size_t i) const { return assignment_.at(i); }
  /// Measurement indices (0-based) announced to memory t (1-based).
  const std::vector<std::size_t>& set(std::size_t t) const { return sets_.at(t - 1); }
  std::size_t cardinality(std::size_t t) const { return set(t).size(); }

  std::string to_string() const;

 private:
  std::vector<std::size_t> assignment_;
  std::vector<std::vector<std::size_t>> sets_;
};

enum class WuVariant {
  Corrected,  // prod_{i<j} c_ij
  Original,   // prod_{i!=j} c_ij, as first published
};

/// Source of the memoryless Shannon bound sum_i H(M_i) >= U used by the
/// uniform construction.
class ShannonBoundProvider {
 public:
  enum class Kind { MuSum, LiuChannel, Constant };

  /// Pairwise sums of -log2 c_ij + S(A), averaged over the m - 1 pairs each
  /// measurement takes part in.
  static ShannonBoundProvider mu_sum() { return ShannonBoundProvider(Kind::MuSum, 0.0); }
  /// -log2 b + (m - 1) S(A).
  static ShannonBoundProvider liu_channel() { return ShannonBoundProvider(Kind::LiuChannel, 0.0); }
  static ShannonBoundProvider constant(double u) { return ShannonBoundProvider(Kind::Constant, u); }
  /// "mu-sum", "liu-channel", or a number. Throws UnknownProvider otherwise.
  static ShannonBoundProvider from_name(const std::string& name);

  Kind kind() const noexcept { return kind_; }
  double constant_value() const noexcept { return constant_; }
  std::string name() const;

 private:
  ShannonBoundProvider(Kind kind, double c) : kind_(kind), constant_(c) {}
  Kind kind_;
  double constant_;
};

/// Every state-dependent ingredient of the multi-measurement bounds for one
/// (state, measurements, partition) triple.
struct ScenarioQuantities {
  std::size_t m = 0;
  std::size_t n = 0;
  std::vector<std::size_t> memory_of;    // per measurement, 1-based
  std::vector<std::size_t> cardinality;  // per memory t-1
  std::vector<std::vector<double>> c;    // c_ij, symmetric, c_ii = 1
  double sum_log2_c = 0.0;               // sum_{i<j} log2 c_ij
  double b = 1.0;
  double s_a = 0.0;                      // S(A)
  std::vector<double> s_a_given;         // S(A|B_t) per memory t-1
  std::vector<double> i_a;               // I(A:B_t) per memory t-1
  std::vector<double> h;                 // H(M_i)
  std::vector<double> holevo;            // I(M_i:B_{t(i)})
  std::vector<double> cond;              // S(M_i|B_{t(i)})
};

/// Throws ValidationError when the partition names a memory the register
/// lacks, DimensionMismatch when subsystem 0 does not match the bases, and
/// InvalidPartition when partition and measurement counts differ.
ScenarioQuantities evaluate_quantities(const DensityMatrix& rho, const MeasurementSet& ms, const Partition& partition,
                                       BOrder b_order = BOrder::Given);

// Memoryless two-measurement bounds on H(M1) + H(M2). Throw WrongArity unless m = 2.
double bound_deutsch(const MeasurementSet& ms);
double bound_maassen_uffink(const MeasurementSet& ms);

// Two measurements, one memory: bounds on S(M1|B) + S(M2|B).
double bound_berta(const DensityMatrix& rho, const MeasurementSet& ms, std::size_t memory);
double delta_adabi(const DensityMatrix& rho, const MeasurementSet& ms, std::size_t memory);
double bound_adabi(const DensityMatrix& rho, const MeasurementSet& ms, std::size_t memory);

// Two measurements, two memories: bounds on S(M1|B) + S(M2|C).
double bound_tripartite_mu(const MeasurementSet& ms);
double delta_ming(const DensityMatrix& rho, const MeasurementSet& ms, std::size_t mem_b, std::size_t mem_c);
double bound_ming(const DensityMatrix& rho, const MeasurementSet& ms, std::size_t mem_b, std::size_t mem_c);
double delta_wu_tripartite(const DensityMatrix& rho, const MeasurementSet& ms, std::size_t mem_b, std::size_t mem_c);
double bound_wu_tripartite(const DensityMatrix& rho, const MeasurementSet& ms, std::size_t mem_b, std::size_t mem_c);

// Multi-measurement bounds. The ScenarioQuantities overloads are the formulas;
// the others evaluate the quantities first.

/// sum_t sum_{i in S_t} S(M_i|B_t)
double lhs_uncertainty(const ScenarioQuantities& q);
double lhs_uncertainty(const DensityMatrix& rho, const MeasurementSet& ms, const Partition& partition);

/// -1/(m-1) log2 prod_{i<j} c_ij + 1/(m-1) sum_t m_t(m_t-1)/2 S(A|B_t)
double bound_scb(const ScenarioQuantities& q);
double bound_scb(const DensityMatrix& rho, const MeasurementSet& ms, const Partition& partition);

double delta_thm1(const ScenarioQuantities& q);
double bound_thm1(const ScenarioQuantities& q);
double bound_thm1(const DensityMatrix& rho, const MeasurementSet& ms, const Partition& partition);

double delta_thm2(const ScenarioQuantities& q);
double bound_thm2(const ScenarioQuantities& q);
double bound_thm2(const DensityMatrix& rho, const MeasurementSet& ms, const Partition& partition,
                  BOrder b_order = BOrder::Given);

/// U supplied by the provider.
double shannon_bound(const ScenarioQuantities& q, const ShannonBoundProvider& u);
double delta_thm3(const ScenarioQuantities& q, const ShannonBoundProvider& u);
double bound_thm3(const ScenarioQuantities& q, const ShannonBoundProvider& u);
double bound_thm3(const DensityMatrix& rho, const MeasurementSet& ms, const Partition& partition,
                  const ShannonBoundProvider& u, BOrder b_order = BOrder::Given);

/// Single-memory form: -1/(m-1) log2 prod c + (m/2) S(A|B) + max{0, (m/2) I(A:B) - sum I(M_i:B)}.
double delta_xie(const DensityMatrix& rho, const MeasurementSet& ms, std::size_t memory);
double bound_xie(const DensityMatrix& rho, const MeasurementSet& ms, std::size_t memory);

/// One measurement per memory. The S(A) coefficient of delta_m is m.
/// Throws InvalidPartition unless every m_t = 1.
double delta_wu_multi(const ScenarioQuantities& q, WuVariant variant = WuVariant::Corrected);
double bound_wu_multi(const ScenarioQuantities& q, WuVariant variant = WuVariant::Corrected);
double bound_wu_multi(const DensityMatrix& rho, const MeasurementSet& ms, const Partition& partition,
                      WuVariant variant = WuVariant::Corrected);

inline constexpr double kBoundTolerance = 1e-9;

struct ReportOptions {
  WuVariant wu_variant = WuVariant::Corrected;
  BOrder b_order = BOrder::Given;
};

/// LHS uncertainty and every applicable bound for one scenario.
///
/// `bounds` holds lower bounds on `lhs`; `shannon_bounds` holds memoryless
/// bounds on `shannon_sum` = sum_i H(M_i). `deltas` are the raw values
/// before max{0, .}.
struct BoundReport {
  double lhs = 0.0;
  double shannon_sum = 0.0;
  std::map<std::string, double> bounds;
  std::map<std::string, double> shannon_bounds;
  std::map<std::string, double> deltas;

  /// Names of bounds exceeding their left-hand side by more than 1e-9.
  std::vector<std::string> violations() const;
  /// Largest entry of `bounds`.
  double best_bound() const;
};

BoundReport build_report(const DensityMatrix& rho, const MeasurementSet& ms, const Partition& partition,
                         const ReportOptions& options = {});

}  // namespace qmeur
