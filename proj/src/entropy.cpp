#include "qmeur/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qmeur/error.hpp"

namespace qmeur {

namespace {

constexpr double kZeroCutoff = 1e-12;
constexpr double kSumTolerance = 1e-9;

double entropy_of_clamped(std::vector<double> p) {
  double sum = 0.0;
  for (double& x : p) {
    if (x < kZeroCutoff) x = 0.0;
    sum += x;
  }
  double h = 0.0;
  for (double x : p) {
    if (x > 0.0) {
      const double q = x / sum;
      h -= q * std::log2(q);
    }
  }
  return std::max(0.0, h);
}

void require_memory(const DensityMatrix& rho, const Subsystems& memory) {
  for (std::size_t m : memory) {
    if (m == 0) throw Error(ErrorKind::InvalidSubsystem, "memory must exclude the measured subsystem 0");
    if (m >= rho.reg().size()) {
      throw Error(ErrorKind::InvalidSubsystem, "memory subsystem " + std::to_string(m) + " outside a " +
                                                   std::to_string(rho.reg().size()) + "-party register");
    }
  }
}

// rho^{A, memory} followed by the measurement on A (which stays at index 0).
DensityMatrix measured_joint(const DensityMatrix& rho, const MeasurementBasis& basis, const Subsystems& memory) {
  require_memory(rho, memory);
  Subsystems keep{0};
  keep.insert(keep.end(), memory.begin(), memory.end());
  return post_measurement_state(partial_trace(rho, keep), basis, 0);
}

// Memory indices inside the reduced register {0} u memory, which keeps
// original relative order.
Subsystems shifted_memory(const Subsystems& memory) {
  Subsystems sorted = memory;
  std::sort(sorted.begin(), sorted.end());
  Subsystems out;
  for (std::size_t i = 0; i < sorted.size(); ++i) out.push_back(i + 1);
  return out;
}

}  // namespace

double shannon(const ProbabilityVector& p) {
  if (p.empty()) throw Error(ErrorKind::InvalidDistribution, "empty probability vector");
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!std::isfinite(p[i]) || p[i] < -kZeroCutoff) {
      std::ostringstream os;
      os << "entry " << i << " = " << p[i] << " is negative or not finite";
      throw Error(ErrorKind::InvalidDistribution, os.str());
    }
    sum += p[i];
  }
  if (std::abs(sum - 1.0) > kSumTolerance) {
    std::ostringstream os;
    os << "entries sum to " << sum << ", not 1";
    throw Error(ErrorKind::InvalidDistribution, os.str());
  }
  return entropy_of_clamped(p);
}

double von_neumann(const DensityMatrix& rho) {
  std::vector<double> spectrum = eig_hermitian(rho.matrix()).eigenvalues;
  for (double& x : spectrum) {
    if (x < 0.0 && x >= -kStateTolerance) x = 0.0;
  }
  return entropy_of_clamped(std::move(spectrum));
}

double entropy_of(const DensityMatrix& rho, const Subsystems& subs) {
  if (subs.empty()) return 0.0;
  return von_neumann(partial_trace(rho, subs));
}

double conditional(const DensityMatrix& rho, const Subsystems& target, const Subsystems& memory) {
  for (std::size_t t : target) {
    if (std::find(memory.begin(), memory.end(), t) != memory.end()) {
      throw Error(ErrorKind::InvalidSubsystem, "conditional: subsystem " + std::to_string(t) + " in both target and memory");
    }
  }
  Subsystems joint = target;
  joint.insert(joint.end(), memory.begin(), memory.end());
  if (joint.empty()) throw Error(ErrorKind::InvalidSubsystem, "conditional: empty target and memory");
  return entropy_of(rho, joint) - entropy_of(rho, memory);
}

double mutual_information(const DensityMatrix& rho, const Subsystems& a, const Subsystems& b) {
  for (std::size_t x : a) {
    if (std::find(b.begin(), b.end(), x) != b.end()) {
      throw Error(ErrorKind::InvalidSubsystem, "mutual_information: subsystem " + std::to_string(x) + " in both parts");
    }
  }
  Subsystems joint = a;
  joint.insert(joint.end(), b.begin(), b.end());
  return entropy_of(rho, a) + entropy_of(rho, b) - entropy_of(rho, joint);
}

double holevo(const DensityMatrix& rho, const MeasurementBasis& basis, const Subsystems& memory) {
  const DensityMatrix mb = measured_joint(rho, basis, memory);
  const Subsystems mem = shifted_memory(memory);
  return entropy_of(mb, {0}) + entropy_of(mb, mem) - von_neumann(mb);
}

double measured_conditional(const DensityMatrix& rho, const MeasurementBasis& basis, const Subsystems& memory) {
  const DensityMatrix mb = measured_joint(rho, basis, memory);
  return von_neumann(mb) - entropy_of(mb, shifted_memory(memory));
}

double measured_shannon(const DensityMatrix& rho, const MeasurementBasis& basis) {
  return shannon(outcome_distribution(rho, basis, 0));
}

}  // namespace qmeur
