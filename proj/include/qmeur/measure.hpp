#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qmeur/linalg.hpp"
#include "qmeur/qstate.hpp"
#include "qmeur/rng.hpp"

namespace qmeur {

/// Orthonormal basis {|psi_k>} for a rank-1 projective measurement. The
/// vectors are the columns of a unitary matrix.
class MeasurementBasis {
 public:
  /// Throws ValidationError unless the columns are orthonormal within 1e-10.
  MeasurementBasis(std::string label, ComplexMatrix vectors);

  const std::string& label() const noexcept { return label_; }
  std::size_t dim() const noexcept { return vectors_.rows(); }
  const ComplexMatrix& vectors() const noexcept { return vectors_; }
  std::vector<Complex> vector(std::size_t k) const { return vectors_.column(k); }

  /// |<psi_k|phi_l>|^2 for every (k, l).
  std::vector<std::vector<double>> overlaps(const MeasurementBasis& other) const;

 private:
  std::string label_;
  ComplexMatrix vectors_;
};

MeasurementBasis pauli_x();
MeasurementBasis pauli_y();
MeasurementBasis pauli_z();
MeasurementBasis computational(std::size_t dim);

/// Eigenbasis of a Hermitian observable, in ascending eigenvalue order.
MeasurementBasis basis_from_observable(std::string label, const ComplexMatrix& observable);

/// Eigenbasis of random_hermitian(rng, dim).
template <UniformSource R>
MeasurementBasis random_basis(R& rng, std::size_t dim, std::string label = "random") {
  return MeasurementBasis(std::move(label), eig_hermitian(random_hermitian(rng, dim)).eigenvectors);
}

/// Built-in names: "pauli-x", "pauli-y", "pauli-z", "computational" (qubit).
/// Throws ValidationError for anything else.
MeasurementBasis builtin_basis(const std::string& name);

/// Ordered list of m >= 2 bases on a common dimension d.
class MeasurementSet {
 public:
  explicit MeasurementSet(std::vector<MeasurementBasis> bases);

  std::size_t size() const noexcept { return bases_.size(); }
  std::size_t dim() const noexcept { return bases_.front().dim(); }
  const MeasurementBasis& operator[](std::size_t i) const { return bases_.at(i); }
  const std::vector<MeasurementBasis>& bases() const noexcept { return bases_; }

 private:
  std::vector<MeasurementBasis> bases_;
};

/// pauli-x, pauli-y, pauli-z in that order.
MeasurementSet pauli_triple();

/// c = max_{k,l} |<psi_k|phi_l>|^2. Throws DimensionMismatch.
double overlap_c(const MeasurementBasis& b1, const MeasurementBasis& b2);

/// Channel constant for the ordered chain M_1 -> M_2 -> ... -> M_m:
///   b = max_{k_m} sum_{k_2..k_{m-1}} max_{k_1} |<psi^1_{k_1}|psi^2_{k_2}>|^2
///       prod_{i=2}^{m-1} |<psi^i_{k_i}|psi^{i+1}_{k_{i+1}}>|^2.
/// Evaluated as a left-to-right vector recursion over the chain.
double channel_constant_b(const MeasurementSet& ms);

enum class BOrder { Given, Minimized };

/// channel_constant_b for `order`; Minimized takes the smallest value over all
/// m! orderings and throws OutOfRange for m > 5.
double channel_constant_b(const MeasurementSet& ms, BOrder order);

/// sum_k (|psi_k><psi_k| (x) I) rho (|psi_k><psi_k| (x) I) with the projector on
/// subsystem `measured`. Throws DimensionMismatch / InvalidSubsystem.
DensityMatrix post_measurement_state(const DensityMatrix& rho, const MeasurementBasis& basis,
                                     std::size_t measured = 0);

/// p_k = <psi_k| rho_measured |psi_k>, clamped at zero and renormalized.
ProbabilityVector outcome_distribution(const DensityMatrix& rho, const MeasurementBasis& basis,
                                       std::size_t measured = 0);

}  // namespace qmeur
