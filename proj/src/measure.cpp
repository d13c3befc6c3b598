#include "qmeur/measure.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "qmeur/error.hpp"

namespace qmeur {

namespace {

constexpr double kOrthonormalTolerance = 1e-10;

void require_same_dim(const MeasurementBasis& a, const MeasurementBasis& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "bases '" + a.label() + "' (d=" + std::to_string(a.dim()) + ") and '" +
                                                  b.label() + "' (d=" + std::to_string(b.dim()) + ")");
  }
}

void require_measurable(const DensityMatrix& rho, const MeasurementBasis& basis, std::size_t measured) {
  if (measured >= rho.reg().size()) {
    throw Error(ErrorKind::InvalidSubsystem, "measured subsystem " + std::to_string(measured) + " outside a " +
                                                 std::to_string(rho.reg().size()) + "-party register");
  }
  if (rho.reg().dim(measured) != basis.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "basis '" + basis.label() + "' has d=" + std::to_string(basis.dim()) +
                                                  " but subsystem " + std::to_string(measured) + " has d=" +
                                                  std::to_string(rho.reg().dim(measured)));
  }
}

// I (x) U (x) I with U acting on subsystem `at`.
ComplexMatrix lift(const Register& reg, const ComplexMatrix& u, std::size_t at) {
  std::size_t before = 1;
  std::size_t after = 1;
  for (std::size_t i = 0; i < at; ++i) before *= reg.dim(i);
  for (std::size_t i = at + 1; i < reg.size(); ++i) after *= reg.dim(i);
  return kron(kron(ComplexMatrix::identity(before), u), ComplexMatrix::identity(after));
}

double chain_value(const std::vector<const MeasurementBasis*>& chain) {
  const std::size_t d = chain.front()->dim();
  const auto first = chain[0]->overlaps(*chain[1]);
  // weight[k_2] = max_{k_1} |<psi^1_{k_1}|psi^2_{k_2}>|^2
  std::vector<double> weight(d, 0.0);
  for (std::size_t k2 = 0; k2 < d; ++k2) {
    for (std::size_t k1 = 0; k1 < d; ++k1) weight[k2] = std::max(weight[k2], first[k1][k2]);
  }
  for (std::size_t i = 1; i + 1 < chain.size(); ++i) {
    const auto o = chain[i]->overlaps(*chain[i + 1]);
    std::vector<double> next(d, 0.0);
    for (std::size_t kn = 0; kn < d; ++kn) {
      for (std::size_t k = 0; k < d; ++k) next[kn] += weight[k] * o[k][kn];
    }
    weight = std::move(next);
  }
  return *std::max_element(weight.begin(), weight.end());
}

}  // namespace

MeasurementBasis::MeasurementBasis(std::string label, ComplexMatrix vectors)
    : label_(std::move(label)), vectors_(std::move(vectors)) {
  if (!vectors_.is_square() || vectors_.rows() < 2) {
    throw Error(ErrorKind::ValidationError,
                "basis '" + label_ + "': need d >= 2 vectors of length d, got " + std::to_string(vectors_.cols()) +
                    " vectors of length " + std::to_string(vectors_.rows()));
  }
  const ComplexMatrix gram = vectors_.adjoint() * vectors_;
  if (max_abs_diff(gram, ComplexMatrix::identity(dim())) > kOrthonormalTolerance) {
    throw Error(ErrorKind::ValidationError, "basis '" + label_ + "': vectors not orthonormal within 1e-10");
  }
}

std::vector<std::vector<double>> MeasurementBasis::overlaps(const MeasurementBasis& other) const {
  require_same_dim(*this, other);
  const ComplexMatrix g = vectors_.adjoint() * other.vectors_;
  std::vector<std::vector<double>> out(dim(), std::vector<double>(dim()));
  for (std::size_t k = 0; k < dim(); ++k) {
    for (std::size_t l = 0; l < dim(); ++l) out[k][l] = std::norm(g(k, l));
  }
  return out;
}

MeasurementBasis pauli_x() {
  const double h = 1.0 / std::numbers::sqrt2;
  return MeasurementBasis("pauli-x", ComplexMatrix{{h, h}, {h, -h}});
}

MeasurementBasis pauli_y() {
  const double h = 1.0 / std::numbers::sqrt2;
  const Complex ih{0.0, h};
  return MeasurementBasis("pauli-y", ComplexMatrix{{h, h}, {ih, -ih}});
}

MeasurementBasis pauli_z() { return MeasurementBasis("pauli-z", ComplexMatrix::identity(2)); }

MeasurementBasis computational(std::size_t dim) {
  return MeasurementBasis("computational", ComplexMatrix::identity(dim));
}

MeasurementBasis basis_from_observable(std::string label, const ComplexMatrix& observable) {
  return MeasurementBasis(std::move(label), eig_hermitian(observable).eigenvectors);
}

MeasurementBasis builtin_basis(const std::string& name) {
  if (name == "pauli-x") return pauli_x();
  if (name == "pauli-y") return pauli_y();
  if (name == "pauli-z") return pauli_z();
  if (name == "computational") return computational(2);
  throw Error(ErrorKind::ValidationError, "bases: unknown built-in basis '" + name + "'");
}

MeasurementSet::MeasurementSet(std::vector<MeasurementBasis> bases) : bases_(std::move(bases)) {
  if (bases_.size() < 2) {
    throw Error(ErrorKind::WrongArity, "measurement set needs m >= 2 bases, got " + std::to_string(bases_.size()));
  }
  for (const auto& b : bases_) require_same_dim(bases_.front(), b);
}

MeasurementSet pauli_triple() { return MeasurementSet({pauli_x(), pauli_y(), pauli_z()}); }

double overlap_c(const MeasurementBasis& b1, const MeasurementBasis& b2) {
  double c = 0.0;
  for (const auto& row : b1.overlaps(b2)) c = std::max(c, *std::max_element(row.begin(), row.end()));
  return c;
}

double channel_constant_b(const MeasurementSet& ms) {
  std::vector<const MeasurementBasis*> chain;
  for (const auto& b : ms.bases()) chain.push_back(&b);
  return chain_value(chain);
}

double channel_constant_b(const MeasurementSet& ms, BOrder order) {
  if (order == BOrder::Given) return channel_constant_b(ms);
  if (ms.size() > 5) {
    throw Error(ErrorKind::OutOfRange, "b-order minimized supports m <= 5, got m=" + std::to_string(ms.size()));
  }
  std::vector<std::size_t> perm(ms.size());
  std::iota(perm.begin(), perm.end(), 0);
  double best = 2.0;
  do {
    std::vector<const MeasurementBasis*> chain;
    for (std::size_t i : perm) chain.push_back(&ms[i]);
    best = std::min(best, chain_value(chain));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

DensityMatrix post_measurement_state(const DensityMatrix& rho, const MeasurementBasis& basis, std::size_t measured) {
  require_measurable(rho, basis, measured);
  const Register& reg = rho.reg();
  // Rotate into the measurement basis, drop coherences between different
  // outcomes on the measured factor, rotate back.
  const ComplexMatrix u = lift(reg, basis.vectors(), measured);
  ComplexMatrix in_basis = u.adjoint() * rho.matrix() * u;

  std::size_t inner = 1;
  for (std::size_t i = measured + 1; i < reg.size(); ++i) inner *= reg.dim(i);
  const std::size_t d = reg.dim(measured);
  for (std::size_t r = 0; r < in_basis.rows(); ++r) {
    for (std::size_t c = 0; c < in_basis.cols(); ++c) {
      if ((r / inner) % d != (c / inner) % d) in_basis(r, c) = 0.0;
    }
  }
  return DensityMatrix::trusted(reg, u * in_basis * u.adjoint());
}

ProbabilityVector outcome_distribution(const DensityMatrix& rho, const MeasurementBasis& basis, std::size_t measured) {
  require_measurable(rho, basis, measured);
  const DensityMatrix local = partial_trace(rho, {measured});
  ProbabilityVector p(basis.dim());
  double sum = 0.0;
  for (std::size_t k = 0; k < basis.dim(); ++k) {
    const auto v = basis.vector(k);
    Complex expect{};
    for (std::size_t r = 0; r < v.size(); ++r) {
      for (std::size_t c = 0; c < v.size(); ++c) expect += std::conj(v[r]) * local.matrix()(r, c) * v[c];
    }
    p[k] = std::max(0.0, expect.real());
    sum += p[k];
  }
  for (double& x : p) x /= sum;
  return p;
}

}  // namespace qmeur
