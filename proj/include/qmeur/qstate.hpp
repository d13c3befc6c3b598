#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "qmeur/error.hpp"
#include "qmeur/linalg.hpp"
#include "qmeur/rng.hpp"

namespace qmeur {

/// Ordered list of subsystem indices into a Register.
using Subsystems = std::vector<std::size_t>;

/// Subsystem dimensions. Position 0 is the measured party A; positions
/// 1..n are the memories B_1..B_n. Tensor factors compose left to right.
class Register {
 public:
  Register() = default;
  explicit Register(std::vector<std::size_t> dims);

  const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  std::size_t size() const noexcept { return dims_.size(); }
  std::size_t dim(std::size_t i) const { return dims_.at(i); }
  std::size_t total() const noexcept { return total_; }

  /// Dimensions of the given subsystems, in the order given.
  Register restrict_to(const Subsystems& keep) const;

  friend bool operator==(const Register&, const Register&) = default;

 private:
  std::vector<std::size_t> dims_;
  std::size_t total_ = 1;
};

inline constexpr double kStateTolerance = 1e-10;

/// Hermitian, unit-trace, positive semidefinite operator on a Register.
class DensityMatrix {
 public:
  /// Validates Hermiticity, unit trace and PSD (all within 1e-10); throws
  /// ValidationError naming the failed check.
  DensityMatrix(Register reg, ComplexMatrix matrix);

  /// Skips the validator. Only for results of trace-preserving completely
  /// positive maps applied to an already validated state.
  static DensityMatrix trusted(Register reg, ComplexMatrix matrix);

  const Register& reg() const noexcept { return reg_; }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  std::size_t dim() const noexcept { return matrix_.rows(); }

  /// Runs the validator on the current contents.
  void validate() const;

 private:
  struct Unchecked {};
  DensityMatrix(Register reg, ComplexMatrix matrix, Unchecked);

  Register reg_;
  ComplexMatrix matrix_;
};

/// Pure state |v><v| on the given register; v is normalized first.
DensityMatrix pure_state(Register reg, std::vector<Complex> amplitudes);

/// Tensor product; the register of a precedes that of b.
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

/// Reduced state on `keep` (kept subsystems stay in original relative order,
/// regardless of the order they are listed). Throws InvalidSubsystem for an
/// empty, duplicated or out-of-range selection.
DensityMatrix partial_trace(const DensityMatrix& rho, const Subsystems& keep);

/// Convex combination w*a + (1 - w)*b of states on the same register.
DensityMatrix mix(double w, const DensityMatrix& a, const DensityMatrix& b);

using ProbabilityVector = std::vector<double>;

namespace detail {
inline constexpr int kMaxProbabilityRedraws = 64;
}

/// Descending random probabilities: q_1 = f(0,1), q_{k+1} = f(0,1) q_k,
/// p_k = q_k / sum q. A draw whose sum underflows to zero is redrawn; after
/// 64 consecutive failures DegenerateDraw is raised.
template <UniformSource R>
ProbabilityVector random_probabilities(R& rng, std::size_t k) {
  if (k == 0) throw Error(ErrorKind::OutOfRange, "random_probabilities: k must be >= 1");
  ProbabilityVector q(k);
  for (int attempt = 0; attempt < detail::kMaxProbabilityRedraws; ++attempt) {
    q[0] = rng.uniform(0.0, 1.0);
    for (std::size_t i = 1; i < k; ++i) q[i] = rng.uniform(0.0, 1.0) * q[i - 1];
    double sum = 0.0;
    for (double x : q) sum += x;
    if (sum > 0.0 && std::isfinite(sum)) {
      for (double& x : q) x /= sum;
      return q;
    }
  }
  throw Error(ErrorKind::DegenerateDraw, "random_probabilities: sum of draws underflowed repeatedly");
}

/// Random Hermitian matrix from a real matrix R with entries f(-1,1):
/// diag(R) + (U + U^T) + i (L - L^T), where U and L are the strictly upper and
/// lower triangles of R. Entries are drawn row-major.
template <UniformSource R>
ComplexMatrix random_hermitian(R& rng, std::size_t dim) {
  if (dim < 2) throw Error(ErrorKind::OutOfRange, "random_hermitian: dim must be >= 2");
  std::vector<double> real(dim * dim);
  for (double& x : real) x = rng.uniform(-1.0, 1.0);
  const auto at = [&](std::size_t r, std::size_t c) { return real[r * dim + c]; };

  ComplexMatrix h(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    h(r, r) = at(r, r);
    for (std::size_t c = r + 1; c < dim; ++c) {
      // (r, c) is in the upper triangle: U(r, c) + U^T(r, c) = R(r, c),
      // and i (L - L^T)(r, c) = -i R(c, r).
      h(r, c) = Complex(at(r, c), -at(c, r));
      h(c, r) = std::conj(h(r, c));
    }
  }
  return h;
}

/// rho = sum_k p_k |psi_k><psi_k| with p from random_probabilities and psi_k
/// the eigenvectors of random_hermitian (p_1, the largest weight, goes to the
/// eigenvector of the smallest eigenvalue).
template <UniformSource R>
DensityMatrix random_state(R& rng, const Register& reg) {
  const std::size_t n = reg.total();
  ProbabilityVector p = random_probabilities(rng, n);
  const EigenDecomposition e = eig_hermitian(random_hermitian(rng, n));
  ComplexMatrix rho(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t r = 0; r < n; ++r) {
      const Complex vr = p[k] * e.eigenvectors(r, k);
      for (std::size_t c = 0; c < n; ++c) rho(r, c) += vr * std::conj(e.eigenvectors(c, k));
    }
  }
  return DensityMatrix(reg, std::move(rho));
}

/// p |sigma><sigma| + (1 - p) I/4 with |sigma> = cos(alpha)|00> + sin(alpha)|11>.
/// Throws OutOfRange unless 0 <= p <= 1.
DensityMatrix family_mixed_two_qubit(double p, double alpha);

/// sin(a)cos(b)|001> + sin(a)sin(b)|010> + cos(a)|100>.
DensityMatrix generalized_w(double alpha, double beta);

/// |Phi+> = (|00> + |11>)/sqrt 2.
DensityMatrix bell_state();

/// I/d on the register.
DensityMatrix maximally_mixed(const Register& reg);

}  // namespace qmeur
