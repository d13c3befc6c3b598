#include "qmeur/qstate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace qmeur {

Register::Register(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw Error(ErrorKind::ValidationError, "dims: register needs at least one subsystem");
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (dims_[i] < 2) {
      throw Error(ErrorKind::ValidationError,
                  "dims[" + std::to_string(i) + "]: subsystem dimension must be >= 2, got " + std::to_string(dims_[i]));
    }
    total_ *= dims_[i];
  }
}

Register Register::restrict_to(const Subsystems& keep) const {
  std::vector<std::size_t> d;
  d.reserve(keep.size());
  for (std::size_t i : keep) d.push_back(dims_.at(i));
  return Register(std::move(d));
}

DensityMatrix::DensityMatrix(Register reg, ComplexMatrix matrix, Unchecked)
    : reg_(std::move(reg)), matrix_(std::move(matrix)) {}

DensityMatrix::DensityMatrix(Register reg, ComplexMatrix matrix) : DensityMatrix(std::move(reg), std::move(matrix), Unchecked{}) {
  validate();
}

DensityMatrix DensityMatrix::trusted(Register reg, ComplexMatrix matrix) {
  return DensityMatrix(std::move(reg), std::move(matrix), Unchecked{});
}

void DensityMatrix::validate() const {
  if (!matrix_.is_square() || matrix_.rows() != reg_.total()) {
    throw Error(ErrorKind::ValidationError, "matrix: expected " + std::to_string(reg_.total()) + "x" +
                                                std::to_string(reg_.total()) + " for the register, got " +
                                                std::to_string(matrix_.rows()) + "x" + std::to_string(matrix_.cols()));
  }
  if (!is_hermitian(matrix_, kStateTolerance)) {
    throw Error(ErrorKind::ValidationError, "matrix: not Hermitian within 1e-10");
  }
  const Complex tr = trace(matrix_);
  if (std::abs(tr - Complex(1.0, 0.0)) > kStateTolerance) {
    std::ostringstream os;
    os << "matrix: trace " << tr.real() << " differs from 1 by more than 1e-10";
    throw Error(ErrorKind::ValidationError, os.str());
  }
  const EigenDecomposition e = eig_hermitian(matrix_);
  if (e.eigenvalues.front() < -kStateTolerance) {
    std::ostringstream os;
    os << "matrix: minimum eigenvalue " << e.eigenvalues.front() << " below -1e-10 (not PSD)";
    throw Error(ErrorKind::ValidationError, os.str());
  }
}

DensityMatrix pure_state(Register reg, std::vector<Complex> amplitudes) {
  if (amplitudes.size() != reg.total()) {
    throw Error(ErrorKind::DimensionMismatch, "pure_state: " + std::to_string(amplitudes.size()) +
                                                  " amplitudes for register of dimension " + std::to_string(reg.total()));
  }
  double norm = 0.0;
  for (const auto& a : amplitudes) norm += std::norm(a);
  if (norm == 0.0) throw Error(ErrorKind::ValidationError, "pure_state: zero vector");
  const double scale = 1.0 / std::sqrt(norm);
  for (auto& a : amplitudes) a *= scale;
  return DensityMatrix(std::move(reg), ComplexMatrix::outer(amplitudes));
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  std::vector<std::size_t> dims = a.reg().dims();
  dims.insert(dims.end(), b.reg().dims().begin(), b.reg().dims().end());
  return DensityMatrix::trusted(Register(std::move(dims)), kron(a.matrix(), b.matrix()));
}

namespace {

// Row-major index offsets of every multi-index over `subsystems`, using the
// strides of the full register.
std::vector<std::size_t> offsets(const Register& reg, const Subsystems& subsystems) {
  std::vector<std::size_t> stride(reg.size());
  std::size_t s = 1;
  for (std::size_t i = reg.size(); i-- > 0;) {
    stride[i] = s;
    s *= reg.dim(i);
  }
  std::vector<std::size_t> out{0};
  for (std::size_t sub : subsystems) {
    std::vector<std::size_t> next;
    next.reserve(out.size() * reg.dim(sub));
    for (std::size_t base : out) {
      for (std::size_t digit = 0; digit < reg.dim(sub); ++digit) next.push_back(base + digit * stride[sub]);
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

DensityMatrix partial_trace(const DensityMatrix& rho, const Subsystems& keep) {
  const Register& reg = rho.reg();
  if (keep.empty()) throw Error(ErrorKind::InvalidSubsystem, "partial_trace: keep set is empty");
  Subsystems kept = keep;
  std::sort(kept.begin(), kept.end());
  for (std::size_t i = 0; i < kept.size(); ++i) {
    if (kept[i] >= reg.size()) {
      throw Error(ErrorKind::InvalidSubsystem, "partial_trace: subsystem " + std::to_string(kept[i]) +
                                                   " outside a " + std::to_string(reg.size()) + "-party register");
    }
    if (i > 0 && kept[i] == kept[i - 1]) {
      throw Error(ErrorKind::InvalidSubsystem, "partial_trace: subsystem " + std::to_string(kept[i]) + " repeated");
    }
  }
  if (kept.size() == reg.size()) return rho;

  Subsystems traced;
  for (std::size_t i = 0; i < reg.size(); ++i) {
    if (!std::binary_search(kept.begin(), kept.end(), i)) traced.push_back(i);
  }
  const auto kept_off = offsets(reg, kept);
  const auto traced_off = offsets(reg, traced);
  const ComplexMatrix& m = rho.matrix();

  ComplexMatrix out(kept_off.size(), kept_off.size());
  for (std::size_t r = 0; r < kept_off.size(); ++r) {
    for (std::size_t c = 0; c < kept_off.size(); ++c) {
      Complex sum{};
      for (std::size_t t : traced_off) sum += m(kept_off[r] + t, kept_off[c] + t);
      out(r, c) = sum;
    }
  }
  return DensityMatrix::trusted(reg.restrict_to(kept), std::move(out));
}

DensityMatrix mix(double w, const DensityMatrix& a, const DensityMatrix& b) {
  if (!(a.reg() == b.reg())) throw Error(ErrorKind::DimensionMismatch, "mix: registers differ");
  if (!(w >= 0.0 && w <= 1.0)) throw Error(ErrorKind::OutOfRange, "mix: weight must lie in [0, 1]");
  return DensityMatrix::trusted(a.reg(), a.matrix() * w + b.matrix() * (1.0 - w));
}

DensityMatrix family_mixed_two_qubit(double p, double alpha) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorKind::OutOfRange, "p: must lie in [0, 1], got " + std::to_string(p));
  }
  const std::vector<Complex> sigma{std::cos(alpha), 0.0, 0.0, std::sin(alpha)};
  ComplexMatrix m = ComplexMatrix::outer(sigma) * p + ComplexMatrix::identity(4) * ((1.0 - p) / 4.0);
  return DensityMatrix(Register({2, 2}), std::move(m));
}

DensityMatrix generalized_w(double alpha, double beta) {
  std::vector<Complex> v(8);
  v[0b001] = std::sin(alpha) * std::cos(beta);
  v[0b010] = std::sin(alpha) * std::sin(beta);
  v[0b100] = std::cos(alpha);
  return DensityMatrix(Register({2, 2, 2}), ComplexMatrix::outer(v));
}

DensityMatrix bell_state() {
  const double h = 1.0 / std::numbers::sqrt2;
  return pure_state(Register({2, 2}), {h, 0.0, 0.0, h});
}

DensityMatrix maximally_mixed(const Register& reg) {
  return DensityMatrix(reg, ComplexMatrix::identity(reg.total()) * (1.0 / static_cast<double>(reg.total())));
}

}  // namespace qmeur
