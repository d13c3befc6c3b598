#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <vector>

namespace qmeur {

using Complex = std::complex<double>;

/// Dense complex matrix stored row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  /// Row-wise literal, e.g. {{0, 1}, {1, 0}}. All rows must have equal length.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static ComplexMatrix diagonal(const std::vector<double>& values);
  /// |v><v|
  static ComplexMatrix outer(const std::vector<Complex>& v);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  const std::vector<Complex>& entries() const noexcept { return data_; }

  std::vector<Complex> column(std::size_t c) const;
  ComplexMatrix adjoint() const;

  /// max_ij |a_ij|
  double max_abs() const noexcept;
  /// Frobenius norm.
  double norm() const noexcept;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(ComplexMatrix a, Complex scale);
ComplexMatrix operator*(Complex scale, ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

/// max_ij |a_ij - b_ij|; throws DimensionMismatch on shape mismatch.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Kronecker product; the first factor is the left (slower-varying) subsystem.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Sum of the diagonal. Throws NotSquare.
Complex trace(const ComplexMatrix& a);

inline constexpr double kHermitianTolerance = 1e-10;

/// True when square and ||H - H^dagger||_max <= tol.
bool is_hermitian(const ComplexMatrix& h, double tol = kHermitianTolerance);

struct EigenDecomposition {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // column k pairs with eigenvalues[k]

  /// V diag(lambda) V^dagger
  ComplexMatrix reconstruct() const;
};

/// Hermitian eigendecomposition by cyclic complex Jacobi rotations.
///
/// Sweeps visit pairs (p, q), p < q, in row-major order until the
/// off-diagonal Frobenius norm drops below 1e-12 * max(1, ||H||_F); more than
/// 100 sweeps raises NoConvergence. Eigenvalues are sorted ascending with a
/// stable tie order, and each eigenvector is rephased so that its first
/// largest-magnitude component is real and positive. The result is a
/// deterministic function of the input.
///
/// Throws NotSquare or NotHermitian when validation fails.
EigenDecomposition eig_hermitian(const ComplexMatrix& h);

/// f(H) = V f(Lambda) V^dagger for Hermitian H.
ComplexMatrix apply_spectral(const ComplexMatrix& h, const std::function<double(double)>& f);

/// Inner product <a|b> (conjugate-linear in the first argument).
Complex inner(const std::vector<Complex>& a, const std::vector<Complex>& b);

}  // namespace qmeur
