#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace cove {

using Complex = std::complex<double>;

/// Tolerance used when validating that an operation is unitary.
inline constexpr double kUnitaryTolerance = 1e-10;
/// Tolerance used when comparing states.
inline constexpr double kStateTolerance = 1e-9;
/// Largest qubit count for which a 2^n x 2^n matrix may be materialized.
inline constexpr std::size_t kMatrixQubitLimit = 12;

/// Dense row-major complex matrix. States are single columns, operators are
/// square 2^k x 2^k matrices.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix column(std::span<const Complex> entries);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return entries_.empty(); }

  Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Complex> entries() const noexcept { return entries_; }
  std::span<Complex> entries() noexcept { return entries_; }

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

/// Throws DimensionMismatch when a.cols() != b.rows().
ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b);

/// Kronecker product; `a` supplies the most significant block index.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix conjugate_transpose(const ComplexMatrix& a);

/// max |a_ij - b_ij|; infinity when dimensions differ.
double max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b);

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol);

/// U^dagger U and U U^dagger both within `tol` of I (max-abs entry).
/// Throws NotSquare for rectangular input.
bool is_unitary(const ComplexMatrix& a, double tol = kUnitaryTolerance);

/// 2^n x 2^n identity. Throws QubitLimitExceeded when n > max_qubits.
ComplexMatrix identity(std::size_t n, std::size_t max_qubits = kMatrixQubitLimit);

/// Sum of squared magnitudes of all entries.
double squared_norm(const ComplexMatrix& a);

}  // namespace cove
