// Small dense complex matrices and a cyclic-Jacobi Hermitian eigensolver.
//
// The matrices handled here are at most 72x72 (3L x 3L at L = 24), so the
// O(n^3)-per-sweep Jacobi method is fast and gives eigenvalues accurate to
// a few ulps of the matrix norm.

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace macroq {

using cplx = std::complex<double>;

/// Row-major dense complex matrix.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static CMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const cplx> data() const noexcept { return data_; }

  std::vector<cplx> column(std::size_t c) const;
  CMatrix adjoint() const;

  cplx trace() const;
  /// max |A - A^dagger| over all entries.
  double hermiticity_error() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

CMatrix operator*(const CMatrix& a, const CMatrix& b);
std::vector<cplx> operator*(const CMatrix& a, std::span<const cplx> v);

/// v^dagger A v.
cplx quadratic_form(const CMatrix& a, std::span<const cplx> v);

struct HermitianEigen {
  std::vector<double> values;  ///< ascending
  CMatrix vectors;             ///< column j is the unit eigenvector for values[j]
  int sweeps = 0;
};

struct JacobiOptions {
  int max_sweeps = 60;
  /// Stop once the off-diagonal Frobenius norm falls below tol * ||A||_F.
  double tolerance = 1e-15;
};

/// Full eigendecomposition of a Hermitian matrix by cyclic complex Jacobi
/// rotations. Only the upper triangle's Hermitian part is meaningful; the
/// input is symmetrized as (A + A^dagger)/2 first.
HermitianEigen hermitian_eigen(const CMatrix& a, const JacobiOptions& options = {});

}  // namespace macroq
