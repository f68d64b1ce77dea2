#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>

namespace gqd {

using cplx = std::complex<double>;

// Dense complex matrix of dimension 2 or 4, row-major, stored inline.
class ComplexMatrix {
 public:
  static constexpr std::size_t kMaxDim = 4;

  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim);
  // Row-major entries; the list length must equal dim * dim.
  ComplexMatrix(std::size_t dim, std::initializer_list<cplx> entries);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::initializer_list<double> diag);

  std::size_t dim() const noexcept { return dim_; }

  cplx& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * dim_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * dim_ + c]; }

  ComplexMatrix adjoint() const;
  cplx trace() const noexcept;

  // Largest entrywise modulus.
  double max_abs() const noexcept;
  // Largest entrywise |m - m^dagger|.
  double hermiticity_error() const noexcept;

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(cplx s) noexcept;

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }
  friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

 private:
  std::size_t dim_ = 0;
  std::array<cplx, kMaxDim * kMaxDim> data_{};
};

namespace pauli {
ComplexMatrix x();
ComplexMatrix y();
ComplexMatrix z();
// sigma_1, sigma_2, sigma_3 for index 0, 1, 2.
ComplexMatrix by_index(int i);
}  // namespace pauli

// A validated state: Hermitian, unit trace, PSD up to the clamp tolerance.
class DensityMatrix {
 public:
  // Throws InvalidState (or NotPSD) when the invariants fail.
  explicit DensityMatrix(const ComplexMatrix& m);

  const ComplexMatrix& mat() const noexcept { return mat_; }
  std::size_t dim() const noexcept { return mat_.dim(); }
  const cplx& operator()(std::size_t r, std::size_t c) const noexcept { return mat_(r, c); }

 private:
  ComplexMatrix mat_;
};

struct EigenSystem {
  std::array<double, ComplexMatrix::kMaxDim> values{};  // non-increasing, first dim entries used
  ComplexMatrix vectors;                                // eigenvectors as columns

  std::size_t dim() const noexcept { return vectors.dim(); }
  ComplexMatrix reconstruct() const;
};

// Cyclic complex Jacobi. Throws NonHermitian when the input is not Hermitian.
EigenSystem hermitian_eigen(const ComplexMatrix& m);

ComplexMatrix matrix_sqrt_psd(const DensityMatrix& m);
// Same as above for any PSD Hermitian matrix (no trace requirement).
ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& m);

// Sum of singular values.
double trace_norm(const ComplexMatrix& m);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace gqd
