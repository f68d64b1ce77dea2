#include "gqd/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "gqd/errors.hpp"
#include "gqd/tolerances.hpp"

namespace gqd {

namespace {

void check_dim(std::size_t dim) {
  if (dim == 0 || dim > ComplexMatrix::kMaxDim) {
    throw std::invalid_argument("ComplexMatrix: unsupported dimension " + std::to_string(dim));
  }
}

double offdiag_norm_sq(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c)
      if (r != c) s += std::norm(a(r, c));
  return s;
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim) { check_dim(dim); }

ComplexMatrix::ComplexMatrix(std::size_t dim, std::initializer_list<cplx> entries) : dim_(dim) {
  check_dim(dim);
  if (entries.size() != dim * dim) {
    throw std::invalid_argument("ComplexMatrix: entry count does not match dim^2");
  }
  std::copy(entries.begin(), entries.end(), data_.begin());
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<double> diag) {
  ComplexMatrix m(diag.size());
  std::size_t i = 0;
  for (double d : diag) {
    m(i, i) = d;
    ++i;
  }
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

cplx ComplexMatrix::trace() const noexcept {
  cplx t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::max_abs() const noexcept {
  double m = 0.0;
  for (std::size_t i = 0; i < dim_ * dim_; ++i) m = std::max(m, std::abs(data_[i]));
  return m;
}

double ComplexMatrix::hermiticity_error() const noexcept {
  double e = 0.0;
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = r; c < dim_; ++c)
      e = std::max(e, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
  return e;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  if (o.dim_ != dim_) throw std::invalid_argument("ComplexMatrix: dimension mismatch");
  for (std::size_t i = 0; i < dim_ * dim_; ++i) data_[i] += o.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  if (o.dim_ != dim_) throw std::invalid_argument("ComplexMatrix: dimension mismatch");
  for (std::size_t i = 0; i < dim_ * dim_; ++i) data_[i] -= o.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) noexcept {
  for (std::size_t i = 0; i < dim_ * dim_; ++i) data_[i] *= s;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("ComplexMatrix: dimension mismatch");
  const std::size_t n = a.dim();
  ComplexMatrix out(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) {
      const cplx ark = a(r, k);
      for (std::size_t c = 0; c < n; ++c) out(r, c) += ark * b(k, c);
    }
  return out;
}

namespace pauli {
ComplexMatrix x() { return ComplexMatrix(2, {0.0, 1.0, 1.0, 0.0}); }
ComplexMatrix y() { return ComplexMatrix(2, {0.0, cplx(0, -1), cplx(0, 1), 0.0}); }
ComplexMatrix z() { return ComplexMatrix(2, {1.0, 0.0, 0.0, -1.0}); }
ComplexMatrix by_index(int i) {
  switch (i) {
    case 0: return x();
    case 1: return y();
    case 2: return z();
    default: throw std::out_of_range("pauli::by_index expects 0, 1 or 2");
  }
}
}  // namespace pauli

DensityMatrix::DensityMatrix(const ComplexMatrix& m) : mat_(m) {
  if (m.dim() == 0) throw InvalidState("empty matrix");
  if (m.hermiticity_error() > tol::density_hermitian) {
    throw InvalidState("matrix is not Hermitian");
  }
  const cplx tr = m.trace();
  if (std::abs(tr.real() - 1.0) > tol::density_trace || std::abs(tr.imag()) > tol::density_trace) {
    throw InvalidState("trace is not 1");
  }
  const EigenSystem es = hermitian_eigen(m);
  if (es.values[m.dim() - 1] < tol::eigen_clamp) {
    throw NotPSD("eigenvalue " + std::to_string(es.values[m.dim() - 1]) + " below clamp tolerance");
  }
}

ComplexMatrix EigenSystem::reconstruct() const {
  const std::size_t n = dim();
  ComplexMatrix out(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      cplx s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += vectors(r, k) * values[k] * std::conj(vectors(c, k));
      out(r, c) = s;
    }
  return out;
}

EigenSystem hermitian_eigen(const ComplexMatrix& m) {
  const std::size_t n = m.dim();
  const double scale = std::max(1.0, m.max_abs());
  if (m.hermiticity_error() > tol::hermitian_check * scale) {
    throw NonHermitian("asymmetry " + std::to_string(m.hermiticity_error()));
  }

  ComplexMatrix a = m;
  ComplexMatrix v = ComplexMatrix::identity(n);
  // Symmetrize exactly so the rotations act on a Hermitian matrix.
  for (std::size_t r = 0; r < n; ++r) {
    a(r, r) = a(r, r).real();
    for (std::size_t c = r + 1; c < n; ++c) {
      const cplx avg = 0.5 * (a(r, c) + std::conj(a(c, r)));
      a(r, c) = avg;
      a(c, r) = std::conj(avg);
    }
  }

  const double target = tol::jacobi_offdiag * tol::jacobi_offdiag * scale * scale;
  for (int sweep = 0; sweep < tol::jacobi_max_sweeps && offdiag_norm_sq(a) > target; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double r = std::abs(a(p, q));
        if (r == 0.0) continue;
        // a_pq = r e^{i phi}; the unitary is diag phase on column q followed by a real rotation.
        const cplx phase = a(p, q) / r;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * r);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // Columns: new_p = c*e_p - s*conj(phase)*e_q, new_q = s*e_p + c*conj(phase)*e_q.
        const cplx wq = std::conj(phase);
        // A <- A U (columns p, q).
        for (std::size_t k = 0; k < n; ++k) {
          const cplx akp = a(k, p);
          const cplx akq = a(k, q) * wq;
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        // A <- U^dagger A (rows p, q).
        for (std::size_t k = 0; k < n; ++k) {
          const cplx apk = a(p, k);
          const cplx aqk = a(q, k) * phase;
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (std::size_t k = 0; k < n; ++k) {
          const cplx vkp = v(k, p);
          const cplx vkq = v(k, q) * wq;
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::array<std::size_t, ComplexMatrix::kMaxDim> order{};
  std::iota(order.begin(), order.begin() + n, std::size_t{0});
  std::stable_sort(order.begin(), order.begin() + n,
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });

  EigenSystem es;
  es.vectors = ComplexMatrix(n);
  for (std::size_t k = 0; k < n; ++k) {
    es.values[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) es.vectors(r, k) = v(r, order[k]);
  }
  return es;
}

ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& m) {
  EigenSystem es = hermitian_eigen(m);
  const std::size_t n = m.dim();
  for (std::size_t k = 0; k < n; ++k) {
    if (es.values[k] < tol::eigen_clamp) {
      throw NotPSD("eigenvalue " + std::to_string(es.values[k]));
    }
    es.values[k] = std::sqrt(std::max(0.0, es.values[k]));
  }
  return es.reconstruct();
}

ComplexMatrix matrix_sqrt_psd(const DensityMatrix& m) { return matrix_sqrt_psd(m.mat()); }

double trace_norm(const ComplexMatrix& m) {
  const double scale = std::max(1.0, m.max_abs());
  if (m.hermiticity_error() <= tol::hermitian_check * scale) {
    const EigenSystem es = hermitian_eigen(m);
    double s = 0.0;
    for (std::size_t k = 0; k < m.dim(); ++k) s += std::abs(es.values[k]);
    return s;
  }
  const EigenSystem es = hermitian_eigen(m.adjoint() * m);
  double s = 0.0;
  for (std::size_t k = 0; k < m.dim(); ++k) s += std::sqrt(std::max(0.0, es.values[k]));
  return s;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  ComplexMatrix out(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l) out(i * nb + k, j * nb + l) = a(i, j) * b(k, l);
  return out;
}

}  // namespace gqd
