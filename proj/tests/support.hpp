#pragma once

#include <cmath>
#include <random>

#include "gqd/matrix.hpp"

namespace gqd::testing {

inline cplx gaussian(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  const double re = n(rng);
  return {re, n(rng)};
}

// Haar-ish unitary from Gram-Schmidt on a complex Gaussian matrix.
inline ComplexMatrix random_unitary(std::size_t dim, std::mt19937_64& rng) {
  ComplexMatrix u(dim);
  for (std::size_t c = 0; c < dim; ++c) {
    for (std::size_t r = 0; r < dim; ++r) u(r, c) = gaussian(rng);
    for (std::size_t k = 0; k < c; ++k) {
      cplx dot = 0.0;
      for (std::size_t r = 0; r < dim; ++r) dot += std::conj(u(r, k)) * u(r, c);
      for (std::size_t r = 0; r < dim; ++r) u(r, c) -= dot * u(r, k);
    }
    double norm = 0.0;
    for (std::size_t r = 0; r < dim; ++r) norm += std::norm(u(r, c));
    norm = std::sqrt(norm);
    for (std::size_t r = 0; r < dim; ++r) u(r, c) /= norm;
  }
  return u;
}

// G G^dagger / Tr, full rank with probability one.
inline ComplexMatrix random_psd(std::size_t dim, std::mt19937_64& rng, bool unit_trace = true) {
  ComplexMatrix g(dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) g(r, c) = gaussian(rng);
  ComplexMatrix m = g * g.adjoint();
  if (unit_trace) m *= 1.0 / m.trace().real();
  for (std::size_t r = 0; r < dim; ++r) m(r, r) = m(r, r).real();
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = r + 1; c < dim; ++c) m(c, r) = std::conj(m(r, c));
  return m;
}

inline DensityMatrix random_state(std::mt19937_64& rng) { return DensityMatrix(random_psd(4, rng)); }

inline ComplexMatrix conjugate(const ComplexMatrix& u, const ComplexMatrix& m) {
  ComplexMatrix r = u * m * u.adjoint();
  for (std::size_t i = 0; i < r.dim(); ++i) r(i, i) = r(i, i).real();
  for (std::size_t i = 0; i < r.dim(); ++i)
    for (std::size_t j = i + 1; j < r.dim(); ++j) r(j, i) = std::conj(r(i, j));
  return r;
}

inline double max_diff(const ComplexMatrix& a, const ComplexMatrix& b) { return (a - b).max_abs(); }

}  // namespace gqd::testing
