// Eigendecomposition of Hermitian and normal matrices.
//
// Hermitian matrices are diagonalized by cyclic complex Jacobi rotations;
// everything here is at most 16x16, so the quadratically convergent Jacobi
// iteration is both simple and accurate. Normal matrices (in practice the
// unitaries of this library) are handled by splitting U into the commuting
// Hermitian pair H1 = (U+U^+)/2, H2 = (U-U^+)/(2i), diagonalizing H1, and
// then diagonalizing H2 restricted to each degenerate eigenspace of H1.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <vector>

#include "spinxor/complex_matrix.hpp"
#include "spinxor/errors.hpp"

namespace spinxor {

struct Spectrum {
  std::vector<Complex> eigenvalues;  // paired by index with eigenvector columns
  ComplexMatrix eigenvectors;        // orthonormal columns

  explicit Spectrum(std::size_t dim) : eigenvalues(dim), eigenvectors(dim) {}
};

namespace detail {

inline double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// One Jacobi rotation zeroing a(p,q). a is Hermitian; v accumulates the
// product of rotations so that v^+ m v stays diagonalized. Entries at or
// below skip_threshold are left alone: they are already inside the
// convergence budget, and dividing by a denormal |a(p,q)| would produce a
// rotation that is no longer unitary.
inline void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q,
                          double skip_threshold) {
  const Complex apq = a(p, q);
  const double b = std::abs(apq);
  if (b <= skip_threshold) return;
  const Complex phase = apq / b;
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double tau = (aqq - app) / (2.0 * b);
  double t;
  if (std::abs(tau) > 1e150) {
    t = 1.0 / (2.0 * tau);  // avoid overflow in tau*tau
  } else {
    t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                     : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
  }
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  const Complex sp = s * phase;

  const std::size_t n = a.dim();
  // A <- J^+ A J with J(p,p)=J(q,q)=c, J(p,q)=s*phase, J(q,p)=-s*conj(phase).
  for (std::size_t k = 0; k < n; ++k) {  // columns: A <- A J
    const Complex akp = a(k, p), akq = a(k, q);
    a(k, p) = c * akp - std::conj(sp) * akq;
    a(k, q) = sp * akp + c * akq;
  }
  for (std::size_t k = 0; k < n; ++k) {  // rows: A <- J^+ A
    const Complex apk = a(p, k), aqk = a(q, k);
    a(p, k) = c * apk - sp * aqk;
    a(q, k) = std::conj(sp) * apk + c * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = Complex(app - t * b, 0.0);
  a(q, q) = Complex(aqq + t * b, 0.0);
  for (std::size_t k = 0; k < n; ++k) {  // V <- V J
    const Complex vkp = v(k, p), vkq = v(k, q);
    v(k, p) = c * vkp - std::conj(sp) * vkq;
    v(k, q) = sp * vkp + c * vkq;
  }
}

inline void sort_spectrum_ascending_real(Spectrum& s) {
  const std::size_t n = s.eigenvalues.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return s.eigenvalues[i].real() < s.eigenvalues[j].real();
  });
  Spectrum r(n);
  for (std::size_t k = 0; k < n; ++k) {
    r.eigenvalues[k] = s.eigenvalues[order[k]];
    for (std::size_t i = 0; i < n; ++i) r.eigenvectors(i, k) = s.eigenvectors(i, order[k]);
  }
  s = std::move(r);
}

}  // namespace detail

// Hermitian eigendecomposition. Eigenvalues come back real (stored in the
// complex slots with zero imaginary part) in ascending order.
inline Spectrum hermitian_eig(const ComplexMatrix& m) {
  require_hermitian(m, 1e-12, "hermitian_eig");
  const std::size_t n = m.dim();
  ComplexMatrix a = hermitian_part(m);  // exact Hermitian iterate
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double target = 1e-13 * a.frobenius_norm();
  // entries this small cannot push the off-diagonal norm past the target
  const double skip_threshold = target / static_cast<double>(n);

  constexpr int kMaxSweeps = 60;
  int sweep = 0;
  for (; sweep < kMaxSweeps; ++sweep) {
    if (detail::off_diagonal_norm(a) <= target) break;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) detail::jacobi_rotate(a, v, p, q, skip_threshold);
  }
  if (sweep == kMaxSweeps && detail::off_diagonal_norm(a) > target)
    throw ConvergenceFailure("hermitian_eig: Jacobi sweeps did not converge");

  Spectrum s(n);
  for (std::size_t i = 0; i < n; ++i) s.eigenvalues[i] = Complex(a(i, i).real(), 0.0);
  s.eigenvectors = v;
  detail::sort_spectrum_ascending_real(s);
  return s;
}

// Eigendecomposition of a normal matrix via the commuting Hermitian pair.
// Eigenvalue gaps of H1 below degeneracy_tol are treated as degenerate.
// Ordering: ascending real part of H1, then ascending H2 within a cluster.
inline Spectrum normal_eig(const ComplexMatrix& u, double degeneracy_tol = 1e-8) {
  const double ne = normality_error(u);
  if (ne > 1e-10)
    throw NotNormal("normal_eig: normality error " + std::to_string(ne));
  const std::size_t n = u.dim();
  const ComplexMatrix ud = u.adjoint();
  const ComplexMatrix h1 = (u + ud) * Complex(0.5, 0.0);
  const ComplexMatrix h2 = (u - ud) * Complex(0.0, -0.5);

  Spectrum s = hermitian_eig(h1);

  // refine each near-degenerate H1 cluster with H2
  std::size_t begin = 0;
  while (begin < n) {
    std::size_t end = begin + 1;
    while (end < n &&
           s.eigenvalues[end].real() - s.eigenvalues[end - 1].real() <= degeneracy_tol)
      ++end;
    const std::size_t k = end - begin;
    if (k > 1) {
      ComplexMatrix block(k);  // V_c^+ H2 V_c
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c) {
          Complex acc = 0.0;
          for (std::size_t i = 0; i < n; ++i) {
            Complex h2v = 0.0;
            for (std::size_t j = 0; j < n; ++j) h2v += h2(i, j) * s.eigenvectors(j, begin + c);
            acc += std::conj(s.eigenvectors(i, begin + r)) * h2v;
          }
          block(r, c) = acc;
        }
      Spectrum sb = hermitian_eig(hermitian_part(block));
      ComplexMatrix rotated(n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t c = 0; c < k; ++c) {
          Complex acc = 0.0;
          for (std::size_t r = 0; r < k; ++r)
            acc += s.eigenvectors(i, begin + r) * sb.eigenvectors(r, c);
          rotated(i, c) = acc;
        }
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t c = 0; c < k; ++c) s.eigenvectors(i, begin + c) = rotated(i, c);
    }
    begin = end;
  }

  // eigenvalues as Rayleigh quotients of the original matrix
  for (std::size_t j = 0; j < n; ++j) {
    Complex lam = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      Complex uv = 0.0;
      for (std::size_t l = 0; l < n; ++l) uv += u(i, l) * s.eigenvectors(l, j);
      lam += std::conj(s.eigenvectors(i, j)) * uv;
    }
    s.eigenvalues[j] = lam;
  }
  return s;
}

}  // namespace spinxor
