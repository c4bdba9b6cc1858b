// Dense square complex matrices for operators on up to four spins.
//
// Deliberately small: row-major contiguous storage, value semantics, no
// expression templates. Largest matrix in the library is 16x16, so clarity
// wins over asymptotics everywhere.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "spinxor/errors.hpp"

namespace spinxor {

using Complex = std::complex<double>;

class ComplexMatrix {
 public:
  explicit ComplexMatrix(std::size_t dim) : dim_(dim), a_(dim * dim) {
    if (dim == 0) throw DimensionMismatch("ComplexMatrix: dim must be >= 1");
  }

  static ComplexMatrix identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t dim() const { return dim_; }

  Complex& operator()(std::size_t i, std::size_t j) { return a_[i * dim_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }

  ComplexMatrix& operator+=(const ComplexMatrix& o) {
    require_same_dim(o, "operator+=");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
  }

  ComplexMatrix& operator-=(const ComplexMatrix& o) {
    require_same_dim(o, "operator-=");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
  }

  ComplexMatrix& operator*=(Complex s) {
    for (auto& v : a_) v *= s;
    return *this;
  }

  ComplexMatrix adjoint() const {
    ComplexMatrix r(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
  }

  Complex trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (const auto& v : a_) s += std::norm(v);
    return std::sqrt(s);
  }

  // Largest entrywise modulus.
  double max_abs() const {
    double m = 0.0;
    for (const auto& v : a_) m = std::max(m, std::abs(v));
    return m;
  }

 private:
  void require_same_dim(const ComplexMatrix& o, const char* op) const {
    if (dim_ != o.dim_)
      throw DimensionMismatch(std::string(op) + ": dimensions " + std::to_string(dim_) +
                              " vs " + std::to_string(o.dim_));
  }

  std::size_t dim_;
  std::vector<Complex> a_;
};

inline ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
inline ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
inline ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
inline ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
inline ComplexMatrix operator*(ComplexMatrix a, double s) { return a *= Complex(s); }
inline ComplexMatrix operator*(double s, ComplexMatrix a) { return a *= Complex(s); }

inline ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim())
    throw DimensionMismatch("operator*: dimensions " + std::to_string(a.dim()) + " vs " +
                            std::to_string(b.dim()));
  const std::size_t n = a.dim();
  ComplexMatrix r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

// Kronecker product; block (i,j) of the result is a(i,j) * b.
inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t na = a.dim(), nb = b.dim();
  ComplexMatrix r(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) {
      const Complex aij = a(i, j);
      if (aij == 0.0) continue;
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l) r(i * nb + k, j * nb + l) = aij * b(k, l);
    }
  return r;
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim())
    throw DimensionMismatch("max_abs_diff: dimensions " + std::to_string(a.dim()) + " vs " +
                            std::to_string(b.dim()));
  double m = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

// max entrywise |M - M^dagger|
inline double hermiticity_error(const ComplexMatrix& m) {
  double e = 0.0;
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      e = std::max(e, std::abs(m(i, j) - std::conj(m(j, i))));
  return e;
}

// max entrywise |U U^dagger - 1|
inline double unitarity_error(const ComplexMatrix& u) {
  return max_abs_diff(u * u.adjoint(), ComplexMatrix::identity(u.dim()));
}

// max entrywise |U U^dagger - U^dagger U|
inline double normality_error(const ComplexMatrix& u) {
  return max_abs_diff(u * u.adjoint(), u.adjoint() * u);
}

inline ComplexMatrix hermitian_part(const ComplexMatrix& m) {
  ComplexMatrix r(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j)
      r(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
  return r;
}

inline void require_hermitian(const ComplexMatrix& m, double tol, const char* where) {
  const double e = hermiticity_error(m);
  if (e > tol)
    throw NotHermitian(std::string(where) + ": hermiticity error " + std::to_string(e));
}

inline void require_unitary(const ComplexMatrix& u, double tol, const char* where) {
  const double e = unitarity_error(u);
  if (e > tol)
    throw NotUnitary(std::string(where) + ": unitarity error " + std::to_string(e));
}

}  // namespace spinxor
