#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "spinxor/complex_matrix.hpp"
#include "spinxor/eig.hpp"
#include "spinxor/rng.hpp"
#include "spinxor/xor_family.hpp"

using namespace spinxor;

namespace {

ComplexMatrix random_hermitian(SeededUniform& rng, std::size_t n) {
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = Complex(rng.uniform(-1.0, 1.0), 0.0);
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex z(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
      m(i, j) = z;
      m(j, i) = std::conj(z);
    }
  }
  return m;
}

ComplexMatrix reconstruction(const Spectrum& s) {
  const std::size_t n = s.eigenvalues.size();
  ComplexMatrix r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Complex acc = 0.0;
      for (std::size_t k = 0; k < n; ++k)
        acc += s.eigenvectors(i, k) * s.eigenvalues[k] * std::conj(s.eigenvectors(j, k));
      r(i, j) = acc;
    }
  return r;
}

double orthonormality_error(const Spectrum& s) {
  return max_abs_diff(s.eigenvectors.adjoint() * s.eigenvectors,
                      ComplexMatrix::identity(s.eigenvalues.size()));
}

// unordered set comparison by greedy nearest matching
double eigenvalue_set_distance(std::vector<Complex> got, std::vector<Complex> expected) {
  REQUIRE(got.size() == expected.size());
  double worst = 0.0;
  for (const Complex& g : got) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < expected.size(); ++k)
      if (std::abs(g - expected[k]) < std::abs(g - expected[best])) best = k;
    worst = std::max(worst, std::abs(g - expected[best]));
    expected.erase(expected.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return worst;
}

}  // namespace

TEST_CASE("hermitian_eig of a diagonal matrix sorts ascending") {
  ComplexMatrix m(3);
  m(0, 0) = 3.0;
  m(1, 1) = 1.0;
  m(2, 2) = 2.0;
  const Spectrum s = hermitian_eig(m);
  CHECK(s.eigenvalues[0].real() == Catch::Approx(1.0).margin(1e-14));
  CHECK(s.eigenvalues[1].real() == Catch::Approx(2.0).margin(1e-14));
  CHECK(s.eigenvalues[2].real() == Catch::Approx(3.0).margin(1e-14));
  for (const Complex& l : s.eigenvalues) CHECK(l.imag() == 0.0);
}

TEST_CASE("hermitian_eig of sigma_x gives the textbook spectrum") {
  ComplexMatrix sx(2);
  sx(0, 1) = 1.0;
  sx(1, 0) = 1.0;
  const Spectrum s = hermitian_eig(sx);
  REQUIRE(s.eigenvalues[0].real() == Catch::Approx(-1.0).margin(1e-14));
  REQUIRE(s.eigenvalues[1].real() == Catch::Approx(1.0).margin(1e-14));
  // eigenvectors (1, -1)/sqrt(2) and (1, 1)/sqrt(2) up to phase
  const Complex r0 = s.eigenvectors(1, 0) / s.eigenvectors(0, 0);
  const Complex r1 = s.eigenvectors(1, 1) / s.eigenvectors(0, 1);
  CHECK(std::abs(r0 + 1.0) < 1e-12);
  CHECK(std::abs(r1 - 1.0) < 1e-12);
  for (std::size_t k = 0; k < 2; ++k)
    CHECK(std::abs(s.eigenvectors(0, k)) == Catch::Approx(1.0 / std::sqrt(2.0)).margin(1e-12));
}

TEST_CASE("hermitian_eig reconstructs random matrices") {
  SeededUniform rng(101);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = trial % 2 ? 8 : 16;
    const ComplexMatrix m = random_hermitian(rng, n);
    const Spectrum s = hermitian_eig(m);
    CHECK(max_abs_diff(reconstruction(s), m) < 1e-10);
    CHECK(orthonormality_error(s) < 1e-10);
    for (std::size_t k = 1; k < n; ++k)
      CHECK(s.eigenvalues[k - 1].real() <= s.eigenvalues[k].real());
  }
}

TEST_CASE("hermitian_eig handles degenerate spectra and the zero matrix") {
  // doubly degenerate pairs, the shape that stalls naive Jacobi sweeps
  SeededUniform rng(102);
  const ComplexMatrix basis = hermitian_eig(random_hermitian(rng, 8)).eigenvectors;
  ComplexMatrix m(8);
  const double eigs[8] = {-2.0, -2.0, -0.5, -0.5, 1.0, 1.0, 3.0, 3.0};
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) {
      Complex acc = 0.0;
      for (std::size_t k = 0; k < 8; ++k)
        acc += basis(i, k) * eigs[k] * std::conj(basis(j, k));
      m(i, j) = acc;
    }
  const Spectrum s = hermitian_eig(hermitian_part(m));
  CHECK(max_abs_diff(reconstruction(s), hermitian_part(m)) < 1e-10);
  CHECK(orthonormality_error(s) < 1e-12);

  const Spectrum z = hermitian_eig(ComplexMatrix(4));
  for (const Complex& l : z.eigenvalues) CHECK(l == Complex(0.0));
}

TEST_CASE("hermitian_eig rejects non-Hermitian input") {
  ComplexMatrix m(2);
  m(0, 1) = 1.0;
  CHECK_THROWS_AS(hermitian_eig(m), NotHermitian);
}

TEST_CASE("normal_eig of a diagonal unitary") {
  ComplexMatrix m(2);
  m(0, 0) = Complex(0.0, 1.0);
  m(1, 1) = Complex(0.0, -1.0);
  const Spectrum s = normal_eig(m);
  CHECK(eigenvalue_set_distance(s.eigenvalues, {Complex(0, 1), Complex(0, -1)}) < 1e-12);
}

TEST_CASE("normal_eig finds the four phases of the V block") {
  SeededUniform rng(103);
  constexpr double pi = std::numbers::pi;
  for (int trial = 0; trial < 10; ++trial) {
    const AngleParameters ang = constrained_angles(rng.uniform(0, 2 * pi),
                                                   rng.uniform(0, 2 * pi),
                                                   rng.uniform(0, 2 * pi));
    const Spectrum s = normal_eig(build_V(ang));
    const Complex base = std::exp(Complex(0.0, ang.mu));
    std::vector<Complex> expected{base, base * Complex(0, 1), -base, base * Complex(0, -1)};
    CHECK(eigenvalue_set_distance(s.eigenvalues, expected) < 1e-10);
    CHECK(orthonormality_error(s) < 1e-10);
  }
}

TEST_CASE("normal_eig on unitaries from random Hermitian generators") {
  SeededUniform rng(104);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix h = random_hermitian(rng, 8);
    const ComplexMatrix u = evolution_operator(h);
    const Spectrum s = normal_eig(u);
    for (const Complex& l : s.eigenvalues) CHECK(std::abs(std::abs(l) - 1.0) < 1e-10);
    CHECK(orthonormality_error(s) < 1e-10);
    CHECK(max_abs_diff(reconstruction(s), u) < 1e-10);
  }
}

TEST_CASE("normal_eig on the evolution of the fixed XOR Hamiltonian") {
  const ComplexMatrix u =
      evolution_operator(hermitian_part(reconstruct(reference_hamiltonian())));
  const Spectrum s = normal_eig(u);
  for (const Complex& l : s.eigenvalues) CHECK(std::abs(std::abs(l) - 1.0) < 1e-10);
  CHECK(orthonormality_error(s) < 1e-10);
  CHECK(max_abs_diff(reconstruction(s), u) < 1e-10);
}

TEST_CASE("normal_eig resolves exact degeneracies of the Hermitian part") {
  const Spectrum s = normal_eig(ComplexMatrix::identity(4));
  for (const Complex& l : s.eigenvalues) CHECK(std::abs(l - Complex(1.0)) < 1e-12);
  CHECK(orthonormality_error(s) < 1e-12);
}

TEST_CASE("normal_eig rejects non-normal input") {
  ComplexMatrix m(2);
  m(0, 1) = 1.0;  // nilpotent shift
  CHECK_THROWS_AS(normal_eig(m), NotNormal);
}
