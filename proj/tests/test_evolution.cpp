#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <vector>

#include "spinxor/complex_matrix.hpp"
#include "spinxor/evolution.hpp"
#include "spinxor/gate_verify.hpp"
#include "spinxor/pauli.hpp"
#include "spinxor/rng.hpp"
#include "spinxor/xor_family.hpp"

using namespace spinxor;

namespace {

constexpr double pi = std::numbers::pi;

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

// Hermitian matrix with prescribed eigenvalues in a random orthonormal basis
ComplexMatrix hermitian_with_spectrum(SeededUniform& rng, const std::vector<double>& eigs) {
  const std::size_t n = eigs.size();
  const ComplexMatrix basis = hermitian_eig(random_hermitian(rng, n)).eigenvectors;
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Complex acc = 0.0;
      for (std::size_t k = 0; k < n; ++k)
        acc += basis(i, k) * eigs[k] * std::conj(basis(j, k));
      m(i, j) = acc;
    }
  return hermitian_part(m);
}

}  // namespace

TEST_CASE("evolution of the zero Hamiltonian is the identity") {
  CHECK(max_abs_diff(evolution_operator(ComplexMatrix(4)), ComplexMatrix::identity(4)) <
        1e-15);
}

TEST_CASE("evolution of a sigma_z Hamiltonian gives the diagonal phases") {
  // h = (pi/2) sigma_z with dt = hbar = 1: U = diag(e^{-i pi/2}, e^{+i pi/2})
  ComplexMatrix h(2);
  h(0, 0) = pi / 2.0;
  h(1, 1) = -pi / 2.0;
  const ComplexMatrix u = evolution_operator(h);
  CHECK(std::abs(u(0, 0) - Complex(0, -1)) < 1e-14);
  CHECK(std::abs(u(1, 1) - Complex(0, 1)) < 1e-14);
  CHECK(std::abs(u(0, 1)) < 1e-14);
  CHECK(std::abs(u(1, 0)) < 1e-14);
}

TEST_CASE("evolution of the fixed XOR Hamiltonian has the XOR zero pattern") {
  const ComplexMatrix h = hermitian_part(reconstruct(reference_hamiltonian()));
  const ComplexMatrix u = evolution_operator(h);
  CHECK(pattern_check(u, 1e-10).pass);
  CHECK(max_abs_diff(u, expm_series(h * Complex(0.0, -1.0))) < 1e-9);
}

TEST_CASE("evolution operators are unitary for random Hermitian input") {
  SeededUniform rng(201);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2u << (trial % 3);  // 2, 4, 8
    CHECK(unitarity_error(evolution_operator(random_hermitian(rng, n))) < 1e-10);
  }
}

TEST_CASE("dt and hbar only enter through their ratio") {
  SeededUniform rng(202);
  const ComplexMatrix h = random_hermitian(rng, 4);
  const ComplexMatrix a = evolution_operator(h, EvolutionConfig{2.0, 1.0});
  const ComplexMatrix b = evolution_operator(h * 2.0, EvolutionConfig{1.0, 1.0});
  const ComplexMatrix c = evolution_operator(h, EvolutionConfig{1.0, 0.5});
  CHECK(max_abs_diff(a, b) < 1e-12);
  CHECK(max_abs_diff(a, c) < 1e-12);
}

TEST_CASE("expm_series on known exponentials") {
  CHECK(max_abs_diff(expm_series(ComplexMatrix(3)), ComplexMatrix::identity(3)) == 0.0);

  ComplexMatrix d(2);
  d(0, 0) = std::log(2.0);
  const ComplexMatrix ed = expm_series(d);
  CHECK(std::abs(ed(0, 0) - Complex(2.0)) < 1e-14);
  CHECK(std::abs(ed(1, 1) - Complex(1.0)) < 1e-14);

  ComplexMatrix nil(2);  // exp of a nilpotent shift
  nil(0, 1) = 1.0;
  const ComplexMatrix en = expm_series(nil);
  CHECK(std::abs(en(0, 0) - Complex(1.0)) < 1e-15);
  CHECK(std::abs(en(0, 1) - Complex(1.0)) < 1e-15);
  CHECK(std::abs(en(1, 0)) < 1e-15);
}

TEST_CASE("both exponential routes agree on random Hermitian generators") {
  SeededUniform rng(203);
  for (int trial = 0; trial < 30; ++trial) {
    const ComplexMatrix h = random_hermitian(rng, 8) * rng.uniform(0.1, 3.0);
    CHECK(max_abs_diff(evolution_operator(h), expm_series(h * Complex(0.0, -1.0))) < 1e-9);
  }
}

TEST_CASE("log of the identity is zero") {
  CHECK(unitary_log_min_spread(ComplexMatrix::identity(8)).max_abs() < 1e-12);
}

TEST_CASE("minimal-spread log inverts evolution for narrow spectra") {
  SeededUniform rng(204);
  for (double width : {0.5, 1.5, 3.0}) {
    std::vector<double> eigs(8);
    for (double& e : eigs) e = rng.uniform(-width / 2.0, width / 2.0);
    const ComplexMatrix h = hermitian_with_spectrum(rng, eigs);
    const ComplexMatrix hr = unitary_log_min_spread(evolution_operator(h));
    // equal up to a real multiple of the identity
    ComplexMatrix diff = hr - h;
    const double c = diff(0, 0).real();
    diff -= ComplexMatrix::identity(8) * c;
    CHECK(diff.max_abs() < 1e-8);
  }
}

TEST_CASE("minimal-spread log inverts evolution for a wide gridded spectrum") {
  // spread 5 > pi, but equispaced gaps keep the complementary gap largest
  SeededUniform rng(205);
  std::vector<double> eigs(8);
  for (std::size_t k = 0; k < 8; ++k)
    eigs[k] = -2.5 + 5.0 * static_cast<double>(k) / 7.0;
  const ComplexMatrix h = hermitian_with_spectrum(rng, eigs);
  const ComplexMatrix hr = unitary_log_min_spread(evolution_operator(h));
  ComplexMatrix diff = hr - h;
  const double c = diff(0, 0).real();
  diff -= ComplexMatrix::identity(8) * c;
  CHECK(diff.max_abs() < 1e-8);
}

TEST_CASE("recovered eigenphases of the V block span 3*pi/2") {
  SeededUniform rng(206);
  const AngleParameters ang = constrained_angles(
      rng.uniform(0, 2 * pi), rng.uniform(0, 2 * pi), rng.uniform(0, 2 * pi));
  const ComplexMatrix h = unitary_log_min_spread(build_V(ang));
  const Spectrum s = hermitian_eig(h);
  // h = -theta with theta in {mu, mu+pi/2, mu+pi, mu+3pi/2}, mu = -3pi/4
  const double expected[4] = {-0.75 * pi, -0.25 * pi, 0.25 * pi, 0.75 * pi};
  for (std::size_t k = 0; k < 4; ++k)
    CHECK(std::abs(s.eigenvalues[k].real() - expected[k]) < 1e-10);
  CHECK(s.eigenvalues[3].real() - s.eigenvalues[0].real() ==
        Catch::Approx(1.5 * pi).margin(1e-10));
}

TEST_CASE("log respects the dt scaling") {
  SeededUniform rng(207);
  std::vector<double> eigs(4);
  for (double& e : eigs) e = rng.uniform(-1.0, 1.0);
  const ComplexMatrix h = hermitian_with_spectrum(rng, eigs);
  const EvolutionConfig cfg{2.0, 1.0};
  const ComplexMatrix hr = unitary_log_min_spread(evolution_operator(h, cfg), cfg);
  ComplexMatrix diff = hr - h;
  const double c = diff(0, 0).real();
  diff -= ComplexMatrix::identity(4) * c;
  CHECK(diff.max_abs() < 1e-8);
}

TEST_CASE("evolution and log reject invalid input") {
  ComplexMatrix nonherm(2);
  nonherm(0, 1) = 1.0;
  CHECK_THROWS_AS(evolution_operator(nonherm), NotHermitian);
  CHECK_THROWS_AS(unitary_log_min_spread(nonherm * 2.0), NotUnitary);
  CHECK_THROWS_AS(evolution_operator(ComplexMatrix(2), EvolutionConfig{0.0, 1.0}),
                  InvalidOptions);
  CHECK_THROWS_AS(evolution_operator(ComplexMatrix(2), EvolutionConfig{1.0, -1.0}),
                  InvalidOptions);
}
