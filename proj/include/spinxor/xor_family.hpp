// The three-parameter family of three-spin XOR gates with output in C.
//
// The evolution operator is block-diagonal in the A-spin: U = diag(V, W)
// with 4x4 single-phase-per-row/column unitaries V, W acting on the B (x) C
// space. Five phase constraints leave (alpha, beta, gamma) free and force
// the block logarithms p, q into closed forms whose recombination
// 2H = (P+Q) + sigma_zA (P-Q) contains two-spin interaction terms only.
#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>

#include "spinxor/complex_matrix.hpp"
#include "spinxor/errors.hpp"
#include "spinxor/evolution.hpp"
#include "spinxor/pauli.hpp"

namespace spinxor {

// |ABC> basis: index = 7 - (4A + 2B + C); bit value 1 = spin up.
inline std::size_t basis_index(int a, int b, int c) {
  return static_cast<std::size_t>(7 - (4 * a + 2 * b + c));
}

struct BasisBits {
  int a, b, c;
};

inline BasisBits basis_bits(std::size_t index) {
  const int v = 7 - static_cast<int>(index);
  return {(v >> 2) & 1, (v >> 1) & 1, v & 1};
}

// The free angles (alpha, beta, gamma), the five derived phases, and the
// quarter-sums mu, nu. Derived phases are kept literal (not reduced mod
// 2*pi) so that mu = nu = -3*pi/4 exactly and the p, q diagonals vanish.
struct AngleParameters {
  double alpha = 0.0, beta = 0.0, gamma = 0.0;
  double delta = 0.0, rho = 0.0, omega = 0.0, xi = 0.0, eta = 0.0;
  double mu = 0.0, nu = 0.0;
};

inline AngleParameters constrained_angles(double alpha, double beta, double gamma) {
  constexpr double pi = std::numbers::pi;
  AngleParameters p;
  p.alpha = alpha;
  p.beta = beta;
  p.gamma = gamma;
  p.delta = -3.0 * pi - alpha - beta - gamma;
  p.rho = -pi + beta;
  p.omega = -2.0 * pi - alpha - beta - gamma;
  p.xi = -pi + gamma;
  p.eta = pi + alpha;
  p.mu = (p.alpha + p.beta + p.gamma + p.delta) / 4.0;
  p.nu = (p.rho + p.omega + p.xi + p.eta) / 4.0;
  return p;
}

// All eight phases chosen freely; mu and nu are recomputed from the sums.
// The closed-form p and q matrices below remain valid in this setting.
inline AngleParameters unconstrained_angles(double alpha, double beta, double gamma,
                                            double delta, double rho, double omega,
                                            double xi, double eta) {
  AngleParameters p;
  p.alpha = alpha;
  p.beta = beta;
  p.gamma = gamma;
  p.delta = delta;
  p.rho = rho;
  p.omega = omega;
  p.xi = xi;
  p.eta = eta;
  p.mu = (alpha + beta + gamma + delta) / 4.0;
  p.nu = (rho + omega + xi + eta) / 4.0;
  return p;
}

namespace detail {
inline Complex eip(double phase) { return std::exp(Complex(0.0, phase)); }
}  // namespace detail

// V: single phase per row/column, cycle |11> -> |10> -> |00> -> |01> -> |11>.
inline ComplexMatrix build_V(const AngleParameters& p) {
  ComplexMatrix v(4);
  v(0, 2) = detail::eip(p.delta);
  v(1, 0) = detail::eip(p.alpha);
  v(2, 3) = detail::eip(p.beta);
  v(3, 1) = detail::eip(p.gamma);
  return v;
}

inline ComplexMatrix build_W(const AngleParameters& p) {
  ComplexMatrix w(4);
  w(0, 1) = detail::eip(p.rho);
  w(1, 3) = detail::eip(p.omega);
  w(2, 0) = detail::eip(p.xi);
  w(3, 2) = detail::eip(p.eta);
  return w;
}

// U = diag(V, W): diagonal in the A-spin, acting as V for A=1 and W for A=0.
inline ComplexMatrix build_U(const ComplexMatrix& v, const ComplexMatrix& w) {
  if (v.dim() != 4 || w.dim() != 4)
    throw DimensionMismatch("build_U: expected 4x4 blocks");
  ComplexMatrix u(8);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      u(i, j) = v(i, j);
      u(i + 4, j + 4) = w(i, j);
    }
  return u;
}

// Closed form of p = -dt/hbar * P, satisfying V = exp(i p).
inline ComplexMatrix p_matrix(const AngleParameters& ang) {
  using detail::eip;
  constexpr double pi = std::numbers::pi;
  const double mu = ang.mu;
  const Complex one_p_i(1.0, 1.0), one_m_i(1.0, -1.0);
  ComplexMatrix m(4);
  const double diag = 4.0 * mu / pi + 3.0;
  for (std::size_t k = 0; k < 4; ++k) m(k, k) = diag;
  m(0, 1) = -one_p_i * eip(mu - ang.alpha);
  m(0, 2) = -one_m_i * eip(ang.delta - mu);
  m(0, 3) = -eip(2.0 * mu - ang.alpha - ang.gamma);
  m(1, 0) = -one_m_i * eip(ang.alpha - mu);
  m(1, 2) = -eip(2.0 * mu - ang.beta - ang.gamma);
  m(1, 3) = -one_p_i * eip(mu - ang.gamma);
  m(2, 0) = -one_p_i * eip(mu - ang.delta);
  m(2, 1) = -eip(ang.beta + ang.gamma - 2.0 * mu);
  m(2, 3) = -one_m_i * eip(ang.beta - mu);
  m(3, 0) = -eip(ang.alpha + ang.gamma - 2.0 * mu);
  m(3, 1) = -one_m_i * eip(ang.gamma - mu);
  m(3, 2) = -one_p_i * eip(mu - ang.beta);
  return m * (pi / 4.0);
}

// Closed form of q, satisfying W = exp(i q).
inline ComplexMatrix q_matrix(const AngleParameters& ang) {
  using detail::eip;
  constexpr double pi = std::numbers::pi;
  const double nu = ang.nu;
  const Complex one_p_i(1.0, 1.0), one_m_i(1.0, -1.0);
  ComplexMatrix m(4);
  const double diag = 4.0 * nu / pi + 3.0;
  for (std::size_t k = 0; k < 4; ++k) m(k, k) = diag;
  m(0, 1) = -one_m_i * eip(ang.rho - nu);
  m(0, 2) = -one_p_i * eip(nu - ang.xi);
  m(0, 3) = -eip(ang.rho + ang.omega - 2.0 * nu);
  m(1, 0) = -one_p_i * eip(nu - ang.rho);
  m(1, 2) = -eip(ang.omega + ang.eta - 2.0 * nu);
  m(1, 3) = -one_m_i * eip(ang.omega - nu);
  m(2, 0) = -one_m_i * eip(ang.xi - nu);
  m(2, 1) = -eip(2.0 * nu - ang.omega - ang.eta);
  m(2, 3) = -one_p_i * eip(nu - ang.eta);
  m(3, 0) = -eip(2.0 * nu - ang.rho - ang.omega);
  m(3, 1) = -one_p_i * eip(nu - ang.omega);
  m(3, 2) = -one_m_i * eip(ang.eta - nu);
  return m * (pi / 4.0);
}

// P + Q at constrained angles, prefactor -sqrt(2)*pi*hbar*i / (4 dt).
inline ComplexMatrix p_plus_q(const AngleParameters& ang, const EvolutionConfig& cfg = {}) {
  using detail::eip;
  cfg.validate();
  const double a = ang.alpha, b = ang.beta, g = ang.gamma;
  const double s2 = std::numbers::sqrt2;
  ComplexMatrix m(4);
  m(0, 1) = eip(-a) + eip(b);
  m(0, 2) = eip(-(a + b + g)) - eip(-g);
  m(0, 3) = -s2 * eip(-(a + g));
  m(1, 0) = -eip(a) - eip(-b);
  m(1, 2) = -s2 * eip(-(b + g));
  m(1, 3) = eip(-g) - eip(-(a + b + g));
  m(2, 0) = eip(g) - eip(a + b + g);
  m(2, 1) = s2 * eip(b + g);
  m(2, 3) = -eip(-a) - eip(b);
  m(3, 0) = s2 * eip(a + g);
  m(3, 1) = eip(a + b + g) - eip(g);
  m(3, 2) = eip(a) + eip(-b);
  const Complex pref(0.0, -s2 * std::numbers::pi * cfg.hbar / (4.0 * cfg.delta_t));
  return m * pref;
}

// P - Q at constrained angles: zero diagonal and corners, linear in
// sigma_x, sigma_y of B and C.
inline ComplexMatrix p_minus_q(const AngleParameters& ang, const EvolutionConfig& cfg = {}) {
  using detail::eip;
  cfg.validate();
  const double a = ang.alpha, b = ang.beta, g = ang.gamma;
  const Complex x = eip(-a) - eip(b);            // I_B (x) off-diagonal of C
  const Complex y = eip(-(a + b + g)) + eip(-g); // off-diagonal of B (x) I_C
  ComplexMatrix m(4);
  m(0, 1) = x;
  m(0, 2) = y;
  m(1, 0) = -eip(a) + eip(-b);
  m(1, 3) = y;
  m(2, 0) = -eip(a + b + g) - eip(g);
  m(2, 3) = x;
  m(3, 1) = -eip(a + b + g) - eip(g);
  m(3, 2) = -eip(a) + eip(-b);
  const double s2 = std::numbers::sqrt2;
  const Complex pref(0.0, -s2 * std::numbers::pi * cfg.hbar / (4.0 * cfg.delta_t));
  return m * pref;
}

// 8x8 Hamiltonian assembled from the blocks: 2H = (P+Q) + sigma_zA (P-Q).
inline ComplexMatrix assemble_block_hamiltonian(const AngleParameters& ang,
                                                const EvolutionConfig& cfg = {}) {
  const ComplexMatrix sum = p_plus_q(ang, cfg);
  const ComplexMatrix diff = p_minus_q(ang, cfg);
  ComplexMatrix h(8);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      h(i, j) = 0.5 * (sum(i, j) + diff(i, j));      // A = 1 block: P
      h(i + 4, j + 4) = 0.5 * (sum(i, j) - diff(i, j));  // A = 0 block: Q
    }
  return h;
}

// The two-spin XOR Hamiltonian family, as a Pauli decomposition. Overall
// prefactor -pi*hbar / (8 dt); every term is a two-spin product.
inline PauliDecomposition xor_hamiltonian(double alpha, double beta, double gamma,
                                          const EvolutionConfig& cfg = {}) {
  cfg.validate();
  const double a = alpha, b = beta, g = gamma;
  const double s2 = std::numbers::sqrt2;
  const double pref = -std::numbers::pi * cfg.hbar / (8.0 * cfg.delta_t);
  using PA = PauliAxis;
  PauliDecomposition d;
  auto term = [&](PA pa, PA pb, PA pc, double c) {
    d.set_coeff(PauliString(pa, pb, pc), Complex(pref * c, 0.0));
  };
  term(PA::Z, PA::I, PA::X, s2 * (std::sin(a) + std::sin(b)));
  term(PA::Z, PA::I, PA::Y, -s2 * (std::cos(a) - std::cos(b)));
  term(PA::Z, PA::X, PA::I, s2 * (std::sin(g) + std::sin(a + b + g)));
  term(PA::Z, PA::Y, PA::I, -s2 * (std::cos(g) + std::cos(a + b + g)));
  term(PA::I, PA::Z, PA::X, s2 * (std::sin(a) - std::sin(b)));
  term(PA::I, PA::Z, PA::Y, -s2 * (std::cos(a) + std::cos(b)));
  term(PA::I, PA::X, PA::Z, -s2 * (std::sin(g) - std::sin(a + b + g)));
  term(PA::I, PA::Y, PA::Z, s2 * (std::cos(g) - std::cos(a + b + g)));
  term(PA::I, PA::X, PA::X, -(std::sin(a + g) + std::sin(b + g)));
  term(PA::I, PA::X, PA::Y, std::cos(a + g) - std::cos(b + g));
  term(PA::I, PA::Y, PA::X, std::cos(a + g) + std::cos(b + g));
  term(PA::I, PA::Y, PA::Y, std::sin(a + g) - std::sin(b + g));
  return d;
}

// The fixed illustrative member of the family (alpha = beta = gamma = 0):
// H = pi*hbar/(4 dt) * (sqrt(2) ZA YB + sqrt(2) ZB YC - YB XC).
inline PauliDecomposition reference_hamiltonian(const EvolutionConfig& cfg = {}) {
  cfg.validate();
  const double unit = std::numbers::pi * cfg.hbar / (4.0 * cfg.delta_t);
  using PA = PauliAxis;
  PauliDecomposition d;
  d.set_coeff(PauliString(PA::Z, PA::Y, PA::I), Complex(std::numbers::sqrt2 * unit, 0.0));
  d.set_coeff(PauliString(PA::I, PA::Z, PA::Y), Complex(std::numbers::sqrt2 * unit, 0.0));
  d.set_coeff(PauliString(PA::I, PA::Y, PA::X), Complex(-unit, 0.0));
  return d;
}

}  // namespace spinxor
