// Evolution operators U = exp(-i H dt / hbar) and their inverses.
//
// Two independent exponential routes are provided on purpose: the
// eigendecomposition path (evolution_operator) is the production one, the
// scaling-and-squaring series (expm_series) exists so the two can be checked
// against each other. Do not collapse them into one.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <vector>

#include "spinxor/complex_matrix.hpp"
#include "spinxor/eig.hpp"
#include "spinxor/errors.hpp"

namespace spinxor {

// Gate interval and hbar. Internally everything is expressed in units of
// hbar/dt, so these only enter at exponentiation / logarithm boundaries.
struct EvolutionConfig {
  double delta_t = 1.0;
  double hbar = 1.0;

  void validate() const {
    if (!(delta_t > 0.0)) throw InvalidOptions("EvolutionConfig: delta_t must be > 0");
    if (!(hbar > 0.0)) throw InvalidOptions("EvolutionConfig: hbar must be > 0");
  }
};

// U = exp(-i h dt / hbar) via the Hermitian eigendecomposition of h.
inline ComplexMatrix evolution_operator(const ComplexMatrix& h,
                                        const EvolutionConfig& cfg = {}) {
  cfg.validate();
  require_hermitian(h, 1e-12, "evolution_operator");
  const std::size_t n = h.dim();
  const Spectrum s = hermitian_eig(h);
  ComplexMatrix u(n);
  std::vector<Complex> phases(n);
  for (std::size_t k = 0; k < n; ++k)
    phases[k] = std::exp(Complex(0.0, -s.eigenvalues[k].real() * cfg.delta_t / cfg.hbar));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Complex acc = 0.0;
      for (std::size_t k = 0; k < n; ++k)
        acc += s.eigenvectors(i, k) * phases[k] * std::conj(s.eigenvectors(j, k));
      u(i, j) = acc;
    }
  return u;
}

// exp(i h) for Hermitian h, same eigendecomposition route. Used for the
// reduced operators where V = exp(i p).
inline ComplexMatrix expi_hermitian(const ComplexMatrix& h) {
  return evolution_operator(h, EvolutionConfig{1.0, 1.0}).adjoint();
}

// exp(a) for an arbitrary square matrix by scaling-and-squaring with a Taylor
// series. Independent of the eigendecomposition path.
inline ComplexMatrix expm_series(const ComplexMatrix& a) {
  const std::size_t n = a.dim();
  double norm1 = 0.0;  // max column sum
  for (std::size_t j = 0; j < n; ++j) {
    double col = 0.0;
    for (std::size_t i = 0; i < n; ++i) col += std::abs(a(i, j));
    norm1 = std::max(norm1, col);
  }
  int s = 0;
  while (norm1 > 0.5 && s < 64) {
    norm1 *= 0.5;
    ++s;
  }
  ComplexMatrix x = a * (1.0 / std::ldexp(1.0, s));
  ComplexMatrix result = ComplexMatrix::identity(n);
  ComplexMatrix term = ComplexMatrix::identity(n);
  for (int k = 1; k <= 60; ++k) {
    term = term * x;
    term *= Complex(1.0 / k);
    result += term;
    if (term.max_abs() < 1e-20) break;
  }
  for (int k = 0; k < s; ++k) result = result * result;
  return result;
}

namespace detail {

// Principal phase in (-pi, pi].
inline double principal_phase(Complex z) {
  double t = std::atan2(z.imag(), z.real());
  if (t <= -std::numbers::pi) t += 2.0 * std::numbers::pi;
  return t;
}

// Choose 2*pi offsets for a set of phases so that (max - min) is minimal;
// ties are broken by minimizing max |theta|, then by enumeration order.
inline std::vector<double> min_spread_phases(const std::vector<double>& principal) {
  const std::size_t n = principal.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return principal[i] < principal[j]; });

  constexpr double two_pi = 2.0 * std::numbers::pi;
  // exactly tied spreads (all circular gaps equal, as for the XOR blocks)
  // differ across cuts only by rounding, so ties are resolved within an
  // absolute slack rather than bitwise
  constexpr double tie_eps = 1e-12;
  std::vector<double> best;
  double best_spread = 0.0, best_maxabs = 0.0;
  bool have_best = false;
  // cut: phases with sorted rank < cut are lifted by 2*pi, i.e. the branch
  // window starts at the (cut)-th smallest principal phase
  for (std::size_t cut = 0; cut < n; ++cut) {
    std::vector<double> cand(n);
    for (std::size_t r = 0; r < n; ++r)
      cand[order[r]] = principal[order[r]] + (r < cut ? two_pi : 0.0);
    for (int shift = -2; shift <= 2; ++shift) {
      double lo = cand[0] + shift * two_pi, hi = lo, ma = std::abs(lo);
      for (std::size_t k = 0; k < n; ++k) {
        const double t = cand[k] + shift * two_pi;
        lo = std::min(lo, t);
        hi = std::max(hi, t);
        ma = std::max(ma, std::abs(t));
      }
      const double spread = hi - lo;
      const bool better =
          !have_best || spread < best_spread - tie_eps ||
          (spread <= best_spread + tie_eps && ma < best_maxabs - tie_eps);
      if (better) {
        best_spread = have_best ? std::min(best_spread, spread) : spread;
        best_maxabs = ma;
        have_best = true;
        best.resize(n);
        for (std::size_t k = 0; k < n; ++k) best[k] = cand[k] + shift * two_pi;
      }
    }
  }
  return best;
}

}  // namespace detail

// Hermitian h with evolution_operator(h, cfg) == u, on the eigenphase branch
// that minimizes the phase spread (then max |phase|). With the sign
// convention U = exp(-i H dt / hbar) this is h = -(hbar/dt) V diag(theta) V^+.
inline ComplexMatrix unitary_log_min_spread(const ComplexMatrix& u,
                                            const EvolutionConfig& cfg = {}) {
  cfg.validate();
  require_unitary(u, 1e-10, "unitary_log_min_spread");
  const std::size_t n = u.dim();
  const Spectrum s = normal_eig(u);
  std::vector<double> principal(n);
  for (std::size_t k = 0; k < n; ++k) principal[k] = detail::principal_phase(s.eigenvalues[k]);
  const std::vector<double> theta = detail::min_spread_phases(principal);

  const double scale = -cfg.hbar / cfg.delta_t;
  ComplexMatrix h(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Complex acc = 0.0;
      for (std::size_t k = 0; k < n; ++k)
        acc += s.eigenvectors(i, k) * (scale * theta[k]) * std::conj(s.eigenvectors(j, k));
      h(i, j) = acc;
    }
  return hermitian_part(h);
}

}  // namespace spinxor
