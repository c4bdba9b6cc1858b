// Verification of candidate XOR gates, independent of how they were built.
//
// Two layers: the structural zero-pattern test (columns with input A xor B
// = x may only reach rows with C = x), and a graded worst-case fidelity for
// quantifying near misses. The fidelity is the smallest eigenvalue of the
// projected 2x2 Gram matrix, minimized over the four (A, B) inputs, so a
// value of 1 means every initial C state - superpositions included - ends
// up carrying A xor B with probability 1.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <string>

#include "spinxor/complex_matrix.hpp"
#include "spinxor/errors.hpp"
#include "spinxor/evolution.hpp"
#include "spinxor/pauli.hpp"
#include "spinxor/xor_family.hpp"

namespace spinxor {

struct GateReport {
  double unitarity_error = 0.0;
  double pattern_error = 0.0;
  bool truth_table_pass = false;
  double fidelity = 0.0;
  std::array<double, 4> weight_profile{0.0, 0.0, 0.0, 0.0};
  bool two_spin_only = false;
};

struct PatternCheckResult {
  bool pass = false;
  double max_forbidden = 0.0;
};

namespace detail {

inline void require_xor_candidate(const ComplexMatrix& u, const char* where) {
  if (u.dim() != 8)
    throw DimensionMismatch(std::string(where) + ": expected an 8x8 matrix, got dim " +
                            std::to_string(u.dim()));
  require_unitary(u, 1e-8, where);
}

}  // namespace detail

// Largest modulus over the 32 structurally forbidden entries, and whether it
// stays below tol.
inline PatternCheckResult pattern_check(const ComplexMatrix& u, double tol) {
  detail::require_xor_candidate(u, "pattern_check");
  double worst = 0.0;
  for (std::size_t col = 0; col < 8; ++col) {
    const BasisBits in = basis_bits(col);
    const int want_c = in.a ^ in.b;
    for (std::size_t row = 0; row < 8; ++row) {
      if (basis_bits(row).c != want_c) worst = std::max(worst, std::abs(u(row, col)));
    }
  }
  return {worst <= tol, worst};
}

// Worst case over inputs (A, B) of the smallest eigenvalue of
// M_{cc'} = <ABc| U^+ Pi_{A xor B} U |ABc'>.
inline double functional_fidelity(const ComplexMatrix& u) {
  detail::require_xor_candidate(u, "functional_fidelity");
  double fmin = 1.0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      const int x = a ^ b;
      const std::size_t col1 = basis_index(a, b, 1);
      const std::size_t col0 = basis_index(a, b, 0);
      Complex m00 = 0.0, m01 = 0.0, m11 = 0.0;
      for (std::size_t row = 0; row < 8; ++row) {
        if (basis_bits(row).c != x) continue;
        m00 += std::conj(u(row, col1)) * u(row, col1);
        m01 += std::conj(u(row, col1)) * u(row, col0);
        m11 += std::conj(u(row, col0)) * u(row, col0);
      }
      // smallest eigenvalue of [[m00, m01], [conj(m01), m11]]; the
      // sum-of-squares discriminant avoids cancellation near fidelity 1
      const double half_diff = 0.5 * (m00.real() - m11.real());
      const double disc = half_diff * half_diff + std::norm(m01);
      const double lam_min = 0.5 * (m00.real() + m11.real()) - std::sqrt(disc);
      fmin = std::min(fmin, lam_min);
    }
  return std::clamp(fmin, 0.0, 1.0);
}

// Full report for a Hamiltonian given as a Pauli decomposition: exponentiate,
// run the pattern test and the fidelity, and profile interaction weights.
inline GateReport verify_hamiltonian(const PauliDecomposition& h,
                                     const EvolutionConfig& cfg = {}, double tol = 1e-9) {
  if (h.max_imag() > 1e-12)
    throw NotHermitian("verify_hamiltonian: coefficients must be real, max imag " +
                       std::to_string(h.max_imag()));
  GateReport rep;
  const ComplexMatrix hm = hermitian_part(reconstruct(h));
  const ComplexMatrix u = evolution_operator(hm, cfg);
  rep.unitarity_error = unitarity_error(u);
  const PatternCheckResult pc = pattern_check(u, tol);
  rep.pattern_error = pc.max_forbidden;
  rep.truth_table_pass = pc.pass;
  rep.fidelity = functional_fidelity(u);
  rep.weight_profile = weight_profile(h, tol);
  rep.two_spin_only = rep.weight_profile[0] == 0.0 && rep.weight_profile[1] == 0.0 &&
                      rep.weight_profile[3] == 0.0;
  return rep;
}

}  // namespace spinxor
