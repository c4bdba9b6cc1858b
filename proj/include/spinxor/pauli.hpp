// Pauli-string algebra on three spins A, B, C.
//
// Basis convention: |ABC> ordered |111>, |110>, ..., |000>, i.e.
// index = 7 - (4A + 2B + C), with the single-spin basis (|1>, |0>) and
// sigma_z |1> = +|1>. Tensor products of the standard 2x2 Pauli matrices in
// that single-spin order therefore land directly in the 8x8 basis above.
#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>

#include "spinxor/complex_matrix.hpp"
#include "spinxor/errors.hpp"

namespace spinxor {

enum class PauliAxis : unsigned char { I = 0, X = 1, Y = 2, Z = 3 };

inline char axis_char(PauliAxis a) { return "IXYZ"[static_cast<unsigned char>(a)]; }

inline PauliAxis axis_from_char(char c) {
  switch (c) {
    case 'I': return PauliAxis::I;
    case 'X': return PauliAxis::X;
    case 'Y': return PauliAxis::Y;
    case 'Z': return PauliAxis::Z;
    default: throw ParseError(std::string("unknown Pauli axis character '") + c + "'");
  }
}

inline const ComplexMatrix& axis_matrix(PauliAxis a) {
  static const std::array<ComplexMatrix, 4> mats = [] {
    std::array<ComplexMatrix, 4> m{ComplexMatrix(2), ComplexMatrix(2), ComplexMatrix(2),
                                   ComplexMatrix(2)};
    m[0](0, 0) = 1.0;
    m[0](1, 1) = 1.0;
    m[1](0, 1) = 1.0;
    m[1](1, 0) = 1.0;
    m[2](0, 1) = Complex(0.0, -1.0);
    m[2](1, 0) = Complex(0.0, 1.0);
    m[3](0, 0) = 1.0;
    m[3](1, 1) = -1.0;
    return m;
  }();
  return mats[static_cast<unsigned char>(a)];
}

// One tensor-product operator, one axis per spin in the order (A, B, C).
// Lexicographic order I < X < Y < Z with site A most significant.
struct PauliString {
  std::array<PauliAxis, 3> axes{PauliAxis::I, PauliAxis::I, PauliAxis::I};

  PauliString() = default;
  PauliString(PauliAxis a, PauliAxis b, PauliAxis c) : axes{a, b, c} {}

  int weight() const {
    int w = 0;
    for (auto a : axes)
      if (a != PauliAxis::I) ++w;
    return w;
  }

  std::string label() const {
    return {axis_char(axes[0]), axis_char(axes[1]), axis_char(axes[2])};
  }

  static PauliString from_label(std::string_view s) {
    if (s.size() != 3)
      throw ParseError("Pauli string label must have exactly 3 characters, got \"" +
                       std::string(s) + "\"");
    return {axis_from_char(s[0]), axis_from_char(s[1]), axis_from_char(s[2])};
  }

  auto operator<=>(const PauliString&) const = default;
};

inline ComplexMatrix string_matrix(const PauliString& s) {
  return kron(kron(axis_matrix(s.axes[0]), axis_matrix(s.axes[1])), axis_matrix(s.axes[2]));
}

inline std::array<PauliString, 64> all_pauli_strings() {
  std::array<PauliString, 64> out;
  std::size_t k = 0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        out[k++] = PauliString(static_cast<PauliAxis>(a), static_cast<PauliAxis>(b),
                               static_cast<PauliAxis>(c));
  return out;
}

// Coefficients below this are treated as exact zero when stored.
inline constexpr double kCoefficientStorageEps = 1e-14;

// An operator expressed in the Pauli-string basis. For Hamiltonians the
// coefficients are real and carry units of hbar/dt.
class PauliDecomposition {
 public:
  using Terms = std::map<PauliString, Complex>;

  Complex coeff(const PauliString& s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? Complex(0.0) : it->second;
  }

  void set_coeff(const PauliString& s, Complex c) {
    if (std::abs(c) < kCoefficientStorageEps)
      terms_.erase(s);
    else
      terms_[s] = c;
  }

  void add_coeff(const PauliString& s, Complex c) { set_coeff(s, coeff(s) + c); }

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  // Largest deviation of any coefficient from being purely real.
  double max_imag() const {
    double m = 0.0;
    for (const auto& [s, c] : terms_) m = std::max(m, std::abs(c.imag()));
    return m;
  }

 private:
  Terms terms_;  // lexicographic by construction of PauliString::operator<=>
};

// coeff(s) = Tr(string_matrix(s) * m) / 8 over all 64 strings.
inline PauliDecomposition decompose(const ComplexMatrix& m) {
  if (m.dim() != 8)
    throw DimensionMismatch("decompose: expected an 8x8 matrix, got dim " +
                            std::to_string(m.dim()));
  PauliDecomposition d;
  for (const PauliString& s : all_pauli_strings()) {
    const ComplexMatrix sm = string_matrix(s);
    Complex tr = 0.0;
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j) tr += sm(i, j) * m(j, i);
    d.set_coeff(s, tr / 8.0);
  }
  return d;
}

inline ComplexMatrix reconstruct(const PauliDecomposition& d) {
  ComplexMatrix m(8);
  for (const auto& [s, c] : d.terms()) m += string_matrix(s) * c;
  return m;
}

// Largest |coefficient| per interaction weight 0..3; entries not exceeding
// tol are reported as zero.
inline std::array<double, 4> weight_profile(const PauliDecomposition& d, double tol) {
  if (!(tol > 0.0)) throw InvalidOptions("weight_profile: tol must be > 0");
  std::array<double, 4> prof{0.0, 0.0, 0.0, 0.0};
  for (const auto& [s, c] : d.terms()) {
    auto& slot = prof[static_cast<std::size_t>(s.weight())];
    slot = std::max(slot, std::abs(c));
  }
  for (auto& v : prof)
    if (v <= tol) v = 0.0;
  return prof;
}

}  // namespace spinxor
