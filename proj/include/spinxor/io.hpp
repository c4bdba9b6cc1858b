// Text formats: "cmatrix v1" for dense complex matrices, "pauli-ham v1" for
// Hamiltonians in the Pauli basis, plus gate reports and search results.
// Files carry 17 significant digits so every emitted value re-parses exactly;
// human-readable tables use 9.
#pragma once

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "spinxor/complex_matrix.hpp"
#include "spinxor/errors.hpp"
#include "spinxor/gate_verify.hpp"
#include "spinxor/ham_search.hpp"
#include "spinxor/pauli.hpp"

namespace spinxor {

inline constexpr int kFileDigits = 17;
inline constexpr int kTableDigits = 9;

inline std::string format_real(double v, int significant_digits = kFileDigits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", significant_digits, v);
  return buf;
}

namespace detail {

inline double parse_real(std::string_view token, const char* what) {
  double v = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last)
    throw ParseError(std::string(what) + ": not a real number: \"" + std::string(token) + "\"");
  return v;
}

inline std::uint64_t parse_u64(std::string_view token, const char* what) {
  std::uint64_t v = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last)
    throw ParseError(std::string(what) + ": not an unsigned integer: \"" + std::string(token) +
                     "\"");
  return v;
}

inline bool blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

inline std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> tokens;
  std::string t;
  while (ss >> t) tokens.push_back(t);
  return tokens;
}

inline void require_header(std::istream& is, std::string_view expect, const char* what) {
  std::string line;
  if (!std::getline(is, line)) throw ParseError(std::string(what) + ": empty input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != expect)
    throw ParseError(std::string(what) + ": expected header \"" + std::string(expect) +
                     "\", got \"" + line + "\"");
}

}  // namespace detail

// ---------------------------------------------------------------- cmatrix v1

inline void write_cmatrix(std::ostream& os, const ComplexMatrix& m) {
  os << "# cmatrix v1\n" << m.dim() << ' ' << m.dim() << '\n';
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
      if (j) os << ' ';
      os << format_real(m(i, j).real()) << ',' << format_real(m(i, j).imag());
    }
    os << '\n';
  }
}

inline ComplexMatrix read_cmatrix(std::istream& is) {
  detail::require_header(is, "# cmatrix v1", "cmatrix");
  std::string line;
  if (!std::getline(is, line)) throw ParseError("cmatrix: missing dimension line");
  const auto dims = detail::split_ws(line);
  if (dims.size() != 2) throw ParseError("cmatrix: dimension line must be \"<rows> <cols>\"");
  const std::uint64_t rows = detail::parse_u64(dims[0], "cmatrix rows");
  const std::uint64_t cols = detail::parse_u64(dims[1], "cmatrix cols");
  if (rows < 1 || rows != cols)
    throw ParseError("cmatrix: expected a square dimension >= 1, got " + line);
  const auto n = static_cast<std::size_t>(rows);

  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::getline(is, line))
      throw ParseError("cmatrix: expected " + std::to_string(n) + " rows, got " +
                       std::to_string(i));
    const auto entries = detail::split_ws(line);
    if (entries.size() != n)
      throw ParseError("cmatrix: row " + std::to_string(i) + " has " +
                       std::to_string(entries.size()) + " entries, expected " +
                       std::to_string(n));
    for (std::size_t j = 0; j < n; ++j) {
      const auto comma = entries[j].find(',');
      if (comma == std::string::npos)
        throw ParseError("cmatrix: entry \"" + entries[j] + "\" is not of the form re,im");
      const double re = detail::parse_real(std::string_view(entries[j]).substr(0, comma),
                                           "cmatrix entry");
      const double im = detail::parse_real(std::string_view(entries[j]).substr(comma + 1),
                                           "cmatrix entry");
      m(i, j) = Complex(re, im);
    }
  }
  while (std::getline(is, line))
    if (!detail::blank(line)) throw ParseError("cmatrix: trailing content: \"" + line + "\"");
  return m;
}

// -------------------------------------------------------------- pauli-ham v1

// Coefficients are written as reals (hbar/dt units); a decomposition with a
// non-negligible imaginary part is not a Hamiltonian and is rejected.
inline void write_pauli_ham(std::ostream& os, const PauliDecomposition& d) {
  if (d.max_imag() > 1e-12)
    throw NotHermitian("write_pauli_ham: coefficients must be real, max imag " +
                       std::to_string(d.max_imag()));
  os << "# pauli-ham v1\n";
  for (const auto& [s, c] : d.terms()) os << s.label() << ' ' << format_real(c.real()) << '\n';
}

inline PauliDecomposition read_pauli_ham(std::istream& is) {
  detail::require_header(is, "# pauli-ham v1", "pauli-ham");
  PauliDecomposition d;
  std::string line;
  std::size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (detail::blank(line) || line[0] == '#') continue;
    const auto tokens = detail::split_ws(line);
    if (tokens.size() != 2)
      throw ParseError("pauli-ham line " + std::to_string(lineno) +
                       ": expected \"<AAA> <coefficient>\", got \"" + line + "\"");
    const PauliString s = PauliString::from_label(tokens[0]);
    const double c = detail::parse_real(tokens[1], "pauli-ham coefficient");
    if (d.terms().contains(s))
      throw ParseError("pauli-ham line " + std::to_string(lineno) + ": duplicate term " +
                       tokens[0]);
    d.set_coeff(s, Complex(c, 0.0));
  }
  return d;
}

// -------------------------------------------------------------- gate report

inline std::string format_gate_report(const GateReport& r) {
  std::ostringstream os;
  os << "unitarity_error=" << format_real(r.unitarity_error, kTableDigits) << '\n'
     << "pattern_error=" << format_real(r.pattern_error, kTableDigits) << '\n'
     << "truth_table=" << (r.truth_table_pass ? "PASS" : "FAIL") << '\n'
     << "fidelity=" << format_real(r.fidelity, kTableDigits) << '\n';
  for (int w = 0; w < 4; ++w)
    os << "weight" << w << '=' << format_real(r.weight_profile[static_cast<std::size_t>(w)],
                                              kTableDigits)
       << '\n';
  os << "two_spin_only=" << (r.two_spin_only ? "true" : "false") << '\n';
  return os.str();
}

// ----------------------------------------------------------- search results

inline void write_search_result(std::ostream& os, const SearchResult& r) {
  os << "# search-result v1\n"
     << "model=" << coupling_kind_name(r.model.kind) << '\n'
     << "include_fields=" << (r.model.include_fields ? "true" : "false") << '\n'
     << "seed=" << r.seed << '\n'
     << "restarts=" << r.restarts_used << '\n'
     << "evaluations=" << r.objective_evaluations << '\n'
     << "converged=" << (r.converged ? "true" : "false") << '\n'
     << "best_fidelity=" << format_real(r.best_fidelity) << '\n'
     << "params=";
  for (std::size_t k = 0; k < r.best_params.size(); ++k) {
    if (k) os << ' ';
    os << format_real(r.best_params[k]);
  }
  os << '\n';
}

inline SearchResult read_search_result(std::istream& is) {
  detail::require_header(is, "# search-result v1", "search-result");
  SearchResult r;
  std::string line;
  auto value_of = [&](const std::string& l, std::string_view key) -> std::string {
    return l.substr(key.size());
  };
  while (std::getline(is, line)) {
    if (detail::blank(line) || line[0] == '#') continue;
    if (line.starts_with("model="))
      r.model.kind = coupling_kind_from_name(value_of(line, "model="));
    else if (line.starts_with("include_fields="))
      r.model.include_fields = value_of(line, "include_fields=") == "true";
    else if (line.starts_with("seed="))
      r.seed = detail::parse_u64(value_of(line, "seed="), "seed");
    else if (line.starts_with("restarts="))
      r.restarts_used = detail::parse_u64(value_of(line, "restarts="), "restarts");
    else if (line.starts_with("evaluations="))
      r.objective_evaluations = detail::parse_u64(value_of(line, "evaluations="), "evaluations");
    else if (line.starts_with("converged="))
      r.converged = value_of(line, "converged=") == "true";
    else if (line.starts_with("best_fidelity="))
      r.best_fidelity = detail::parse_real(value_of(line, "best_fidelity="), "best_fidelity");
    else if (line.starts_with("params=")) {
      for (const auto& tok : detail::split_ws(value_of(line, "params=")))
        r.best_params.push_back(detail::parse_real(tok, "params"));
    } else {
      throw ParseError("search-result: unknown line \"" + line + "\"");
    }
  }
  return r;
}

// ------------------------------------------------------------- file helpers

template <typename WriteFn>
void write_text_file(const std::string& path, WriteFn&& fn) {
  std::ofstream os(path);
  if (!os) throw ParseError("cannot open \"" + path + "\" for writing");
  fn(os);
  os.flush();
  if (!os) throw ParseError("failed while writing \"" + path + "\"");
}

inline void write_cmatrix_file(const std::string& path, const ComplexMatrix& m) {
  write_text_file(path, [&](std::ostream& os) { write_cmatrix(os, m); });
}

inline void write_pauli_ham_file(const std::string& path, const PauliDecomposition& d) {
  write_text_file(path, [&](std::ostream& os) { write_pauli_ham(os, d); });
}

inline void write_search_result_file(const std::string& path, const SearchResult& r) {
  write_text_file(path, [&](std::ostream& os) { write_search_result(os, r); });
}

inline ComplexMatrix read_cmatrix_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ParseError("cannot open \"" + path + "\"");
  return read_cmatrix(is);
}

inline PauliDecomposition read_pauli_ham_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ParseError("cannot open \"" + path + "\"");
  return read_pauli_ham(is);
}

inline SearchResult read_search_result_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ParseError("cannot open \"" + path + "\"");
  return read_search_result(is);
}

}  // namespace spinxor
