// Command-line surface: design XOR Hamiltonians, verify candidates, convert
// between matrix and Pauli-basis representations, run coupling searches, and
// replay the full claim checklist.
//
// Exit codes: 0 success / PASS, 1 verification FAIL, 2 usage or parse error.

#include <cstdint>
#include <functional>
#include <iostream>
#include <numbers>
#include <string>

#include <CLI11.hpp>

#include "spinxor/complex_matrix.hpp"
#include "spinxor/errors.hpp"
#include "spinxor/evolution.hpp"
#include "spinxor/gate_verify.hpp"
#include "spinxor/ham_search.hpp"
#include "spinxor/io.hpp"
#include "spinxor/pauli.hpp"
#include "spinxor/reproduce.hpp"
#include "spinxor/xor_family.hpp"

namespace {

using namespace spinxor;

void print_term_table(const PauliDecomposition& d) {
  for (const auto& [s, c] : d.terms())
    std::cout << s.label() << ' ' << format_real(c.real(), kTableDigits) << '\n';
}

int cmd_xor_ham(double alpha, double beta, double gamma, double dt, bool degrees,
                const std::string& out) {
  if (degrees) {
    constexpr double rad = std::numbers::pi / 180.0;
    alpha *= rad;
    beta *= rad;
    gamma *= rad;
  }
  const PauliDecomposition d = xor_hamiltonian(alpha, beta, gamma, EvolutionConfig{dt, 1.0});
  print_term_table(d);
  if (!out.empty()) write_pauli_ham_file(out, d);
  return 0;
}

int cmd_verify(const std::string& ham_path, double dt, double tol) {
  const PauliDecomposition d = read_pauli_ham_file(ham_path);
  const GateReport rep = verify_hamiltonian(d, EvolutionConfig{dt, 1.0}, tol);
  std::cout << format_gate_report(rep);
  return rep.truth_table_pass ? 0 : 1;
}

int cmd_decompose(const std::string& in_path, const std::string& out) {
  const ComplexMatrix m = read_cmatrix_file(in_path);
  if (m.dim() != 8) throw ParseError("decompose: expected an 8x8 matrix");
  if (hermiticity_error(m) > 1e-12)
    throw ParseError("decompose: matrix is not Hermitian, so it has no real Pauli "
                     "coefficients");
  const PauliDecomposition d = decompose(m);
  if (out.empty())
    write_pauli_ham(std::cout, d);
  else
    write_pauli_ham_file(out, d);
  return 0;
}

int cmd_evolve(const std::string& ham_path, double dt, const std::string& out) {
  const PauliDecomposition d = read_pauli_ham_file(ham_path);
  const ComplexMatrix h = hermitian_part(reconstruct(d));
  const ComplexMatrix u = evolution_operator(h, EvolutionConfig{dt, 1.0});
  if (out.empty())
    write_cmatrix(std::cout, u);
  else
    write_cmatrix_file(out, u);
  return 0;
}

int cmd_log(const std::string& in_path, double dt, const std::string& out) {
  const ComplexMatrix u = read_cmatrix_file(in_path);
  const ComplexMatrix h = unitary_log_min_spread(u, EvolutionConfig{dt, 1.0});
  if (h.dim() != 8) throw ParseError("log: only 8x8 unitaries can be written as pauli-ham");
  const PauliDecomposition d = decompose(h);
  if (out.empty())
    write_pauli_ham(std::cout, d);
  else
    write_pauli_ham_file(out, d);
  return 0;
}

int cmd_search(const std::string& model_name, bool fields, std::size_t restarts,
               std::uint64_t seed, double dt, std::size_t max_evals, const std::string& out,
               const std::string& ham_out) {
  const CouplingModel model{coupling_kind_from_name(model_name), fields};
  NelderMeadOptions opts;
  opts.max_evals = max_evals;
  const SearchResult r =
      multi_start_search(model, EvolutionConfig{dt, 1.0}, restarts, seed, opts);
  write_search_result(std::cout, r);
  if (!out.empty()) write_search_result_file(out, r);
  if (!ham_out.empty()) write_pauli_ham_file(ham_out, to_decomposition(model, r.best_params));
  return 0;
}

int cmd_reproduce() {
  bool all_pass = true;
  for (const ClaimResult& r : run_claim_checks()) {
    std::cout << format_claim_line(r) << '\n';
    std::cerr << "claim " << r.id << " took " << format_real(r.millis, 3) << " ms\n";
    all_pass = all_pass && r.pass;
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"three-spin XOR gate design and verification toolkit"};
  app.require_subcommand(1);

  std::function<int()> action;

  {
    auto* sub = app.add_subcommand("xor-ham",
                                   "emit a two-spin XOR Hamiltonian of the gate family");
    auto alpha = std::make_shared<double>(0.0);
    auto beta = std::make_shared<double>(0.0);
    auto gamma = std::make_shared<double>(0.0);
    auto dt = std::make_shared<double>(1.0);
    auto degrees = std::make_shared<bool>(false);
    auto out = std::make_shared<std::string>();
    sub->add_option("--alpha", *alpha, "free angle alpha (radians)")->required();
    sub->add_option("--beta", *beta, "free angle beta (radians)")->required();
    sub->add_option("--gamma", *gamma, "free angle gamma (radians)")->required();
    sub->add_option("--dt", *dt, "gate interval")->check(CLI::PositiveNumber);
    sub->add_flag("--degrees", *degrees, "interpret angles in degrees");
    sub->add_option("--out", *out, "write pauli-ham v1 file");
    sub->callback([=, &action] {
      action = [=] { return cmd_xor_ham(*alpha, *beta, *gamma, *dt, *degrees, *out); };
    });
  }
  {
    auto* sub = app.add_subcommand("verify", "verify a pauli-ham file implements the XOR gate");
    auto ham = std::make_shared<std::string>();
    auto dt = std::make_shared<double>(1.0);
    auto tol = std::make_shared<double>(1e-9);
    sub->add_option("--ham", *ham, "pauli-ham v1 file")->required();
    sub->add_option("--dt", *dt, "gate interval")->check(CLI::PositiveNumber);
    sub->add_option("--tol", *tol, "pass/fail tolerance")->check(CLI::PositiveNumber);
    sub->callback([=, &action] { action = [=] { return cmd_verify(*ham, *dt, *tol); }; });
  }
  {
    auto* sub = app.add_subcommand("decompose",
                                   "decompose an 8x8 Hermitian cmatrix into Pauli strings");
    auto in = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    sub->add_option("--in", *in, "cmatrix v1 file")->required();
    sub->add_option("--out", *out, "write pauli-ham v1 file (default: stdout)");
    sub->callback([=, &action] { action = [=] { return cmd_decompose(*in, *out); }; });
  }
  {
    auto* sub = app.add_subcommand("evolve", "exponentiate a pauli-ham file into its gate");
    auto ham = std::make_shared<std::string>();
    auto dt = std::make_shared<double>(1.0);
    auto out = std::make_shared<std::string>();
    sub->add_option("--ham", *ham, "pauli-ham v1 file")->required();
    sub->add_option("--dt", *dt, "gate interval")->check(CLI::PositiveNumber);
    sub->add_option("--out", *out, "write cmatrix v1 file (default: stdout)");
    sub->callback([=, &action] { action = [=] { return cmd_evolve(*ham, *dt, *out); }; });
  }
  {
    auto* sub = app.add_subcommand(
        "log", "minimal-spread Hamiltonian logarithm of a unitary cmatrix");
    auto in = std::make_shared<std::string>();
    auto dt = std::make_shared<double>(1.0);
    auto out = std::make_shared<std::string>();
    sub->add_option("--in", *in, "cmatrix v1 file (unitary)")->required();
    sub->add_option("--dt", *dt, "gate interval")->check(CLI::PositiveNumber);
    sub->add_option("--out", *out, "write pauli-ham v1 file (default: stdout)");
    sub->callback([=, &action] { action = [=] { return cmd_log(*in, *dt, *out); }; });
  }
  {
    auto* sub = app.add_subcommand("search",
                                   "seeded multi-start coupling search over a template");
    auto model = std::make_shared<std::string>("general2");
    auto fields = std::make_shared<bool>(false);
    auto restarts = std::make_shared<std::size_t>(8);
    auto seed = std::make_shared<std::uint64_t>(0);
    auto dt = std::make_shared<double>(1.0);
    auto max_evals = std::make_shared<std::size_t>(40000);
    auto out = std::make_shared<std::string>();
    auto ham_out = std::make_shared<std::string>();
    sub->add_option("--model", *model, "ising | xy | heisenberg | general2");
    sub->add_flag("--fields", *fields, "include single-spin field terms");
    sub->add_option("--restarts", *restarts, "number of random restarts")
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", *seed, "random seed (required for determinism)")->required();
    sub->add_option("--dt", *dt, "gate interval")->check(CLI::PositiveNumber);
    sub->add_option("--max-evals", *max_evals, "objective evaluations per restart");
    sub->add_option("--out", *out, "write search-result file");
    sub->add_option("--ham-out", *ham_out, "write best Hamiltonian as pauli-ham v1");
    sub->callback([=, &action] {
      action = [=] {
        return cmd_search(*model, *fields, *restarts, *seed, *dt, *max_evals, *out, *ham_out);
      };
    });
  }
  {
    auto* sub = app.add_subcommand("reproduce", "run the full claim checklist");
    sub->callback([&action] { action = [] { return cmd_reproduce(); }; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return action ? action() : 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
