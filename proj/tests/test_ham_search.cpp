#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <span>
#include <vector>

#include "spinxor/evolution.hpp"
#include "spinxor/gate_verify.hpp"
#include "spinxor/ham_search.hpp"
#include "spinxor/pauli.hpp"
#include "spinxor/rng.hpp"
#include "spinxor/xor_family.hpp"

using namespace spinxor;

namespace {
constexpr double pi = std::numbers::pi;
const CouplingModel kIsing{CouplingKind::Ising, false};
const CouplingModel kXY{CouplingKind::XY, false};
const CouplingModel kHeisenberg{CouplingKind::Heisenberg, false};
const CouplingModel kGeneral{CouplingKind::GeneralTwoSpin, false};
}  // namespace

TEST_CASE("parameter counts per model") {
  CHECK(param_count(kIsing) == 3);
  CHECK(param_count(kXY) == 3);
  CHECK(param_count(kHeisenberg) == 3);
  CHECK(param_count(kGeneral) == 27);
  CHECK(param_count(CouplingModel{CouplingKind::Ising, true}) == 12);
  CHECK(param_count(CouplingModel{CouplingKind::GeneralTwoSpin, true}) == 36);
  for (const auto& model : {kIsing, kXY, kHeisenberg, kGeneral})
    CHECK(model_generators(model).size() == param_count(model));
}

TEST_CASE("to_decomposition on the template couplings") {
  // pair order (A,B), (A,C), (B,C)
  const PauliDecomposition ising = to_decomposition(kIsing, std::vector<double>{1, 0, 0});
  CHECK(ising.size() == 1);
  CHECK(ising.coeff(PauliString::from_label("ZZI")) == Complex(1.0));

  const PauliDecomposition heis = to_decomposition(kHeisenberg, std::vector<double>{0, 0, 1});
  CHECK(heis.size() == 3);
  CHECK(heis.coeff(PauliString::from_label("IXX")) == Complex(1.0));
  CHECK(heis.coeff(PauliString::from_label("IYY")) == Complex(1.0));
  CHECK(heis.coeff(PauliString::from_label("IZZ")) == Complex(1.0));

  const PauliDecomposition xy = to_decomposition(kXY, std::vector<double>{0, 2, 0});
  CHECK(xy.size() == 2);
  CHECK(xy.coeff(PauliString::from_label("XIX")) == Complex(2.0));
  CHECK(xy.coeff(PauliString::from_label("YIY")) == Complex(2.0));

  CHECK_THROWS_AS(to_decomposition(kIsing, std::vector<double>{1, 2}), LengthMismatch);
}

TEST_CASE("fields add single-spin terms") {
  const CouplingModel model{CouplingKind::Ising, true};
  std::vector<double> params(12, 0.0);
  params[3] = 0.7;  // first field slot: sigma_x on spin A
  const PauliDecomposition d = to_decomposition(model, params);
  CHECK(d.size() == 1);
  CHECK(d.coeff(PauliString::from_label("XII")) == Complex(0.7));
}

TEST_CASE("general model represents the XOR family and round-trips") {
  const PauliDecomposition target = xor_hamiltonian(0.0, 0.0, 0.0);
  const std::vector<double> params = extract_params(kGeneral, target);
  const PauliDecomposition back = to_decomposition(kGeneral, params);
  for (const PauliString& s : all_pauli_strings())
    CHECK(std::abs(back.coeff(s) - target.coeff(s)) < 1e-15);

  // the fixed Hamiltonian is not an Ising or XY configuration
  CHECK_THROWS_AS(extract_params(kIsing, target), LengthMismatch);
}

TEST_CASE("model constraint: no disallowed strings, ever") {
  SeededUniform rng(601);
  for (const auto& model : {kIsing, kXY, kHeisenberg, kGeneral}) {
    const auto gens = model_generators(model);
    PauliDecomposition allowed;
    for (const auto& g : gens)
      for (const PauliString& s : g) allowed.set_coeff(s, Complex(1.0));
    std::vector<double> params(gens.size());
    for (double& x : params) x = rng.uniform(-pi, pi);
    const PauliDecomposition d = to_decomposition(model, params);
    for (const auto& [s, c] : d.terms()) CHECK(allowed.coeff(s) == Complex(1.0));
  }
}

TEST_CASE("objective at the exact solution, at zero, and in between") {
  const std::vector<double> exact = extract_params(kGeneral, xor_hamiltonian(0.0, 0.0, 0.0));
  CHECK(objective(kGeneral, exact) <= 1e-9);

  const std::vector<double> zero(27, 0.0);
  CHECK(objective(kGeneral, zero) == 1.0);

  std::vector<double> half = exact;
  for (double& x : half) x *= 0.5;
  const double mid = objective(kGeneral, half);
  // same number as the half-time gate fidelity
  CHECK(mid == Catch::Approx(1.0 - 0.37059047744873952).epsilon(1e-9));
}

TEST_CASE("nelder_mead minimizes a smooth convex bowl") {
  const std::vector<double> target{0.7, -0.3, 0.2};
  auto f = [&](std::span<const double> x) {
    double s = 0.0;
    for (std::size_t k = 0; k < 3; ++k) s += (x[k] - target[k]) * (x[k] - target[k]);
    return s;
  };
  const std::vector<double> start{0.0, 0.0, 0.0};
  const NelderMeadResult r = nelder_mead(f, start);
  REQUIRE(r.converged);
  for (std::size_t k = 0; k < 3; ++k) CHECK(std::abs(r.best_point[k] - target[k]) < 1e-6);
}

TEST_CASE("nelder_mead is deterministic") {
  auto f = [](std::span<const double> x) {
    return std::sin(3 * x[0]) + x[0] * x[0] + std::cos(2 * x[1]) + x[1] * x[1];
  };
  const std::vector<double> start{1.3, -0.4};
  const NelderMeadResult a = nelder_mead(f, start);
  const NelderMeadResult b = nelder_mead(f, start);
  CHECK(a.best_point == b.best_point);
  CHECK(a.best_value == b.best_value);
  CHECK(a.evaluations == b.evaluations);
}

TEST_CASE("nelder_mead converges locally to the known gate") {
  SeededUniform rng(602);
  std::vector<double> start = extract_params(kGeneral, xor_hamiltonian(0.0, 0.0, 0.0));
  for (double& x : start) x += rng.uniform(-0.05, 0.05);
  const ObjectiveEvaluator eval(kGeneral, {});
  const NelderMeadResult r = nelder_mead(eval, std::span<const double>(start));
  CHECK(r.best_value <= 1e-6);
}

TEST_CASE("nelder_mead option validation") {
  auto f = [](std::span<const double> x) { return x[0] * x[0]; };
  NelderMeadOptions opts;
  opts.max_evals = 2;
  CHECK_THROWS_AS(nelder_mead(f, std::vector<double>{1.0}, opts), InvalidOptions);
  opts = NelderMeadOptions{};
  opts.initial_step = 0.0;
  CHECK_THROWS_AS(nelder_mead(f, std::vector<double>{1.0}, opts), InvalidOptions);
  CHECK_THROWS_AS(nelder_mead(f, std::vector<double>{}, NelderMeadOptions{}), InvalidOptions);
}

TEST_CASE("multi_start_search is deterministic and self-consistent") {
  NelderMeadOptions opts;
  opts.max_evals = 1500;
  const SearchResult a = multi_start_search(kIsing, {}, 4, 7, opts);
  const SearchResult b = multi_start_search(kIsing, {}, 4, 7, opts);
  CHECK(a.best_params == b.best_params);
  CHECK(a.best_fidelity == b.best_fidelity);
  CHECK(a.objective_evaluations == b.objective_evaluations);
  CHECK(a.restarts_used == 4);
  CHECK(a.seed == 7);

  // stored fidelity equals an independent recomputation
  const double recomputed = functional_fidelity(
      evolution_operator(hermitian_part(reconstruct(to_decomposition(kIsing, a.best_params)))));
  CHECK(std::abs(recomputed - a.best_fidelity) < 1e-10);
}

TEST_CASE("one restart equals a single seeded nelder_mead run") {
  NelderMeadOptions opts;
  opts.max_evals = 1200;
  const SearchResult via_search = multi_start_search(kXY, {}, 1, 99, opts);

  SeededUniform rng(99);
  std::vector<double> start(param_count(kXY));
  for (double& x : start) x = rng.uniform(-pi, pi);
  const ObjectiveEvaluator eval(kXY, {});
  const NelderMeadResult direct = nelder_mead(eval, std::span<const double>(start), opts);
  CHECK(via_search.best_params == direct.best_point);
  CHECK(via_search.objective_evaluations == direct.evaluations);
}

TEST_CASE("negating Ising couplings conjugates the evolution") {
  SeededUniform rng(603);
  std::vector<double> params(3);
  for (double& x : params) x = rng.uniform(-pi, pi);
  std::vector<double> negated = params;
  for (double& x : negated) x = -x;
  const ComplexMatrix u_pos =
      evolution_operator(hermitian_part(reconstruct(to_decomposition(kIsing, params))));
  const ComplexMatrix u_neg =
      evolution_operator(hermitian_part(reconstruct(to_decomposition(kIsing, negated))));
  CHECK(max_abs_diff(u_neg, u_pos.adjoint()) < 1e-10);
}

TEST_CASE("search input validation") {
  CHECK_THROWS_AS(multi_start_search(kIsing, {}, 0, 1), InvalidOptions);
  CHECK_THROWS_AS(objective(kIsing, std::vector<double>{1.0}), LengthMismatch);
}
