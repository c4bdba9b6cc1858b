// Numerical coupling-parameter search over conventional two-spin interaction
// templates: does a restricted interaction family admit parameter values that
// realize the three-spin XOR? The optimizer is a standard Nelder-Mead
// simplex, restarted from seeded random points; the restricted templates
// (Ising, XY) may well fail to reach fidelity 1, which is a reported result,
// not an error.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "spinxor/complex_matrix.hpp"
#include "spinxor/errors.hpp"
#include "spinxor/evolution.hpp"
#include "spinxor/gate_verify.hpp"
#include "spinxor/pauli.hpp"
#include "spinxor/rng.hpp"

namespace spinxor {

enum class CouplingKind { Ising, XY, Heisenberg, GeneralTwoSpin };

inline std::string coupling_kind_name(CouplingKind k) {
  switch (k) {
    case CouplingKind::Ising: return "ising";
    case CouplingKind::XY: return "xy";
    case CouplingKind::Heisenberg: return "heisenberg";
    case CouplingKind::GeneralTwoSpin: return "general2";
  }
  return "?";
}

inline CouplingKind coupling_kind_from_name(const std::string& name) {
  if (name == "ising") return CouplingKind::Ising;
  if (name == "xy") return CouplingKind::XY;
  if (name == "heisenberg") return CouplingKind::Heisenberg;
  if (name == "general2") return CouplingKind::GeneralTwoSpin;
  throw ParseError("unknown coupling model \"" + name + "\"");
}

struct CouplingModel {
  CouplingKind kind = CouplingKind::GeneralTwoSpin;
  bool include_fields = false;
};

// Each parameter multiplies a fixed set of Pauli strings (one per string for
// the general model, 2-3 equal-coefficient strings for XY / Heisenberg).
// Parameter order: pairs (A,B), (A,C), (B,C) with axes in (x, y, z) order
// (the general model runs the 9 ordered axis pairs xx, xy, ..., zz per spin
// pair); optional single-spin fields follow, spins A, B, C times axes x,y,z.
inline std::vector<std::vector<PauliString>> model_generators(const CouplingModel& model) {
  using PA = PauliAxis;
  constexpr std::array<std::pair<int, int>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
  constexpr std::array<PA, 3> axes{PA::X, PA::Y, PA::Z};
  auto on_pair = [](std::pair<int, int> pr, PA first, PA second) {
    std::array<PA, 3> ax{PA::I, PA::I, PA::I};
    ax[static_cast<std::size_t>(pr.first)] = first;
    ax[static_cast<std::size_t>(pr.second)] = second;
    return PauliString(ax[0], ax[1], ax[2]);
  };

  std::vector<std::vector<PauliString>> gens;
  for (const auto& pr : pairs) {
    switch (model.kind) {
      case CouplingKind::Ising:
        gens.push_back({on_pair(pr, PA::Z, PA::Z)});
        break;
      case CouplingKind::XY:
        gens.push_back({on_pair(pr, PA::X, PA::X), on_pair(pr, PA::Y, PA::Y)});
        break;
      case CouplingKind::Heisenberg:
        gens.push_back({on_pair(pr, PA::X, PA::X), on_pair(pr, PA::Y, PA::Y),
                        on_pair(pr, PA::Z, PA::Z)});
        break;
      case CouplingKind::GeneralTwoSpin:
        for (PA first : axes)
          for (PA second : axes) gens.push_back({on_pair(pr, first, second)});
        break;
    }
  }
  if (model.include_fields) {
    for (int spin = 0; spin < 3; ++spin)
      for (PA axis : axes) {
        std::array<PA, 3> ax{PA::I, PA::I, PA::I};
        ax[static_cast<std::size_t>(spin)] = axis;
        gens.push_back({PauliString(ax[0], ax[1], ax[2])});
      }
  }
  return gens;
}

inline std::size_t param_count(const CouplingModel& model) {
  std::size_t n = model.kind == CouplingKind::GeneralTwoSpin ? 27 : 3;
  if (model.include_fields) n += 9;
  return n;
}

inline PauliDecomposition to_decomposition(const CouplingModel& model,
                                           std::span<const double> params) {
  const auto gens = model_generators(model);
  if (params.size() != gens.size())
    throw LengthMismatch("to_decomposition: expected " + std::to_string(gens.size()) +
                         " parameters, got " + std::to_string(params.size()));
  PauliDecomposition d;
  for (std::size_t k = 0; k < gens.size(); ++k)
    for (const PauliString& s : gens[k]) d.add_coeff(s, Complex(params[k], 0.0));
  return d;
}

// Inverse of to_decomposition for decompositions representable in the model;
// throws LengthMismatch if d uses strings outside the model's allowed set or
// breaks an equal-coefficient tie beyond tol.
inline std::vector<double> extract_params(const CouplingModel& model,
                                          const PauliDecomposition& d, double tol = 1e-12) {
  const auto gens = model_generators(model);
  std::vector<double> params(gens.size(), 0.0);
  PauliDecomposition covered;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const double c = d.coeff(gens[k].front()).real();
    for (const PauliString& s : gens[k]) {
      if (std::abs(d.coeff(s) - Complex(c)) > tol)
        throw LengthMismatch("extract_params: unequal coefficients within generator " +
                             gens[k].front().label());
      covered.set_coeff(s, Complex(c, 0.0));
    }
    params[k] = c;
  }
  for (const auto& [s, c] : d.terms())
    if (std::abs(c - covered.coeff(s)) > tol)
      throw LengthMismatch("extract_params: term " + s.label() +
                           " is not representable in the model");
  return params;
}

// Precomputes the per-parameter generator matrices once so repeated
// objective evaluations only assemble an 8x8 sum and exponentiate.
class ObjectiveEvaluator {
 public:
  ObjectiveEvaluator(const CouplingModel& model, const EvolutionConfig& cfg)
      : cfg_(cfg) {
    cfg_.validate();
    for (const auto& gen : model_generators(model)) {
      ComplexMatrix g(8);
      for (const PauliString& s : gen) g += string_matrix(s);
      generator_mats_.push_back(std::move(g));
    }
  }

  std::size_t dimension() const { return generator_mats_.size(); }

  double operator()(std::span<const double> params) const {
    if (params.size() != generator_mats_.size())
      throw LengthMismatch("objective: expected " + std::to_string(generator_mats_.size()) +
                           " parameters, got " + std::to_string(params.size()));
    ComplexMatrix h(8);
    for (std::size_t k = 0; k < params.size(); ++k) {
      if (params[k] == 0.0) continue;
      h += generator_mats_[k] * params[k];
    }
    return 1.0 - functional_fidelity(evolution_operator(h, cfg_));
  }

 private:
  EvolutionConfig cfg_;
  std::vector<ComplexMatrix> generator_mats_;
};

// 1 - functional_fidelity of the evolution operator of the template
// Hamiltonian; deterministic, in [0, 1].
inline double objective(const CouplingModel& model, std::span<const double> params,
                        const EvolutionConfig& cfg = {}) {
  return ObjectiveEvaluator(model, cfg)(params);
}

struct NelderMeadOptions {
  std::size_t max_evals = 40000;
  double simplex_tol = 1e-10;   // convergence on simplex diameter
  double function_tol = 1e-12;  // convergence on value spread
  double initial_step = 0.25;   // per-coordinate offset of the start simplex

  void validate(std::size_t dim) const {
    if (max_evals < dim + 2)
      throw InvalidOptions("NelderMeadOptions: max_evals must be at least dim + 2");
    if (!(simplex_tol >= 0.0) || !(function_tol >= 0.0))
      throw InvalidOptions("NelderMeadOptions: tolerances must be non-negative");
    if (!(initial_step > 0.0))
      throw InvalidOptions("NelderMeadOptions: initial_step must be > 0");
  }
};

struct NelderMeadResult {
  std::vector<double> best_point;
  double best_value = 0.0;
  std::size_t evaluations = 0;
  bool converged = false;
};

// Standard Nelder-Mead: reflection 1, expansion 2, contraction 0.5,
// shrink 0.5. Deterministic given the start point.
template <typename F>
NelderMeadResult nelder_mead(F&& f, std::span<const double> start,
                             const NelderMeadOptions& opts = {}) {
  const std::size_t n = start.size();
  if (n == 0) throw InvalidOptions("nelder_mead: empty start point");
  opts.validate(n);

  std::vector<std::vector<double>> pts;
  pts.reserve(n + 1);
  pts.emplace_back(start.begin(), start.end());
  for (std::size_t i = 0; i < n; ++i) {
    auto p = pts.front();
    p[i] += opts.initial_step;
    pts.push_back(std::move(p));
  }
  std::vector<double> vals(n + 1);
  std::size_t evals = 0;
  for (std::size_t i = 0; i <= n; ++i) {
    vals[i] = f(std::span<const double>(pts[i]));
    ++evals;
  }

  std::vector<std::size_t> order(n + 1);
  bool converged = false;
  while (evals < opts.max_evals) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
    {
      std::vector<std::vector<double>> p2(n + 1);
      std::vector<double> v2(n + 1);
      for (std::size_t i = 0; i <= n; ++i) {
        p2[i] = std::move(pts[order[i]]);
        v2[i] = vals[order[i]];
      }
      pts = std::move(p2);
      vals = std::move(v2);
    }

    double diameter = 0.0;
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        diameter = std::max(diameter, std::abs(pts[i][j] - pts[0][j]));
    if (diameter < opts.simplex_tol || vals[n] - vals[0] < opts.function_tol) {
      converged = true;
      break;
    }

    std::vector<double> centroid(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) centroid[j] += pts[i][j];
    }
    for (double& c : centroid) c /= static_cast<double>(n);

    auto blend = [&](double t) {  // centroid + t * (centroid - worst)
      std::vector<double> p(n);
      for (std::size_t j = 0; j < n; ++j) p[j] = centroid[j] + t * (centroid[j] - pts[n][j]);
      return p;
    };

    auto reflected = blend(1.0);
    const double fr = f(std::span<const double>(reflected));
    ++evals;
    if (fr < vals[0]) {
      if (evals >= opts.max_evals) {
        pts[n] = std::move(reflected);
        vals[n] = fr;
        break;
      }
      auto expanded = blend(2.0);
      const double fe = f(std::span<const double>(expanded));
      ++evals;
      if (fe < fr) {
        pts[n] = std::move(expanded);
        vals[n] = fe;
      } else {
        pts[n] = std::move(reflected);
        vals[n] = fr;
      }
    } else if (fr < vals[n - 1]) {
      pts[n] = std::move(reflected);
      vals[n] = fr;
    } else {
      auto contracted = fr < vals[n] ? blend(0.5) : blend(-0.5);
      const double fc = f(std::span<const double>(contracted));
      ++evals;
      if (fc < std::min(fr, vals[n])) {
        pts[n] = std::move(contracted);
        vals[n] = fc;
      } else {
        for (std::size_t i = 1; i <= n && evals < opts.max_evals; ++i) {
          for (std::size_t j = 0; j < n; ++j) pts[i][j] = pts[0][j] + 0.5 * (pts[i][j] - pts[0][j]);
          vals[i] = f(std::span<const double>(pts[i]));
          ++evals;
        }
      }
    }
  }

  std::size_t best = 0;
  for (std::size_t i = 1; i <= n; ++i)
    if (vals[i] < vals[best]) best = i;
  return {pts[best], vals[best], evals, converged};
}

struct SearchResult {
  CouplingModel model;
  std::vector<double> best_params;
  double best_fidelity = 0.0;              // recomputed from best_params
  std::size_t objective_evaluations = 0;   // summed over all restarts
  std::size_t restarts_used = 0;
  std::uint64_t seed = 0;
  bool converged = false;  // the winning restart stopped on tolerance, not budget
};

// Nelder-Mead from n_restarts random starts drawn uniformly from [-pi, pi]
// per coordinate; deterministic for a fixed seed, ties between restarts go
// to the lowest restart index.
inline SearchResult multi_start_search(const CouplingModel& model, const EvolutionConfig& cfg,
                                       std::size_t n_restarts, std::uint64_t seed,
                                       const NelderMeadOptions& opts = {}) {
  if (n_restarts < 1) throw InvalidOptions("multi_start_search: n_restarts must be >= 1");
  const ObjectiveEvaluator eval(model, cfg);
  const std::size_t dim = eval.dimension();

  SeededUniform rng(seed);
  std::vector<std::vector<double>> starts(n_restarts, std::vector<double>(dim));
  for (auto& s : starts)
    for (double& x : s) x = rng.uniform(-std::numbers::pi, std::numbers::pi);

  SearchResult out;
  out.model = model;
  out.restarts_used = n_restarts;
  out.seed = seed;
  double best_value = 0.0;
  bool have_best = false;
  for (std::size_t r = 0; r < n_restarts; ++r) {
    NelderMeadResult nm = nelder_mead(eval, std::span<const double>(starts[r]), opts);
    out.objective_evaluations += nm.evaluations;
    if (!have_best || nm.best_value < best_value) {
      have_best = true;
      best_value = nm.best_value;
      out.best_params = std::move(nm.best_point);
      out.converged = nm.converged;
    }
  }
  // recompute from scratch rather than trusting 1 - best_value
  out.best_fidelity = functional_fidelity(
      evolution_operator(reconstruct(to_decomposition(model, out.best_params)), cfg));
  return out;
}

}  // namespace spinxor
