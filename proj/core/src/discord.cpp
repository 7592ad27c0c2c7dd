// Copyright 2026 The superdiscord Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "superdiscord/discord.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>
#include <vector>

#include "blocked_state.hpp"

namespace superdiscord {
namespace {

// Smaller moves are round-off; accepting them lets flat directions drift.
constexpr double kImprovementFloor = 1e-13;

// Weighted entropy of the two outcomes of a measurement on B whose effects
// are a2_first Pi_phi + a2_second Pi_phi_bar and the complement.
class ConditionalEntropy {
 public:
  ConditionalEntropy(const DensityMatrix& rho, Strength strength) : blocks_(rho) {
    const WeakOperatorPair unit(QubitBasis(), strength);
    // Effects: P(x)^2 and P(-x)^2.
    weight_plus_ = unit.amp_plus() * unit.amp_plus();
    weight_minus_ = unit.amp_minus() * unit.amp_minus();
  }

  double operator()(const QubitBasis& basis) const {
    const ProjectorPair pi = projectors(basis);
    const QubitOperator plus = weight_plus_ * pi.first + weight_minus_ * pi.second;
    const QubitOperator minus = pi.first + pi.second - plus;
    return weighted(blocks_.outcome(plus)) + weighted(blocks_.outcome(minus));
  }

  double operator()(double gamma, double delta) const { return (*this)(QubitBasis(gamma, delta)); }

 private:
  static double weighted(const MeasurementOutcome& o) {
    return o.degenerate ? 0.0 : o.probability * von_neumann_entropy(o.conditional_state);
  }

  detail::BlockedState blocks_;
  double weight_plus_;
  double weight_minus_;
};

std::vector<double> scan_lattice(const ConditionalEntropy& f, const OptimizerConfig& cfg) {
  const int ng = cfg.grid_gamma;
  const int nd = cfg.grid_delta;
  const double dg = std::numbers::pi / (ng - 1);
  const double dd = 2.0 * std::numbers::pi / nd;
  std::vector<double> values(static_cast<std::size_t>(ng) * nd);

  auto rows = [&](int begin, int end) {
    for (int i = begin; i < end; ++i) {
      for (int j = 0; j < nd; ++j) {
        values[static_cast<std::size_t>(i) * nd + j] = f(i * dg, j * dd);
      }
    }
  };

  const int threads = std::clamp(cfg.threads, 1, ng);
  if (threads == 1) {
    rows(0, ng);
    return values;
  }
  std::vector<std::jthread> workers;
  workers.reserve(threads);
  for (int t = 0; t < threads; ++t) {
    workers.emplace_back(rows, t * ng / threads, (t + 1) * ng / threads);
  }
  workers.clear();  // joins
  return values;
}

Minimum minimize(const ConditionalEntropy& f, const OptimizerConfig& cfg) {
  cfg.check();
  const std::vector<double> values = scan_lattice(f, cfg);
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  const double floor = *lo;

  // Values are stored row-major in (gamma, delta), so the first hit is the
  // smallest (gamma, delta) within tolerance of the lattice minimum.
  const auto seed = std::find_if(values.begin(), values.end(),
                                 [&](double v) { return v <= floor + cfg.refine_tol; });
  const auto index = static_cast<int>(seed - values.begin());

  double step_g = std::numbers::pi / (cfg.grid_gamma - 1);
  double step_d = 2.0 * std::numbers::pi / cfg.grid_delta;
  double gamma = (index / cfg.grid_delta) * step_g;
  double delta = (index % cfg.grid_delta) * step_d;
  double best = *seed;

  // Compass search: move to the best improving neighbour, otherwise halve the
  // steps. Done once every neighbour is within refine_tol of the centre.
  bool converged = false;
  for (int iter = 0; iter < cfg.max_refine_iters; ++iter) {
    const double candidates[4][2] = {{gamma + step_g, delta},
                                     {gamma - step_g, delta},
                                     {gamma, delta + step_d},
                                     {gamma, delta - step_d}};
    double spread = 0.0;
    int winner = -1;
    double winner_value = best;
    for (int k = 0; k < 4; ++k) {
      const double v = f(candidates[k][0], candidates[k][1]);
      spread = std::max(spread, std::abs(v - best));
      if (v < winner_value - kImprovementFloor) {
        winner_value = v;
        winner = k;
      }
    }
    if (spread < cfg.refine_tol) {
      converged = true;
      break;
    }
    if (winner >= 0) {
      gamma = candidates[winner][0];
      delta = candidates[winner][1];
      best = winner_value;
    } else {
      step_g *= 0.5;
      step_d *= 0.5;
    }
  }
  if (!converged) {
    throw NoConvergence("basis refinement did not reach refine_tol within max_refine_iters",
                        best);
  }
  return Minimum{QubitBasis(gamma, delta), best, (*hi - *lo) <= cfg.refine_tol};
}

}  // namespace

void OptimizerConfig::check() const {
  if (grid_gamma < 8 || grid_delta < 8) {
    throw DomainError("optimizer lattice needs at least 8 points per angle");
  }
  if (!(refine_tol > 0.0) || !std::isfinite(refine_tol)) {
    throw DomainError("refine_tol must be a positive finite number");
  }
  if (max_refine_iters < 1) {
    throw DomainError("max_refine_iters must be positive");
  }
}

double quantum_conditional_entropy(const DensityMatrix& rho) {
  return von_neumann_entropy(rho) - von_neumann_entropy(partial_trace_a(rho));
}

double strong_conditional_entropy(const DensityMatrix& rho, const QubitBasis& basis) {
  return ConditionalEntropy(rho, Strength::infinite())(basis);
}

double weak_conditional_entropy(const DensityMatrix& rho, const QubitBasis& basis,
                                Strength strength) {
  return ConditionalEntropy(rho, strength)(basis);
}

Minimum minimize_conditional_entropy(const DensityMatrix& rho, Strength strength,
                                     const OptimizerConfig& cfg) {
  return minimize(ConditionalEntropy(rho, strength), cfg);
}

DiscordValue normal_discord(const DensityMatrix& rho, const OptimizerConfig& cfg) {
  Minimum m = minimize_conditional_entropy(rho, Strength::infinite(), cfg);
  return {m.value - quantum_conditional_entropy(rho), m};
}

DiscordValue super_discord(const DensityMatrix& rho, Strength strength,
                           const OptimizerConfig& cfg) {
  Minimum m = minimize_conditional_entropy(rho, strength, cfg);
  return {m.value - quantum_conditional_entropy(rho), m};
}

double extra_correlation(const DensityMatrix& rho, Strength strength, const OptimizerConfig& cfg) {
  return super_discord(rho, strength, cfg).value - normal_discord(rho, cfg).value;
}

DiscordReport discord_report(const DensityMatrix& rho, Strength strength,
                             const OptimizerConfig& cfg) {
  DiscordReport r;
  r.strength = strength;
  r.conditional_entropy_qq = quantum_conditional_entropy(rho);
  r.mutual_info = mutual_information(rho);

  const Minimum strong = minimize_conditional_entropy(rho, Strength::infinite(), cfg);
  const Minimum weak =
      strength.is_infinite() ? strong : minimize_conditional_entropy(rho, strength, cfg);
  r.strong_conditional_entropy = strong.value;
  r.weak_conditional_entropy = weak.value;
  r.strong_basis = strong.basis;
  r.weak_basis = weak.basis;
  r.discord = strong.value - r.conditional_entropy_qq;
  r.super_discord = weak.value - r.conditional_entropy_qq;
  r.delta = r.super_discord - r.discord;

  // A flat strong landscape means every basis minimizes it; the weak
  // minimizer is then the one that also minimizes the weak entropy.
  r.ambiguous = strong.flat;
  r.post_basis = strong.flat ? weak.basis : strong.basis;
  const DiscordValue post = super_discord(project_state(rho, r.post_basis), strength, cfg);
  r.post_super_discord = post.value;
  r.post_weak_basis = post.minimum.basis;
  r.gap = std::abs(r.delta - r.post_super_discord);
  r.coincident = same_measurement(r.post_weak_basis, r.post_basis);
  return r;
}

ResurrectionRecord verify_resurrection(const DensityMatrix& rho, Strength strength,
                                       const OptimizerConfig& cfg) {
  if (strength.is_infinite() || !(strength.value() > 0.0)) {
    throw DomainError("resurrection check needs a finite strength x > 0");
  }
  const DiscordReport r = discord_report(rho, strength, cfg);
  ResurrectionRecord out;
  out.delta = r.delta;
  out.post_state_super_discord = r.post_super_discord;
  out.gap = r.gap;
  out.strong_basis = r.strong_basis;
  out.weak_basis = r.weak_basis;
  out.post_basis = r.post_basis;
  out.post_weak_basis = r.post_weak_basis;
  out.ambiguous = r.ambiguous;
  out.coincident = r.coincident;
  return out;
}

}  // namespace superdiscord
