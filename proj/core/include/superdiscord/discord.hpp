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
#pragma once

#include "superdiscord/measure.hpp"
#include "superdiscord/qstate.hpp"

namespace superdiscord {

/// Lattice scan over gamma in [0, pi] (endpoints included) and delta in
/// [0, 2 pi) followed by a compass search from the best lattice point.
struct OptimizerConfig {
  int grid_gamma = 64;
  int grid_delta = 64;
  /// Entropy convergence tolerance, bits.
  double refine_tol = 1e-8;
  int max_refine_iters = 2000;
  /// Worker threads for the lattice scan; values < 1 mean 1.
  int threads = 1;

  /// Throws DomainError when a field is out of range.
  void check() const;
};

struct Minimum {
  QubitBasis basis;
  double value = 0.0;
  /// The objective varies by no more than refine_tol over the whole lattice.
  bool flat = false;
};

/// S(rho_AB) - S(rho_B). Negative for entangled states.
double quantum_conditional_entropy(const DensityMatrix& rho);

/// p1 S(rho_A|1) + p2 S(rho_A|2) for the projective measurement of B in basis.
double strong_conditional_entropy(const DensityMatrix& rho, const QubitBasis& basis);

/// p(x) S(rho_A|P(x)) + p(-x) S(rho_A|P(-x)). Equal to the strong value when
/// the strength is infinite.
double weak_conditional_entropy(const DensityMatrix& rho, const QubitBasis& basis,
                                Strength strength);

/// Minimizes the weak (or, for infinite strength, strong) conditional entropy
/// over qubit bases. Among lattice points within refine_tol of the lattice
/// minimum the smallest (gamma, delta) seeds the refinement.
/// Throws NoConvergence if refinement hits max_refine_iters.
Minimum minimize_conditional_entropy(const DensityMatrix& rho, Strength strength,
                                     const OptimizerConfig& cfg = {});

struct DiscordValue {
  double value = 0.0;
  Minimum minimum;
};

/// D_s = min S(A|{Pi}) - S(A|B).
DiscordValue normal_discord(const DensityMatrix& rho, const OptimizerConfig& cfg = {});

/// D_w = min S_w(A|{P(x)}) - S(A|B).
DiscordValue super_discord(const DensityMatrix& rho, Strength strength,
                           const OptimizerConfig& cfg = {});

/// D_w - D_s.
double extra_correlation(const DensityMatrix& rho, Strength strength,
                         const OptimizerConfig& cfg = {});

struct DiscordReport {
  double conditional_entropy_qq = 0.0;  // S(A|B)
  double mutual_info = 0.0;
  double strong_conditional_entropy = 0.0;  // minimized
  double weak_conditional_entropy = 0.0;    // minimized
  double discord = 0.0;
  double super_discord = 0.0;
  double delta = 0.0;  // super_discord - discord
  QubitBasis strong_basis;
  QubitBasis weak_basis;
  Strength strength = Strength::infinite();
  /// Strong-entropy landscape flat over the lattice.
  bool ambiguous = false;
  /// Basis used to build the post-measured state.
  QubitBasis post_basis;
  double post_super_discord = 0.0;
  QubitBasis post_weak_basis;
  double gap = 0.0;  // |delta - post_super_discord|
  bool coincident = false;
};

/// Every quantity above in one pass.
DiscordReport discord_report(const DensityMatrix& rho, Strength strength,
                             const OptimizerConfig& cfg = {});

struct ResurrectionRecord {
  double delta = 0.0;
  double post_state_super_discord = 0.0;
  double gap = 0.0;
  QubitBasis strong_basis;
  QubitBasis weak_basis;
  /// Basis of the projective measurement that produced the post-measured state.
  QubitBasis post_basis;
  QubitBasis post_weak_basis;
  bool ambiguous = false;
  /// post_weak_basis and post_basis define the same projectors.
  bool coincident = false;
};

/// Compares D_w - D_s of rho with D_w of the state left by the projective
/// measurement that minimizes the strong conditional entropy. When that
/// landscape is flat every basis minimizes it, and the weak minimizer is used.
/// Requires a finite strength x > 0 (DomainError otherwise).
ResurrectionRecord verify_resurrection(const DensityMatrix& rho, Strength strength,
                                       const OptimizerConfig& cfg = {});

}  // namespace superdiscord
