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

#include <array>
#include <limits>

#include <Eigen/Dense>

#include "superdiscord/qstate.hpp"

namespace superdiscord {

using Qubit = Eigen::Vector2cd;
using QubitOperator = Eigen::Matrix2cd;

/// Orthonormal qubit basis {|phi>, |phi_bar>} with
///   |phi>     = cos(gamma/2)|0> + e^{i delta} sin(gamma/2)|1>
///   |phi_bar> = cos(gamma/2)|1> - e^{-i delta} sin(gamma/2)|0>.
/// Angles are stored canonically: gamma in [0, pi], delta in [0, 2 pi).
/// Out-of-range input is folded onto the same pair of rays.
class QubitBasis {
 public:
  QubitBasis() = default;
  QubitBasis(double gamma, double delta);

  static QubitBasis computational() { return {}; }

  double gamma() const noexcept { return gamma_; }
  double delta() const noexcept { return delta_; }

  Qubit first() const;
  Qubit second() const;

 private:
  double gamma_ = 0.0;
  double delta_ = 0.0;
};

/// True when both bases define the same unordered pair of projectors, i.e.
/// max(|<a|b>|^2, |<a|b_bar>|^2) >= threshold. Global phases are ignored.
bool same_measurement(const QubitBasis& a, const QubitBasis& b,
                      double threshold = 1.0 - 1e-4);

/// Measurement strength x >= 0, with an exact projective limit.
class Strength {
 public:
  /// Throws NegativeStrength for x < 0 or NaN. +inf maps to infinite().
  explicit Strength(double x);

  static Strength infinite() noexcept { return Strength(); }

  bool is_infinite() const noexcept { return infinite_; }
  /// +inf for the projective limit.
  double value() const noexcept {
    return infinite_ ? std::numeric_limits<double>::infinity() : x_;
  }

 private:
  Strength() noexcept : x_(0.0), infinite_(true) {}

  double x_;
  bool infinite_;
};

struct ProjectorPair {
  QubitOperator first;   // |phi><phi|
  QubitOperator second;  // |phi_bar><phi_bar|
};

ProjectorPair projectors(const QubitBasis& basis);

/// P(x) = a(x) Pi_phi + a(-x) Pi_phi_bar and P(-x) = a(-x) Pi_phi + a(x) Pi_phi_bar,
/// with a(+-x) = sqrt((1 -+ tanh x) / 2). As x -> inf, P(-x) -> Pi_phi and
/// P(x) -> Pi_phi_bar.
class WeakOperatorPair {
 public:
  WeakOperatorPair(const QubitBasis& basis, Strength strength);

  const QubitBasis& basis() const noexcept { return basis_; }
  Strength strength() const noexcept { return strength_; }
  double amp_plus() const noexcept { return amp_plus_; }
  double amp_minus() const noexcept { return amp_minus_; }

  const QubitOperator& plus() const noexcept { return plus_; }    // P(x)
  const QubitOperator& minus() const noexcept { return minus_; }  // P(-x)

 private:
  QubitBasis basis_;
  Strength strength_;
  double amp_plus_;
  double amp_minus_;
  QubitOperator plus_;
  QubitOperator minus_;
};

WeakOperatorPair weak_pair(const QubitBasis& basis, Strength strength);

/// Below this an outcome is degenerate: probability is reported as 0 and the
/// conditional state is the maximally mixed state on A.
inline constexpr double kDegenerateProbability = 1e-12;

struct MeasurementOutcome {
  Matrix conditional_state;
  double probability = 0.0;
  bool degenerate = false;
};

/// Weak outcomes are ordered {P(x), P(-x)}; projective outcomes are ordered
/// {Pi_phi, Pi_phi_bar}. In the projective limit weak[0] matches
/// projective[1] and weak[1] matches projective[0].
using OutcomePair = std::array<MeasurementOutcome, 2>;

OutcomePair weak_outcomes(const DensityMatrix& rho, const WeakOperatorPair& pair);
OutcomePair projective_outcomes(const DensityMatrix& rho, const QubitBasis& basis);

/// sum_i (I (x) Pi_i) rho (I (x) Pi_i), the state after a non-selective
/// projective measurement of B.
DensityMatrix project_state(const DensityMatrix& rho, const QubitBasis& basis);

/// Outcome for a single Kraus operator K on B: unnormalized conditional state
/// Tr_B[(I (x) K) rho (I (x) K^dagger)] normalized by its trace.
MeasurementOutcome measure_b(const DensityMatrix& rho, const QubitOperator& kraus);

}  // namespace superdiscord
