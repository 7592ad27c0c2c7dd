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
#include "superdiscord/measure.hpp"

#include <cmath>
#include <numbers>

#include "blocked_state.hpp"

namespace superdiscord {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_two_pi(double angle) {
  double r = std::fmod(angle, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

QubitOperator outer(const Qubit& v) { return v * v.adjoint(); }

}  // namespace

QubitBasis::QubitBasis(double gamma, double delta) {
  // gamma -> gamma + 2 pi only flips the sign of both kets, and
  // (gamma, delta) ~ (2 pi - gamma, delta + pi) up to a phase.
  gamma = wrap_two_pi(gamma);
  if (gamma > std::numbers::pi) {
    gamma = kTwoPi - gamma;
    delta += std::numbers::pi;
  }
  gamma_ = gamma;
  delta_ = wrap_two_pi(delta);
}

Qubit QubitBasis::first() const {
  const double c = std::cos(0.5 * gamma_);
  const double s = std::sin(0.5 * gamma_);
  return Qubit(c, std::polar(s, delta_));
}

Qubit QubitBasis::second() const {
  const double c = std::cos(0.5 * gamma_);
  const double s = std::sin(0.5 * gamma_);
  return Qubit(-std::polar(s, -delta_), c);
}

bool same_measurement(const QubitBasis& a, const QubitBasis& b, double threshold) {
  const Qubit u = a.first();
  const double direct = std::norm(u.dot(b.first()));
  const double swapped = std::norm(u.dot(b.second()));
  return std::max(direct, swapped) >= threshold;
}

Strength::Strength(double x) : x_(x), infinite_(false) {
  if (std::isnan(x) || x < 0.0) {
    throw NegativeStrength("measurement strength must be >= 0");
  }
  if (std::isinf(x)) {
    x_ = 0.0;
    infinite_ = true;
  }
}

ProjectorPair projectors(const QubitBasis& basis) {
  return {outer(basis.first()), outer(basis.second())};
}

WeakOperatorPair::WeakOperatorPair(const QubitBasis& basis, Strength strength)
    : basis_(basis), strength_(strength) {
  if (strength.is_infinite()) {
    amp_plus_ = 0.0;
    amp_minus_ = 1.0;
  } else {
    // (1 -+ tanh x) / 2 = 1 / (1 + e^{+-2x}), exact for large x.
    const double x = strength.value();
    amp_plus_ = std::sqrt(1.0 / (1.0 + std::exp(2.0 * x)));
    amp_minus_ = std::sqrt(1.0 / (1.0 + std::exp(-2.0 * x)));
  }
  const ProjectorPair pi = projectors(basis);
  plus_ = amp_plus_ * pi.first + amp_minus_ * pi.second;
  minus_ = amp_minus_ * pi.first + amp_plus_ * pi.second;
}

WeakOperatorPair weak_pair(const QubitBasis& basis, Strength strength) {
  return WeakOperatorPair(basis, strength);
}

MeasurementOutcome measure_b(const DensityMatrix& rho, const QubitOperator& kraus) {
  return detail::BlockedState(rho).outcome(kraus.adjoint() * kraus);
}

OutcomePair weak_outcomes(const DensityMatrix& rho, const WeakOperatorPair& pair) {
  const detail::BlockedState blocks(rho);
  return {blocks.outcome(pair.plus().adjoint() * pair.plus()),
          blocks.outcome(pair.minus().adjoint() * pair.minus())};
}

OutcomePair projective_outcomes(const DensityMatrix& rho, const QubitBasis& basis) {
  const detail::BlockedState blocks(rho);
  const ProjectorPair pi = projectors(basis);
  return {blocks.outcome(pi.first), blocks.outcome(pi.second)};
}

DensityMatrix project_state(const DensityMatrix& rho, const QubitBasis& basis) {
  const ProjectorPair pi = projectors(basis);
  const int da = rho.dim_a();
  Matrix out = Matrix::Zero(rho.dim(), rho.dim());
  for (const QubitOperator* p : {&pi.first, &pi.second}) {
    Matrix lifted = Matrix::Zero(rho.dim(), rho.dim());
    for (int a = 0; a < da; ++a) lifted.block<2, 2>(2 * a, 2 * a) = *p;
    out += lifted * rho.matrix() * lifted;
  }
  return DensityMatrix::validate(out, da, 2);
}

}  // namespace superdiscord
