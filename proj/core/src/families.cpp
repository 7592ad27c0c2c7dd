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
#include "superdiscord/families.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace superdiscord {
namespace {

void require_unit_interval(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw DomainError(std::string(name) + " must lie in [0, 1]");
  }
}

}  // namespace

DensityMatrix pure_schmidt(PureSchmidtParams p) {
  require_unit_interval(p.lambda0, "lambda0");
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(4);
  psi(0) = std::sqrt(p.lambda0);
  psi(3) = std::sqrt(1.0 - p.lambda0);
  return DensityMatrix::validate(psi * psi.adjoint(), 2);
}

DensityMatrix werner(WernerParams p) {
  require_unit_interval(p.z, "z");
  Eigen::VectorXcd singlet = Eigen::VectorXcd::Zero(4);
  singlet(1) = std::numbers::sqrt2 / 2.0;
  singlet(2) = -std::numbers::sqrt2 / 2.0;
  Matrix m = p.z * singlet * singlet.adjoint() +
             (1.0 - p.z) / 4.0 * Matrix::Identity(4, 4);
  return DensityMatrix::validate(m, 2);
}

DensityMatrix random_state(std::uint64_t seed, int dim_a, int rank) {
  if (dim_a < 1) throw BadDimension("dim_a must be positive");
  const int n = 2 * dim_a;
  if (rank < 1 || rank > n) {
    throw BadRank("rank must lie in [1, " + std::to_string(n) + "]");
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  Matrix g(n, rank);
  for (int j = 0; j < rank; ++j) {
    for (int i = 0; i < n; ++i) {
      const double re = normal(rng);
      g(i, j) = Complex(re, normal(rng));
    }
  }
  Matrix m = g * g.adjoint();
  m /= m.trace().real();
  return DensityMatrix::validate(m, dim_a);
}

double oracle_pure_delta(double lambda0, double x, double theta) {
  require_unit_interval(lambda0, "lambda0");
  if (!(x >= 0.0)) throw DomainError("x must be >= 0");
  const double lambda1 = 1.0 - lambda0;
  const double t = std::tanh(x);
  const double c2 = std::isinf(x) ? 0.0 : std::pow(std::cosh(x), 2);
  double total = 0.0;
  for (double sign : {-1.0, 1.0}) {
    const double p = 0.5 * (1.0 + sign * (lambda0 - lambda1) * t * std::cos(theta));
    if (p <= 0.0) continue;
    // lambda0 lambda1 / (p^2 cosh^2 x); vanishes in the projective limit.
    const double ratio = c2 == 0.0 ? 0.0 : lambda0 * lambda1 / (p * p * c2);
    double radicand = 1.0 - ratio;
    if (radicand < -1e-12) {
      throw DomainError("negative radicand in k_+- eigenvalues");
    }
    radicand = std::max(radicand, 0.0);
    const double k_plus = 0.5 * (1.0 + std::sqrt(radicand));
    total += p * binary_entropy(k_plus);
  }
  return total;
}

double oracle_post_pure_wce(double lambda0, double x, double gamma, double delta) {
  require_unit_interval(lambda0, "lambda0");
  const double t = std::tanh(x);
  const double s = std::sin(gamma) * std::cos(delta);
  const double radicand = 1.0 - 4.0 * lambda0 * (1.0 - lambda0) * (1.0 - t * t * s * s);
  const double l = std::sqrt(std::max(radicand, 0.0));
  return binary_entropy(0.5 * (1.0 + l));
}

WernerOracle oracle_werner(double z, double x) {
  require_unit_interval(z, "z");
  if (!(x >= 0.0)) throw DomainError("x must be >= 0");
  WernerOracle o;
  o.strong_ce = binary_entropy(0.5 * (1.0 + z));
  o.weak_ce = binary_entropy(0.5 * (1.0 + z * std::tanh(x)));
  o.delta = o.weak_ce - o.strong_ce;
  return o;
}

}  // namespace superdiscord
