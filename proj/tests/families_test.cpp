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

#include "gtest/gtest.h"
#include "superdiscord/discord.hpp"
#include "superdiscord/measure.hpp"
#include "test_support.hpp"

using namespace superdiscord;
namespace st = superdiscord::testing;

namespace {

constexpr double kPi = std::numbers::pi;
// Minimum over a 1e-4 theta grid of the pure-state k_+- expression at
// lambda0 = 0.2, x = 0.2, evaluated at 30 digits; it sits at theta = pi/2.
constexpr double kPureDelta = 0.701022234130459145003;
constexpr double kH2Of02 = 0.721928094887362347870;
// Werner z = 0.8, x = 0.5: h2((1 + z tanh x)/2) - h2((1 + z)/2).
constexpr double kWernerDelta08 = 0.430036993795035658190;

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST(PureSchmidt, ProductEndpoint) {
  const DensityMatrix rho = pure_schmidt({1.0});
  EXPECT_LE(max_abs(rho.matrix() - st::diag({1, 0, 0, 0})), 1e-15);
  EXPECT_NEAR(normal_discord(rho).value, 0.0, 1e-9);
  EXPECT_NEAR(super_discord(rho, Strength(0.5)).value, 0.0, 1e-9);
}

TEST(PureSchmidt, MaximallyEntangled) {
  const DensityMatrix rho = pure_schmidt({0.5});
  EXPECT_LE(max_abs(rho.matrix() - st::bell_phi_plus()), 1e-15);
  EXPECT_NEAR(normal_discord(rho).value, 1.0, 1e-9);
}

TEST(PureSchmidt, DiscordIsEntanglementEntropy) {
  const DensityMatrix rho = pure_schmidt({0.2});
  EXPECT_NEAR(von_neumann_entropy(rho), 0.0, 1e-12);
  EXPECT_LE(max_abs(partial_trace_a(rho) - st::diag({0.2, 0.8})), 1e-15);
  EXPECT_NEAR(normal_discord(rho).value, kH2Of02, 1e-9);
}

TEST(PureSchmidt, RejectsOutOfRange) {
  EXPECT_THROW(pure_schmidt({-0.1}), DomainError);
  EXPECT_THROW(pure_schmidt({1.5}), DomainError);
}

TEST(Werner, Endpoints) {
  EXPECT_LE(max_abs(werner({0.0}).matrix() - Matrix::Identity(4, 4) / 4.0), 1e-15);
  Eigen::VectorXcd singlet = Eigen::VectorXcd::Zero(4);
  singlet(1) = 1 / std::sqrt(2.0);
  singlet(2) = -1 / std::sqrt(2.0);
  EXPECT_LE(max_abs(werner({1.0}).matrix() - st::ket_density(singlet)), 1e-15);
  EXPECT_THROW(werner({1.2}), DomainError);
}

TEST(Werner, Spectrum) {
  for (double z : {0.1, 0.5, 0.9}) {
    const Spectrum s = spectrum(werner({z}).matrix());
    EXPECT_NEAR(s.eigenvalues[0], (1 + 3 * z) / 4, 1e-14);
    for (int i = 1; i < 4; ++i) EXPECT_NEAR(s.eigenvalues[i], (1 - z) / 4, 1e-14);
  }
  const Spectrum half = spectrum(werner({0.5}).matrix());
  EXPECT_NEAR(half.eigenvalues[0], 0.625, 1e-14);
  EXPECT_NEAR(half.eigenvalues[3], 0.125, 1e-14);
}

TEST(RandomState, RankOneIsPure) {
  for (std::uint64_t seed : {3u, 17u, 99u}) {
    EXPECT_NEAR(von_neumann_entropy(random_state(seed, 2, 1)), 0.0, 1e-9);
  }
}

TEST(RandomState, Deterministic) {
  const DensityMatrix a = random_state(42, 2, 3);
  const DensityMatrix b = random_state(42, 2, 3);
  EXPECT_TRUE(a.matrix() == b.matrix());
  EXPECT_FALSE(a.matrix() == random_state(43, 2, 3).matrix());
}

TEST(RandomState, FullRankIsPositiveDefinite) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Spectrum s = spectrum(random_state(seed, 2, 4).matrix());
    EXPECT_GT(s.eigenvalues.back(), 0.0);
    EXPECT_NEAR(s.sum(), 1.0, 1e-9);
  }
}

TEST(RandomState, RejectsBadRank) {
  EXPECT_THROW(random_state(1, 2, 0), BadRank);
  EXPECT_THROW(random_state(1, 2, 5), BadRank);
  EXPECT_NO_THROW(random_state(1, 3, 6));
}

TEST(OraclePureDelta, HeadlineValue) {
  EXPECT_NEAR(oracle_pure_delta(0.2, 0.2, kPi / 2), kPureDelta, 1e-13);
  // pi/2 is the minimizer over theta.
  double best = 1e9;
  for (int i = 0; i <= 31415; ++i) best = std::min(best, oracle_pure_delta(0.2, 0.2, i * 1e-4));
  EXPECT_NEAR(best, kPureDelta, 1e-9);
  EXPECT_NEAR(std::round(best * 1e4) / 1e4, 0.7010, 1e-12);
}

TEST(OraclePureDelta, MaximallyEntangledAndProduct) {
  for (double x : {0.1, 0.5, 2.0}) {
    EXPECT_NEAR(oracle_pure_delta(0.5, x, kPi / 2), st::h2((1 + std::tanh(x)) / 2), 1e-12);
    for (double theta : {0.0, 1.0, kPi}) EXPECT_NEAR(oracle_pure_delta(1.0, x, theta), 0.0, 1e-15);
  }
  EXPECT_THROW(oracle_pure_delta(0.2, -1.0, 0.0), DomainError);
}

TEST(OraclePostPureWce, Examples) {
  const double s = oracle_post_pure_wce(0.2, 0.2, kPi / 2, 0.0);
  // D_w(post) = S(B) - S(AB) + S_w = 1 - 1 + S_w.
  EXPECT_NEAR(s, kPureDelta, 1e-12);
  const double flat = st::h2((1 + std::sqrt(1 - 4 * 0.2 * 0.8)) / 2);
  for (double x : {0.1, 1.0, 5.0}) {
    EXPECT_NEAR(oracle_post_pure_wce(0.2, x, 0.0, 1.3), flat, 1e-12);
    EXPECT_NEAR(oracle_post_pure_wce(0.5, x, kPi / 2, 0.0), st::h2((1 + std::tanh(x)) / 2), 1e-12);
  }
}

TEST(OracleWerner, Examples) {
  const WernerOracle zero = oracle_werner(0.0, 1.0);
  EXPECT_NEAR(zero.strong_ce, 1.0, 1e-15);
  EXPECT_NEAR(zero.weak_ce, 1.0, 1e-15);
  EXPECT_NEAR(zero.delta, 0.0, 1e-15);
  EXPECT_NEAR(oracle_werner(1.0, 30.0).delta, 0.0, 1e-12);
  EXPECT_NEAR(oracle_werner(1.0, std::numeric_limits<double>::infinity()).delta, 0.0, 1e-15);

  const WernerOracle w = oracle_werner(0.8, 0.5);
  EXPECT_NEAR(w.delta, kWernerDelta08, 1e-13);
  EXPECT_NEAR(w.delta, w.weak_ce - w.strong_ce, 1e-15);
  const DensityMatrix rho = werner({0.8});
  EXPECT_NEAR(minimize_conditional_entropy(rho, Strength(0.5)).value, w.weak_ce, 1e-9);
  EXPECT_NEAR(minimize_conditional_entropy(rho, Strength::infinite()).value, w.strong_ce, 1e-9);
  EXPECT_NEAR(extra_correlation(rho, Strength(0.5)), kWernerDelta08, 1e-9);
}

TEST(FamilyProperties, WernerWeakEntropyMatchesClosedForm) {
  for (int i = 0; i < 10; ++i) {
    const double z = (i + 0.5) / 10.0;
    const DensityMatrix rho = werner({z});
    for (int j = 0; j < 10; ++j) {
      const double x = 0.3 * j;
      EXPECT_NEAR(weak_conditional_entropy(rho, QubitBasis::computational(), Strength(x)),
                  oracle_werner(z, x).weak_ce, 1e-9)
          << "z=" << z << " x=" << x;
    }
  }
}

TEST(FamilyProperties, PureDeltaMatchesNumericExtraCorrelation) {
  OptimizerConfig cfg;
  for (int i = 1; i <= 9; ++i) {
    const double l0 = 0.1 * i;
    for (double x : {0.1, 0.5, 1.0}) {
      double oracle = 1e9;
      for (int k = 0; k <= 31415; ++k) oracle = std::min(oracle, oracle_pure_delta(l0, x, k * 1e-4));
      EXPECT_NEAR(extra_correlation(pure_schmidt({l0}), Strength(x), cfg), oracle, 1e-6)
          << "lambda0=" << l0 << " x=" << x;
    }
  }
}

TEST(FamilyProperties, PostPureWceMatchesMeasuredState) {
  for (double l0 : {0.1, 0.2, 0.35}) {
    const DensityMatrix post = project_state(pure_schmidt({l0}), QubitBasis(kPi / 2, 0.0));
    for (double x : {0.1, 0.2, 1.0}) {
      EXPECT_NEAR(oracle_post_pure_wce(l0, x, kPi / 2, 0.0),
                  weak_conditional_entropy(post, QubitBasis(kPi / 2, 0.0), Strength(x)), 1e-9);
      EXPECT_NEAR(oracle_post_pure_wce(l0, x, 1.1, 0.7),
                  weak_conditional_entropy(post, QubitBasis(1.1, 0.7), Strength(x)), 1e-9);
    }
  }
}
