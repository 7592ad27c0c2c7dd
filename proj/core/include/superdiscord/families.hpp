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

#include <cstdint>

#include "superdiscord/qstate.hpp"

namespace superdiscord {

/// sqrt(lambda0)|00> + sqrt(1 - lambda0)|11>.
struct PureSchmidtParams {
  double lambda0 = 0.5;
};

/// z |Psi-><Psi-| + (1 - z) I / 4.
struct WernerParams {
  double z = 0.0;
};

DensityMatrix pure_schmidt(PureSchmidtParams p);
DensityMatrix werner(WernerParams p);

/// G G^dagger / Tr(G G^dagger), G a (2 dim_a) x rank matrix of complex
/// standard normals drawn from a generator seeded with seed.
DensityMatrix random_state(std::uint64_t seed, int dim_a = 2, int rank = 4);

/// Weak conditional entropy of the pure Schmidt state for a measurement at
/// polar angle theta, written through the k_+- eigenvalues. Equals D_w - D_s
/// once minimized over theta.
double oracle_pure_delta(double lambda0, double x, double theta);

/// h2((1 + l) / 2) with l = sqrt(1 - 4 l0 l1 (1 - tanh^2 x sin^2 gamma cos^2 delta)):
/// weak conditional entropy of the pure state after a {|+>, |->} measurement.
double oracle_post_pure_wce(double lambda0, double x, double gamma, double delta);

struct WernerOracle {
  double strong_ce = 0.0;
  double weak_ce = 0.0;
  double delta = 0.0;
};

WernerOracle oracle_werner(double z, double x);

}  // namespace superdiscord
