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

#include "superdiscord/measure.hpp"
#include "superdiscord/qstate.hpp"

namespace superdiscord::detail {

// rho split into the four dim_a x dim_a blocks R_{bb'} = <b|_B rho |b'>_B, so
// that Tr_B[(I (x) K) rho (I (x) K^dagger)] = sum_{bb'} (K^dagger K)_{b'b} R_{bb'}.
class BlockedState {
 public:
  explicit BlockedState(const DensityMatrix& rho) : dim_a_(rho.dim_a()) {
    const Matrix& m = rho.matrix();
    for (int b = 0; b < 2; ++b) {
      for (int bp = 0; bp < 2; ++bp) {
        Matrix& r = blocks_[b * 2 + bp];
        r.resize(dim_a_, dim_a_);
        for (int a = 0; a < dim_a_; ++a) {
          for (int ap = 0; ap < dim_a_; ++ap) {
            r(a, ap) = m(a * 2 + b, ap * 2 + bp);
          }
        }
      }
    }
  }

  int dim_a() const noexcept { return dim_a_; }

  // Unnormalized conditional state for effect operator E = K^dagger K.
  Matrix conditional(const QubitOperator& effect) const {
    Matrix out = effect(0, 0) * blocks_[0];
    out.noalias() += effect(1, 0) * blocks_[1];
    out.noalias() += effect(0, 1) * blocks_[2];
    out.noalias() += effect(1, 1) * blocks_[3];
    return out;
  }

  MeasurementOutcome outcome(const QubitOperator& effect) const {
    Matrix unnormalized = conditional(effect);
    MeasurementOutcome result;
    const double p = unnormalized.trace().real();
    if (p < kDegenerateProbability) {
      result.conditional_state = Matrix::Identity(dim_a_, dim_a_) / static_cast<double>(dim_a_);
      result.probability = 0.0;
      result.degenerate = true;
      return result;
    }
    result.conditional_state = (unnormalized + unnormalized.adjoint()) / (2.0 * p);
    result.probability = p;
    return result;
  }

 private:
  int dim_a_;
  std::array<Matrix, 4> blocks_;
};

}  // namespace superdiscord::detail
