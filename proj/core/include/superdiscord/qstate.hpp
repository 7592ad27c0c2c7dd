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

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "superdiscord/errors.hpp"

namespace superdiscord {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

/// Tolerances applied when a matrix is accepted as a density matrix.
inline constexpr double kStateTolerance = 1e-10;
/// Eigenvalues in [-kClipTolerance, 0) are treated as round-off and set to 0.
inline constexpr double kClipTolerance = 1e-8;

/// Trace-one, positive-semidefinite Hermitian matrix on A (x) B with
/// dim(B) = 2. Basis index is a * dim_b + b (B varies fastest).
///
/// Instances are only produced by validate(), so the invariants always hold.
class DensityMatrix {
 public:
  /// Symmetrizes m <- (m + m^dagger) / 2 and checks the invariants.
  /// Throws BadDimension, NotHermitian, TraceNotOne or NotPositive.
  static DensityMatrix validate(const Matrix& m, int dim_a, int dim_b = 2);

  int dim_a() const noexcept { return dim_a_; }
  int dim_b() const noexcept { return dim_b_; }
  int dim() const noexcept { return dim_a_ * dim_b_; }
  const Matrix& matrix() const noexcept { return entries_; }

  Complex operator()(int row, int col) const { return entries_(row, col); }

 private:
  DensityMatrix(Matrix entries, int dim_a, int dim_b)
      : entries_(std::move(entries)), dim_a_(dim_a), dim_b_(dim_b) {}

  Matrix entries_;
  int dim_a_;
  int dim_b_;
};

/// Eigenvalues of a Hermitian matrix, clipped into [0, 1], descending.
struct Spectrum {
  std::vector<double> eigenvalues;

  double sum() const;
};

/// Throws NotPositive if an eigenvalue is below -kClipTolerance and
/// InvalidState if one exceeds 1 + kClipTolerance.
Spectrum spectrum(const Matrix& hermitian);

/// Kronecker product a (x) b, validated as a bipartite state. b must be 2x2.
DensityMatrix tensor(const Matrix& a, const Matrix& b);

/// Tr_B rho, a dim_a x dim_a matrix.
Matrix partial_trace_b(const DensityMatrix& rho);
/// Tr_A rho, a 2 x 2 matrix.
Matrix partial_trace_a(const DensityMatrix& rho);

/// -sum lambda log2 lambda over the clipped spectrum, with 0 log 0 = 0.
double von_neumann_entropy(const Matrix& rho);
double von_neumann_entropy(const DensityMatrix& rho);

/// S(rho_A) + S(rho_B) - S(rho_AB).
double mutual_information(const DensityMatrix& rho);

/// Binary entropy h2(p) in bits.
double binary_entropy(double p);

}  // namespace superdiscord
