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
#include "superdiscord/qstate.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

namespace superdiscord {
namespace {

std::string describe(const char* what, double magnitude) {
  std::ostringstream os;
  os << what << " (magnitude " << magnitude << ")";
  return os.str();
}

// Closed form for the 2x2 case, which dominates the optimizer's inner loop.
std::vector<double> hermitian_eigenvalues(const Matrix& m) {
  if (m.rows() == 2) {
    const double a = m(0, 0).real();
    const double d = m(1, 1).real();
    const double mean = 0.5 * (a + d);
    const double radius = std::hypot(0.5 * (a - d), std::abs(m(0, 1)));
    return {mean + radius, mean - radius};
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error("Hermitian eigensolver failed to converge");
  }
  const Eigen::VectorXd& ev = solver.eigenvalues();
  std::vector<double> out(ev.data(), ev.data() + ev.size());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace

DensityMatrix DensityMatrix::validate(const Matrix& m, int dim_a, int dim_b) {
  if (dim_b != 2) {
    throw BadDimension("dim_b must be 2, got " + std::to_string(dim_b));
  }
  if (dim_a < 1) {
    throw BadDimension("dim_a must be positive, got " + std::to_string(dim_a));
  }
  const Eigen::Index n = static_cast<Eigen::Index>(dim_a) * dim_b;
  if (m.rows() != n || m.cols() != n) {
    std::ostringstream os;
    os << "matrix is " << m.rows() << "x" << m.cols() << ", expected " << n << "x" << n;
    throw BadDimension(os.str());
  }
  if (!m.allFinite()) {
    throw DomainError("matrix has non-finite entries");
  }

  const double hermitian_defect = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (hermitian_defect > kStateTolerance) {
    throw NotHermitian(describe("matrix is not Hermitian", hermitian_defect), hermitian_defect);
  }
  Matrix sym = 0.5 * (m + m.adjoint());

  const double trace_defect = std::abs(sym.trace().real() - 1.0);
  if (trace_defect > kStateTolerance) {
    throw TraceNotOne(describe("trace is not one", trace_defect), trace_defect);
  }

  const double smallest = hermitian_eigenvalues(sym).back();
  if (smallest < -kStateTolerance) {
    throw NotPositive(describe("matrix has a negative eigenvalue", smallest), smallest);
  }
  return DensityMatrix(std::move(sym), dim_a, dim_b);
}

double Spectrum::sum() const {
  return std::accumulate(eigenvalues.begin(), eigenvalues.end(), 0.0);
}

Spectrum spectrum(const Matrix& hermitian) {
  Spectrum s{hermitian_eigenvalues(hermitian)};
  for (double& lambda : s.eigenvalues) {
    if (lambda < -kClipTolerance) {
      throw NotPositive(describe("eigenvalue below zero", lambda), lambda);
    }
    if (lambda > 1.0 + kClipTolerance) {
      throw InvalidState(describe("eigenvalue above one", lambda), lambda);
    }
    lambda = std::clamp(lambda, 0.0, 1.0);
  }
  return s;
}

DensityMatrix tensor(const Matrix& a, const Matrix& b) {
  if (b.rows() != 2 || b.cols() != 2) {
    throw BadDimension("second tensor factor must be 2x2");
  }
  if (a.rows() != a.cols() || a.rows() < 1) {
    throw BadDimension("first tensor factor must be square");
  }
  const Eigen::Index da = a.rows();
  Matrix out(2 * da, 2 * da);
  for (Eigen::Index i = 0; i < da; ++i) {
    for (Eigen::Index j = 0; j < da; ++j) {
      out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    }
  }
  return DensityMatrix::validate(out, static_cast<int>(da), 2);
}

Matrix partial_trace_b(const DensityMatrix& rho) {
  const int da = rho.dim_a();
  const int db = rho.dim_b();
  const Matrix& m = rho.matrix();
  Matrix out = Matrix::Zero(da, da);
  for (int i = 0; i < da; ++i) {
    for (int j = 0; j < da; ++j) {
      for (int b = 0; b < db; ++b) {
        out(i, j) += m(i * db + b, j * db + b);
      }
    }
  }
  return out;
}

Matrix partial_trace_a(const DensityMatrix& rho) {
  const int da = rho.dim_a();
  const int db = rho.dim_b();
  const Matrix& m = rho.matrix();
  Matrix out = Matrix::Zero(db, db);
  for (int k = 0; k < db; ++k) {
    for (int l = 0; l < db; ++l) {
      for (int a = 0; a < da; ++a) {
        out(k, l) += m(a * db + k, a * db + l);
      }
    }
  }
  return out;
}

double von_neumann_entropy(const Matrix& rho) {
  double s = 0.0;
  for (double lambda : spectrum(rho).eigenvalues) {
    if (lambda > 0.0) s -= lambda * std::log2(lambda);
  }
  return s;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  return von_neumann_entropy(rho.matrix());
}

double mutual_information(const DensityMatrix& rho) {
  return von_neumann_entropy(partial_trace_b(rho)) + von_neumann_entropy(partial_trace_a(rho)) -
         von_neumann_entropy(rho);
}

double binary_entropy(double p) {
  double s = 0.0;
  if (p > 0.0) s -= p * std::log2(p);
  if (p < 1.0) s -= (1.0 - p) * std::log2(1.0 - p);
  return s;
}

}  // namespace superdiscord
