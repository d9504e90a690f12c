// Copyright 2026 The logicint Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "logicint/operator_core.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "logicint/errors.hpp"

namespace logicint {

std::size_t max_dimension(std::size_t max_sites) {
  if (max_sites >= 8 * sizeof(std::size_t) - 1) {
    throw SizeLimitError("max_sites " + std::to_string(max_sites) + " is not addressable");
  }
  return std::size_t{1} << max_sites;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b, std::size_t max_sites) {
  const auto limit = max_dimension(max_sites);
  const auto rows = static_cast<std::size_t>(a.rows()) * static_cast<std::size_t>(b.rows());
  const auto cols = static_cast<std::size_t>(a.cols()) * static_cast<std::size_t>(b.cols());
  if (rows > limit || cols > limit) {
    throw SizeLimitError("kron: result " + std::to_string(rows) + "x" + std::to_string(cols) +
                         " exceeds the " + std::to_string(limit) + "-state limit");
  }
  ComplexMatrix out(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

double hermiticity_defect(const ComplexMatrix& h) {
  if (h.rows() != h.cols()) return std::numeric_limits<double>::infinity();
  return (h - h.adjoint()).cwiseAbs().maxCoeff();
}

ComplexMatrix hermitian_evolve(const ComplexMatrix& h, double beta) {
  if (h.rows() == 0 || h.rows() != h.cols()) {
    throw ContractViolation("hermitian_evolve: operator must be square and non-empty");
  }
  const double defect = hermiticity_defect(h);
  if (!(defect <= kHermitianTolerance)) {
    throw ContractViolation("hermitian_evolve: operator is not Hermitian (max |h - h^dagger| = " +
                            std::to_string(defect) + ")");
  }
  if (!std::isfinite(beta)) throw ArgumentError("hermitian_evolve: beta must be finite");

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(h);
  if (eig.info() != Eigen::Success) {
    throw ContractViolation("hermitian_evolve: eigendecomposition did not converge");
  }
  const auto& v = eig.eigenvectors();
  Eigen::VectorXcd phases = (Complex(0.0, beta) * eig.eigenvalues().cast<Complex>()).array().exp();
  return v * phases.asDiagonal() * v.adjoint();
}

double unitarity_defect(const ComplexMatrix& u) {
  return (u * u.adjoint() - ComplexMatrix::Identity(u.rows(), u.rows())).norm();
}

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) { return (a - b).norm(); }

bool all_finite(const ComplexMatrix& m) { return m.allFinite(); }

}  // namespace logicint
