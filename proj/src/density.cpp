// Copyright 2026 The spinbloch Authors
// SPDX-License-Identifier: Apache-2.0

#include "spinbloch/density.hpp"

#include <cmath>
#include <sstream>

namespace spinbloch {

std::optional<std::string> DensityMatrix::diagnose(const Matrix& matrix) {
  std::ostringstream why;
  if (matrix.rows() == 0 || matrix.rows() != matrix.cols()) {
    why << "matrix must be square and nonempty (got " << matrix.rows() << "x" << matrix.cols() << ")";
    return why.str();
  }
  if (!matrix.allFinite()) return std::string("matrix has non-finite entries");
  const double asymmetry = (matrix - matrix.adjoint()).cwiseAbs().maxCoeff();
  if (asymmetry > kHermitianTolerance) {
    why << "not Hermitian: max |rho - rho^dagger| = " << asymmetry << " > " << kHermitianTolerance;
    return why.str();
  }
  const double trace_error = std::abs(matrix.trace() - Complex{1.0, 0.0});
  if (trace_error > kTraceTolerance) {
    why << "trace is not 1: |tr(rho) - 1| = " << trace_error << " > " << kTraceTolerance;
    return why.str();
  }
  const Matrix hermitian = 0.5 * (matrix + matrix.adjoint());
  const double smallest = Eigen::SelfAdjointEigenSolver<Matrix>(hermitian, Eigen::EigenvaluesOnly).eigenvalues()(0);
  if (smallest < -kEigenvalueTolerance) {
    why << "not positive semidefinite: smallest eigenvalue " << smallest << " < " << -kEigenvalueTolerance;
    return why.str();
  }
  return std::nullopt;
}

DensityMatrix::DensityMatrix(const Matrix& matrix) : spin_(Spin::from_dimension(std::max<Eigen::Index>(matrix.rows(), 1))) {
  if (auto failure = diagnose(matrix)) throw InvalidState(*failure);
  matrix_ = 0.5 * (matrix + matrix.adjoint());
}

DensityMatrix DensityMatrix::from_pure(const Vector& state) {
  if (state.size() == 0 || std::abs(state.norm() - 1.0) > 1e-12) {
    throw InvalidState("pure state must have unit norm");
  }
  return DensityMatrix(state * state.adjoint());
}

}  // namespace spinbloch
