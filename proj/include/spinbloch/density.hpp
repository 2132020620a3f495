// Copyright 2026 The spinbloch Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "spinbloch/spin.hpp"

namespace spinbloch {

class InvalidState : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Spin-j density matrix: Hermitian, unit trace, positive semidefinite.
/// Inputs that violate any of these are rejected, never clipped.
class DensityMatrix {
 public:
  static constexpr double kHermitianTolerance = 1e-12;
  static constexpr double kTraceTolerance = 1e-12;
  static constexpr double kEigenvalueTolerance = 1e-10;

  /// Throws InvalidState naming the first failed invariant.
  explicit DensityMatrix(const Matrix& matrix);

  /// Empty when `matrix` is a valid density matrix, otherwise a description
  /// of the first failed invariant.
  static std::optional<std::string> diagnose(const Matrix& matrix);

  static DensityMatrix from_pure(const Vector& state);

  Spin spin() const { return spin_; }
  const Matrix& matrix() const { return matrix_; }
  Eigen::Index dim() const { return matrix_.rows(); }

 private:
  Spin spin_;
  Matrix matrix_;
};

}  // namespace spinbloch
