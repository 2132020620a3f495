// Copyright 2026 The spinbloch Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace spinbloch {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using Vector3 = Eigen::Vector3d;
using Matrix3 = Eigen::Matrix3d;

inline constexpr const char* kVersion = "0.1.0";

// Default ceiling on 2j for every spin-indexed construction. Callers may raise
// it up to kAbsoluteMaxTwoJ; beyond that the 2^N qubit sweeps stop being cheap.
inline constexpr int kDefaultMaxTwoJ = 12;
inline constexpr int kAbsoluteMaxTwoJ = 24;

/// Spin quantum number j, stored exactly as the integer N = 2j.
class Spin {
 public:
  constexpr explicit Spin(int two_j) : two_j_(two_j) {
    if (two_j < 0) throw std::invalid_argument("two_j must be nonnegative");
  }

  static Spin from_dimension(Eigen::Index dim) {
    if (dim < 1) throw std::invalid_argument("state space dimension must be positive");
    return Spin(static_cast<int>(dim - 1));
  }

  constexpr int two_j() const { return two_j_; }
  constexpr double j() const { return 0.5 * two_j_; }
  constexpr int dim() const { return two_j_ + 1; }
  constexpr bool is_integer() const { return two_j_ % 2 == 0; }

  constexpr bool operator==(const Spin&) const = default;

 private:
  int two_j_;
};

/// Throws std::invalid_argument when `spin` exceeds `max_two_j` (or the
/// absolute ceiling).
inline void require_within_cap(Spin spin, int max_two_j = kDefaultMaxTwoJ) {
  if (max_two_j > kAbsoluteMaxTwoJ) {
    throw std::invalid_argument("two_j cap " + std::to_string(max_two_j) +
                                " exceeds absolute limit " + std::to_string(kAbsoluteMaxTwoJ));
  }
  if (spin.two_j() > max_two_j) {
    throw std::invalid_argument("two_j = " + std::to_string(spin.two_j()) + " exceeds cap " +
                                std::to_string(max_two_j));
  }
}

/// Real 4-vector (q0, q1, q2, q3) = (q0, **q**). Directions are the special
/// case (1, n) with |n| = 1.
struct FourVector {
  std::array<double, 4> components{};

  constexpr FourVector() = default;
  constexpr FourVector(double q0, double q1, double q2, double q3) : components{q0, q1, q2, q3} {}
  FourVector(double q0, const Vector3& spatial) : components{q0, spatial.x(), spatial.y(), spatial.z()} {}

  constexpr double operator[](std::size_t mu) const { return components[mu]; }
  constexpr double q0() const { return components[0]; }
  Vector3 spatial() const { return {components[1], components[2], components[3]}; }
};

}  // namespace spinbloch
