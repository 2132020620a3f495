// Copyright 2026 The spinbloch Authors
// SPDX-License-Identifier: Apache-2.0

// Generalized Bloch representation: a spin-j state is the real, symmetric,
// g-traceless coordinate tensor x_mu = tr(rho S_mu), and
// rho = 2^-N sum_mu x_mu S_mu.

#pragma once

#include <vector>

#include "spinbloch/density.hpp"
#include "spinbloch/multi_index.hpp"
#include "spinbloch/weinberg.hpp"

namespace spinbloch {

/// Symmetric rank-N tensor, one real value per canonical multi-index.
class CoordinateTensor {
 public:
  CoordinateTensor(Spin spin, std::vector<double> values);
  static CoordinateTensor zeros(Spin spin);

  Spin spin() const { return spin_; }
  const std::vector<double>& values() const { return values_; }
  std::vector<MultiIndex> indices() const { return canonical_indices(spin_.two_j()); }

  double at(const MultiIndex& index) const;
  double& at(const MultiIndex& index);

  /// sum_mu x_mu q_mu1 ... q_muN over all index strings.
  double contract(const FourVector& q) const;

 private:
  std::size_t position(const MultiIndex& index) const;

  Spin spin_;
  std::vector<double> values_;
};

CoordinateTensor coordinates_of(const DensityMatrix& rho, const CovariantMatrixSet& set);

/// tr(A S_mu) for any Hermitian A (no trace or positivity requirement).
CoordinateTensor coordinates_of_operator(const Matrix& hermitian, const CovariantMatrixSet& set);

/// 2^-N sum_mu x_mu S_mu without validating the result.
Matrix reconstruct_operator(const CoordinateTensor& x, const CovariantMatrixSet& set);

/// As reconstruct_operator, then validated as a density matrix.
DensityMatrix reconstruct(const CoordinateTensor& x, const CovariantMatrixSet& set);

/// tr(rho rho') = 2^-N sum_mu x_mu y_mu
double hs_inner(const CoordinateTensor& x, const CoordinateTensor& y);
double purity(const CoordinateTensor& x);

/// x_mu -> R_mu1nu1 ... R_muNnuN x_nu with R extended by R_00 = 1, R_0a = R_a0 = 0.
CoordinateTensor rotate_tensor(const CoordinateTensor& x, const Matrix3& rotation);

/// Spin-k coordinates read off as x_{mu1...mu2k 0...0}.
CoordinateTensor reduced_coordinates(const CoordinateTensor& x, Spin k);

/// Spin-k state of 2k of the 2j constituent qubits, computed through the
/// Dicke decomposition |D_N^(k)> = sum_i c_i |D_K^(i)>|D_{N-K}^(k-i)>.
DensityMatrix reduced_density(const DensityMatrix& rho, Spin k);

/// x_mu = n_mu1 ... n_muN with n = (1, sin t cos p, sin t sin p, cos t).
CoordinateTensor coherent_coordinates(Spin spin, double theta, double phi);

/// Coordinates of I/(N+1): symmetric coefficients of
/// sum_s C(N,2s)/(2s+1) q0^(N-2s) |q|^(2s).
CoordinateTensor maximally_mixed_coordinates(Spin spin);

/// Coordinates of (|j,-j> + |j,j>)/sqrt(2) from the closed product formula.
CoordinateTensor cat_coordinates(Spin spin);

struct CanonicalReport {
  /// max over rank-(N-2) suffixes s of |-x_00s + x_11s + x_22s + x_33s|
  double trace_violation = 0.0;
  MultiIndex worst_suffix;
  /// |x_0...0 - 1|
  double unit_trace_deviation = 0.0;
  /// max |x - coordinates_of(reconstruct_operator(x))|
  double reconstruction_deviation = 0.0;
  double tolerance = 0.0;

  bool g_traceless() const { return trace_violation <= tolerance; }
  bool unit_trace() const { return unit_trace_deviation <= tolerance; }
  bool canonical() const { return g_traceless() && unit_trace(); }
  bool matches_reconstruction() const { return reconstruction_deviation <= tolerance; }
};

CanonicalReport canonical_check(const CoordinateTensor& x, const CovariantMatrixSet& set, double tolerance = 1e-10);

/// Rank-N symmetric tensor whose polynomial is (-q0^2 + |q|^2) times the
/// monomial of `suffix`. It lies in the null space of the reconstruction map.
CoordinateTensor metric_null_direction(Spin spin, const MultiIndex& suffix);

}  // namespace spinbloch
