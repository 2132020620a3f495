// Copyright 2026 The spinbloch Authors
// SPDX-License-Identifier: Apache-2.0

#include "spinbloch/states.hpp"

#include <cmath>
#include <cstdlib>

#include "spinbloch/angular.hpp"

namespace spinbloch {

namespace {

Matrix gaussian_matrix(Eigen::Index dim, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix g(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c) {
    for (Eigen::Index r = 0; r < dim; ++r) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(r, c) = Complex{re, im};
    }
  }
  return g;
}

}  // namespace

DensityMatrix coherent_density(Spin spin, double theta, double phi) {
  return DensityMatrix::from_pure(coherent_state(spin, theta, phi));
}

DensityMatrix basis_density(Spin spin, int two_m) {
  if (std::abs(two_m) > spin.two_j() || (spin.two_j() - two_m) % 2 != 0) {
    throw std::invalid_argument("magnetic number out of range for this spin");
  }
  Vector state = Vector::Zero(spin.dim());
  state(basis_row(spin, two_m)) = 1.0;
  return DensityMatrix::from_pure(state);
}

DensityMatrix cat_density(Spin spin) {
  if (spin.two_j() < 1) throw std::invalid_argument("cat state needs 2j >= 1");
  Vector state = Vector::Zero(spin.dim());
  state(0) = M_SQRT1_2;
  state(spin.dim() - 1) = M_SQRT1_2;
  return DensityMatrix::from_pure(state);
}

DensityMatrix tetrahedron_density() {
  const Spin spin(4);
  Vector state = Vector::Zero(spin.dim());
  state(basis_row(spin, 4)) = 1.0 / std::sqrt(3.0);
  state(basis_row(spin, -2)) = std::sqrt(2.0 / 3.0);
  return DensityMatrix::from_pure(state);
}

DensityMatrix maximally_mixed(Spin spin) {
  return DensityMatrix(Matrix::Identity(spin.dim(), spin.dim()) / static_cast<double>(spin.dim()));
}

DensityMatrix random_density(Spin spin, std::mt19937_64& rng) {
  const Matrix g = gaussian_matrix(spin.dim(), rng);
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix(rho);
}

Matrix random_hermitian(Eigen::Index dim, std::mt19937_64& rng) {
  const Matrix g = gaussian_matrix(dim, rng);
  return 0.5 * (g + g.adjoint());
}

Vector3 random_unit_vector(std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Vector3 v;
  do {
    v = Vector3(normal(rng), normal(rng), normal(rng));
  } while (v.norm() < 1e-6);
  return v.normalized();
}

}  // namespace spinbloch
