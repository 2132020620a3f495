// Copyright 2026 The spinbloch Authors
// SPDX-License-Identifier: Apache-2.0

#include "spinbloch/weinberg.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "spinbloch/angular.hpp"
#include "spinbloch/combinatorics.hpp"

namespace spinbloch {

namespace {

const Complex kPhases[4] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};

int popcount(std::uint32_t v) { return std::popcount(v); }

}  // namespace

DickeBasis dicke_basis(int n, int max_two_j) {
  if (n < 1) throw std::invalid_argument("Dicke basis needs at least one qubit");
  require_within_cap(Spin(n), max_two_j);
  DickeBasis basis;
  basis.n = n;
  basis.vectors.resize(static_cast<std::size_t>(n) + 1);
  const std::uint32_t states = std::uint32_t{1} << n;
  for (std::uint32_t b = 0; b < states; ++b) {
    const int k = popcount(b);
    const double amplitude = 1.0 / std::sqrt(static_cast<double>(binomial(n, k)));
    basis.vectors[static_cast<std::size_t>(k)].push_back({b, amplitude});
  }
  return basis;
}

Matrix project_pauli_string(std::span<const int> factors) {
  const int n = static_cast<int>(factors.size());
  if (n > kAbsoluteMaxTwoJ) throw std::invalid_argument("Pauli string too long");
  std::uint32_t flip = 0, ymask = 0, zmask = 0;
  for (int i = 0; i < n; ++i) {
    const int f = factors[static_cast<std::size_t>(i)];
    if (f < 0 || f > 3) throw std::invalid_argument("Pauli factor must lie in 0..3");
    const std::uint32_t bit = std::uint32_t{1} << i;
    if (f == 1 || f == 2) flip |= bit;
    if (f == 2) ymask |= bit;
    if (f == 3) zmask |= bit;
  }
  const std::uint32_t all = (n == 32) ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1);

  // sigma_y|up> = i|down>, sigma_y|down> = -i|up>, sigma_z|down> = -|down>;
  // the phase is i^e with e counted mod 4.
  Matrix s = Matrix::Zero(n + 1, n + 1);
  for (std::uint32_t b = 0; b <= all; ++b) {
    const std::uint32_t image = b ^ flip;
    const int y_up = popcount(b & ymask);
    const int y_down = popcount(~b & ymask);
    const int z_down = popcount(~b & zmask & all);
    const int exponent = ((y_up - y_down + 2 * z_down) % 4 + 4) % 4;
    const int l = popcount(b);
    const int k = popcount(image);
    s(DickeBasis::spin_row(n, k), DickeBasis::spin_row(n, l)) += kPhases[exponent];
    if (b == all) break;
  }
  for (int k = 0; k <= n; ++k) {
    for (int l = 0; l <= n; ++l) {
      s(DickeBasis::spin_row(n, k), DickeBasis::spin_row(n, l)) /=
          std::sqrt(static_cast<double>(binomial(n, k)) * static_cast<double>(binomial(n, l)));
    }
  }
  return s;
}

Matrix covariant_matrix(int n, const MultiIndex& index) {
  if (index.rank() != n) {
    throw std::invalid_argument("multi-index rank " + std::to_string(index.rank()) +
                                " does not match N = " + std::to_string(n));
  }
  return project_pauli_string(index.indices());
}

CovariantMatrixSet::CovariantMatrixSet(Spin spin, std::vector<MultiIndex> indices, std::vector<Matrix> matrices)
    : spin_(spin), indices_(std::move(indices)), matrices_(std::move(matrices)) {
  if (indices_.size() != matrices_.size() || indices_.size() != canonical_count(spin.two_j())) {
    throw std::invalid_argument("covariant set must hold one matrix per canonical index");
  }
}

const Matrix& CovariantMatrixSet::at(const MultiIndex& index) const {
  if (index.rank() != spin_.two_j()) throw std::invalid_argument("multi-index rank does not match spin");
  return matrices_[canonical_position(index)];
}

CovariantMatrixSet covariant_set(Spin spin, int max_two_j) {
  require_within_cap(spin, max_two_j);
  auto indices = canonical_indices(spin.two_j());
  std::vector<Matrix> matrices;
  matrices.reserve(indices.size());
  for (const auto& index : indices) matrices.push_back(covariant_matrix(spin.two_j(), index));
  return CovariantMatrixSet(spin, std::move(indices), std::move(matrices));
}

Matrix pi_polynomial(Spin spin, const FourVector& q) {
  const Eigen::Index dim = spin.dim();
  const Matrix identity = Matrix::Identity(dim, dim);
  const Matrix twice_qj = 2.0 * spin_operators(spin).along(q.spatial());
  const Matrix twice_qj_sq = twice_qj * twice_qj;
  const double q0 = q.q0();
  const double qsq = q.spatial().squaredNorm();
  const double interval = q0 * q0 - qsq;
  const int n = spin.two_j();

  if (spin.is_integer()) {
    const int j = n / 2;
    Matrix result = std::pow(interval, j) * identity;
    for (int k = 1; k <= j; ++k) {
      Matrix term = twice_qj;
      for (int r = 1; r <= k - 1; ++r) term = term * (twice_qj_sq - 4.0 * r * r * qsq * identity);
      term = term * (twice_qj + 2.0 * k * q0 * identity);
      result += std::pow(interval, j - k) / static_cast<double>(factorial(2 * k)) * term;
    }
    return result;
  }

  const int h = (n - 1) / 2;  // j - 1/2
  Matrix result = std::pow(interval, h) * (-q0 * identity - twice_qj);
  for (int k = 1; k <= h; ++k) {
    Matrix term = identity;
    for (int r = 1; r <= k; ++r) {
      const double odd = 2.0 * r - 1.0;
      term = term * (twice_qj_sq - odd * odd * qsq * identity);
    }
    term = term * (twice_qj + (2.0 * k + 1.0) * q0 * identity);
    result -= std::pow(interval, h - k) / static_cast<double>(factorial(2 * k + 1)) * term;
  }
  return result;
}

Matrix pi_from_set(const CovariantMatrixSet& set, const FourVector& q) {
  const Eigen::Index dim = set.spin().dim();
  Matrix result = Matrix::Zero(dim, dim);
  for (std::size_t i = 0; i < set.size(); ++i) {
    const MultiIndex& index = set.indices()[i];
    double weight = static_cast<double>(index.multiplicity());
    for (int mu : index.indices()) weight *= q[static_cast<std::size_t>(mu)];
    result += weight * set[i];
  }
  return (set.spin().two_j() % 2 == 0) ? result : Matrix(-result);
}

Matrix pi_boost(Spin spin, const FourVector& q) {
  const double q0 = q.q0();
  const Vector3 spatial = q.spatial();
  const double length = spatial.norm();
  if (!(q0 < 0.0) || !(length > 0.0) || !(length < -q0)) {
    throw std::domain_error("pi_boost requires q0 < 0 and 0 < |q| < |q0|");
  }
  const double eta = std::atanh(-length / q0);
  const double prefactor = std::pow(q0 * q0 - length * length, spin.j());
  const Matrix generator = spin_operators(spin).along(spatial / length);
  return prefactor * hermitian_exponential(generator, Complex{-2.0 * eta, 0.0});
}

double husimi_check(const CovariantMatrixSet& set, double theta, double phi) {
  const Vector alpha = coherent_state(set.spin(), theta, phi);
  const FourVector n = direction_of(theta, phi);
  double worst = 0.0;
  for (std::size_t i = 0; i < set.size(); ++i) {
    const Complex expectation = alpha.dot(set[i] * alpha);
    double product = 1.0;
    for (int mu : set.indices()[i].indices()) product *= n[static_cast<std::size_t>(mu)];
    worst = std::max(worst, std::abs(expectation - product));
  }
  return worst;
}

}  // namespace spinbloch
