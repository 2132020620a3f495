// Copyright 2026 The spinbloch Authors
// SPDX-License-Identifier: Apache-2.0

#include "spinbloch/angular.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "spinbloch/combinatorics.hpp"

namespace spinbloch {

namespace {

constexpr double kAxisTolerance = 1e-12;

void require_unit_axis(const Vector3& axis) {
  if (!axis.allFinite() || std::abs(axis.norm() - 1.0) > kAxisTolerance) {
    throw std::invalid_argument("rotation axis must have unit norm");
  }
}

bool same_parity(int a, int b) { return ((a + b) % 2) == 0; }

template <typename T>
T int_power(T base, int exponent) {
  T result{1};
  for (int i = 0; i < exponent; ++i) result *= base;
  return result;
}

}  // namespace

SpinOperators spin_operators(Spin spin) {
  const Eigen::Index dim = spin.dim();
  const double j = spin.j();
  Matrix raise = Matrix::Zero(dim, dim);
  Matrix jz = Matrix::Zero(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    const double m = j - static_cast<double>(r);
    jz(r, r) = m;
    // J+ |j,m> lands on row r-1 (m+1).
    if (r > 0) raise(r - 1, r) = std::sqrt(j * (j + 1.0) - m * (m + 1.0));
  }
  const Matrix lower = raise.adjoint();
  const Complex i{0.0, 1.0};
  return SpinOperators{(raise + lower) / 2.0, (raise - lower) / (2.0 * i), jz};
}

Vector coherent_state(Spin spin, double theta, double phi) {
  const int n = spin.two_j();
  const double s = std::sin(0.5 * theta);
  const Complex c = std::cos(0.5 * theta) * std::polar(1.0, -phi);
  Vector state(spin.dim());
  for (int r = 0; r < spin.dim(); ++r) {
    // j + m = n - r, j - m = r
    const int up = n - r;
    state(r) = std::sqrt(static_cast<double>(binomial(n, up))) * int_power(s, r) * int_power(c, up);
  }
  return state;
}

FourVector direction_of(double theta, double phi) {
  return FourVector(1.0, std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta));
}

Matrix hermitian_exponential(const Matrix& generator, Complex factor) {
  Eigen::SelfAdjointEigenSolver<Matrix> eig(generator);
  if (eig.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
  Vector phases(eig.eigenvalues().size());
  for (Eigen::Index i = 0; i < phases.size(); ++i) phases(i) = std::exp(factor * eig.eigenvalues()(i));
  return eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint();
}

Matrix rotation_operator(Spin spin, const Vector3& axis, double angle) {
  require_unit_axis(axis);
  return hermitian_exponential(spin_operators(spin).along(axis), Complex{0.0, -angle});
}

Matrix3 rotation_matrix_3d(const Vector3& axis, double angle) {
  require_unit_axis(axis);
  return Eigen::AngleAxisd(angle, axis).toRotationMatrix();
}

double clebsch_gordan(int two_j1, int two_m1, int two_j2, int two_m2, int two_J, int two_M) {
  if (two_j1 < 0 || two_j2 < 0 || two_J < 0) return 0.0;
  if (two_M != two_m1 + two_m2) return 0.0;
  if (std::abs(two_m1) > two_j1 || std::abs(two_m2) > two_j2 || std::abs(two_M) > two_J) return 0.0;
  if (!same_parity(two_j1, two_m1) || !same_parity(two_j2, two_m2) || !same_parity(two_J, two_M)) return 0.0;
  if (two_J < std::abs(two_j1 - two_j2) || two_J > two_j1 + two_j2) return 0.0;
  if (!same_parity(two_j1 + two_j2, two_J)) return 0.0;

  // Racah's closed form; every quantity below is an integer.
  const int a = (two_J + two_j1 - two_j2) / 2;
  const int b = (two_J - two_j1 + two_j2) / 2;
  const int c = (two_j1 + two_j2 - two_J) / 2;
  const int total = (two_j1 + two_j2 + two_J) / 2 + 1;
  const int jpm = (two_J + two_M) / 2, jmm = (two_J - two_M) / 2;
  const int j1pm = (two_j1 + two_m1) / 2, j1mm = (two_j1 - two_m1) / 2;
  const int j2pm = (two_j2 + two_m2) / 2, j2mm = (two_j2 - two_m2) / 2;

  const double log_prefactor =
      0.5 * (std::log(two_J + 1.0) + log_factorial(a) + log_factorial(b) + log_factorial(c) -
             log_factorial(total) + log_factorial(jpm) + log_factorial(jmm) + log_factorial(j1pm) +
             log_factorial(j1mm) + log_factorial(j2pm) + log_factorial(j2mm));

  // (J - j2 + m1 + k)! and (J - j1 - m2 + k)!
  const int shift1 = (two_J - two_j2 + two_m1) / 2;
  const int shift2 = (two_J - two_j1 - two_m2) / 2;
  const int k_min = std::max({0, -shift1, -shift2});
  const int k_max = std::min({c, j1mm, j2pm});

  double sum = 0.0;
  for (int k = k_min; k <= k_max; ++k) {
    const double log_den = log_factorial(k) + log_factorial(c - k) + log_factorial(j1mm - k) +
                           log_factorial(j2pm - k) + log_factorial(shift1 + k) + log_factorial(shift2 + k);
    const double term = std::exp(log_prefactor - log_den);
    sum += (k % 2 == 0) ? term : -term;
  }
  return sum;
}

TensorOperator tensor_operator(Spin spin, int k, int q) {
  const int n = spin.two_j();
  if (k < 0 || k > n || std::abs(q) > k) {
    throw std::invalid_argument("tensor operator rank out of range: k=" + std::to_string(k) +
                                " q=" + std::to_string(q) + " for two_j=" + std::to_string(n));
  }
  const double norm = std::sqrt((2.0 * k + 1.0) / (n + 1.0));
  Matrix t = Matrix::Zero(spin.dim(), spin.dim());
  for (int col = 0; col < spin.dim(); ++col) {
    const int two_m = n - 2 * col;
    const int two_m_out = two_m + 2 * q;
    if (std::abs(two_m_out) > n) continue;
    t(basis_row(spin, two_m_out), col) = norm * clebsch_gordan(n, two_m, 2 * k, 2 * q, n, two_m_out);
  }
  return TensorOperator{k, q, std::move(t)};
}

}  // namespace spinbloch
