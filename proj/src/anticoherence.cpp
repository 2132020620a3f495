// Copyright 2026 The spinbloch Authors
// SPDX-License-Identifier: Apache-2.0

#include "spinbloch/anticoherence.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "spinbloch/angular.hpp"
#include "spinbloch/tensor.hpp"
#include "spinbloch/weinberg.hpp"

namespace spinbloch {

Matrix MultipoleCoefficients::reconstruct() const {
  Matrix out = Matrix::Zero(spin.dim(), spin.dim());
  for (int k = 0; k < static_cast<int>(by_rank.size()); ++k) {
    for (int q = -k; q <= k; ++q) out += at(k, q) * tensor_operator(spin, k, q).matrix;
  }
  return out;
}

MultipoleCoefficients multipole_expand(const DensityMatrix& rho) {
  const Spin spin = rho.spin();
  MultipoleCoefficients out{spin, {}};
  for (int k = 0; k <= spin.two_j(); ++k) {
    std::vector<Complex> row;
    for (int q = -k; q <= k; ++q) {
      // tr(rho T^dagger) = sum_ij rho_ij conj(T_ij)
      row.push_back((rho.matrix().cwiseProduct(tensor_operator(spin, k, q).matrix.conjugate())).sum());
    }
    out.by_rank.push_back(std::move(row));
  }
  return out;
}

std::vector<double> reduction_residuals(const DensityMatrix& rho) {
  std::vector<double> out;
  for (int t = 0; t <= rho.spin().two_j(); ++t) {
    const Matrix target = Matrix::Identity(t + 1, t + 1) / static_cast<double>(t + 1);
    out.push_back((reduced_density(rho, Spin(t)).matrix() - target).norm());
  }
  return out;
}

std::vector<double> multipole_residuals(const DensityMatrix& rho) {
  const MultipoleCoefficients coefficients = multipole_expand(rho);
  std::vector<double> out;
  out.push_back(std::abs(coefficients.at(0, 0) - 1.0 / std::sqrt(static_cast<double>(rho.dim()))));
  for (int k = 1; k <= rho.spin().two_j(); ++k) {
    double worst = 0.0;
    for (int q = -k; q <= k; ++q) worst = std::max(worst, std::abs(coefficients.at(k, q)));
    out.push_back(worst);
  }
  return out;
}

std::vector<double> moment_residuals(const DensityMatrix& rho, const std::vector<Vector3>& directions) {
  const Spin spin = rho.spin();
  const int n = spin.two_j();
  const auto& sample = directions.empty() ? default_directions() : directions;
  const SpinOperators ops = spin_operators(spin);
  std::vector<double> low(static_cast<std::size_t>(n) + 1, INFINITY);
  std::vector<double> high(static_cast<std::size_t>(n) + 1, -INFINITY);
  for (const Vector3& direction : sample) {
    const Matrix projection = ops.along(direction.normalized());
    Matrix power = Matrix::Identity(spin.dim(), spin.dim());
    for (int k = 0; k <= n; ++k) {
      if (k > 0) power = power * projection;
      const double moment = (rho.matrix().cwiseProduct(power.transpose())).sum().real();
      low[static_cast<std::size_t>(k)] = std::min(low[static_cast<std::size_t>(k)], moment);
      high[static_cast<std::size_t>(k)] = std::max(high[static_cast<std::size_t>(k)], moment);
    }
  }
  std::vector<double> out;
  for (int k = 0; k <= n; ++k) {
    const double scale = std::pow(spin.j(), k);
    out.push_back((high[static_cast<std::size_t>(k)] - low[static_cast<std::size_t>(k)]) / scale);
  }
  return out;
}

int order_from_residuals(const std::vector<double>& residuals, double tolerance) {
  int order = 0;
  for (std::size_t t = 1; t < residuals.size(); ++t) {
    if (!(residuals[t] < tolerance)) break;
    order = static_cast<int>(t);
  }
  return order;
}

int order_by_reduction(const DensityMatrix& rho, double tolerance) {
  return order_from_residuals(reduction_residuals(rho), tolerance);
}

int order_by_multipole(const DensityMatrix& rho, double tolerance) {
  return order_from_residuals(multipole_residuals(rho), tolerance);
}

int order_by_moments(const DensityMatrix& rho, double tolerance, const std::vector<Vector3>& directions) {
  return order_from_residuals(moment_residuals(rho, directions), tolerance);
}

std::vector<Vector3> default_directions() {
  static const std::vector<Vector3> directions = [] {
    std::vector<Vector3> out;
    for (int axis = 0; axis < 3; ++axis) {
      Vector3 e = Vector3::Zero();
      e(axis) = 1.0;
      out.push_back(e);
      out.push_back(-e);
    }
    constexpr int kFibonacci = 48;
    const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (int i = 0; i < kFibonacci; ++i) {
      const double z = 1.0 - (2.0 * i + 1.0) / kFibonacci;
      const double r = std::sqrt(1.0 - z * z);
      out.emplace_back(r * std::cos(golden_angle * i), r * std::sin(golden_angle * i), z);
    }
    std::mt19937_64 rng(20140903);
    std::normal_distribution<double> normal(0.0, 1.0);
    for (int i = 0; i < 24; ++i) {
      const double x = normal(rng), y = normal(rng), z = normal(rng);
      out.push_back(Vector3(x, y, z).normalized());
    }
    return out;
  }();
  return directions;
}

CriterionDisagreement::CriterionDisagreement(AnticoherenceReport report, int by_reduction, int by_multipole,
                                             int by_moments)
    : std::runtime_error("anticoherence criteria disagree: reduction=" + std::to_string(by_reduction) +
                         " multipole=" + std::to_string(by_multipole) + " moments=" + std::to_string(by_moments)),
      report_(std::move(report)),
      by_reduction_(by_reduction),
      by_multipole_(by_multipole),
      by_moments_(by_moments) {}

AnticoherenceReport classify_anticoherence(const DensityMatrix& rho, double tolerance) {
  AnticoherenceReport report;
  report.tolerance = tolerance;
  report.reduction = reduction_residuals(rho);
  report.multipole = multipole_residuals(rho);
  report.moments = moment_residuals(rho, default_directions());
  const int by_reduction = order_from_residuals(report.reduction, tolerance);
  const int by_multipole = order_from_residuals(report.multipole, tolerance);
  const int by_moments = order_from_residuals(report.moments, tolerance);
  if (by_reduction != by_multipole || by_reduction != by_moments) {
    throw CriterionDisagreement(std::move(report), by_reduction, by_multipole, by_moments);
  }
  report.order = by_reduction;
  return report;
}

RealMatrix order2_matrix(const DensityMatrix& rho) {
  const int n = rho.spin().two_j();
  if (n < 2) throw std::invalid_argument("order-2 matrix needs 2j >= 2");
  RealMatrix a(4, 4);
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = mu; nu < 4; ++nu) {
      std::vector<int> index(static_cast<std::size_t>(n), 0);
      index[0] = mu;
      index[1] = nu;
      const Matrix s = covariant_matrix(n, MultiIndex(index));
      a(mu, nu) = a(nu, mu) = (rho.matrix().cwiseProduct(s.transpose())).sum().real();
    }
  }
  return a;
}

Spin1FamilyResult spin1_family(const Spin1FamilyParams& p) {
  const double a = p.a;
  const Complex b = p.beta;
  const Complex g = p.gamma;
  Spin1FamilyResult out;
  out.matrix.resize(3, 3);
  out.matrix << 0.5 + a, b, g,
                std::conj(b), -2.0 * a, -b,
                std::conj(g), -std::conj(b), 0.5 + a;
  const double b2 = std::norm(b);
  const double g2 = std::norm(g);
  out.first_condition_slack = -b2 - a * (1.0 + 2.0 * a);
  out.second_condition_slack =
      2.0 * a * (g2 - b2 - 0.25 - a * (1.0 + a)) - (b2 + 2.0 * (g * std::conj(b) * std::conj(b)).real());
  out.min_eigenvalue = Eigen::SelfAdjointEigenSolver<Matrix>(out.matrix, Eigen::EigenvaluesOnly).eigenvalues()(0);
  return out;
}

}  // namespace spinbloch
