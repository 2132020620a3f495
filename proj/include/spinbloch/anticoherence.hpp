// Copyright 2026 The spinbloch Authors
// SPDX-License-Identifier: Apache-2.0

// Anticoherence order of spin states. A state is anticoherent to order t when
// <(n.J)^k> does not depend on the unit vector n for every k <= t. Three
// equivalent tests are computed side by side:
//   reduction  - the spin-t/2 reduced state is I/(t+1)
//   multipole  - rho_kq = 0 for 1 <= k <= t
//   moments    - <(n.J)^k> is flat over a fixed direction sample
// Every state passes at order 0, so the reported minimum order is 0.

#pragma once

#include <stdexcept>
#include <vector>

#include "spinbloch/density.hpp"

namespace spinbloch {

inline constexpr double kDefaultAnticoherenceTolerance = 1e-8;

struct MultipoleCoefficients {
  Spin spin;
  /// by_rank[k][q + k] = rho_kq = tr(rho T_kq^dagger)
  std::vector<std::vector<Complex>> by_rank;

  Complex at(int k, int q) const { return by_rank.at(static_cast<std::size_t>(k)).at(static_cast<std::size_t>(q + k)); }
  /// sum_kq rho_kq T_kq
  Matrix reconstruct() const;
};

MultipoleCoefficients multipole_expand(const DensityMatrix& rho);

/// Per-order residuals, entry t for t = 0..2j. Entry 0 measures trace
/// normalization and is ~0 for every valid state.
std::vector<double> reduction_residuals(const DensityMatrix& rho);
std::vector<double> multipole_residuals(const DensityMatrix& rho);
/// Spread (max - min) of <(n.J)^k> over `directions`, divided by j^k so the
/// residual is on the same unit scale for every spin.
std::vector<double> moment_residuals(const DensityMatrix& rho, const std::vector<Vector3>& directions);

/// Largest t such that residuals[1..t] are all below `tolerance`.
int order_from_residuals(const std::vector<double>& residuals, double tolerance);

int order_by_reduction(const DensityMatrix& rho, double tolerance = kDefaultAnticoherenceTolerance);
int order_by_multipole(const DensityMatrix& rho, double tolerance = kDefaultAnticoherenceTolerance);
int order_by_moments(const DensityMatrix& rho, double tolerance = kDefaultAnticoherenceTolerance,
                     const std::vector<Vector3>& directions = {});

/// The 6 signed axes, 48 Fibonacci-sphere points and 24 seeded Gaussian
/// directions. Always the same list.
std::vector<Vector3> default_directions();

struct AnticoherenceReport {
  int order = 0;
  double tolerance = kDefaultAnticoherenceTolerance;
  std::vector<double> reduction;
  std::vector<double> multipole;
  std::vector<double> moments;
};

/// The three criteria disagreed on the order. Since they are equivalent this
/// signals a numerical or implementation fault; the residual tables are kept.
class CriterionDisagreement : public std::runtime_error {
 public:
  CriterionDisagreement(AnticoherenceReport report, int by_reduction, int by_multipole, int by_moments);

  const AnticoherenceReport& report() const { return report_; }
  int by_reduction() const { return by_reduction_; }
  int by_multipole() const { return by_multipole_; }
  int by_moments() const { return by_moments_; }

 private:
  AnticoherenceReport report_;
  int by_reduction_;
  int by_multipole_;
  int by_moments_;
};

/// Runs all three criteria; throws CriterionDisagreement unless they agree.
AnticoherenceReport classify_anticoherence(const DensityMatrix& rho,
                                           double tolerance = kDefaultAnticoherenceTolerance);

/// A_{mu nu} = tr(rho S_{mu nu 0...0}); needs 2j >= 2. Order-2 anticoherent
/// states have A = diag(1, 1/3, 1/3, 1/3).
RealMatrix order2_matrix(const DensityMatrix& rho);

struct Spin1FamilyParams {
  double a = 0.0;
  Complex beta{0.0, 0.0};
  Complex gamma{0.0, 0.0};
};

struct Spin1FamilyResult {
  /// [[1/2+a, beta, gamma], [beta*, -2a, -beta], [gamma*, -beta*, 1/2+a]]
  Matrix matrix;
  /// -|beta|^2 - a(1+2a); the first condition holds when this is >= 0
  double first_condition_slack = 0.0;
  /// 2a(|gamma|^2 - |beta|^2 - 1/4 - a(1+a)) - |beta|^2 - 2 Re(gamma beta*^2)
  double second_condition_slack = 0.0;
  double min_eigenvalue = 0.0;

  bool conditions_hold() const { return first_condition_slack >= -1e-12 && second_condition_slack >= -1e-12; }
  bool positive_semidefinite() const { return min_eigenvalue >= -1e-10; }
  bool conditions_match_eigenvalues() const { return conditions_hold() == positive_semidefinite(); }
};

/// Unit-trace spin-1 matrix with vanishing spin-1/2 polarization, plus the
/// two principal-minor conditions and a direct eigenvalue check.
Spin1FamilyResult spin1_family(const Spin1FamilyParams& params);

}  // namespace spinbloch
