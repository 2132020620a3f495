// Copyright 2026 The spinbloch Authors
// SPDX-License-Identifier: Apache-2.0

// Weinberg covariant matrices S_{mu1...muN} for spin j = N/2.
//
// The matrices are built by sandwiching the Pauli string
// sigma_{mu1} (x) ... (x) sigma_{muN} between symmetric Dicke states of N qubits.
// The polynomial forms of Pi^(j)(q) are kept alongside as independent
// point evaluators: pi_from_set, pi_polynomial and pi_boost must agree.

#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "spinbloch/multi_index.hpp"
#include "spinbloch/spin.hpp"

namespace spinbloch {

/// Symmetric Dicke states |D_N^(k)>, k = 0..N, as sparse vectors over N-qubit
/// bitstrings (bit i set means qubit i is up). |D_N^(k)> is |j, m = k - N/2>,
/// which sits on row N - k of the spin basis.
struct DickeBasis {
  struct Entry {
    std::uint32_t bitstring;
    double amplitude;
  };

  int n = 0;
  std::vector<std::vector<Entry>> vectors;

  static Eigen::Index spin_row(int n, int k) { return n - k; }
};

DickeBasis dicke_basis(int n, int max_two_j = kDefaultMaxTwoJ);

/// <D_N^(k)| sigma_{f_1} (x) ... (x) sigma_{f_N} |D_N^(l)> laid out in the spin
/// basis. `factors` may be in any order; the result does not depend on it.
Matrix project_pauli_string(std::span<const int> factors);

/// S_idx for the rank-N multi-index.
Matrix covariant_matrix(int n, const MultiIndex& index);

class CovariantMatrixSet {
 public:
  CovariantMatrixSet(Spin spin, std::vector<MultiIndex> indices, std::vector<Matrix> matrices);

  Spin spin() const { return spin_; }
  std::size_t size() const { return indices_.size(); }
  const std::vector<MultiIndex>& indices() const { return indices_; }
  const std::vector<Matrix>& matrices() const { return matrices_; }

  /// Matrix for any ordering of the index.
  const Matrix& at(const MultiIndex& index) const;
  const Matrix& operator[](std::size_t position) const { return matrices_[position]; }

 private:
  Spin spin_;
  std::vector<MultiIndex> indices_;
  std::vector<Matrix> matrices_;
};

/// All C(N+3, 3) canonical covariant matrices for `spin`.
CovariantMatrixSet covariant_set(Spin spin, int max_two_j = kDefaultMaxTwoJ);

/// Pi^(j)(q) from the closed-form sums (separate integer and half-integer forms).
Matrix pi_polynomial(Spin spin, const FourVector& q);

/// (-1)^N sum over index strings of q_mu1 ... q_muN S_mu.
Matrix pi_from_set(const CovariantMatrixSet& set, const FourVector& q);

/// (q0^2 - |q|^2)^j exp(-2 eta q_hat.J) with eta = arctanh(-|q|/q0).
/// Defined for q0 < 0 and 0 < |q| < |q0|; throws std::domain_error otherwise.
Matrix pi_boost(Spin spin, const FourVector& q);

/// max over canonical indices of |<alpha|S_idx|alpha> - n_mu1 ... n_muN| for the
/// coherent state at (theta, phi).
double husimi_check(const CovariantMatrixSet& set, double theta, double phi);

}  // namespace spinbloch
