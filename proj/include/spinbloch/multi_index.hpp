// Copyright 2026 The spinbloch Authors
// SPDX-License-Identifier: Apache-2.0

// Permutation-symmetric index bookkeeping. A rank-N symmetric tensor over the
// four values {0,1,2,3} is stored once per sorted index string; every frame sum
// weights the stored entry by the number of distinct permutations it stands for.

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace spinbloch {

using IndexCounts = std::array<int, 4>;

class MultiIndex {
 public:
  MultiIndex() = default;
  /// Accepts any ordering; values must lie in 0..3.
  explicit MultiIndex(std::vector<int> indices);
  MultiIndex(std::initializer_list<int> indices) : MultiIndex(std::vector<int>(indices)) {}
  static MultiIndex from_counts(const IndexCounts& counts);

  const std::vector<int>& indices() const { return indices_; }
  int rank() const { return static_cast<int>(indices_.size()); }
  int operator[](std::size_t i) const { return indices_[i]; }

  /// p_nu = number of occurrences of nu.
  IndexCounts counts() const;
  /// N! / (p0! p1! p2! p3!)
  std::uint64_t multiplicity() const;

  /// This index with `zeros` extra 0 entries.
  MultiIndex padded_with_zeros(int zeros) const;

  std::string to_string() const;

  auto operator<=>(const MultiIndex&) const = default;

 private:
  std::vector<int> indices_;
};

/// C(rank + 3, 3)
std::size_t canonical_count(int rank);

/// All sorted index strings of the given rank, in lexicographic order.
std::vector<MultiIndex> canonical_indices(int rank);

/// Position of a sorted index within canonical_indices(rank).
std::size_t canonical_position(std::span<const int> sorted_indices);
inline std::size_t canonical_position(const MultiIndex& index) { return canonical_position(index.indices()); }
std::size_t canonical_position(const IndexCounts& counts);

/// Homogeneous real polynomial in (q0, q1, q2, q3). The coefficient of the
/// monomial prod_nu q_nu^{p_nu} is stored at the canonical position of the
/// multi-index with counts p.
class HomogeneousPolynomial {
 public:
  explicit HomogeneousPolynomial(int degree);
  HomogeneousPolynomial(int degree, std::vector<double> coefficients);

  /// Polynomial sum over all index strings mu of x_mu q_mu1 ... q_muN,
  /// where x is given by its canonical (symmetric) values.
  static HomogeneousPolynomial from_symmetric(int degree, std::span<const double> symmetric_values);
  /// Inverse of from_symmetric: coefficient divided by multiplicity.
  std::vector<double> to_symmetric() const;

  /// The linear form sum_mu a_mu q_mu.
  static HomogeneousPolynomial linear(const std::array<double, 4>& a);
  /// q0^p0 q1^p1 q2^p2 q3^p3 with unit coefficient.
  static HomogeneousPolynomial monomial(const IndexCounts& counts);

  int degree() const { return degree_; }
  const std::vector<double>& coefficients() const { return coefficients_; }
  double coefficient(const IndexCounts& counts) const;

  HomogeneousPolynomial operator*(const HomogeneousPolynomial& other) const;
  HomogeneousPolynomial& operator+=(const HomogeneousPolynomial& other);
  HomogeneousPolynomial operator+(const HomogeneousPolynomial& other) const {
    HomogeneousPolynomial out = *this;
    out += other;
    return out;
  }
  HomogeneousPolynomial operator*(double scale) const;

  double evaluate(const std::array<double, 4>& q) const;

  /// p(M q): substitute q_nu -> sum_mu M(nu, mu) q_mu.
  HomogeneousPolynomial substitute(const std::array<std::array<double, 4>, 4>& m) const;

 private:
  int degree_;
  std::vector<double> coefficients_;
};

}  // namespace spinbloch
