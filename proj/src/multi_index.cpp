// Copyright 2026 The spinbloch Authors
// SPDX-License-Identifier: Apache-2.0

#include "spinbloch/multi_index.hpp"

#include <algorithm>
#include <stdexcept>

#include "spinbloch/combinatorics.hpp"

namespace spinbloch {

MultiIndex::MultiIndex(std::vector<int> indices) : indices_(std::move(indices)) {
  for (int v : indices_) {
    if (v < 0 || v > 3) throw std::invalid_argument("multi-index entries must lie in 0..3");
  }
  std::sort(indices_.begin(), indices_.end());
}

MultiIndex MultiIndex::from_counts(const IndexCounts& counts) {
  std::vector<int> indices;
  for (int nu = 0; nu < 4; ++nu) {
    if (counts[nu] < 0) throw std::invalid_argument("negative index count");
    indices.insert(indices.end(), static_cast<std::size_t>(counts[nu]), nu);
  }
  return MultiIndex(std::move(indices));
}

IndexCounts MultiIndex::counts() const {
  IndexCounts c{0, 0, 0, 0};
  for (int v : indices_) ++c[v];
  return c;
}

std::uint64_t MultiIndex::multiplicity() const {
  const IndexCounts c = counts();
  // Build the multinomial as a product of binomials to stay exact.
  std::uint64_t result = 1;
  int placed = 0;
  for (int nu = 0; nu < 4; ++nu) {
    placed += c[nu];
    result *= binomial(placed, c[nu]);
  }
  return result;
}

MultiIndex MultiIndex::padded_with_zeros(int zeros) const {
  std::vector<int> out(static_cast<std::size_t>(zeros), 0);
  out.insert(out.end(), indices_.begin(), indices_.end());
  return MultiIndex(std::move(out));
}

std::string MultiIndex::to_string() const {
  std::string s;
  for (int v : indices_) s.push_back(static_cast<char>('0' + v));
  return s.empty() ? std::string("()") : s;
}

std::size_t canonical_count(int rank) { return static_cast<std::size_t>(binomial(rank + 3, 3)); }

std::vector<MultiIndex> canonical_indices(int rank) {
  std::vector<MultiIndex> out;
  out.reserve(canonical_count(rank));
  // Lexicographic on the sorted string means more leading zeros come first.
  for (int p0 = rank; p0 >= 0; --p0) {
    for (int p1 = rank - p0; p1 >= 0; --p1) {
      for (int p2 = rank - p0 - p1; p2 >= 0; --p2) {
        out.push_back(MultiIndex::from_counts({p0, p1, p2, rank - p0 - p1 - p2}));
      }
    }
  }
  return out;
}

std::size_t canonical_position(std::span<const int> sorted) {
  const int n = static_cast<int>(sorted.size());
  std::size_t position = 0;
  int previous = 0;
  for (int i = 0; i < n; ++i) {
    const int v = sorted[static_cast<std::size_t>(i)];
    if (v < previous || v > 3) throw std::invalid_argument("index is not sorted or out of range");
    const int remaining = n - i - 1;
    for (int c = previous; c < v; ++c) position += binomial(remaining + 3 - c, 3 - c);
    previous = v;
  }
  return position;
}

std::size_t canonical_position(const IndexCounts& counts) {
  return canonical_position(MultiIndex::from_counts(counts));
}

HomogeneousPolynomial::HomogeneousPolynomial(int degree)
    : degree_(degree), coefficients_(canonical_count(degree), 0.0) {
  if (degree < 0) throw std::invalid_argument("negative polynomial degree");
}

HomogeneousPolynomial::HomogeneousPolynomial(int degree, std::vector<double> coefficients)
    : degree_(degree), coefficients_(std::move(coefficients)) {
  if (degree < 0 || coefficients_.size() != canonical_count(degree)) {
    throw std::invalid_argument("coefficient count does not match degree");
  }
}

HomogeneousPolynomial HomogeneousPolynomial::from_symmetric(int degree, std::span<const double> values) {
  const auto indices = canonical_indices(degree);
  if (values.size() != indices.size()) throw std::invalid_argument("symmetric value count does not match degree");
  std::vector<double> coefficients(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    coefficients[i] = static_cast<double>(indices[i].multiplicity()) * values[i];
  }
  return HomogeneousPolynomial(degree, std::move(coefficients));
}

std::vector<double> HomogeneousPolynomial::to_symmetric() const {
  const auto indices = canonical_indices(degree_);
  std::vector<double> values(coefficients_.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] = coefficients_[i] / static_cast<double>(indices[i].multiplicity());
  }
  return values;
}

HomogeneousPolynomial HomogeneousPolynomial::linear(const std::array<double, 4>& a) {
  // Canonical order at rank 1 is 0,1,2,3.
  return HomogeneousPolynomial(1, std::vector<double>(a.begin(), a.end()));
}

HomogeneousPolynomial HomogeneousPolynomial::monomial(const IndexCounts& counts) {
  const int degree = counts[0] + counts[1] + counts[2] + counts[3];
  HomogeneousPolynomial p(degree);
  p.coefficients_[canonical_position(counts)] = 1.0;
  return p;
}

double HomogeneousPolynomial::coefficient(const IndexCounts& counts) const {
  if (counts[0] + counts[1] + counts[2] + counts[3] != degree_) return 0.0;
  return coefficients_[canonical_position(counts)];
}

HomogeneousPolynomial HomogeneousPolynomial::operator*(const HomogeneousPolynomial& other) const {
  HomogeneousPolynomial out(degree_ + other.degree_);
  const auto left = canonical_indices(degree_);
  const auto right = canonical_indices(other.degree_);
  for (std::size_t a = 0; a < left.size(); ++a) {
    if (coefficients_[a] == 0.0) continue;
    const IndexCounts ca = left[a].counts();
    for (std::size_t b = 0; b < right.size(); ++b) {
      if (other.coefficients_[b] == 0.0) continue;
      const IndexCounts cb = right[b].counts();
      const IndexCounts sum{ca[0] + cb[0], ca[1] + cb[1], ca[2] + cb[2], ca[3] + cb[3]};
      out.coefficients_[canonical_position(sum)] += coefficients_[a] * other.coefficients_[b];
    }
  }
  return out;
}

HomogeneousPolynomial& HomogeneousPolynomial::operator+=(const HomogeneousPolynomial& other) {
  if (other.degree_ != degree_) throw std::invalid_argument("polynomial degree mismatch");
  for (std::size_t i = 0; i < coefficients_.size(); ++i) coefficients_[i] += other.coefficients_[i];
  return *this;
}

HomogeneousPolynomial HomogeneousPolynomial::operator*(double scale) const {
  HomogeneousPolynomial out = *this;
  for (double& c : out.coefficients_) c *= scale;
  return out;
}

double HomogeneousPolynomial::evaluate(const std::array<double, 4>& q) const {
  const auto indices = canonical_indices(degree_);
  double total = 0.0;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    double term = coefficients_[i];
    for (int v : indices[i].indices()) term *= q[static_cast<std::size_t>(v)];
    total += term;
  }
  return total;
}

HomogeneousPolynomial HomogeneousPolynomial::substitute(const std::array<std::array<double, 4>, 4>& m) const {
  // powers[nu][p] = (sum_mu m[nu][mu] q_mu)^p
  std::array<std::vector<HomogeneousPolynomial>, 4> powers;
  for (int nu = 0; nu < 4; ++nu) {
    powers[nu].emplace_back(0, std::vector<double>{1.0});
    const auto form = linear(m[static_cast<std::size_t>(nu)]);
    for (int p = 1; p <= degree_; ++p) powers[nu].push_back(powers[nu].back() * form);
  }
  HomogeneousPolynomial out(degree_);
  const auto indices = canonical_indices(degree_);
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (coefficients_[i] == 0.0) continue;
    const IndexCounts c = indices[i].counts();
    HomogeneousPolynomial term = powers[0][c[0]] * powers[1][c[1]];
    term = term * powers[2][c[2]];
    term = term * powers[3][c[3]];
    out += term * coefficients_[i];
  }
  return out;
}

}  // namespace spinbloch
