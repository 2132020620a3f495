// Copyright 2026 The spinbloch Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "spinbloch/combinatorics.hpp"
#include "spinbloch/multi_index.hpp"

using namespace spinbloch;

TEST_CASE("multi-index validation and multiplicity") {
  CHECK_THROWS_AS(MultiIndex({0, 4}), std::invalid_argument);
  CHECK_THROWS_AS(MultiIndex({-1}), std::invalid_argument);
  const MultiIndex sorted({2, 0, 1, 0});
  CHECK(sorted.indices() == std::vector<int>{0, 0, 1, 2});
  CHECK(sorted.multiplicity() == 12);
  CHECK(MultiIndex({0, 0, 1, 1}).multiplicity() == 6);
  CHECK(MultiIndex({3, 3, 3}).multiplicity() == 1);
  CHECK(MultiIndex({0, 1, 2, 3}).multiplicity() == 24);
  CHECK(MultiIndex().multiplicity() == 1);
  CHECK(MultiIndex({1, 2}).padded_with_zeros(2).indices() == std::vector<int>{0, 0, 1, 2});
  CHECK(MultiIndex::from_counts({1, 0, 2, 0}) == MultiIndex({0, 2, 2}));
}

TEST_CASE("canonical enumeration") {
  for (int n = 0; n <= 12; ++n) {
    const auto all = canonical_indices(n);
    CHECK(all.size() == binomial(n + 3, 3));
    CHECK(all.size() == canonical_count(n));
    CHECK(std::is_sorted(all.begin(), all.end()));
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < all.size(); ++i) {
      CHECK(canonical_position(all[i]) == i);
      CHECK(canonical_position(all[i].counts()) == i);
      total += all[i].multiplicity();
    }
    CHECK(total == (std::uint64_t{1} << (2 * n)));
  }
}

TEST_CASE("multiplicity counts distinct permutations") {
  for (int n = 0; n <= 6; ++n) {
    std::map<std::vector<int>, std::uint64_t> seen;
    const int total = 1 << (2 * n);
    for (int code = 0; code < total; ++code) {
      std::vector<int> idx;
      for (int p = 0; p < n; ++p) idx.push_back((code >> (2 * p)) & 3);
      std::sort(idx.begin(), idx.end());
      ++seen[idx];
    }
    for (const auto& [idx, count] : seen) CHECK(MultiIndex(idx).multiplicity() == count);
  }
}

TEST_CASE("homogeneous polynomials") {
  const auto p = HomogeneousPolynomial::linear({1.0, 2.0, 0.0, -1.0});
  const auto sq = p * p;
  CHECK(sq.degree() == 2);
  CHECK(sq.coefficient({1, 1, 0, 0}) == doctest::Approx(4.0));
  CHECK(sq.coefficient({0, 0, 0, 2}) == doctest::Approx(1.0));
  const std::array<double, 4> q{0.3, -1.2, 0.7, 2.0};
  const double lin = 0.3 + 2.0 * (-1.2) - 2.0;
  CHECK(sq.evaluate(q) == doctest::Approx(lin * lin));

  std::mt19937_64 rng(5);
  std::normal_distribution<double> normal;
  for (int n = 0; n <= 5; ++n) {
    std::vector<double> sym(canonical_count(n));
    for (double& v : sym) v = normal(rng);
    const auto poly = HomogeneousPolynomial::from_symmetric(n, sym);
    const auto back = poly.to_symmetric();
    for (std::size_t i = 0; i < sym.size(); ++i) CHECK(back[i] == doctest::Approx(sym[i]).epsilon(1e-12));

    std::array<std::array<double, 4>, 4> m{};
    for (auto& row : m) {
      for (double& v : row) v = normal(rng);
    }
    std::array<double, 4> x{normal(rng), normal(rng), normal(rng), normal(rng)};
    std::array<double, 4> mx{};
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) mx[r] += m[r][c] * x[c];
    }
    CHECK(poly.substitute(m).evaluate(x) == doctest::Approx(poly.evaluate(mx)).epsilon(1e-9));
  }
}
