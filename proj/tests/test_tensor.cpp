// Copyright 2026 The spinbloch Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <numbers>
#include <random>

#include "oracles.hpp"
#include "spinbloch/angular.hpp"
#include "spinbloch/states.hpp"
#include "spinbloch/tensor.hpp"
#include "spinbloch/weinberg.hpp"

using namespace spinbloch;
using std::numbers::pi;

namespace {
double dev(const Matrix& a, const Matrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

double dev(const CoordinateTensor& a, const CoordinateTensor& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.values().size(); ++i) worst = std::max(worst, std::abs(a.values()[i] - b.values()[i]));
  return worst;
}

// tr(rho S) for every canonical index, straight from the dense projection.
std::vector<double> dense_coordinates(const Matrix& rho) {
  std::vector<double> out;
  for (const MultiIndex& idx : canonical_indices(static_cast<int>(rho.rows()) - 1)) {
    out.push_back((rho * oracle::covariant(idx.indices())).trace().real());
  }
  return out;
}
}  // namespace

TEST_CASE("density matrix validation") {
  Matrix m = Matrix::Identity(2, 2) / 2.0;
  CHECK_NOTHROW(DensityMatrix{m});
  m(0, 1) = Complex{0.1, 0.0};
  CHECK_THROWS_AS(DensityMatrix{m}, InvalidState);
  CHECK_THROWS_AS(DensityMatrix{Matrix::Identity(2, 2)}, InvalidState);
  Matrix negative = Matrix::Zero(2, 2);
  negative(0, 0) = 1.5;
  negative(1, 1) = -0.5;
  CHECK_THROWS_AS(DensityMatrix{negative}, InvalidState);
  CHECK(DensityMatrix::diagnose(negative).has_value());
  CHECK_THROWS_AS(DensityMatrix{Matrix::Identity(2, 3)}, InvalidState);
}

TEST_CASE("spin-1/2 Bloch vector") {
  const Vector3 b(0.3, -0.4, 0.5);
  const SpinOperators ops = spin_operators(Spin(1));
  const Matrix rho = 0.5 * Matrix::Identity(2, 2) + ops.along(b);  // (I + b.sigma)/2
  const auto x = coordinates_of(DensityMatrix(rho), covariant_set(Spin(1)));
  CHECK(x.at({0}) == doctest::Approx(1.0));
  CHECK(x.at({1}) == doctest::Approx(0.3));
  CHECK(x.at({2}) == doctest::Approx(-0.4));
  CHECK(x.at({3}) == doctest::Approx(0.5));
}

TEST_CASE("coordinates agree with dense oracle") {
  std::mt19937_64 rng(20);
  for (int n = 0; n <= 5; ++n) {
    const DensityMatrix rho = random_density(Spin(n), rng);
    const auto x = coordinates_of(rho, covariant_set(Spin(n)));
    const auto expected = dense_coordinates(rho.matrix());
    for (std::size_t i = 0; i < expected.size(); ++i) CHECK(x.values()[i] == doctest::Approx(expected[i]).epsilon(1e-12));
  }
}

TEST_CASE("coordinates reject mismatches") {
  const auto set = covariant_set(Spin(2));
  CHECK_THROWS_AS(coordinates_of(maximally_mixed(Spin(3)), set), std::invalid_argument);
  Matrix skew = Matrix::Zero(3, 3);
  skew(0, 1) = 1.0;
  CHECK_THROWS_AS(coordinates_of_operator(skew, set), std::invalid_argument);
  CHECK_THROWS_AS(reconstruct(CoordinateTensor::zeros(Spin(3)), set), std::invalid_argument);
  CHECK_THROWS_AS(hs_inner(CoordinateTensor::zeros(Spin(3)), CoordinateTensor::zeros(Spin(2))), std::invalid_argument);
}

TEST_CASE("tensor invariants and round trip") {
  std::mt19937_64 rng(21);
  for (int n = 0; n <= 6; ++n) {
    const auto set = covariant_set(Spin(n));
    for (int t = 0; t < 30; ++t) {
      const DensityMatrix rho = random_density(Spin(n), rng);
      const auto x = coordinates_of(rho, set);
      const CanonicalReport report = canonical_check(x, set);
      CHECK(report.canonical());
      CHECK(report.matches_reconstruction());
      double squares = 0.0;
      for (std::size_t i = 0; i < x.values().size(); ++i) {
        squares += static_cast<double>(x.indices()[i].multiplicity()) * x.values()[i] * x.values()[i];
      }
      CHECK(squares <= std::ldexp(1.0, n) + 1e-8);
      CHECK(dev(reconstruct(x, set).matrix(), rho.matrix()) < 1e-10);
      const double p = purity(x);
      CHECK(p >= 1.0 / (n + 1) - 1e-8);
      CHECK(p <= 1.0 + 1e-8);
      const DensityMatrix other = random_density(Spin(n), rng);
      const double direct = (rho.matrix() * other.matrix()).trace().real();
      CHECK(hs_inner(x, coordinates_of(other, set)) == doctest::Approx(direct).epsilon(1e-10));
    }
  }
}

TEST_CASE("contraction realizes the Pi expectation value") {
  std::mt19937_64 rng(22);
  std::normal_distribution<double> normal;
  for (int n = 0; n <= 6; ++n) {
    const auto set = covariant_set(Spin(n));
    const DensityMatrix rho = random_density(Spin(n), rng);
    const auto x = coordinates_of(rho, set);
    const FourVector q(normal(rng), normal(rng), normal(rng), normal(rng));
    const double sign = n % 2 ? -1.0 : 1.0;
    const double expected = sign * (rho.matrix() * pi_polynomial(Spin(n), q)).trace().real();
    CHECK(std::abs(x.contract(q) - expected) < 1e-9);
  }
}

TEST_CASE("purity and inner product examples") {
  const auto set = covariant_set(Spin(2));
  const auto mixed = coordinates_of(maximally_mixed(Spin(2)), set);
  CHECK(purity(mixed) == doctest::Approx(1.0 / 3.0));
  CHECK(purity(coherent_coordinates(Spin(2), 0.4, 1.0)) == doctest::Approx(1.0));
  CHECK(std::abs(hs_inner(coherent_coordinates(Spin(2), 0, 0), coherent_coordinates(Spin(2), pi, 0))) < 1e-12);
  Matrix half = Matrix::Zero(3, 3);
  half(0, 0) = half(1, 1) = 0.5;
  CHECK(purity(coordinates_of(DensityMatrix(half), set)) == doctest::Approx(0.5));
  const auto rebuilt = reconstruct(maximally_mixed_coordinates(Spin(2)), set);
  CHECK(dev(rebuilt.matrix(), Matrix::Identity(3, 3) / 3.0) < 1e-12);
}

TEST_CASE("coherent coordinates") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int n = 1; n <= 8; ++n) {
    const auto set = covariant_set(Spin(n));
    const double theta = pi * u(rng), phi = 2 * pi * u(rng);
    const auto closed = coherent_coordinates(Spin(n), theta, phi);
    CHECK(dev(closed, coordinates_of(coherent_density(Spin(n), theta, phi), set)) < 1e-10);
    CHECK(dev(reconstruct(closed, set).matrix(), oracle::coherent_projector(n, theta, phi)) < 1e-10);
    const FourVector dir = direction_of(theta, phi);
    for (int a = 0; a < 4; ++a) {
      std::vector<int> idx(static_cast<std::size_t>(n), 0);
      idx.back() = a;
      CHECK(closed.at(MultiIndex(idx)) == doctest::Approx(dir[static_cast<std::size_t>(a)]));
    }
  }
  const auto north = coherent_coordinates(Spin(3), 0, 0);
  const auto indices = north.indices();
  for (std::size_t i = 0; i < north.values().size(); ++i) {
    const auto& idx = indices[i].indices();
    const bool only_0_3 = std::all_of(idx.begin(), idx.end(), [](int v) { return v == 0 || v == 3; });
    CHECK(north.values()[i] == doctest::Approx(only_0_3 ? 1.0 : 0.0));
  }
}

TEST_CASE("maximally mixed coordinates") {
  const auto half = maximally_mixed_coordinates(Spin(1));
  CHECK(half.values() == std::vector<double>{1.0, 0.0, 0.0, 0.0});
  const auto two = maximally_mixed_coordinates(Spin(4));
  CHECK(two.at({0, 0, 1, 1}) == doctest::Approx(1.0 / 3.0));
  const Matrix s = oracle::covariant({0, 0, 1, 1});
  CHECK((s / 5.0).trace().real() == doctest::Approx(1.0 / 3.0));
  for (int n = 1; n <= 8; ++n) {
    CHECK(dev(maximally_mixed_coordinates(Spin(n)), coordinates_of(maximally_mixed(Spin(n)), covariant_set(Spin(n)))) <
          1e-12);
  }
}

TEST_CASE("cat coordinates") {
  const auto one = cat_coordinates(Spin(2));
  CHECK(one.at({1, 1}) == doctest::Approx(1.0));
  CHECK(one.at({2, 2}) == doctest::Approx(-1.0));
  CHECK(std::abs(one.at({1, 2})) < 1e-15);
  for (int n = 1; n <= 8; ++n) {
    const auto closed = cat_coordinates(Spin(n));
    CHECK(closed.at(MultiIndex(std::vector<int>(static_cast<std::size_t>(n), 3))) ==
          doctest::Approx(0.5 * ((n % 2 ? -1.0 : 1.0) + 1.0)));
    CHECK(dev(closed, coordinates_of(cat_density(Spin(n)), covariant_set(Spin(n)))) < 1e-10);
  }
  CHECK_THROWS_AS(cat_coordinates(Spin(0)), std::invalid_argument);
}

TEST_CASE("rotations") {
  std::mt19937_64 rng(24);
  const auto x = coordinates_of(random_density(Spin(3), rng), covariant_set(Spin(3)));
  CHECK(dev(rotate_tensor(x, Matrix3::Identity()), x) < 1e-15);
  CHECK_THROWS_AS(rotate_tensor(x, 2.0 * Matrix3::Identity()), std::invalid_argument);
  Matrix3 reflection = Matrix3::Identity();
  reflection(0, 0) = -1.0;
  CHECK_THROWS_AS(rotate_tensor(x, reflection), std::invalid_argument);
  for (int n = 1; n <= 4; ++n) {
    const auto set = covariant_set(Spin(n));
    for (int t = 0; t < 10; ++t) {
      const Vector3 axis = random_unit_vector(rng);
      const double angle = 0.3 + t;
      const Matrix3 r = rotation_matrix_3d(axis, angle);
      const DensityMatrix rho = random_density(Spin(n), rng);
      const Matrix u = oracle::rotation(n, axis, angle);
      const Matrix rotated = u * rho.matrix() * u.adjoint();
      const auto rotated_coords = rotate_tensor(coordinates_of(rho, set), r);
      CHECK(dev(rotated_coords, coordinates_of_operator(0.5 * (rotated + rotated.adjoint()), set)) < 1e-9);
      CHECK(canonical_check(rotated_coords, set, 1e-9).canonical());

      const double theta = 0.2 * (t + 1), phi = 0.5 * t;
      const Vector3 moved = r * direction_of(theta, phi).spatial();
      const double mtheta = std::acos(std::clamp(moved.z(), -1.0, 1.0));
      const double mphi = std::atan2(moved.y(), moved.x());
      CHECK(dev(rotate_tensor(coherent_coordinates(Spin(n), theta, phi), r), coherent_coordinates(Spin(n), mtheta, mphi)) <
            1e-10);
    }
  }
}

TEST_CASE("reductions") {
  std::mt19937_64 rng(25);
  for (int n = 1; n <= 6; ++n) {
    const auto set = covariant_set(Spin(n));
    const DensityMatrix rho = random_density(Spin(n), rng);
    const auto x = coordinates_of(rho, set);
    CHECK(dev(reduced_coordinates(x, Spin(n)), x) == 0.0);
    CHECK(dev(reduced_density(rho, Spin(n)).matrix(), rho.matrix()) < 1e-15);
    for (int k = 0; k <= n; ++k) {
      const DensityMatrix reduced = reduced_density(rho, Spin(k));
      CHECK(dev(reduced.matrix(), oracle::reduce(rho.matrix(), k)) < 1e-12);
      CHECK(dev(coordinates_of(reduced, covariant_set(Spin(k))), reduced_coordinates(x, Spin(k))) < 1e-10);
      CHECK(dev(reduced_density(coherent_density(Spin(n), 0.7, 1.9), Spin(k)).matrix(),
                coherent_density(Spin(k), 0.7, 1.9).matrix()) < 1e-10);
      CHECK(dev(reduced_coordinates(coherent_coordinates(Spin(n), 0.7, 1.9), Spin(k)),
                coherent_coordinates(Spin(k), 0.7, 1.9)) < 1e-12);
    }
    const auto mixed_slice = reduced_coordinates(maximally_mixed_coordinates(Spin(n)), Spin(1));
    CHECK(dev(mixed_slice, CoordinateTensor(Spin(1), {1.0, 0.0, 0.0, 0.0})) < 1e-12);
    CHECK_THROWS_AS(reduced_density(rho, Spin(n + 1)), std::invalid_argument);
    CHECK_THROWS_AS(reduced_coordinates(x, Spin(n + 1)), std::invalid_argument);
  }
}

TEST_CASE("canonical check") {
  std::mt19937_64 rng(26);
  const auto set = covariant_set(Spin(3));
  const auto x = coordinates_of(random_density(Spin(3), rng), set);
  CHECK(canonical_check(x, set).canonical());

  auto bumped = x;
  bumped.at({1, 1, 2}) += 1e-3;
  const CanonicalReport bad = canonical_check(bumped, set);
  CHECK_FALSE(bad.g_traceless());
  CHECK(bad.trace_violation == doctest::Approx(1e-3));
  CHECK(bad.worst_suffix == MultiIndex{2});

  const auto null = metric_null_direction(Spin(3), MultiIndex{1});
  auto shifted = x;
  for (std::size_t i = 0; i < x.values().size(); ++i) {
    shifted.at(x.indices()[i]) += 0.05 * null.values()[i];
  }
  const CanonicalReport moved = canonical_check(shifted, set);
  CHECK_FALSE(moved.g_traceless());
  CHECK_FALSE(moved.matches_reconstruction());
  CHECK(dev(reconstruct_operator(shifted, set), reconstruct_operator(x, set)) < 1e-12);
}
