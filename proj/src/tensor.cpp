// Copyright 2026 The spinbloch Authors
// SPDX-License-Identifier: Apache-2.0

#include "spinbloch/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spinbloch/combinatorics.hpp"

namespace spinbloch {

namespace {

void require_same_spin(Spin a, Spin b, const char* what) {
  if (a != b) {
    throw std::invalid_argument(std::string(what) + ": spin mismatch (two_j " + std::to_string(a.two_j()) +
                                " vs " + std::to_string(b.two_j()) + ")");
  }
}

using Array44 = std::array<std::array<double, 4>, 4>;

Array44 extend_rotation(const Matrix3& r) {
  const double orthogonality = (r * r.transpose() - Matrix3::Identity()).cwiseAbs().maxCoeff();
  if (!r.allFinite() || orthogonality > 1e-10 || std::abs(r.determinant() - 1.0) > 1e-10) {
    throw std::invalid_argument("rotate_tensor requires a proper rotation matrix");
  }
  Array44 out{};
  out[0][0] = 1.0;
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) out[a + 1][b + 1] = r(a, b);
  }
  return out;
}

std::vector<int> with_pair(const MultiIndex& suffix, int a) {
  std::vector<int> out = suffix.indices();
  out.push_back(a);
  out.push_back(a);
  return out;
}

}  // namespace

CoordinateTensor::CoordinateTensor(Spin spin, std::vector<double> values) : spin_(spin), values_(std::move(values)) {
  if (values_.size() != canonical_count(spin.two_j())) {
    throw std::invalid_argument("coordinate tensor needs one value per canonical index");
  }
}

CoordinateTensor CoordinateTensor::zeros(Spin spin) {
  return CoordinateTensor(spin, std::vector<double>(canonical_count(spin.two_j()), 0.0));
}

std::size_t CoordinateTensor::position(const MultiIndex& index) const {
  if (index.rank() != spin_.two_j()) throw std::invalid_argument("multi-index rank does not match tensor rank");
  return canonical_position(index);
}

double CoordinateTensor::at(const MultiIndex& index) const { return values_[position(index)]; }
double& CoordinateTensor::at(const MultiIndex& index) { return values_[position(index)]; }

double CoordinateTensor::contract(const FourVector& q) const {
  return HomogeneousPolynomial::from_symmetric(spin_.two_j(), values_).evaluate(q.components);
}

CoordinateTensor coordinates_of_operator(const Matrix& hermitian, const CovariantMatrixSet& set) {
  const Spin spin = set.spin();
  if (hermitian.rows() != spin.dim() || hermitian.cols() != spin.dim()) {
    throw std::invalid_argument("operator dimension does not match the covariant set");
  }
  const double scale = std::max(1.0, hermitian.norm());
  if ((hermitian - hermitian.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw std::invalid_argument("coordinates are defined for Hermitian operators only");
  }
  std::vector<double> values(set.size());
  for (std::size_t i = 0; i < set.size(); ++i) {
    // tr(A S) = sum_ij A_ij S_ji
    const Complex value = (hermitian.transpose().cwiseProduct(set[i])).sum();
    if (std::abs(value.imag()) > 1e-12 * scale * std::max(1.0, set[i].norm())) {
      throw std::runtime_error("coordinate " + set.indices()[i].to_string() + " has a non-negligible imaginary part");
    }
    values[i] = value.real();
  }
  return CoordinateTensor(spin, std::move(values));
}

CoordinateTensor coordinates_of(const DensityMatrix& rho, const CovariantMatrixSet& set) {
  require_same_spin(rho.spin(), set.spin(), "coordinates_of");
  return coordinates_of_operator(rho.matrix(), set);
}

Matrix reconstruct_operator(const CoordinateTensor& x, const CovariantMatrixSet& set) {
  require_same_spin(x.spin(), set.spin(), "reconstruct");
  const int n = x.spin().two_j();
  Matrix result = Matrix::Zero(x.spin().dim(), x.spin().dim());
  for (std::size_t i = 0; i < set.size(); ++i) {
    result += (static_cast<double>(set.indices()[i].multiplicity()) * x.values()[i]) * set[i];
  }
  return std::ldexp(1.0, -n) * result;
}

DensityMatrix reconstruct(const CoordinateTensor& x, const CovariantMatrixSet& set) {
  return DensityMatrix(reconstruct_operator(x, set));
}

double hs_inner(const CoordinateTensor& x, const CoordinateTensor& y) {
  require_same_spin(x.spin(), y.spin(), "hs_inner");
  const auto indices = x.indices();
  double total = 0.0;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    total += static_cast<double>(indices[i].multiplicity()) * x.values()[i] * y.values()[i];
  }
  return std::ldexp(total, -x.spin().two_j());
}

double purity(const CoordinateTensor& x) { return hs_inner(x, x); }

CoordinateTensor rotate_tensor(const CoordinateTensor& x, const Matrix3& rotation) {
  const Array44 r = extend_rotation(rotation);
  // sum_mu x'_mu q_mu... = sum_nu x_nu (R^T q)_nu..., so substitute q -> R^T q.
  Array44 transpose{};
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) transpose[a][b] = r[b][a];
  }
  const int n = x.spin().two_j();
  const auto rotated = HomogeneousPolynomial::from_symmetric(n, x.values()).substitute(transpose);
  return CoordinateTensor(x.spin(), rotated.to_symmetric());
}

CoordinateTensor reduced_coordinates(const CoordinateTensor& x, Spin k) {
  const int n = x.spin().two_j();
  if (k.two_j() > n) throw std::invalid_argument("reduced spin exceeds the spin of the state");
  const auto indices = canonical_indices(k.two_j());
  std::vector<double> values(indices.size());
  for (std::size_t i = 0; i < indices.size(); ++i) {
    values[i] = x.at(indices[i].padded_with_zeros(n - k.two_j()));
  }
  return CoordinateTensor(k, std::move(values));
}

DensityMatrix reduced_density(const DensityMatrix& rho, Spin k) {
  const int n = rho.spin().two_j();
  const int kept = k.two_j();
  if (kept > n) throw std::invalid_argument("reduced spin exceeds the spin of the state");
  const int traced = n - kept;
  const Matrix& m = rho.matrix();
  // weight(i, r) = sqrt(C(K,i) C(M,r) / C(N,i+r))
  auto weight = [&](int i, int r) {
    return std::sqrt(static_cast<double>(binomial(kept, i)) * static_cast<double>(binomial(traced, r)) /
                     static_cast<double>(binomial(n, i + r)));
  };
  Matrix out = Matrix::Zero(kept + 1, kept + 1);
  for (int i = 0; i <= kept; ++i) {
    for (int ip = 0; ip <= kept; ++ip) {
      Complex sum{0.0, 0.0};
      for (int r = 0; r <= traced; ++r) {
        sum += weight(i, r) * weight(ip, r) * m(DickeBasis::spin_row(n, i + r), DickeBasis::spin_row(n, ip + r));
      }
      out(DickeBasis::spin_row(kept, i), DickeBasis::spin_row(kept, ip)) = sum;
    }
  }
  return DensityMatrix(out);
}

CoordinateTensor coherent_coordinates(Spin spin, double theta, double phi) {
  const std::array<double, 4> n{1.0, std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
                                std::cos(theta)};
  const auto indices = canonical_indices(spin.two_j());
  std::vector<double> values(indices.size());
  for (std::size_t i = 0; i < indices.size(); ++i) {
    double product = 1.0;
    for (int mu : indices[i].indices()) product *= n[static_cast<std::size_t>(mu)];
    values[i] = product;
  }
  return CoordinateTensor(spin, std::move(values));
}

CoordinateTensor maximally_mixed_coordinates(Spin spin) {
  const int n = spin.two_j();
  const auto spatial_square = HomogeneousPolynomial::monomial({0, 2, 0, 0}) + HomogeneousPolynomial::monomial({0, 0, 2, 0}) +
                              HomogeneousPolynomial::monomial({0, 0, 0, 2});
  HomogeneousPolynomial total(n);
  HomogeneousPolynomial spatial_power(0, {1.0});
  for (int s = 0; 2 * s <= n; ++s) {
    const double weight = static_cast<double>(binomial(n, 2 * s)) / (2.0 * s + 1.0);
    total += HomogeneousPolynomial::monomial({n - 2 * s, 0, 0, 0}) * spatial_power * weight;
    spatial_power = spatial_power * spatial_square;
  }
  return CoordinateTensor(spin, total.to_symmetric());
}

CoordinateTensor cat_coordinates(Spin spin) {
  if (spin.two_j() < 1) throw std::invalid_argument("cat state needs 2j >= 1");
  // n(-) and n(+) are the spin-1/2 coordinates of |down><down| and |up><up|;
  // the cross term carries the coordinates (0, 1, -i, 0) of |down><up|.
  const std::array<double, 4> down{1.0, 0.0, 0.0, -1.0};
  const std::array<double, 4> up{1.0, 0.0, 0.0, 1.0};
  const std::array<Complex, 4> cross{Complex{0.0, 0.0}, Complex{1.0, 0.0}, Complex{0.0, -1.0}, Complex{0.0, 0.0}};
  const auto indices = canonical_indices(spin.two_j());
  std::vector<double> values(indices.size());
  for (std::size_t i = 0; i < indices.size(); ++i) {
    double pd = 1.0, pu = 1.0;
    Complex pc{1.0, 0.0};
    for (int mu : indices[i].indices()) {
      const auto m = static_cast<std::size_t>(mu);
      pd *= down[m];
      pu *= up[m];
      pc *= cross[m];
    }
    values[i] = 0.5 * (pd + pu) + pc.real();
  }
  return CoordinateTensor(spin, std::move(values));
}

CanonicalReport canonical_check(const CoordinateTensor& x, const CovariantMatrixSet& set, double tolerance) {
  CanonicalReport report;
  report.tolerance = tolerance;
  const int n = x.spin().two_j();
  report.unit_trace_deviation = std::abs(x.at(MultiIndex(std::vector<int>(static_cast<std::size_t>(n), 0))) - 1.0);
  if (n >= 2) {
    for (const auto& suffix : canonical_indices(n - 2)) {
      const double contraction = -x.at(MultiIndex(with_pair(suffix, 0))) + x.at(MultiIndex(with_pair(suffix, 1))) +
                                 x.at(MultiIndex(with_pair(suffix, 2))) + x.at(MultiIndex(with_pair(suffix, 3)));
      if (std::abs(contraction) >= report.trace_violation) {
        report.trace_violation = std::abs(contraction);
        report.worst_suffix = suffix;
      }
    }
  }
  const Matrix rebuilt = reconstruct_operator(x, set);
  const CoordinateTensor reread = coordinates_of_operator(0.5 * (rebuilt + rebuilt.adjoint()), set);
  for (std::size_t i = 0; i < x.values().size(); ++i) {
    report.reconstruction_deviation =
        std::max(report.reconstruction_deviation, std::abs(reread.values()[i] - x.values()[i]));
  }
  return report;
}

CoordinateTensor metric_null_direction(Spin spin, const MultiIndex& suffix) {
  const int n = spin.two_j();
  if (n < 2 || suffix.rank() != n - 2) throw std::invalid_argument("suffix must have rank N - 2");
  const auto metric = HomogeneousPolynomial::monomial({2, 0, 0, 0}) * -1.0 + HomogeneousPolynomial::monomial({0, 2, 0, 0}) +
                      HomogeneousPolynomial::monomial({0, 0, 2, 0}) + HomogeneousPolynomial::monomial({0, 0, 0, 2});
  const auto poly = metric * HomogeneousPolynomial::monomial(suffix.counts());
  return CoordinateTensor(spin, poly.to_symmetric());
}

}  // namespace spinbloch
