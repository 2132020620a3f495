// Copyright 2026 The spinbloch Authors
// SPDX-License-Identifier: Apache-2.0

// Named spin states and random ensembles.

#pragma once

#include <random>

#include "spinbloch/density.hpp"

namespace spinbloch {

DensityMatrix coherent_density(Spin spin, double theta, double phi);

/// |j,m><j,m| for the doubled magnetic number two_m.
DensityMatrix basis_density(Spin spin, int two_m);

/// (|j,-j> + |j,j>)/sqrt(2), 2j >= 1.
DensityMatrix cat_density(Spin spin);

/// j = 2 state (|2,2> + sqrt(2)|2,-1>)/sqrt(3).
DensityMatrix tetrahedron_density();

DensityMatrix maximally_mixed(Spin spin);

/// G G^dagger / tr(G G^dagger), G with i.i.d. standard complex Gaussian entries
/// (Hilbert-Schmidt ensemble).
DensityMatrix random_density(Spin spin, std::mt19937_64& rng);

/// (G + G^dagger)/2 with G as above.
Matrix random_hermitian(Eigen::Index dim, std::mt19937_64& rng);

/// Uniform on the sphere via a normalized Gaussian 3-vector.
Vector3 random_unit_vector(std::mt19937_64& rng);

}  // namespace spinbloch
