// Copyright 2026 The spinbloch Authors
// SPDX-License-Identifier: Apache-2.0

// Angular-momentum primitives. All matrices use the |j,m> basis ordered
// m = j, j-1, ..., -j (row 0 is m = j).

#pragma once

#include "spinbloch/spin.hpp"

namespace spinbloch {

struct SpinOperators {
  Matrix jx;
  Matrix jy;
  Matrix jz;

  /// a . J for a real 3-vector a.
  Matrix along(const Vector3& a) const { return a.x() * jx + a.y() * jy + a.z() * jz; }
};

SpinOperators spin_operators(Spin spin);

/// Coherent state |alpha> with alpha = e^{-i phi} cot(theta/2):
/// amplitude at m is sqrt(C(2j, j+m)) sin(theta/2)^(j-m) (cos(theta/2) e^{-i phi})^(j+m).
Vector coherent_state(Spin spin, double theta, double phi);

/// (1, sin(theta) cos(phi), sin(theta) sin(phi), cos(theta))
FourVector direction_of(double theta, double phi);

/// exp(-i angle axis.J). Requires |axis| = 1 within 1e-12.
Matrix rotation_operator(Spin spin, const Vector3& axis, double angle);

/// Proper rotation about `axis` by `angle` (right-handed). Paired with
/// rotation_operator it satisfies U (a.J) U^dagger = (R a).J.
Matrix3 rotation_matrix_3d(const Vector3& axis, double angle);

/// Clebsch-Gordan coefficient <j1 m1; j2 m2 | J M>, Condon-Shortley phase.
/// All arguments are doubled (2j1, 2m1, ...). Invalid combinations give 0.
double clebsch_gordan(int two_j1, int two_m1, int two_j2, int two_m2, int two_J, int two_M);

struct TensorOperator {
  int k;
  int q;
  Matrix matrix;
};

/// Irreducible tensor operator T_kq with <j,m'|T_kq|j,m> =
/// sqrt((2k+1)/(2j+1)) <j m; k q | j m'>. Orthonormal in the trace inner product.
TensorOperator tensor_operator(Spin spin, int k, int q);

/// exp(factor * H) for Hermitian H, via its eigendecomposition.
Matrix hermitian_exponential(const Matrix& generator, Complex factor);

/// Row of the |j,m> basis for the doubled magnetic number two_m.
inline Eigen::Index basis_row(Spin spin, int two_m) { return (spin.two_j() - two_m) / 2; }

}  // namespace spinbloch
