// Copyright 2026 The spinbloch Authors
// SPDX-License-Identifier: Apache-2.0

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <random>
#include <sstream>

#include "spinbloch/angular.hpp"
#include "spinbloch/anticoherence.hpp"
#include "spinbloch/cli.hpp"
#include "spinbloch/states.hpp"
#include "spinbloch/tensor.hpp"
#include "spinbloch/weinberg.hpp"

namespace py = pybind11;
using namespace spinbloch;

namespace {

using IndexTuple = std::vector<int>;

DensityMatrix as_state(const Matrix& rho) { return DensityMatrix(rho); }

std::vector<IndexTuple> index_list(const CoordinateTensor& x) {
  std::vector<IndexTuple> out;
  for (const MultiIndex& idx : x.indices()) out.push_back(idx.indices());
  return out;
}

// Covariant sets are cached per two_j (and per thread).
const CovariantMatrixSet& cached_set(int two_j) {
  thread_local std::map<int, CovariantMatrixSet> cache;
  auto it = cache.find(two_j);
  if (it == cache.end()) it = cache.emplace(two_j, covariant_set(Spin(two_j))).first;
  return it->second;
}

py::dict report_dict(const AnticoherenceReport& r) {
  py::dict d;
  d["order"] = r.order;
  d["tolerance"] = r.tolerance;
  d["reduction"] = r.reduction;
  d["multipole"] = r.multipole;
  d["moments"] = r.moments;
  return d;
}

}  // namespace

PYBIND11_MODULE(_spinbloch, m) {
  m.doc() = "Tensor (generalized Bloch) representation of spin-j states";
  m.attr("__version__") = kVersion;
  m.attr("DEFAULT_MAX_TWO_J") = kDefaultMaxTwoJ;

  py::register_exception<CriterionDisagreement>(m, "CriterionDisagreement", PyExc_RuntimeError);

  // angular momentum
  m.def("spin_operators", [](int two_j) {
    const SpinOperators ops = spin_operators(Spin(two_j));
    return py::make_tuple(ops.jx, ops.jy, ops.jz);
  }, py::arg("two_j"), "(Jx, Jy, Jz) in the m = j..-j basis");
  m.def("coherent_state", [](int two_j, double theta, double phi) { return coherent_state(Spin(two_j), theta, phi); },
        py::arg("two_j"), py::arg("theta"), py::arg("phi"));
  m.def("rotation_operator", [](int two_j, const Vector3& axis, double angle) {
    return rotation_operator(Spin(two_j), axis, angle);
  }, py::arg("two_j"), py::arg("axis"), py::arg("angle"), "exp(-i angle axis.J)");
  m.def("rotation_matrix_3d", &rotation_matrix_3d, py::arg("axis"), py::arg("angle"));
  m.def("clebsch_gordan", &clebsch_gordan, py::arg("two_j1"), py::arg("two_m1"), py::arg("two_j2"), py::arg("two_m2"),
        py::arg("two_J"), py::arg("two_M"), "Condon-Shortley coefficient; arguments are doubled quantum numbers");
  m.def("tensor_operator", [](int two_j, int k, int q) { return tensor_operator(Spin(two_j), k, q).matrix; },
        py::arg("two_j"), py::arg("k"), py::arg("q"));

  // covariant matrices
  m.def("covariant_matrix", [](const IndexTuple& index) {
    return covariant_matrix(static_cast<int>(index.size()), MultiIndex(index));
  }, py::arg("index"), "S matrix for a multi-index (any order)");
  m.def("covariant_set", [](int two_j, int cap) {
    const CovariantMatrixSet set = covariant_set(Spin(two_j), cap);
    py::list out;
    for (std::size_t i = 0; i < set.size(); ++i) {
      out.append(py::make_tuple(py::tuple(py::cast(set.indices()[i].indices())), set.indices()[i].multiplicity(), set[i]));
    }
    return out;
  }, py::arg("two_j"), py::arg("cap") = kDefaultMaxTwoJ, "[(index, multiplicity, matrix)] in canonical order");
  m.def("pi_polynomial", [](int two_j, const std::array<double, 4>& q) {
    return pi_polynomial(Spin(two_j), {q[0], q[1], q[2], q[3]});
  }, py::arg("two_j"), py::arg("q"));
  m.def("pi_from_set", [](int two_j, const std::array<double, 4>& q) {
    return pi_from_set(cached_set(two_j), {q[0], q[1], q[2], q[3]});
  }, py::arg("two_j"), py::arg("q"));
  m.def("pi_boost", [](int two_j, const std::array<double, 4>& q) {
    return pi_boost(Spin(two_j), {q[0], q[1], q[2], q[3]});
  }, py::arg("two_j"), py::arg("q"));

  // coordinate tensors
  py::class_<CoordinateTensor>(m, "CoordinateTensor")
      .def(py::init([](int two_j, const std::vector<double>& values) { return CoordinateTensor(Spin(two_j), values); }),
           py::arg("two_j"), py::arg("values"))
      .def_property_readonly("two_j", [](const CoordinateTensor& x) { return x.spin().two_j(); })
      .def_property_readonly("values", &CoordinateTensor::values)
      .def_property_readonly("indices", &index_list)
      .def("__getitem__", [](const CoordinateTensor& x, const IndexTuple& idx) { return x.at(MultiIndex(idx)); })
      .def("__len__", [](const CoordinateTensor& x) { return x.values().size(); })
      .def("contract", [](const CoordinateTensor& x, const std::array<double, 4>& q) {
        return x.contract({q[0], q[1], q[2], q[3]});
      });

  m.def("coordinates_of", [](const Matrix& rho) {
    const DensityMatrix state = as_state(rho);
    return coordinates_of(state, cached_set(state.spin().two_j()));
  }, py::arg("rho"));
  m.def("reconstruct", [](const CoordinateTensor& x) { return reconstruct(x, cached_set(x.spin().two_j())).matrix(); },
        py::arg("x"));
  m.def("hs_inner", &hs_inner, py::arg("x"), py::arg("y"));
  m.def("purity", &purity, py::arg("x"));
  m.def("rotate_tensor", &rotate_tensor, py::arg("x"), py::arg("rotation"));
  m.def("reduced_coordinates", [](const CoordinateTensor& x, int two_k) { return reduced_coordinates(x, Spin(two_k)); },
        py::arg("x"), py::arg("two_k"));
  m.def("reduced_density", [](const Matrix& rho, int two_k) {
    return reduced_density(as_state(rho), Spin(two_k)).matrix();
  }, py::arg("rho"), py::arg("two_k"));
  m.def("coherent_coordinates", [](int two_j, double theta, double phi) {
    return coherent_coordinates(Spin(two_j), theta, phi);
  }, py::arg("two_j"), py::arg("theta"), py::arg("phi"));
  m.def("maximally_mixed_coordinates", [](int two_j) { return maximally_mixed_coordinates(Spin(two_j)); },
        py::arg("two_j"));
  m.def("cat_coordinates", [](int two_j) { return cat_coordinates(Spin(two_j)); }, py::arg("two_j"));

  // named states
  m.def("coherent_density", [](int two_j, double theta, double phi) {
    return coherent_density(Spin(two_j), theta, phi).matrix();
  }, py::arg("two_j"), py::arg("theta"), py::arg("phi"));
  m.def("basis_density", [](int two_j, int two_m) { return basis_density(Spin(two_j), two_m).matrix(); },
        py::arg("two_j"), py::arg("two_m"));
  m.def("cat_density", [](int two_j) { return cat_density(Spin(two_j)).matrix(); }, py::arg("two_j"));
  m.def("tetrahedron_density", [] { return tetrahedron_density().matrix(); });
  m.def("maximally_mixed", [](int two_j) { return maximally_mixed(Spin(two_j)).matrix(); }, py::arg("two_j"));
  m.def("random_density", [](int two_j, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return random_density(Spin(two_j), rng).matrix();
  }, py::arg("two_j"), py::arg("seed"), "Hilbert-Schmidt random state");

  // anticoherence
  m.def("classify_anticoherence", [](const Matrix& rho, double tol) {
    return report_dict(classify_anticoherence(as_state(rho), tol));
  }, py::arg("rho"), py::arg("tol") = kDefaultAnticoherenceTolerance);
  m.def("multipole_expand", [](const Matrix& rho) { return multipole_expand(as_state(rho)).by_rank; }, py::arg("rho"),
        "rho_kq as nested lists, [k][q + k]");
  m.def("order2_matrix", [](const Matrix& rho) { return order2_matrix(as_state(rho)); }, py::arg("rho"));
  m.def("spin1_family", [](double a, Complex beta, Complex gamma) {
    const Spin1FamilyResult r = spin1_family({a, beta, gamma});
    py::dict d;
    d["matrix"] = r.matrix;
    d["first_condition_slack"] = r.first_condition_slack;
    d["second_condition_slack"] = r.second_condition_slack;
    d["min_eigenvalue"] = r.min_eigenvalue;
    d["conditions_hold"] = r.conditions_hold();
    d["positive_semidefinite"] = r.positive_semidefinite();
    return d;
  }, py::arg("a"), py::arg("beta"), py::arg("gamma"));

  m.def("run_cli", [](std::vector<std::string> args, const std::string& stdin_text) {
    args.insert(args.begin(), "spinbloch");
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    const int code = cli::run(args, in, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), py::arg("stdin") = "", "Run a CLI command in-process; returns (exit_code, stdout, stderr)");
}
