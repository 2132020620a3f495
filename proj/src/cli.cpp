// Copyright 2026 The spinbloch Authors
// SPDX-License-Identifier: Apache-2.0

#include "spinbloch/cli.hpp"

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "spinbloch/angular.hpp"
#include "spinbloch/anticoherence.hpp"
#include "spinbloch/documents.hpp"
#include "spinbloch/states.hpp"
#include "spinbloch/tensor.hpp"
#include "spinbloch/weinberg.hpp"

namespace spinbloch::cli {

namespace {

using documents::DocumentError;
using documents::Json;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  int cap = kDefaultMaxTwoJ;
  int two_j = -1;
  int two_k = -1;
  int two_m = 0;
  int count = 1;
  std::uint64_t seed = 0;
  double tol = kDefaultAnticoherenceTolerance;
  double theta = 0.0;
  double phi = 0.0;
  double angle = 0.0;
  std::string index;
  std::string axis = "0,0,1";
  std::string name;
  std::string label;
  std::string file = "-";
};

Json read_json(const std::string& path, std::istream& in) {
  std::string text;
  if (path == "-") {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  } else {
    std::ifstream file(path);
    if (!file) throw InputError("cannot open " + path);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    text = buffer.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError("malformed JSON in " + (path == "-" ? std::string("stdin") : path) + ": " + e.what());
  }
}

void write_document(std::ostream& out, const Json& document) { out << document.dump(2) << '\n'; }

std::vector<double> parse_list(const std::string& text, const char* what) {
  std::vector<double> values;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError(std::string("cannot parse ") + what + " entry '" + item + "'");
    }
  }
  return values;
}

int cmd_weinberg(const Options& o, std::ostream& out) {
  const Spin spin(o.two_j);
  require_within_cap(spin, o.cap);
  Json matrices = Json::array();
  auto emit = [&](const MultiIndex& index, const Matrix& s) {
    matrices.push_back(Json{{"index", index.indices()},
                            {"multiplicity", index.multiplicity()},
                            {"matrix", documents::matrix_to_json(s)}});
  };
  if (!o.index.empty()) {
    std::vector<int> raw;
    for (double v : parse_list(o.index, "--index")) {
      if (v != static_cast<int>(v) || v < 0 || v > 3) throw InputError("--index entries must be integers in 0..3");
      raw.push_back(static_cast<int>(v));
    }
    if (static_cast<int>(raw.size()) != o.two_j) {
      throw InputError("--index needs exactly two_j = " + std::to_string(o.two_j) + " entries");
    }
    const MultiIndex index(raw);
    emit(index, covariant_matrix(o.two_j, index));
  } else {
    const CovariantMatrixSet set = covariant_set(spin, o.cap);
    for (std::size_t i = 0; i < set.size(); ++i) emit(set.indices()[i], set[i]);
  }
  write_document(out, Json{{"metadata", documents::metadata(o.cap)}, {"two_j", o.two_j}, {"matrices", matrices}});
  return kSuccess;
}

int cmd_coords(const Options& o, std::istream& in, std::ostream& out) {
  const auto doc = documents::parse_state(read_json(o.file, in), o.cap);
  const auto set = covariant_set(doc.state.spin(), o.cap);
  write_document(out, documents::emit_tensor(coordinates_of(doc.state, set), o.cap));
  return kSuccess;
}

int cmd_reconstruct(const Options& o, std::istream& in, std::ostream& out) {
  const CoordinateTensor x = documents::parse_tensor(read_json(o.file, in), o.cap);
  const auto set = covariant_set(x.spin(), o.cap);
  const Matrix rebuilt = reconstruct_operator(x, set);
  if (auto failure = DensityMatrix::diagnose(rebuilt)) {
    throw DocumentError("tensor does not describe a valid state: " + *failure);
  }
  write_document(out, documents::emit_state({DensityMatrix(rebuilt), o.label}, o.cap));
  return kSuccess;
}

Json residual_tables(const AnticoherenceReport& r) {
  return Json{{"reduction", r.reduction}, {"multipole", r.multipole}, {"moments", r.moments}};
}

int cmd_anticoherence(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const auto doc = documents::parse_state(read_json(o.file, in), o.cap);
  Json report{{"metadata", documents::metadata(o.cap)}, {"two_j", doc.state.spin().two_j()}};
  if (!doc.label.empty()) report["label"] = doc.label;
  report["tolerance"] = o.tol;
  try {
    const AnticoherenceReport r = classify_anticoherence(doc.state, o.tol);
    report["order"] = r.order;
    report["orders"] = Json{{"reduction", r.order}, {"multipole", r.order}, {"moments", r.order}};
    report["residuals"] = residual_tables(r);
    if (doc.state.spin().two_j() >= 2) {
      const RealMatrix a = order2_matrix(doc.state);
      Json rows = Json::array();
      for (Eigen::Index i = 0; i < 4; ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < 4; ++j) row.push_back(a(i, j));
        rows.push_back(row);
      }
      report["order2_matrix"] = rows;
    }
    write_document(out, report);
    return kSuccess;
  } catch (const CriterionDisagreement& e) {
    report["error"] = e.what();
    report["orders"] = Json{{"reduction", e.by_reduction()}, {"multipole", e.by_multipole()}, {"moments", e.by_moments()}};
    report["residuals"] = residual_tables(e.report());
    write_document(out, report);
    err << "error: " << e.what() << '\n';
    return kConsistencyFailure;
  }
}

int cmd_random(const Options& o, std::ostream& out) {
  const Spin spin(o.two_j);
  require_within_cap(spin, o.cap);
  if (o.count < 0) throw InputError("--count must be nonnegative");
  std::mt19937_64 rng(o.seed);
  for (int i = 0; i < o.count; ++i) {
    const std::string label = "random seed=" + std::to_string(o.seed) + " #" + std::to_string(i);
    out << documents::emit_state({random_density(spin, rng), label}, o.cap).dump() << '\n';
  }
  return kSuccess;
}

int cmd_rotate(const Options& o, std::istream& in, std::ostream& out) {
  const auto doc = documents::parse_state(read_json(o.file, in), o.cap);
  const auto components = parse_list(o.axis, "--axis");
  if (components.size() != 3) throw InputError("--axis needs three comma-separated components");
  Vector3 axis(components[0], components[1], components[2]);
  if (!(axis.norm() > 0.0)) throw InputError("--axis must be nonzero");
  axis.normalize();
  const Matrix u = rotation_operator(doc.state.spin(), axis, o.angle);
  const Matrix rotated = u * doc.state.matrix() * u.adjoint();
  const std::string label = o.label.empty() ? doc.label : o.label;
  write_document(out, documents::emit_state({DensityMatrix(0.5 * (rotated + rotated.adjoint())), label}, o.cap));
  return kSuccess;
}

int cmd_reduce(const Options& o, std::istream& in, std::ostream& out) {
  const auto doc = documents::parse_state(read_json(o.file, in), o.cap);
  if (o.two_k < 0 || o.two_k > doc.state.spin().two_j()) {
    throw InputError("--two-k must lie in 0..two_j = " + std::to_string(doc.state.spin().two_j()));
  }
  const std::string label = o.label.empty() ? doc.label : o.label;
  write_document(out, documents::emit_state({reduced_density(doc.state, Spin(o.two_k)), label}, o.cap));
  return kSuccess;
}

int cmd_state(const Options& o, std::ostream& out) {
  const Spin spin(o.two_j);
  require_within_cap(spin, o.cap);
  std::string label = o.label.empty() ? o.name : o.label;
  auto emit = [&](const DensityMatrix& rho) {
    write_document(out, documents::emit_state({rho, label}, o.cap));
    return kSuccess;
  };
  if (o.name == "coherent") return emit(coherent_density(spin, o.theta, o.phi));
  if (o.name == "basis") return emit(basis_density(spin, o.two_m));
  if (o.name == "cat") return emit(cat_density(spin));
  if (o.name == "mixed") return emit(maximally_mixed(spin));
  if (o.name == "tetrahedron") {
    if (o.two_j != 4) throw InputError("the tetrahedron state is defined for two_j = 4 only");
    return emit(tetrahedron_density());
  }
  throw InputError("unknown state name '" + o.name + "' (coherent, basis, cat, mixed, tetrahedron)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"spinbloch: tensor (generalized Bloch) representation of spin-j states"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand
  app.add_option("--cap", o.cap, "Largest admissible two_j")->check(CLI::Range(0, kAbsoluteMaxTwoJ));

  auto* weinberg = app.add_subcommand("weinberg", "Emit the covariant matrices S for a spin");
  weinberg->add_option("--two-j", o.two_j, "Twice the spin")->required()->check(CLI::NonNegativeNumber);
  weinberg->add_option("--index", o.index, "Comma-separated multi-index, e.g. 1,2");

  auto* coords = app.add_subcommand("coords", "Coordinate tensor of a state document");
  coords->add_option("file", o.file, "State document ('-' for stdin)");

  auto* reconstruct_cmd = app.add_subcommand("reconstruct", "State document from a tensor document");
  reconstruct_cmd->add_option("file", o.file, "Tensor document ('-' for stdin)");
  reconstruct_cmd->add_option("--label", o.label, "Label for the emitted state");

  auto* anticoherence = app.add_subcommand("anticoherence", "Anticoherence order with per-criterion residuals");
  anticoherence->add_option("file", o.file, "State document ('-' for stdin)");
  anticoherence->add_option("--tol", o.tol, "Residual threshold")->check(CLI::PositiveNumber);

  auto* random = app.add_subcommand("random", "Hilbert-Schmidt random states, one JSON document per line");
  random->add_option("--two-j", o.two_j, "Twice the spin")->required()->check(CLI::NonNegativeNumber);
  random->add_option("--count", o.count, "Number of states");
  random->add_option("--seed", o.seed, "Generator seed");

  auto* rotate = app.add_subcommand("rotate", "Rotate a state by exp(-i angle axis.J)");
  rotate->add_option("file", o.file, "State document ('-' for stdin)");
  rotate->add_option("--axis", o.axis, "Rotation axis x,y,z (normalized)");
  rotate->add_option("--angle", o.angle, "Rotation angle in radians")->required();
  rotate->add_option("--label", o.label, "Label for the emitted state");

  auto* reduce = app.add_subcommand("reduce", "Spin-k reduced state (trace out 2j - 2k qubits)");
  reduce->add_option("file", o.file, "State document ('-' for stdin)");
  reduce->add_option("--two-k", o.two_k, "Twice the reduced spin")->required();
  reduce->add_option("--label", o.label, "Label for the emitted state");

  auto* state = app.add_subcommand("state", "Emit a named state");
  state->add_option("--name", o.name, "coherent | basis | cat | mixed | tetrahedron")->required();
  state->add_option("--two-j", o.two_j, "Twice the spin")->required()->check(CLI::NonNegativeNumber);
  state->add_option("--theta", o.theta, "Polar angle (coherent)");
  state->add_option("--phi", o.phi, "Azimuth (coherent)");
  state->add_option("--two-m", o.two_m, "Twice the magnetic number (basis)");
  state->add_option("--label", o.label, "Label for the emitted state");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  try {
    if (*weinberg) return cmd_weinberg(o, out);
    if (*coords) return cmd_coords(o, in, out);
    if (*reconstruct_cmd) return cmd_reconstruct(o, in, out);
    if (*anticoherence) return cmd_anticoherence(o, in, out, err);
    if (*random) return cmd_random(o, out);
    if (*rotate) return cmd_rotate(o, in, out);
    if (*reduce) return cmd_reduce(o, in, out);
    if (*state) return cmd_state(o, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const DocumentError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kConsistencyFailure;
  }
  return kInputError;
}

}  // namespace spinbloch::cli
