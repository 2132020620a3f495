// Copyright 2026 The spinbloch Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <fstream>
#include <sstream>

#include "spinbloch/angular.hpp"
#include "spinbloch/cli.hpp"
#include "spinbloch/documents.hpp"
#include "spinbloch/states.hpp"
#include "spinbloch/weinberg.hpp"

using namespace spinbloch;
using documents::Json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "spinbloch");
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) {
  std::ifstream file(std::string(SPINBLOCH_FIXTURES_DIR) + "/" + name);
  std::ostringstream s;
  s << file.rdbuf();
  return s.str();
}

Matrix state_matrix(const std::string& text) { return documents::parse_state(Json::parse(text)).state.matrix(); }

double dev(const Matrix& a, const Matrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("weinberg subcommand") {
  const Result all = run({"weinberg", "--two-j", "1"});
  REQUIRE(all.code == 0);
  const Json doc = Json::parse(all.out);
  CHECK(doc.at("metadata").at("version") == kVersion);
  CHECK(doc.at("metadata").at("two_j_cap") == 12);
  REQUIRE(doc.at("matrices").size() == 4);
  CHECK(doc.at("matrices")[3].at("index") == Json::array({3}));

  const Result one = run({"weinberg", "--two-j", "2", "--index", "2,1"});
  REQUIRE(one.code == 0);
  const Json single = Json::parse(one.out).at("matrices");
  REQUIRE(single.size() == 1);
  CHECK(single[0].at("index") == Json::array({1, 2}));
  CHECK(single[0].at("multiplicity") == 2);
  const SpinOperators ops = spin_operators(Spin(2));
  const Matrix expected = ops.jx * ops.jy + ops.jy * ops.jx;
  CHECK(dev(documents::matrix_from_json(single[0].at("matrix"), "m"), expected) < 1e-12);

  CHECK(run({"weinberg", "--two-j", "99"}).code == 1);
  CHECK(run({"weinberg", "--two-j", "14", "--cap", "16"}).code == 0);
  CHECK(run({"weinberg", "--two-j", "2", "--cap", "30"}).code == 1);
  CHECK(run({"weinberg", "--two-j", "2", "--index", "1,5"}).code == 1);
  CHECK(run({"weinberg", "--two-j", "2", "--index", "1,x"}).code == 1);
}

TEST_CASE("coords and reconstruct") {
  const Result coords = run({"coords", "-"}, fixture("mixed_2j2.json"));
  REQUIRE(coords.code == 0);
  const Json tensor = Json::parse(coords.out);
  for (const Json& entry : tensor.at("entries")) {
    const auto idx = entry.at("index").get<std::vector<int>>();
    const double value = entry.at("value").get<double>();
    double expected = 0.0;
    if (idx == std::vector<int>{0, 0}) expected = 1.0;
    if (idx[0] == idx[1] && idx[0] > 0) expected = 1.0 / 3.0;
    CHECK(value == doctest::Approx(expected));
  }
  const Result back = run({"reconstruct", "-"}, coords.out);
  REQUIRE(back.code == 0);
  CHECK(dev(state_matrix(back.out), Matrix::Identity(3, 3) / 3.0) < 1e-12);

  const Result random_coords = run({"coords", "-"}, fixture("random_2j3.json"));
  const Result random_back = run({"reconstruct", "-"}, random_coords.out);
  CHECK(dev(state_matrix(random_back.out), state_matrix(fixture("random_2j3.json"))) < 1e-10);

  // sparse tensor: just the identity component
  const Result sparse = run({"reconstruct", "-"}, R"({"two_j": 1, "entries": [{"index": [0], "value": 1.0}]})");
  REQUIRE(sparse.code == 0);
  CHECK(dev(state_matrix(sparse.out), Matrix::Identity(2, 2) / 2.0) < 1e-15);
}

TEST_CASE("input errors carry diagnostics") {
  Result r = run({"coords", "-"}, "{ nope");
  CHECK(r.code == 1);
  CHECK(r.err.find("malformed JSON") != std::string::npos);
  r = run({"coords", "-"}, R"({"two_j": 1, "matrix": [[{"re": 1, "im": 0}, {"re": 0, "im": 0}]]})");
  CHECK(r.code == 1);
  CHECK(r.err.find("matrix[0]") != std::string::npos);
  r = run({"coords", "-"},
          R"({"two_j": 1, "matrix": [[{"re": 1, "im": 0}, {"re": 0, "im": 0}], [{"re": 0, "im": 0}, {"re": 1, "im": 0}]]})");
  CHECK(r.code == 1);
  CHECK(r.err.find("trace") != std::string::npos);
  r = run({"coords", "-"}, R"({"two_j": 2.5, "matrix": []})");
  CHECK(r.code == 1);
  r = run({"reconstruct", "-"}, R"({"two_j": 2, "entries": [{"index": [1, 0], "value": 1.0}]})");
  CHECK(r.code == 1);
  CHECK(r.err.find("sorted") != std::string::npos);
  r = run({"reconstruct", "-"}, R"({"two_j": 1, "entries": [{"index": [0], "value": 2.0}]})");
  CHECK(r.code == 1);
  CHECK(run({"coords", "/no/such/file.json"}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("anticoherence subcommand") {
  Result r = run({"anticoherence", "-"}, fixture("tetrahedron_2j4.json"));
  REQUIRE(r.code == 0);
  Json report = Json::parse(r.out);
  CHECK(report.at("order") == 2);
  CHECK(report.at("residuals").at("moments").size() == 5);
  CHECK(report.at("order2_matrix")[1][1].get<double>() == doctest::Approx(1.0 / 3.0));
  CHECK(Json::parse(run({"anticoherence", "-"}, fixture("coherent_2j3.json")).out).at("order") == 0);
  CHECK(Json::parse(run({"anticoherence", "-"}, fixture("mixed_2j3.json")).out).at("order") == 3);

  // a tolerance between two criteria's residuals forces disagreement
  Matrix m = Matrix::Identity(3, 3) / 3.0;
  m(0, 0) += 1e-3;
  m(2, 2) -= 1e-3;
  const std::string text = documents::emit_state({DensityMatrix(m), "skewed"}).dump();
  report = Json::parse(run({"anticoherence", "-"}, text).out);
  const double a = report.at("residuals").at("reduction")[1].get<double>();
  const double b = report.at("residuals").at("multipole")[1].get<double>();
  std::ostringstream tol;
  tol.precision(17);
  tol << std::sqrt(a * b);
  r = run({"anticoherence", "-", "--tol", tol.str()}, text);
  CHECK(r.code == 2);
  report = Json::parse(r.out);
  CHECK(report.contains("error"));
  CHECK(report.at("residuals").contains("reduction"));
  CHECK(report.at("residuals").contains("multipole"));
}

TEST_CASE("random, rotate, reduce, state") {
  const Result first = run({"random", "--two-j", "2", "--count", "4", "--seed", "9"});
  const Result second = run({"random", "--two-j", "2", "--count", "4", "--seed", "9"});
  CHECK(first.code == 0);
  CHECK(first.out == second.out);
  CHECK(first.out != run({"random", "--two-j", "2", "--count", "4", "--seed", "10"}).out);
  std::istringstream lines(first.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    CHECK_NOTHROW(documents::parse_state(Json::parse(line)));
    ++count;
  }
  CHECK(count == 4);

  const Result reduced = run({"reduce", "-", "--two-k", "2"}, fixture("coherent_2j4.json"));
  REQUIRE(reduced.code == 0);
  CHECK(dev(state_matrix(reduced.out), coherent_density(Spin(2), 0.7, 1.3).matrix()) < 1e-10);
  CHECK(run({"reduce", "-", "--two-k", "5"}, fixture("coherent_2j4.json")).code == 1);

  // rotate then coords == coords then rotate_tensor
  const std::string random_state = fixture("random_2j3.json");
  const Result rotated = run({"rotate", "-", "--axis", "1,2,2", "--angle", "0.9"}, random_state);
  REQUIRE(rotated.code == 0);
  const Json rotated_coords = Json::parse(run({"coords", "-"}, rotated.out).out);
  const auto x = documents::parse_tensor(Json::parse(run({"coords", "-"}, random_state).out));
  const auto turned = rotate_tensor(x, rotation_matrix_3d(Vector3(1, 2, 2).normalized(), 0.9));
  const auto y = documents::parse_tensor(rotated_coords);
  for (std::size_t i = 0; i < y.values().size(); ++i) CHECK(std::abs(y.values()[i] - turned.values()[i]) < 1e-9);
  CHECK(run({"rotate", "-", "--axis", "0,0,0", "--angle", "1"}, random_state).code == 1);
  CHECK(run({"rotate", "-", "--axis", "1,0", "--angle", "1"}, random_state).code == 1);

  CHECK(run({"state", "--name", "tetrahedron", "--two-j", "4"}).out == fixture("tetrahedron_2j4.json"));
  CHECK(run({"state", "--name", "tetrahedron", "--two-j", "3"}).code == 1);
  CHECK(run({"state", "--name", "basis", "--two-j", "2", "--two-m", "3"}).code == 1);
  CHECK(run({"state", "--name", "unknown", "--two-j", "2"}).code == 1);
}

TEST_CASE("fixtures re-emit byte-identically") {
  for (const char* name : {"coherent_2j1.json", "mixed_2j4.json", "cat_2j3.json", "basis0_2j2.json",
                           "tetrahedron_2j4.json", "random_2j3.json"}) {
    const std::string text = fixture(name);
    REQUIRE_FALSE(text.empty());
    CHECK(documents::emit_state(documents::parse_state(Json::parse(text))).dump(2) + "\n" == text);
  }
}
