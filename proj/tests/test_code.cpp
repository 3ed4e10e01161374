// Copyright 2026 The qmw Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "qmw/code.hpp"

using namespace qmw;

TEST_CASE("builtin codes have the expected shapes") {
  auto five = builtin_code("five_qubit");
  CHECK(five.num_qubits() == 5);
  CHECK(five.num_logical() == 1);
  CHECK(five.stabilizer().generators().size() == 4);

  CHECK(builtin_code("steane_7").num_logical() == 1);
  auto shor = builtin_code("shor_9");
  CHECK(shor.num_logical() == 1);
  CHECK(shor.stabilizer().generators().size() == 8);
  CHECK(shor.stabilizer().generators()[0].str() == "ZZIIIIIII");
  CHECK(builtin_code("bell").num_logical() == 0);
  CHECK(builtin_code("trivial_3").num_logical() == 3);
}

TEST_CASE("unknown builtin lists the available names") {
  try {
    builtin_code("nope");
    FAIL("expected throw");
  } catch (const std::invalid_argument& e) {
    std::string msg = e.what();
    CHECK(msg.find("five_qubit") != std::string::npos);
    CHECK(msg.find("shor_9") != std::string::npos);
  }
}

TEST_CASE("stabilizer validation rejects bad generator sets") {
  auto g = [](const char* s) { return PauliOperator::parse(s); };
  // anticommuting pair
  CHECK_THROWS_AS(StabilizerCode(2, {g("XI"), g("ZI")}), std::invalid_argument);
  // dependent set
  CHECK_THROWS_AS(StabilizerCode(2, {g("XX"), g("XX")}), std::invalid_argument);
  // non-Hermitian phase
  CHECK_THROWS_AS(StabilizerCode(1, {g("+iX")}), std::invalid_argument);
  // wrong width
  CHECK_THROWS_AS(StabilizerCode(2, {g("X")}), std::invalid_argument);
  // -Z is fine: phase 2 is Hermitian
  CHECK_NOTHROW(StabilizerCode(1, {g("-Z")}));
}

TEST_CASE("projector of the trivial and single-Z codes") {
  auto trivial = builtin_code("trivial_1");
  CMat p = projector(trivial);
  CHECK(std::abs(p.trace() - Complex{2, 0}) < 1e-12);
  CHECK(max_abs_diff(p, CMat::identity(2)) < 1e-12);

  QuantumCode zcode(StabilizerCode(1, {PauliOperator::parse("Z")}));
  CMat pz = projector(zcode);
  CHECK(std::abs(pz.trace() - Complex{1, 0}) < 1e-12);
  CHECK(std::abs(pz(0, 0) - Complex{1, 0}) < 1e-12);
  CHECK(std::abs(pz(1, 1)) < 1e-12);
}

TEST_CASE("builtin projectors are idempotent with trace 2^k") {
  for (const char* name : {"five_qubit", "steane_7", "bell", "trivial_2"}) {
    auto code = builtin_code(name);
    CMat p = projector(code);
    double want_trace = std::pow(2.0, code.num_logical());
    CHECK(std::abs(p.trace() - Complex{want_trace, 0}) < 1e-12);
    CHECK(max_abs_diff(matmul(p, p), p) < 1e-12);
    CHECK(max_abs_diff(p, p.adjoint()) < 1e-12);
  }
}

TEST_CASE("basis_states spans the projector range") {
  auto five = builtin_code("five_qubit");
  DenseCode basis = basis_states(five.stabilizer());
  CHECK(basis.basis().size() == 2);
  CMat p = projector(five);
  for (const auto& v : basis.basis()) {
    // P v = v
    for (size_t r = 0; r < v.size(); ++r) {
      Complex pv = 0;
      for (size_t c = 0; c < v.size(); ++c) pv += p(r, c) * v[c];
      CHECK(std::abs(pv - v[r]) < 1e-10);
    }
  }
  // orthonormal to 1e-12
  CHECK(std::abs(inner(basis.basis()[0], basis.basis()[0]) - Complex{1, 0}) < 1e-12);
  CHECK(std::abs(inner(basis.basis()[0], basis.basis()[1])) < 1e-12);
}

TEST_CASE("sum of |c_i><c_i| reconstructs the projector") {
  for (const char* name : {"five_qubit", "bell", "trivial_2", "steane_7"}) {
    auto code = builtin_code(name);
    DenseCode basis = basis_states(code.stabilizer());
    QuantumCode as_dense(basis);
    CHECK(max_abs_diff(projector(as_dense), projector(code)) < 1e-10);
  }
}

TEST_CASE("bell basis state is the Bell state") {
  DenseCode basis = basis_states(builtin_code("bell").stabilizer());
  REQUIRE(basis.basis().size() == 1);
  const CVec& v = basis.basis()[0];
  CVec bell = {Complex{1 / std::sqrt(2.0), 0}, 0, 0,
               Complex{1 / std::sqrt(2.0), 0}};
  CHECK(std::abs(std::abs(inner(bell, v)) - 1.0) < 1e-12);
}

TEST_CASE("trivial code basis is the standard basis") {
  DenseCode basis = basis_states(builtin_code("trivial_1").stabilizer());
  REQUIRE(basis.basis().size() == 2);
  CHECK(std::abs(std::abs(basis.basis()[0][0]) +
                 std::abs(basis.basis()[1][0]) - 1.0) < 1e-12);
}

TEST_CASE("dense code validation") {
  CVec e0 = {1, 0}, e1 = {0, 1};
  CHECK_NOTHROW(DenseCode(1, {e0, e1}));
  CVec bad = {1, 1};
  CHECK_THROWS_AS(DenseCode(1, {bad}), std::invalid_argument);
  CHECK_THROWS_AS(DenseCode(1, {e0, e0}), std::invalid_argument);
  CHECK_THROWS_AS(DenseCode(1, {e0, e1, e0}), std::invalid_argument);  // not 2^k
}

TEST_CASE("stabilizer file round trip is byte-identical") {
  auto five = builtin_code("five_qubit");
  std::ostringstream out;
  print_code_file(out, five);
  std::string text = out.str();
  std::istringstream in(text);
  auto parsed = parse_code_file(in);
  CHECK(parsed.is_stabilizer());
  CHECK(parsed.stabilizer().generators() == five.stabilizer().generators());
  std::ostringstream out2;
  print_code_file(out2, parsed);
  CHECK(out2.str() == text);
}

TEST_CASE("dense file with exact rationals round trips exactly") {
  std::string text = "dense n=1 k=0\n3/5 4/5\n";
  std::istringstream in(text);
  auto code = parse_code_file(in);
  CHECK(!code.is_stabilizer());
  CHECK(code.num_logical() == 0);
  REQUIRE(code.dense().exact_amplitudes().has_value());
  CHECK((*code.dense().exact_amplitudes())[0][0] == Rat(3, 5));
  std::ostringstream out;
  print_code_file(out, code);
  CHECK(out.str() == text);
}

TEST_CASE("dense file accepts complex decimal amplitudes") {
  std::string text =
      "# a comment\n"
      "dense n=1 k=0\n"
      "0.6 0.8i   # unit vector\n";
  std::istringstream in(text);
  auto code = parse_code_file(in);
  CHECK(std::abs(code.dense().basis()[0][0] - Complex{0.6, 0}) < 1e-15);
  CHECK(std::abs(code.dense().basis()[0][1] - Complex{0, 0.8}) < 1e-15);
  CHECK(!code.dense().exact_amplitudes().has_value());

  std::string text2 = "dense n=1 k=0\n-0.6-0.8i 0\n";
  std::istringstream in2(text2);
  auto code2 = parse_code_file(in2);
  CHECK(std::abs(code2.dense().basis()[0][0] - Complex{-0.6, -0.8}) < 1e-15);

  // printing decimals re-parses to the same values
  std::ostringstream out;
  print_code_file(out, code2);
  std::istringstream in3(out.str());
  auto code3 = parse_code_file(in3);
  CHECK(std::abs(code3.dense().basis()[0][0] - code2.dense().basis()[0][0]) == 0.0);
}

TEST_CASE("code file errors are reported") {
  auto parse_str = [](const std::string& s) {
    std::istringstream in(s);
    return parse_code_file(in);
  };
  CHECK_THROWS_AS(parse_str(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_str("frobnicate n=2\nXX\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_str("stabilizer n=2\nXQ\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_str("dense n=1 k=0\n1 0 0\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_str("dense n=1 k=0\n0.7 0.7\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_str("dense n=1 k=1\n1 0\n"), std::invalid_argument);
}

TEST_CASE("resolve_code falls back to the filesystem") {
  CHECK(resolve_code("bell").num_qubits() == 2);
  CHECK_THROWS_AS(resolve_code("/does/not/exist"), std::invalid_argument);
}

TEST_CASE("projector rejects oversized codes") {
  CHECK_THROWS_AS(projector(builtin_code("trivial_11")), std::invalid_argument);
}
