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

#include "qmw/fidelity.hpp"
#include "qmw/pauli.hpp"

using namespace qmw;

namespace {

// Full density-matrix evolution of |Phi><Phi| under the channel acting on
// the code half, as an independent oracle for the fast simulation path.
// rho lives on n + k qubits (code bits low, reference bits high).
struct DensityOracle {
  double trace_after = 0;
  double fidelity = 0;
};

DensityOracle evolve_entangled(const QuantumCode& code, double p) {
  const DenseCode dense = dense_form(code);
  const int n = dense.num_qubits();
  const int k = dense.num_logical();
  const size_t dim = size_t{1} << (n + k);
  const size_t code_dim = size_t{1} << n;

  CVec phi(dim, Complex{0, 0});
  const double amp = std::pow(2.0, -k / 2.0);
  for (size_t i = 0; i < dense.basis().size(); ++i)
    for (size_t c = 0; c < code_dim; ++c)
      phi[(i << n) | c] += amp * dense.basis()[i][c];

  CMat rho(dim, dim);
  for (size_t r = 0; r < dim; ++r)
    for (size_t c = 0; c < dim; ++c) rho(r, c) = phi[r] * std::conj(phi[c]);

  const double q = (1.0 - p) / 3.0;
  CMat rho_f(dim, dim);
  const uint32_t nmask = (1u << n) - 1u;
  for (uint64_t m = 0; m < (uint64_t{1} << (2 * n)); ++m) {
    const uint32_t x = static_cast<uint32_t>(m) & nmask;
    const uint32_t z = static_cast<uint32_t>(m >> n) & nmask;
    const int d = std::popcount(x | z);
    const double w = std::pow(p, n - d) * std::pow(q, d);
    if (w == 0.0) continue;
    // E acts on the low n qubits; each row of the dense oracle matrix has a
    // single nonzero entry E[rc][rc ^ x].
    CMat e = dense_matrix(PauliOperator::from_bits(n, x, z, 0));
    for (size_t r = 0; r < dim; ++r) {
      const size_t rc = r & nmask;
      const Complex coef_r = e(rc, rc ^ x);
      for (size_t c = 0; c < dim; ++c) {
        const size_t cc = c & nmask;
        const Complex coef_c = e(cc, cc ^ x);
        rho_f(r, c) += w * coef_r * std::conj(coef_c) *
                       rho((r & ~size_t{nmask}) | (rc ^ x),
                           (c & ~size_t{nmask}) | (cc ^ x));
      }
    }
  }

  DensityOracle out;
  out.trace_after = rho_f.trace().real();
  Complex f = 0;
  for (size_t r = 0; r < dim; ++r)
    for (size_t c = 0; c < dim; ++c)
      f += std::conj(phi[r]) * rho_f(r, c) * phi[c];
  out.fidelity = f.real();
  return out;
}

}  // namespace

TEST_CASE("Kraus probabilities sum to one exactly") {
  for (int n = 1; n <= 6; ++n) {
    for (Rat p : {Rat(1), Rat(9, 10), Rat(1, 3), Rat(0)}) {
      DepolarizingChannel ch{n, p};
      CHECK(ch.total_probability() == 1);
    }
  }
}

TEST_CASE("entanglement fidelity polynomial anchors") {
  WeightEnumerator full;
  full.n = 1;
  full.k = 1;
  full.coeffs = {Rat(1), Rat(0)};
  CHECK(entanglement_fidelity_poly(full, Rat(1)) == 1);

  auto [a, b] = enumerate_stabilizer(builtin_code("five_qubit").stabilizer());
  CHECK(entanglement_fidelity_poly(a, Rat(1)) == 1);
  CHECK(entanglement_fidelity_poly(a, Rat(0)) == 0);  // A_5 = 0

  // (9/10)^5 + 15 (9/10) (1/30)^4, exactly
  Rat expect = Rat(9, 10) * Rat(9, 10) * Rat(9, 10) * Rat(9, 10) * Rat(9, 10) +
               Rat(15) * Rat(9, 10) * Rat(1, 30) * Rat(1, 30) * Rat(1, 30) *
                   Rat(1, 30);
  CHECK(entanglement_fidelity_poly(a, Rat(9, 10)) == expect);
}

TEST_CASE("average fidelity polynomial follows the stated normalization") {
  WeightEnumerator full_b;
  full_b.n = 1;
  full_b.k = 1;
  full_b.kind = WeightEnumerator::Kind::kB;
  full_b.coeffs = {Rat(1), Rat(3)};
  // p^n B((1-p)/3p) / 2^k is constant 1/2 for the full space; at p = 1 it is
  // the purity 2^{-k}, not 1. The simulation below confirms this is the
  // quantity the formula describes.
  CHECK(average_fidelity_poly(full_b, 1, Rat(1)) == Rat(1, 2));
  CHECK(average_fidelity_poly(full_b, 1, Rat(9, 10)) == Rat(1, 2));
}

TEST_CASE("full-space simulations match their closed forms") {
  auto trivial = builtin_code("trivial_1");
  for (double p : {0.0, 0.3, 0.7, 1.0}) {
    CAPTURE(p);
    // <Phi|(sigma x I)|Phi> = tr(sigma)/2 = 0 for non-identity: F_e = p.
    CHECK(std::abs(simulate_entanglement_fidelity(trivial, p) - p) < 1e-12);
    // identity and Z fix |0>,|1>: diagonal average = p + (1-p)/3.
    CHECK(std::abs(simulate_basis_average_fidelity(trivial, p) -
                   (p + (1.0 - p) / 3.0)) < 1e-12);
    // ensemble overlap is the constant 1/2 = the B polynomial.
    CHECK(std::abs(simulate_average_fidelity(trivial, p) - 0.5) < 1e-12);
  }
}

TEST_CASE("five-qubit simulation at p = 1 is exactly noiseless") {
  auto five = builtin_code("five_qubit");
  CHECK(std::abs(simulate_entanglement_fidelity(five, 1.0) - 1.0) < 1e-12);
  CHECK(std::abs(simulate_basis_average_fidelity(five, 1.0) - 1.0) < 1e-12);
}

TEST_CASE("polynomials match simulation for five_qubit and shor_9") {
  for (const char* name : {"five_qubit", "shor_9"}) {
    auto code = builtin_code(name);
    auto [a, b] = enumerate_stabilizer(code.stabilizer());
    for (double p : {1.0, 0.99, 0.9}) {
      CAPTURE(name);
      CAPTURE(p);
      Rat pr = p == 1.0 ? Rat(1) : (p == 0.99 ? Rat(99, 100) : Rat(9, 10));
      double fe_poly = rat_to_double(entanglement_fidelity_poly(a, pr));
      double fe_sim = simulate_entanglement_fidelity(code, p);
      CHECK(std::abs(fe_poly - fe_sim) < 1e-9);
      double fa_poly =
          rat_to_double(average_fidelity_poly(b, code.num_logical(), pr));
      double fa_sim = simulate_average_fidelity(code, p);
      CHECK(std::abs(fa_poly - fa_sim) < 1e-9);
    }
  }
}

TEST_CASE("density-matrix oracle: trace preserved and fidelity reproduced") {
  for (const char* name : {"trivial_1", "bell", "five_qubit"}) {
    CAPTURE(name);
    auto code = builtin_code(name);
    auto oracle = evolve_entangled(code, 0.9);
    CHECK(std::abs(oracle.trace_after - 1.0) < 1e-12);
    CHECK(std::abs(oracle.fidelity -
                   simulate_entanglement_fidelity(code, 0.9)) < 1e-12);
  }
}

TEST_CASE("entanglement fidelity is monotone in p on [1/4, 1]") {
  for (const char* name : {"five_qubit", "steane_7", "shor_9", "bell",
                           "trivial_1", "trivial_2", "trivial_3"}) {
    CAPTURE(name);
    auto code = builtin_code(name);
    auto [a, b] = enumerate_stabilizer(code.stabilizer());
    Rat prev = -1;
    for (int i = 0; i <= 19; ++i) {
      Rat p = Rat(1, 4) + Rat(3 * i, 4 * 19);
      Rat f = entanglement_fidelity_poly(a, p);
      CHECK(f >= prev);
      prev = f;
    }
    CHECK(prev == 1);  // p = 1 endpoint
  }
}

TEST_CASE("unnormalized B polynomial dominates the A polynomial") {
  for (const char* name : {"five_qubit", "steane_7", "shor_9", "bell",
                           "trivial_1", "trivial_2", "trivial_3"}) {
    CAPTURE(name);
    auto code = builtin_code(name);
    auto [a, b] = enumerate_stabilizer(code.stabilizer());
    for (int i = 0; i <= 19; ++i) {
      Rat p = Rat(1, 4) + Rat(3 * i, 4 * 19);
      // B_d >= A_d termwise, so the p-weighted sums are ordered too.
      Rat fa = entanglement_fidelity_poly(a, p);
      Rat fb = average_fidelity_poly(b, 0, p);  // k = 0: no 2^-k scaling
      CHECK(fb >= fa);
    }
  }
}

TEST_CASE("probability domain is validated") {
  WeightEnumerator a;
  a.n = 1;
  a.k = 1;
  a.coeffs = {Rat(1), Rat(0)};
  CHECK_THROWS_AS(entanglement_fidelity_poly(a, Rat(2)), std::invalid_argument);
  CHECK_THROWS_AS(simulate_entanglement_fidelity(builtin_code("trivial_1"), -0.5),
                  std::invalid_argument);
  CHECK_THROWS_AS(simulate_entanglement_fidelity(builtin_code("trivial_11"), 0.5),
                  std::invalid_argument);
}
