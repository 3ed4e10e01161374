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

#include "qmw/transform.hpp"

#include <cmath>
#include <stdexcept>

#include "qmw/pauli.hpp"

namespace qmw {

namespace {

void check_lengths(const WeightEnumerator& w, int n) {
  if (static_cast<int>(w.coeffs.size()) != n + 1)
    throw std::invalid_argument("transform: enumerator has " +
                                std::to_string(w.coeffs.size()) +
                                " coefficients, expected n+1 = " +
                                std::to_string(n + 1));
}

WeightEnumerator apply_table(const WeightEnumerator& in, int n, int k,
                             const Rat& prefactor,
                             WeightEnumerator::Kind out_kind) {
  check_lengths(in, n);
  if (!in.exact)
    throw std::invalid_argument("transform: input enumerator is not exact");
  KrawtchoukTable t = krawtchouk_table(n);
  const Int two_n = int_pow(2, n);
  WeightEnumerator out;
  out.n = n;
  out.k = k;
  out.kind = out_kind;
  out.coeffs.reserve(n + 1);
  for (int d = 0; d <= n; ++d) {
    Rat s = 0;
    for (int dp = 0; dp <= n; ++dp)
      s += Rat(t.alpha[d][dp], two_n) * in.coeffs[dp];
    out.coeffs.push_back(prefactor * s);
  }
  return out;
}

}  // namespace

KrawtchoukTable krawtchouk_table(int n) {
  if (n < 0 || n > 64)
    throw std::invalid_argument("krawtchouk_table: n out of 0..64");
  KrawtchoukTable t;
  t.n = n;
  const Int two_n = int_pow(2, n);
  t.alpha.assign(n + 1, std::vector<Int>(n + 1));
  for (int d = 0; d <= n; ++d) {
    for (int dp = 0; dp <= n; ++dp) {
      Int sum = 0;
      for (int s = 0; s <= d; ++s) {
        Int term = int_pow(3, d - s) * binomial(dp, s) * binomial(n - dp, d - s);
        sum += (s & 1) ? -term : term;
      }
      t.alpha[d][dp] = two_n * sum;
    }
  }
  return t;
}

WeightEnumerator macwilliams_transform(const WeightEnumerator& a, int n, int k) {
  // Prefactor tr(P)^2 / (2^n tr(P^2)) = 2^{k-n} for a projector onto 2^k states.
  return apply_table(a, n, k, Rat(int_pow(2, k), int_pow(2, n)),
                     WeightEnumerator::Kind::kB);
}

WeightEnumerator inverse_transform(const WeightEnumerator& b, int n, int k) {
  return apply_table(b, n, k, Rat(1, int_pow(2, n + k)),
                     WeightEnumerator::Kind::kA);
}

Int alpha_bruteforce(int n, int d, int d_prime) {
  if (n < 1 || n > 6)
    throw std::invalid_argument("alpha_bruteforce: n out of 1..6");
  if (d < 0 || d > n || d_prime < 0 || d_prime > n)
    throw std::invalid_argument("alpha_bruteforce: weight out of range");

  // One representative of weight d': Z on the first d' qubits. The sum is
  // invariant under qubit permutations and local unitaries, so any choice
  // gives the same value.
  uint32_t zmask = d_prime == 0 ? 0u : (1u << d_prime) - 1u;
  CMat dmat = dense_matrix(PauliOperator::from_bits(n, 0, zmask, 0));

  double total = 0;
  for (const PauliOperator& e : DistanceSet(n, d)) {
    CMat emat = dense_matrix(e);
    CMat eded = matmul(matmul(emat, dmat), matmul(emat, dmat));
    Complex tr = eded.trace();
    if (std::abs(tr.imag()) > 1e-6)
      throw std::runtime_error("alpha_bruteforce: non-real trace");
    total += tr.real();
  }
  double rounded = std::nearbyint(total);
  if (std::abs(total - rounded) > 1e-6)
    throw std::runtime_error("alpha_bruteforce: non-integer trace sum");
  return Int(static_cast<long long>(rounded));
}

std::vector<std::vector<Rat>> transform_matrix(int n, int k) {
  KrawtchoukTable t = krawtchouk_table(n);
  const Int denom = int_pow(2, 2 * n - k);  // 2^{n-k} * 2^n
  std::vector<std::vector<Rat>> rows(n + 1, std::vector<Rat>(n + 1));
  for (int d = 0; d <= n; ++d)
    for (int dp = 0; dp <= n; ++dp) rows[d][dp] = Rat(t.alpha[d][dp], denom);
  return rows;
}

}  // namespace qmw
