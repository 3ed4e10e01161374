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

#include "qmw/fidelity.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "qmw/kernels.hpp"
#include "parallel.hpp"

namespace qmw {

namespace {

constexpr int kSimulateCap = 10;
constexpr uint64_t kChunk = 4096;

struct FidelityAccum {
  double entanglement = 0;
  double ensemble_avg = 0;
  double basis_diag_avg = 0;
};

FidelityAccum merge(FidelityAccum a, const FidelityAccum& b) {
  a.entanglement += b.entanglement;
  a.ensemble_avg += b.ensemble_avg;
  a.basis_diag_avg += b.basis_diag_avg;
  return a;
}

// One pass over all 4^n Pauli strings, accumulating every fidelity variant
// from the same kernel-evaluated matrix elements.
FidelityAccum channel_sum(const QuantumCode& code, double p) {
  if (p < 0.0 || p > 1.0)
    throw std::invalid_argument("fidelity: p must lie in [0, 1]");
  const int n = code.num_qubits();
  if (n > kSimulateCap)
    throw std::invalid_argument("fidelity simulation: n exceeds cap of " +
                                std::to_string(kSimulateCap));
  const DenseCode dense = dense_form(code);
  const auto& basis = dense.basis();
  const size_t nb = basis.size();
  const int k = dense.num_logical();
  const double inv_k = std::ldexp(1.0, -k);
  const double inv_2k = std::ldexp(1.0, -2 * k);
  const uint32_t nmask = (1u << n) - 1u;
  const double q = (1.0 - p) / 3.0;

  std::vector<double> prob(n + 1);
  for (int d = 0; d <= n; ++d)
    prob[d] = std::pow(p, n - d) * std::pow(q, d);

  auto chunk_fn = [&](uint64_t begin, uint64_t end) {
    FidelityAccum acc;
    for (uint64_t m = begin; m < end; ++m) {
      const uint32_t x = static_cast<uint32_t>(m) & nmask;
      const uint32_t z = static_cast<uint32_t>(m >> n) & nmask;
      const double pe = prob[std::popcount(x | z)];
      if (pe == 0.0) continue;
      Complex diag_sum = 0;
      double abs2_all = 0, abs2_diag = 0;
      for (size_t i = 0; i < nb; ++i) {
        for (size_t j = 0; j < nb; ++j) {
          Complex mij = kern::pauli_bra_ket(basis[i], basis[j], x, z, 0);
          abs2_all += std::norm(mij);
          if (i == j) {
            diag_sum += mij;
            abs2_diag += std::norm(mij);
          }
        }
      }
      acc.entanglement += pe * std::norm(diag_sum) * inv_2k;
      acc.ensemble_avg += pe * abs2_all * inv_2k;
      acc.basis_diag_avg += pe * abs2_diag * inv_k;
    }
    return acc;
  };
  const uint64_t total = uint64_t{1} << (2 * n);
  return detail::run_chunked(total, kChunk, chunk_fn, FidelityAccum{}, merge);
}

}  // namespace

Rat DepolarizingChannel::operator_probability(int weight) const {
  if (weight < 0 || weight > n)
    throw std::invalid_argument("operator_probability: weight out of range");
  if (p < 0 || p > 1)
    throw std::invalid_argument("DepolarizingChannel: p out of [0, 1]");
  Rat q = (Rat(1) - p) / 3;
  Rat r = 1;
  for (int i = 0; i < n - weight; ++i) r *= p;
  for (int i = 0; i < weight; ++i) r *= q;
  return r;
}

Rat DepolarizingChannel::total_probability() const {
  Rat total = 0;
  for (int d = 0; d <= n; ++d)
    total += Rat(int_pow(3, d) * binomial(n, d)) * operator_probability(d);
  return total;
}

Rat entanglement_fidelity_poly(const WeightEnumerator& a, const Rat& p) {
  if (p < 0 || p > 1)
    throw std::invalid_argument("entanglement_fidelity_poly: p out of [0, 1]");
  DepolarizingChannel ch{a.n, p};
  Rat f = 0;
  for (int d = 0; d <= a.n; ++d)
    f += a.coeffs[d] * ch.operator_probability(d);
  return f;
}

Rat average_fidelity_poly(const WeightEnumerator& b, int k, const Rat& p) {
  if (p < 0 || p > 1)
    throw std::invalid_argument("average_fidelity_poly: p out of [0, 1]");
  DepolarizingChannel ch{b.n, p};
  Rat f = 0;
  for (int d = 0; d <= b.n; ++d)
    f += b.coeffs[d] * ch.operator_probability(d);
  return f / int_pow(2, k);
}

double simulate_entanglement_fidelity(const QuantumCode& code, double p) {
  return channel_sum(code, p).entanglement;
}

double simulate_average_fidelity(const QuantumCode& code, double p) {
  return channel_sum(code, p).ensemble_avg;
}

double simulate_basis_average_fidelity(const QuantumCode& code, double p) {
  return channel_sum(code, p).basis_diag_avg;
}

}  // namespace qmw
