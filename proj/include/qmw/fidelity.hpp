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

#ifndef QMW_FIDELITY_HPP
#define QMW_FIDELITY_HPP

#include "qmw/code.hpp"
#include "qmw/enumerator.hpp"
#include "qmw/rational.hpp"

namespace qmw {

// Depolarizing channel: each qubit is left alone with probability p and hit
// by each of X, Y, Z with probability (1-p)/3, so a Pauli string of weight d
// occurs with probability p^{n-d} ((1-p)/3)^d. Those probabilities sum to 1
// over all 4^n strings.
struct DepolarizingChannel {
  int n = 1;
  Rat p = 1;

  Rat operator_probability(int weight) const;
  Rat total_probability() const;  // always 1; exposed for exact checks
};

// Entanglement fidelity sum_d A_d p^{n-d} ((1-p)/3)^d, i.e. p^n A((1-p)/3p)
// evaluated in the singularity-free direct form. Exact for rational p.
Rat entanglement_fidelity_poly(const WeightEnumerator& a, const Rat& p);

// 2^{-k} sum_d B_d p^{n-d} ((1-p)/3)^d, i.e. p^n B((1-p)/3p) / tr(P_c).
// This equals the incoherent-ensemble overlap tr(rho_c E(rho_c)) with
// rho_c = P_c / 2^k, which is what simulate_average_fidelity measures; at
// p = 1 it gives 2^{-k}, the purity of rho_c, not 1.
Rat average_fidelity_poly(const WeightEnumerator& b, int k, const Rat& p);

// <Phi| E(|Phi><Phi|) |Phi> for the maximally entangled state
// |Phi> = 2^{-k/2} sum_i |i>|c_i> with the channel on the code half,
// evaluated as the Kraus sum over Pauli conjugations with kernel-computed
// matrix elements. Never materializes a 4^n Kraus list or a density matrix.
// n <= 10.
double simulate_entanglement_fidelity(const QuantumCode& code, double p);

// Incoherent-ensemble average: tr(rho_c E(rho_c)) * 2^k / 2^k, i.e.
// 2^{-2k} sum_E P(E) sum_ij |<c_i|E|c_j>|^2. Matches average_fidelity_poly.
double simulate_average_fidelity(const QuantumCode& code, double p);

// Per-basis-state average 2^{-k} sum_i <c_i| E(|c_i><c_i|) |c_i>. This is a
// different observable from the B polynomial: it depends on the choice of
// code basis for k >= 1 and has no expression in B alone (the full space on
// one qubit gives p + (1-p)/3 while the B polynomial is constant in p).
double simulate_basis_average_fidelity(const QuantumCode& code, double p);

}  // namespace qmw

#endif  // QMW_FIDELITY_HPP
