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

#ifndef QMW_KERNELS_HPP
#define QMW_KERNELS_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <span>

namespace qmw::kern {

// Every hot loop in the library (dense enumerators, the Knill-Laflamme
// verifier, channel simulation) reduces to matrix elements <bra|P|ket> of a
// Pauli string P = i^phase * L(x,z) against 2^n-amplitude state vectors:
//
//   <bra|P|ket> = i^{phase + popcount(x & z)}
//                 * sum_b (-1)^{popcount(z & b)} conj(bra[b ^ x]) ket[b]
//
// The sum is a sign-twisted, XOR-permuted complex dot product; a scalar
// reference kernel and an AVX2 variant implement it, selected once at
// runtime from CPU features. Both spans must have the same power-of-two
// length 2^n with n <= kMaxQubits.
std::complex<double> pauli_bra_ket(std::span<const std::complex<double>> bra,
                                   std::span<const std::complex<double>> ket,
                                   uint32_t x_bits, uint32_t z_bits, int phase);

// out = P |in|, same convention. Scalar only; not on a hot path.
void pauli_apply(std::span<const std::complex<double>> in,
                 std::span<std::complex<double>> out, uint32_t x_bits,
                 uint32_t z_bits, int phase);

enum class Backend { kScalar, kAvx2 };

// Backend in use for pauli_bra_ket. Default: AVX2 when the CPU supports it,
// unless QMW_KERNEL=scalar is set in the environment.
Backend active_backend();
const char* backend_name();

// Overrides dispatch (tests compare backends against each other). nullopt
// restores the default choice. Throws if the requested backend is
// unavailable on this CPU.
void force_backend(std::optional<Backend> backend);

bool avx2_available();

}  // namespace qmw::kern

#endif  // QMW_KERNELS_HPP
