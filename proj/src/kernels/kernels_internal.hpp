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

#ifndef QMW_KERNELS_INTERNAL_HPP
#define QMW_KERNELS_INTERNAL_HPP

#include <complex>
#include <cstddef>
#include <cstdint>

namespace qmw::kern::detail {

// Raw sign-twisted XOR-permuted dot product, without the i^phase front
// factor. dim is a power of two; the AVX2 variant additionally requires
// dim >= 4.
std::complex<double> bra_ket_scalar(const std::complex<double>* bra,
                                    const std::complex<double>* ket,
                                    size_t dim, uint32_t x, uint32_t z);

std::complex<double> bra_ket_avx2(const std::complex<double>* bra,
                                  const std::complex<double>* ket, size_t dim,
                                  uint32_t x, uint32_t z);

}  // namespace qmw::kern::detail

#endif  // QMW_KERNELS_INTERNAL_HPP
