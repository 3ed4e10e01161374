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

#include "kernels_internal.hpp"

#include <stdexcept>

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>

namespace qmw::kern {

bool avx2_available() {
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

namespace detail {

namespace {

// One 256-bit register holds two interleaved complex doubles
// [re0, im0, re1, im1]; a 128-bit half swap exchanges the two complexes.
__attribute__((target("avx2,fma"))) inline __m256d swap_halves(__m256d v) {
  return _mm256_permute2f128_pd(v, v, 0x01);
}

// Inner loop specialized on the low two bits of the X mask, which fix how
// the partner block of bra amplitudes permutes against the ket block.
template <unsigned kXLow>
__attribute__((target("avx2,fma"))) std::complex<double> bra_ket_loop(
    const double* bra, const double* ket, size_t dim, uint32_t x, uint32_t z) {
  const double s1 = (z & 1u) ? -1.0 : 1.0;
  const double s2 = (z & 2u) ? -1.0 : 1.0;
  const double s3 = s1 * s2;
  const __m256d pat01 = _mm256_set_pd(s1, s1, 1.0, 1.0);
  const __m256d pat23 = _mm256_set_pd(s3, s3, s2, s2);
  const __m256d neg = _mm256_set1_pd(-0.0);
  const __m256d altsign = _mm256_set_pd(1.0, -1.0, 1.0, -1.0);

  __m256d racc = _mm256_setzero_pd();
  __m256d iacc = _mm256_setzero_pd();

  for (size_t b0 = 0; b0 < dim; b0 += 4) {
    const __m256d v01 = _mm256_loadu_pd(ket + 2 * b0);
    const __m256d v23 = _mm256_loadu_pd(ket + 2 * b0 + 4);

    const bool base_neg =
        (__builtin_popcount(static_cast<uint32_t>(b0) & z) & 1) != 0;
    __m256d ks01 = _mm256_mul_pd(v01, pat01);
    __m256d ks23 = _mm256_mul_pd(v23, pat23);
    if (base_neg) {
      ks01 = _mm256_xor_pd(ks01, neg);
      ks23 = _mm256_xor_pd(ks23, neg);
    }

    const size_t q0 = (b0 ^ x) & ~size_t{3};
    const __m256d u01 = _mm256_loadu_pd(bra + 2 * q0);
    const __m256d u23 = _mm256_loadu_pd(bra + 2 * q0 + 4);
    __m256d a01, a23;
    if constexpr (kXLow == 0) {
      a01 = u01;
      a23 = u23;
    } else if constexpr (kXLow == 1) {
      a01 = swap_halves(u01);
      a23 = swap_halves(u23);
    } else if constexpr (kXLow == 2) {
      a01 = u23;
      a23 = u01;
    } else {
      a01 = swap_halves(u23);
      a23 = swap_halves(u01);
    }

    // conj(a) * k: real lanes a.re*k.re + a.im*k.im accumulate in racc,
    // imag lanes a.re*k.im - a.im*k.re via the re/im swap and alternating
    // signs accumulate in iacc.
    racc = _mm256_fmadd_pd(a01, ks01, racc);
    racc = _mm256_fmadd_pd(a23, ks23, racc);
    const __m256d a01s = _mm256_mul_pd(_mm256_permute_pd(a01, 0x5), altsign);
    const __m256d a23s = _mm256_mul_pd(_mm256_permute_pd(a23, 0x5), altsign);
    iacc = _mm256_fmadd_pd(a01s, ks01, iacc);
    iacc = _mm256_fmadd_pd(a23s, ks23, iacc);
  }

  const __m128d rlo = _mm256_castpd256_pd128(racc);
  const __m128d rhi = _mm256_extractf128_pd(racc, 1);
  const __m128d rs = _mm_add_pd(rlo, rhi);
  const __m128d ilo = _mm256_castpd256_pd128(iacc);
  const __m128d ihi = _mm256_extractf128_pd(iacc, 1);
  const __m128d is = _mm_add_pd(ilo, ihi);
  const double re = _mm_cvtsd_f64(rs) + _mm_cvtsd_f64(_mm_unpackhi_pd(rs, rs));
  const double im = _mm_cvtsd_f64(is) + _mm_cvtsd_f64(_mm_unpackhi_pd(is, is));
  return {re, im};
}

}  // namespace

std::complex<double> bra_ket_avx2(const std::complex<double>* bra,
                                  const std::complex<double>* ket, size_t dim,
                                  uint32_t x, uint32_t z) {
  const double* b = reinterpret_cast<const double*>(bra);
  const double* k = reinterpret_cast<const double*>(ket);
  switch (x & 3u) {
    case 0: return bra_ket_loop<0>(b, k, dim, x, z);
    case 1: return bra_ket_loop<1>(b, k, dim, x, z);
    case 2: return bra_ket_loop<2>(b, k, dim, x, z);
    default: return bra_ket_loop<3>(b, k, dim, x, z);
  }
}

}  // namespace detail
}  // namespace qmw::kern

#else  // non-x86: scalar only

namespace qmw::kern {

bool avx2_available() { return false; }

namespace detail {

std::complex<double> bra_ket_avx2(const std::complex<double>* bra,
                                  const std::complex<double>* ket, size_t dim,
                                  uint32_t x, uint32_t z) {
  return bra_ket_scalar(bra, ket, dim, x, z);
}

}  // namespace detail
}  // namespace qmw::kern

#endif
