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

#include "qmw/kernels.hpp"

#include <atomic>
#include <bit>
#include <cstdlib>
#include <stdexcept>

#include "kernels_internal.hpp"

namespace qmw::kern {

namespace {

std::complex<double> apply_i_power(std::complex<double> v, int p) {
  switch (p & 3) {
    case 0: return v;
    case 1: return {-v.imag(), v.real()};
    case 2: return -v;
    default: return {v.imag(), -v.real()};
  }
}

std::atomic<int> g_forced{-1};  // -1 = no override, else Backend value

Backend default_backend() {
  if (const char* env = std::getenv("QMW_KERNEL")) {
    std::string_view s(env);
    if (s == "scalar") return Backend::kScalar;
    if (s == "avx2") {
      if (!avx2_available())
        throw std::runtime_error("QMW_KERNEL=avx2 but CPU lacks AVX2");
      return Backend::kAvx2;
    }
  }
  return avx2_available() ? Backend::kAvx2 : Backend::kScalar;
}

Backend current_backend() {
  int forced = g_forced.load(std::memory_order_relaxed);
  if (forced >= 0) return static_cast<Backend>(forced);
  static Backend chosen = default_backend();
  return chosen;
}

}  // namespace

namespace detail {

std::complex<double> bra_ket_scalar(const std::complex<double>* bra,
                                    const std::complex<double>* ket,
                                    size_t dim, uint32_t x, uint32_t z) {
  double re = 0.0, im = 0.0;
  for (size_t b = 0; b < dim; ++b) {
    const std::complex<double> a = bra[b ^ x];
    const std::complex<double> k = ket[b];
    const double s =
        (std::popcount(static_cast<uint32_t>(b) & z) & 1) ? -1.0 : 1.0;
    re += s * (a.real() * k.real() + a.imag() * k.imag());
    im += s * (a.real() * k.imag() - a.imag() * k.real());
  }
  return {re, im};
}

}  // namespace detail

std::complex<double> pauli_bra_ket(std::span<const std::complex<double>> bra,
                                   std::span<const std::complex<double>> ket,
                                   uint32_t x_bits, uint32_t z_bits,
                                   int phase) {
  const size_t dim = bra.size();
  if (dim != ket.size() || dim == 0 || !std::has_single_bit(dim))
    throw std::invalid_argument("pauli_bra_ket: spans must share a power-of-two size");
  if (x_bits >= dim || z_bits >= dim)
    throw std::invalid_argument("pauli_bra_ket: mask bits exceed dimension");

  std::complex<double> raw;
  if (dim >= 4 && current_backend() == Backend::kAvx2) {
    raw = detail::bra_ket_avx2(bra.data(), ket.data(), dim, x_bits, z_bits);
  } else {
    raw = detail::bra_ket_scalar(bra.data(), ket.data(), dim, x_bits, z_bits);
  }
  return apply_i_power(raw, phase + std::popcount(x_bits & z_bits));
}

void pauli_apply(std::span<const std::complex<double>> in,
                 std::span<std::complex<double>> out, uint32_t x_bits,
                 uint32_t z_bits, int phase) {
  const size_t dim = in.size();
  if (dim != out.size() || dim == 0 || !std::has_single_bit(dim))
    throw std::invalid_argument("pauli_apply: spans must share a power-of-two size");
  if (x_bits >= dim || z_bits >= dim)
    throw std::invalid_argument("pauli_apply: mask bits exceed dimension");
  const int front = phase + std::popcount(x_bits & z_bits);
  for (size_t c = 0; c < dim; ++c) {
    const size_t b = c ^ x_bits;
    const double s =
        (std::popcount(static_cast<uint32_t>(b) & z_bits) & 1) ? -1.0 : 1.0;
    out[c] = apply_i_power(in[b] * s, front);
  }
}

Backend active_backend() { return current_backend(); }

const char* backend_name() {
  return current_backend() == Backend::kAvx2 ? "avx2" : "scalar";
}

void force_backend(std::optional<Backend> backend) {
  if (!backend) {
    g_forced.store(-1, std::memory_order_relaxed);
    return;
  }
  if (*backend == Backend::kAvx2 && !avx2_available())
    throw std::runtime_error("AVX2 backend unavailable on this CPU");
  g_forced.store(static_cast<int>(*backend), std::memory_order_relaxed);
}

}  // namespace qmw::kern
