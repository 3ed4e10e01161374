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

#include "qmw/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace qmw {

namespace {

void check_qubit_count(int n) {
  if (n < 1 || n > kMaxQubits)
    throw std::invalid_argument("qubit count must be in 1.." +
                                std::to_string(kMaxQubits) + ", got " +
                                std::to_string(n));
}

// i^p applied to a complex value.
Complex i_power(int p) {
  switch (p & 3) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

uint64_t binom64(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  uint64_t r = 1;
  for (int i = 0; i < k; ++i) {
    r = r * static_cast<uint64_t>(n - i) / static_cast<uint64_t>(i + 1);
  }
  return r;
}

uint64_t pow3(int d) {
  uint64_t r = 1;
  while (d-- > 0) r *= 3;
  return r;
}

}  // namespace

PauliOperator::PauliOperator(int n) : n_(n), x_(0), z_(0), phase_(0) {
  check_qubit_count(n);
}

PauliOperator PauliOperator::from_bits(int n, uint32_t x_bits, uint32_t z_bits,
                                       int phase) {
  check_qubit_count(n);
  uint32_t mask = n == 32 ? ~0u : (1u << n) - 1u;
  if ((x_bits & ~mask) || (z_bits & ~mask))
    throw std::invalid_argument("x/z bits set beyond qubit count");
  return PauliOperator(n, x_bits, z_bits, ((phase % 4) + 4) % 4);
}

PauliOperator PauliOperator::parse(std::string_view text) {
  int phase = 0;
  if (text.starts_with("+i")) {
    phase = 1;
    text.remove_prefix(2);
  } else if (text.starts_with("-i")) {
    phase = 3;
    text.remove_prefix(2);
  } else if (text.starts_with("+")) {
    text.remove_prefix(1);
  } else if (text.starts_with("-")) {
    phase = 2;
    text.remove_prefix(1);
  }
  if (text.empty())
    throw std::invalid_argument("empty Pauli string");
  if (static_cast<int>(text.size()) > kMaxQubits)
    throw std::invalid_argument("Pauli string longer than " +
                                std::to_string(kMaxQubits) + " qubits");
  uint32_t x = 0, z = 0;
  for (size_t q = 0; q < text.size(); ++q) {
    switch (text[q]) {
      case 'I': break;
      case 'X': x |= 1u << q; break;
      case 'Y': x |= 1u << q; z |= 1u << q; break;
      case 'Z': z |= 1u << q; break;
      default:
        throw std::invalid_argument(std::string("invalid Pauli letter '") +
                                    text[q] + "'");
    }
  }
  return PauliOperator(static_cast<int>(text.size()), x, z, phase);
}

int PauliOperator::weight() const { return std::popcount(x_ | z_); }

PauliOperator PauliOperator::adjoint() const {
  // (i^p L)^dagger = i^{-p} L for a Hermitian letter string L.
  return PauliOperator(n_, x_, z_, (4 - phase_) & 3);
}

PauliOperator PauliOperator::with_phase(int phase) const {
  return PauliOperator(n_, x_, z_, ((phase % 4) + 4) % 4);
}

std::string PauliOperator::str() const {
  static const char* prefixes[4] = {"", "+i", "-", "-i"};
  std::string out = prefixes[phase_];
  for (int q = 0; q < n_; ++q) {
    bool xb = (x_ >> q) & 1u;
    bool zb = (z_ >> q) & 1u;
    out += xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I');
  }
  return out;
}

PauliOperator product(const PauliOperator& a, const PauliOperator& b) {
  if (a.num_qubits() != b.num_qubits())
    throw std::invalid_argument("Pauli product: dimension mismatch (" +
                                std::to_string(a.num_qubits()) + " vs " +
                                std::to_string(b.num_qubits()) + ")");
  uint32_t x3 = a.x_bits() ^ b.x_bits();
  uint32_t z3 = a.z_bits() ^ b.z_bits();
  // Per-qubit letters satisfy L(x1,z1) L(x2,z2) = i^g L(x1^x2, z1^z2) with
  // g = x1 z1 + x2 z2 + 2 z1 x2 - x3 z3 (mod 4); the terms sum to popcounts
  // over the packed words.
  int g = std::popcount(a.x_bits() & a.z_bits()) +
          std::popcount(b.x_bits() & b.z_bits()) +
          2 * std::popcount(a.z_bits() & b.x_bits()) -
          std::popcount(x3 & z3);
  int phase = a.phase() + b.phase() + g;
  return PauliOperator::from_bits(a.num_qubits(), x3, z3, phase);
}

bool commutes(const PauliOperator& a, const PauliOperator& b) {
  if (a.num_qubits() != b.num_qubits())
    throw std::invalid_argument("Pauli commutes: dimension mismatch");
  int sym = std::popcount(a.x_bits() & b.z_bits()) ^
            std::popcount(a.z_bits() & b.x_bits());
  return (sym & 1) == 0;
}

CMat dense_matrix(const PauliOperator& p) {
  if (p.num_qubits() > 10)
    throw std::invalid_argument("dense_matrix: n > 10 not supported");
  size_t dim = size_t{1} << p.num_qubits();
  CMat m(dim, dim);
  // P|b> = i^{phase + |Y factors|} (-1)^{popcount(z & b)} |b ^ x>.
  Complex front = i_power(p.phase() + std::popcount(p.x_bits() & p.z_bits()));
  for (size_t b = 0; b < dim; ++b) {
    double sign =
        (std::popcount(static_cast<uint32_t>(b) & p.z_bits()) & 1) ? -1.0 : 1.0;
    m(b ^ p.x_bits(), b) = front * sign;
  }
  return m;
}

DistanceSet::DistanceSet(int n, int d) : n_(n), d_(d) {
  check_qubit_count(n);
  if (d < 0 || d > n)
    throw std::invalid_argument("distance d=" + std::to_string(d) +
                                " out of range 0.." + std::to_string(n));
  letter_count_ = pow3(d);
  size_ = letter_count_ * binom64(n, d);
}

PauliOperator DistanceSet::operator[](uint64_t index) const {
  if (index >= size_) throw std::out_of_range("DistanceSet index");
  uint64_t comb_rank = index / letter_count_;
  uint64_t letter_rank = index % letter_count_;

  // Unrank the position subset in lexicographic order.
  uint32_t x = 0, z = 0;
  int remaining = d_;
  int pos = 0;
  uint64_t divisor = letter_count_;  // 3^remaining, shrinks per placed letter
  while (remaining > 0) {
    uint64_t with_pos = binom64(n_ - pos - 1, remaining - 1);
    if (comb_rank < with_pos) {
      divisor /= 3;
      int letter = static_cast<int>(letter_rank / divisor % 3);  // 0=X 1=Y 2=Z
      if (letter != 2) x |= 1u << pos;
      if (letter != 0) z |= 1u << pos;
      --remaining;
    } else {
      comb_rank -= with_pos;
    }
    ++pos;
  }
  return PauliOperator::from_bits(n_, x, z, 0);
}

}  // namespace qmw
