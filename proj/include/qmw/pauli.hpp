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

#ifndef QMW_PAULI_HPP
#define QMW_PAULI_HPP

#include <cstdint>
#include <iterator>
#include <string>
#include <string_view>

#include "qmw/dense.hpp"

namespace qmw {

inline constexpr int kMaxQubits = 24;

// An n-qubit Pauli string i^phase * (L_1 x ... x L_n) in symplectic form.
// Letter per qubit from its (x,z) bit pair: (0,0)=I, (1,0)=X, (1,1)=Y,
// (0,1)=Z, so phase 0 means the string is Hermitian (Y carries its standard
// matrix). Qubit q lives at bit q of each word; n is capped at kMaxQubits so
// x/z each fit one machine word and weight is a single popcount.
class PauliOperator {
 public:
  // Identity on n qubits.
  explicit PauliOperator(int n);

  static PauliOperator from_bits(int n, uint32_t x_bits, uint32_t z_bits,
                                 int phase = 0);

  // Text form: optional prefix "+", "-", "+i", "-i", then one of I/X/Y/Z per
  // qubit, leftmost letter = qubit 0. Throws std::invalid_argument.
  static PauliOperator parse(std::string_view text);

  int num_qubits() const { return n_; }
  uint32_t x_bits() const { return x_; }
  uint32_t z_bits() const { return z_; }
  int phase() const { return phase_; }

  // Number of tensor factors different from the identity.
  int weight() const;

  bool is_identity_bits() const { return x_ == 0 && z_ == 0; }
  bool is_hermitian() const { return phase_ == 0 || phase_ == 2; }

  PauliOperator adjoint() const;

  PauliOperator with_phase(int phase) const;

  std::string str() const;

  bool operator==(const PauliOperator&) const = default;

 private:
  PauliOperator(int n, uint32_t x, uint32_t z, int phase)
      : n_(n), x_(x), z_(z), phase_(phase) {}

  int n_;
  uint32_t x_;
  uint32_t z_;
  int phase_;  // exponent of i, mod 4
};

// Operator product with exact mod-4 phase tracking. Throws on dimension
// mismatch.
PauliOperator product(const PauliOperator& a, const PauliOperator& b);

// true iff the symplectic inner product vanishes, i.e. ab = ba.
bool commutes(const PauliOperator& a, const PauliOperator& b);

// Explicit 2^n x 2^n matrix including phase. Test oracle; n <= 10.
CMat dense_matrix(const PauliOperator& p);

// The set E_d: all 3^d * C(n,d) Hermitian phase-0 strings of weight d, as a
// random-access range. Order is deterministic: position subsets ascend
// lexicographically, letters per subset count in base 3 with X < Y < Z and
// the lowest qubit as the most significant digit. Random access keeps
// parallel consumers independent: each recreates the set and indexes its own
// slice.
class DistanceSet {
 public:
  DistanceSet(int n, int d);  // throws if d out of 0..n or n out of 1..24

  uint64_t size() const { return size_; }
  int num_qubits() const { return n_; }
  int distance() const { return d_; }

  PauliOperator operator[](uint64_t index) const;

  class iterator {
   public:
    using value_type = PauliOperator;
    using difference_type = int64_t;
    using iterator_category = std::input_iterator_tag;

    iterator(const DistanceSet* set, uint64_t i) : set_(set), i_(i) {}
    PauliOperator operator*() const { return (*set_)[i_]; }
    iterator& operator++() { ++i_; return *this; }
    iterator operator++(int) { iterator t = *this; ++i_; return t; }
    bool operator==(const iterator&) const = default;

   private:
    const DistanceSet* set_;
    uint64_t i_;
  };

  iterator begin() const { return iterator(this, 0); }
  iterator end() const { return iterator(this, size_); }

 private:
  int n_;
  int d_;
  uint64_t size_;
  uint64_t letter_count_;  // 3^d
};

}  // namespace qmw

#endif  // QMW_PAULI_HPP
