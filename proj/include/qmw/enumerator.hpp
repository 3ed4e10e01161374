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

#ifndef QMW_ENUMERATOR_HPP
#define QMW_ENUMERATOR_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qmw/code.hpp"
#include "qmw/pauli.hpp"
#include "qmw/rational.hpp"

namespace qmw {

// Exact weight distribution of a code: coefficient d counts (in the
// A-enumerator) stabilizer-group elements of weight d, or more generally the
// normalized trace sums over E_d. When the dense path cannot snap its float
// sums onto small rationals it marks the result inexact and keeps the float
// values alongside.
struct WeightEnumerator {
  enum class Kind { kA, kB };

  int n = 0;
  int k = 0;
  Kind kind = Kind::kA;
  std::vector<Rat> coeffs;  // indexed 0..n
  bool exact = true;
  std::vector<double> float_coeffs;  // populated only when !exact

  Rat sum() const;
  std::string str() const;  // "(1, 0, 0, 0, 15, 0)"
};

// Group-theoretic path. A_d counts stabilizer elements of weight d
// (2^{n-k} of them in total); B_d counts normalizer elements, enumerated
// from the GF(2) kernel of the symplectic orthogonality system (2^{n+k}).
// Caps: n-k <= 20 and n+k <= 22.
std::pair<WeightEnumerator, WeightEnumerator> enumerate_stabilizer(
    const StabilizerCode& code);

// Brute-force path over all 4^n Pauli strings with kernel-evaluated matrix
// elements:
//   A_d = 2^{-2k} sum_{E_d} |sum_i <c_i|E|c_i>|^2
//   B_d = 2^{-k}  sum_{E_d} sum_{ij} |<c_i|E|c_j>|^2
// Cap: n <= 9 (covers every builtin code).
std::pair<WeightEnumerator, WeightEnumerator> enumerate_dense(
    const DenseCode& code);

enum class EnumeratorPath { kAuto, kStabilizer, kDense };

std::pair<WeightEnumerator, WeightEnumerator> enumerate_code(
    const QuantumCode& code, EnumeratorPath path = EnumeratorPath::kAuto);

// Which Knill-Laflamme condition a violating operator broke.
enum class KLCondition { kDiagonalMismatch, kOffDiagonalNonzero };

struct KLReport {
  bool corrects = false;
  bool degenerate = false;
  std::optional<std::pair<PauliOperator, KLCondition>> first_violation;
};

// Checks <c_a|E|c_a> = <c_b|E|c_b> and <c_a|E|c_b> = 0 for every E of
// weight <= 2t on the dense basis (tolerance 1e-9). Degenerate means the
// common diagonal value is nonzero for some E of weight 1..2t. n <= 10.
KLReport verify_kl(const QuantumCode& code, int t);

struct DegeneracyReport {
  bool consistent_with_correction = false;
  bool degenerate = false;
};

// The enumerator-level counterpart: correction forces A_d = B_d for
// 1 <= d <= 2t, and a degenerate code has some A_d > 0 in that range.
DegeneracyReport degeneracy_from_enumerators(const WeightEnumerator& a,
                                             const WeightEnumerator& b, int t);

// JSON form {"n":5,"k":1,"kind":"A","coeffs":["1","0","0","0","15","0"]}.
std::string enumerator_to_json(const WeightEnumerator& w);
WeightEnumerator enumerator_from_json(const std::string& text);

}  // namespace qmw

#endif  // QMW_ENUMERATOR_HPP
