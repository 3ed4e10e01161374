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

#ifndef QMW_TRANSFORM_HPP
#define QMW_TRANSFORM_HPP

#include <vector>

#include "qmw/enumerator.hpp"
#include "qmw/rational.hpp"

namespace qmw {

// Exact Krawtchouk coefficients
//   alpha[d][d'] = 2^n * sum_s (-1)^s 3^{d-s} C(d',s) C(n-d',d-s)
// where d indexes the weight of the summed error operators and d' the weight
// of the expansion operator. Row d=0 is all 2^n; column d'=0 is
// 2^n 3^d C(n,d).
struct KrawtchoukTable {
  int n = 0;
  std::vector<std::vector<Int>> alpha;  // (n+1) x (n+1)
};

KrawtchoukTable krawtchouk_table(int n);  // 0 <= n <= 64

// B_d = 2^{k-n} sum_{d'} (alpha[d][d'] / 2^n) A_{d'}, exact.
WeightEnumerator macwilliams_transform(const WeightEnumerator& a, int n, int k);

// A_d = 2^{-(k+n)} sum_{d'} (alpha[d][d'] / 2^n) B_{d'}; the substitution
// z -> (1-z)/(1+3z) is an involution, so the same table inverts with a
// different prefactor.
WeightEnumerator inverse_transform(const WeightEnumerator& b, int n, int k);

// The defining trace sum, evaluated with dense matrices for one
// representative operator of weight d_prime:
//   sum over E of weight d of tr(E D E D).
// Independent of the closed form above; this is its test oracle. n <= 6.
Int alpha_bruteforce(int n, int d, int d_prime);

// Scaled row coefficients 2^{k-n} alpha[d][d'] / 2^n as exact rationals; the
// d-th row gives B_d as a linear form in A_0..A_n. This is what the
// existence systems embed.
std::vector<std::vector<Rat>> transform_matrix(int n, int k);

}  // namespace qmw

#endif  // QMW_TRANSFORM_HPP
