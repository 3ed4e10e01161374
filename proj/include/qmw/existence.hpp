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

#ifndef QMW_EXISTENCE_HPP
#define QMW_EXISTENCE_HPP

#include <optional>
#include <string>
#include <vector>

#include "qmw/enumerator.hpp"
#include "qmw/lp.hpp"

namespace qmw {

enum class ExistenceMode { kGeneral, kDegenerate, kNondegenerate };

struct ExistenceQuery {
  int n = 0;
  int k = 0;
  int t = 0;
  ExistenceMode mode = ExistenceMode::kGeneral;
};

enum class ExistenceStatus { kFeasible, kInfeasible, kUniqueFeasible };

struct ExistenceVerdict {
  ExistenceStatus status = ExistenceStatus::kInfeasible;
  std::optional<WeightEnumerator> witness_a;
  std::optional<WeightEnumerator> witness_b;
  std::optional<std::vector<Rat>> certificate;  // Farkas multipliers
  // Degenerate mode only: sup of sum_{d=1..2t} A_d over the General system,
  // so "infeasible for every epsilon > 0" is checkable when it is 0.
  std::optional<Rat> degenerate_mass_sup;
  bool degenerate_mass_unbounded = false;
};

// The enumerator feasibility system for a hypothetical (n,k) code
// correcting t errors. Variables are A_1..A_n (A_0 is fixed to 1); rows:
//   B_0(A) = 1
//   B_d(A) = A_d            for 1 <= d <= 2t
//   B_d(A) >= A_d           for d > 2t
//   B_d(A) >= 0             for all d
//   A_d >= 0                (variable bounds)
// plus, per mode: Nondegenerate adds A_d = 0 for d <= 2t; Degenerate adds
// sum_{d<=2t} A_d >= 1. Coefficients come scaled to integers.
RationalLP build_system(const ExistenceQuery& q);

// Solves the system; a feasible outcome is probed coordinate-by-coordinate
// for uniqueness, and every witness or certificate re-verifies by exact
// substitution before it is returned.
ExistenceVerdict decide(const ExistenceQuery& q);

struct ScanRow {
  int n = 0;
  ExistenceStatus general = ExistenceStatus::kInfeasible;
  ExistenceStatus nondegenerate = ExistenceStatus::kInfeasible;
};

// decide() across n = max(1, k, 2t) .. n_max in General and Nondegenerate
// modes, parallelized over n. n_max <= 30.
std::vector<ScanRow> scan(int n_max, int k, int t, unsigned num_threads = 0);

const char* to_string(ExistenceStatus s);
const char* to_string(ExistenceMode m);
std::optional<ExistenceMode> parse_mode(const std::string& name);

}  // namespace qmw

#endif  // QMW_EXISTENCE_HPP
